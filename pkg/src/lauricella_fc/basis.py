"""Subset-indexed parameter transforms and the 2^m local solution basis.

For a subset I = {i_1 < ... < i_r} of {1..m} the local solution attached to
I is f_I = prod_p x_{i_p}^{1 - c_{i_p}} * F_C(a_I, b_I, c^I; x), where

    a_I = a + r - sum_p c_{i_p},     b_I = b + r - sum_p c_{i_p},
    c^I = c + 2 * sum_p (1 - c_{i_p}) e_{i_p},

so the i_p-th entry of c^I is 2 - c_{i_p} and the j_q-th entry stays c_{j_q}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import EvaluationPoint, ParameterSet, SubsetIndex, as_point
from .errors import PrefactorSingularityError
from .series import DEFAULT_REL_TOL, SeriesValue, eval_fc


@dataclass(frozen=True)
class LocalSolutionSpec:
    """Transformed parameters and prefactor exponents of one basis solution."""

    subset: SubsetIndex
    a: complex
    b: complex
    c: tuple[complex, ...]
    prefactor_exponents: tuple[complex, ...]

    def parameter_set(self) -> ParameterSet:
        return ParameterSet(len(self.c), self.a, self.b, self.c)


def transform_parameters(p: ParameterSet, I: SubsetIndex) -> LocalSolutionSpec:
    """Parameters (a_I, b_I, c^I) and prefactor exponents for subset I."""
    inside = set(I.members)
    shift = sum((p.c[i - 1] for i in I.members), 0j)
    a_t = p.a + I.r - shift
    b_t = p.b + I.r - shift
    c_t = tuple(2 - ck if (k + 1) in inside else ck for k, ck in enumerate(p.c))
    exps = tuple(1 - ck if (k + 1) in inside else 0j for k, ck in enumerate(p.c))
    return LocalSolutionSpec(I, a_t, b_t, c_t, exps)


def dual_parameters(p: ParameterSet) -> ParameterSet:
    """The replacement (a, b, c) -> (2 - a, -b, (2,...,2) - c)."""
    return ParameterSet(p.m, 2 - p.a, -p.b, tuple(2 - ck for ck in p.c))


def dual_c_vector(c: tuple[complex, ...]) -> tuple[complex, ...]:
    """Companion vector (2,...,2) - c^I of a transformed c-vector."""
    return tuple(2 - ck for ck in c)


def eval_local_solution(p: ParameterSet, I: SubsetIndex, x: EvaluationPoint,
                        rel_tol: float = DEFAULT_REL_TOL) -> SeriesValue:
    """Evaluate f_I = prod_p x_{i_p}^{1-c_{i_p}} * F_C(a_I, b_I, c^I; x).

    Principal branches throughout; any x_{i_p} = 0 raises, since the power
    prefactor is singular there for non-integral c.
    """
    import cmath

    pt = as_point(x)
    spec = transform_parameters(p, I)
    log_pref = 0j
    for i in I.members:
        if pt.x[i - 1] == 0:
            raise PrefactorSingularityError(f"x_{i} = 0 under the prefactor of f_{I.members}")
        log_pref += (1 - p.c[i - 1]) * cmath.log(pt.x[i - 1])
    pref = cmath.exp(log_pref)
    series = eval_fc(spec.parameter_set(), pt, rel_tol)
    return SeriesValue(pref * series.value, series.order,
                       abs(pref) * series.tail_estimate, series.converged)


def enumerate_basis(p: ParameterSet) -> list[LocalSolutionSpec]:
    """All 2^m local solution specs in subset rank order."""
    return [transform_parameters(p, I) for I in SubsetIndex.all_subsets(p.m)]
