"""Parameter and subset domain model with genericity checks.

The m-variable hypergeometric system treated here is governed by complex
parameters (a, b, c_1..c_m). Its solution space is indexed by the 2^m
subsets of {1..m}; subsets are kept in a canonical sorted form and ordered
by a binary rank so that matrices over the solution basis index stably.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass

from .errors import MalformedParameterError

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ParameterSet:
    """Parameters (a, b, c_1..c_m) of the rank-2^m system in m variables."""

    m: int
    a: complex
    b: complex
    c: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        object.__setattr__(self, "c", tuple(complex(v) for v in self.c))

    def c_sum(self) -> complex:
        return sum(self.c, 0j)


@dataclass(frozen=True)
class SubsetIndex:
    """A subset I = {i_1 < ... < i_r} of {1..m}, stored strictly increasing."""

    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(int(i) for i in self.members)
        if any(i < 1 for i in members):
            raise ValueError(f"subset members must be >= 1, got {members}")
        if any(members[i] >= members[i + 1] for i in range(len(members) - 1)):
            raise ValueError(f"subset members must be strictly increasing, got {members}")
        object.__setattr__(self, "members", members)

    @property
    def r(self) -> int:
        return len(self.members)

    @property
    def rank(self) -> int:
        """Binary little-endian rank: sum of 2^(i-1) over members i."""
        return sum(1 << (i - 1) for i in self.members)

    def complement(self, m: int) -> "SubsetIndex":
        if self.members and self.members[-1] > m:
            raise ValueError(f"subset {self.members} not contained in 1..{m}")
        inside = set(self.members)
        return SubsetIndex(tuple(j for j in range(1, m + 1) if j not in inside))

    @classmethod
    def from_rank(cls, rank: int, m: int) -> "SubsetIndex":
        if not 0 <= rank < (1 << m):
            raise ValueError(f"rank {rank} out of range for m={m}")
        return cls(tuple(i for i in range(1, m + 1) if rank & (1 << (i - 1))))

    @classmethod
    def all_subsets(cls, m: int) -> list["SubsetIndex"]:
        """All 2^m subsets of {1..m} in rank order."""
        return [cls.from_rank(rk, m) for rk in range(1 << m)]


@dataclass(frozen=True)
class EvaluationPoint:
    """Point x in C^m; tests restrict to small positive reals."""

    x: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(complex(v) for v in self.x))

    @property
    def m(self) -> int:
        return len(self.x)

    @property
    def in_domain(self) -> bool:
        """Whether sum_k sqrt|x_k| < 1 (the series convergence domain)."""
        return sum(math.sqrt(abs(v)) for v in self.x) < 1.0


def as_point(x) -> EvaluationPoint:
    """Coerce a sequence (or scalar, for m=1 convenience) into an EvaluationPoint."""
    if isinstance(x, EvaluationPoint):
        return x
    if isinstance(x, (int, float, complex)):
        return EvaluationPoint((complex(x),))
    return EvaluationPoint(tuple(complex(v) for v in x))


@dataclass(frozen=True)
class ExponentialParameters:
    """Exponentials alpha = e^{2 pi i a}, beta = e^{2 pi i b}, gamma_k = e^{2 pi i c_k}."""

    alpha: complex
    beta: complex
    gamma: tuple[complex, ...]


@dataclass(frozen=True)
class GenericityViolation:
    """One violated non-integrality condition.

    kind is 'a' or 'b' for a violated shift a - sum_{i in I} c_i (subset set),
    or 'c' for an integral c_k (index set).
    """

    kind: str
    subset: tuple[int, ...] | None
    index: int | None
    value: complex
    distance: float

    def describe(self) -> str:
        if self.kind == "c":
            return f"c_{self.index} = {self.value} is within {self.distance:.3g} of an integer"
        return (f"{self.kind} - sum(c_i, i in {set(self.subset) or '{}'}) = {self.value} "
                f"is within {self.distance:.3g} of an integer")


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    violations: tuple[GenericityViolation, ...]


def distance_to_integers(z: complex) -> float:
    """Distance from z to the nearest integer on the real axis."""
    z = complex(z)
    return math.hypot(z.real - round(z.real), z.imag)


def validate_parameters(p: ParameterSet, tol_int: float = 1e-6) -> ValidationResult:
    """Check the non-integrality (irreducibility) conditions of the system.

    For every subset I of {1..m} the shifts a - sum_{i in I} c_i and
    b - sum_{i in I} c_i must stay at distance > tol_int from the integers,
    and so must every c_k. Returns every violated condition.
    """
    if not 0.0 < tol_int < 0.5:
        raise ValueError(f"tol_int must lie in (0, 0.5), got {tol_int}")
    if p.m < 1:
        raise MalformedParameterError(f"m must be a positive integer, got {p.m}")
    if len(p.c) != p.m:
        raise MalformedParameterError(f"len(c) = {len(p.c)} does not match m = {p.m}")

    violations: list[GenericityViolation] = []
    for k, ck in enumerate(p.c, start=1):
        d = distance_to_integers(ck)
        if d <= tol_int:
            violations.append(GenericityViolation("c", None, k, ck, d))
    for subset in SubsetIndex.all_subsets(p.m):
        shift = sum((p.c[i - 1] for i in subset.members), 0j)
        for kind, base in (("a", p.a), ("b", p.b)):
            val = base - shift
            d = distance_to_integers(val)
            if d <= tol_int:
                violations.append(GenericityViolation(kind, subset.members, None, val, d))
    return ValidationResult(not violations, tuple(violations))


def singular_locus_value(x: EvaluationPoint | object) -> complex:
    """Defining polynomial of the singular locus at x.

    prod_k x_k * prod over all sign vectors eps in {+-1}^m of
    (1 + sum_k eps_k sqrt(x_k)), principal square roots. Zero exactly on
    the locus where the differential system degenerates.
    """
    pt = as_point(x)
    roots = [cmath.sqrt(v) for v in pt.x]
    value = 1 + 0j
    for v in pt.x:
        value *= v
    for signs in itertools.product((1.0, -1.0), repeat=pt.m):
        value *= 1 + sum(s * r for s, r in zip(signs, roots))
    return value


def exponential_parameters(p: ParameterSet) -> ExponentialParameters:
    """Map (a, b, c) to (alpha, beta, gamma) by z -> exp(2 pi i z)."""
    return ExponentialParameters(
        alpha=cmath.exp(2j * math.pi * p.a),
        beta=cmath.exp(2j * math.pi * p.b),
        gamma=tuple(cmath.exp(2j * math.pi * ck) for ck in p.c),
    )
