"""Seeded random sampling of generic parameter sets for verification runs."""

from __future__ import annotations

import numpy as np

from .core import EvaluationPoint, ParameterSet, validate_parameters


def random_generic_parameters(rng: np.random.Generator, m: int,
                              margin: float = 0.05,
                              max_tries: int = 50000) -> ParameterSet:
    """Draw real (a, b, c) with every non-integrality distance > margin.

    The margin keeps all derived denominators (b_I, flag denominators,
    exponential-parameter differences, Gamma arguments of the pairings)
    at least margin away from their poles.
    """
    for _ in range(max_tries):
        a = rng.uniform(-0.95, 0.95)
        b = rng.uniform(-0.95, 0.95)
        c = tuple(rng.uniform(0.05, 1.95) for _ in range(m))
        p = ParameterSet(m, a, b, c)
        if validate_parameters(p, tol_int=margin).ok:
            return p
    raise RuntimeError(f"no generic parameters found in {max_tries} tries")


def random_quadrature_parameters(rng: np.random.Generator,
                                 margin: float = 0.05,
                                 max_tries: int = 50000) -> ParameterSet:
    """Generic m=1 parameters additionally satisfying Re(c-a) > 0.1, Re(b) < 0.9."""
    for _ in range(max_tries):
        a = rng.uniform(-0.95, 0.95)
        b = rng.uniform(-0.95, 0.85)
        c = rng.uniform(a + 0.15, min(a + 1.9, 1.95))
        if not 0.05 < c < 1.95:
            continue
        p = ParameterSet(1, a, b, (c,))
        if (c - a) > 0.1 and validate_parameters(p, tol_int=margin).ok:
            return p
    raise RuntimeError(f"no quadrature-admissible parameters found in {max_tries} tries")


def random_point(rng: np.random.Generator, m: int, hi: float) -> EvaluationPoint:
    """Point with independent coordinates drawn from (0, hi]."""
    return EvaluationPoint(tuple(rng.uniform(1e-3 * hi, hi) for _ in range(m)))
