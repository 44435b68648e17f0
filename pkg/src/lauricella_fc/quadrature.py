"""Independent quadrature oracle for the one-variable Euler integral.

The quantity verified is the regularized-cycle integral of

    t^{-c} (1-t)^{c-a-1} (1 - x/t)^{-b} dt

attached to the empty subset, which equals prefactor_F(empty subset) times
F_C(a, b, c; x). The bounded chamber (x, 1) alone does not reproduce this
value: the regularizing loop at the left end must enclose both branch
points 0 and x together, and the naive open-interval integral decomposes
instead as the sum of the empty-subset and {1}-subset cycle values (the
tests pin both facts numerically). The cycle is therefore integrated
directly as a contour,

    [eps, 1-eps]
      + 1/(gamma^{-1} - 1)       * (ccw circle of radius eps around 0)
      - 1/(alpha^{-1} gamma - 1) * (ccw circle of radius eps around 1),

with eps = 0.25 + x/2, so that x stays inside the left circle and both
circles avoid each other. Along the circles only t^{-c} (respectively
(1-t)^{c-a-1}) winds; the remaining factors keep their principal branch
for eps < 1/2. Every piece is an analytic integrand on a finite interval,
so Gauss-Legendre converges geometrically and doubling the node count
serves as the error estimate.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .core import ParameterSet, SubsetIndex, as_point
from .errors import ConvergenceConditionError
from .relations import RelationReport
from .series import DEFAULT_REL_TOL, eval_fc
from .special import prefactor_F

_NODE_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gauss_nodes(n: int) -> tuple[np.ndarray, np.ndarray]:
    if n not in _NODE_CACHE:
        _NODE_CACHE[n] = np.polynomial.legendre.leggauss(n)
    return _NODE_CACHE[n]


def _cycle_value(p: ParameterSet, x: float, n: int) -> complex:
    """Contour quadrature of the regularized cycle with n nodes per piece."""
    a, b, c = p.a, p.b, p.c[0]
    eps = 0.25 + 0.5 * x
    nodes, weights = _gauss_nodes(n)

    # straight segment [eps, 1-eps], principal branches
    lo, hi = eps, 1.0 - eps
    t = lo + (hi - lo) * 0.5 * (nodes + 1.0)
    vals = np.exp(-c * np.log(t) + (c - a - 1) * np.log1p(-t)
                  - b * np.log1p(-x / t))
    segment = complex(np.sum(weights * vals)) * (hi - lo) * 0.5

    # ccw circle around 0 starting at eps; t^{-c} tracked through its winding
    theta = math.pi * (nodes + 1.0)
    t = eps * np.exp(1j * theta)
    vals = np.exp(-c * (math.log(eps) + 1j * theta)
                  + (c - a - 1) * np.log(1 - t) - b * np.log(1 - x / t))
    circle0 = complex(np.sum(weights * vals * 1j * eps * np.exp(1j * theta))) * math.pi

    # ccw circle around 1 starting at 1-eps; (1-t) tracked through its winding
    phi = math.pi + math.pi * (nodes + 1.0)
    t = 1.0 + eps * np.exp(1j * phi)
    vals = np.exp(-c * np.log(t)
                  + (c - a - 1) * (math.log(eps) + 1j * (phi - math.pi))
                  - b * np.log(1 - x / t))
    circle1 = complex(np.sum(weights * vals * 1j * eps * np.exp(1j * phi))) * math.pi

    gam = cmath.exp(2j * math.pi * c)
    alpha = cmath.exp(2j * math.pi * a)
    return (segment
            + circle0 / (1.0 / gam - 1.0)
            - circle1 / (gam / alpha - 1.0))


def euler_integral_m1(p: ParameterSet, x: float, abs_tol: float = 1e-10) -> complex:
    """Regularized-cycle value of the Euler integrand for m = 1.

    Preconditions: x real in (0, 0.3], Re(c - a) > 0 and Re(b) < 1 (the
    contract under which the cycle value is verified downstream).
    """
    if p.m != 1:
        raise ValueError("the quadrature oracle covers m = 1 only")
    xv = complex(x)
    if xv.imag != 0.0 or not 0.0 < xv.real <= 0.3:
        raise ConvergenceConditionError(f"x must be real in (0, 0.3], got {x}")
    a, b, c = p.a, p.b, p.c[0]
    problems = []
    if (c - a).real <= 0.0:
        problems.append(f"Re(c - a) = {(c - a).real:g} <= 0")
    if b.real >= 1.0:
        problems.append(f"Re(b) = {b.real:g} >= 1")
    if problems:
        raise ConvergenceConditionError("; ".join(problems))

    xr = xv.real
    value = _cycle_value(p, xr, 32)
    for n in (64, 128, 256, 512, 1024):
        refined = _cycle_value(p, xr, n)
        err = abs(refined - value)
        value = refined
        if err <= max(abs_tol, 5e-14 * abs(value)):
            return value
    raise ConvergenceConditionError(
        f"contour quadrature failed to reach abs_tol={abs_tol:g} (last change {err:g})")


def verify_integral_identity(p: ParameterSet, x: float,
                             rel_tol: float = 1e-7) -> RelationReport:
    """Check the cycle quadrature against Gamma prefactor times the series."""
    empty = SubsetIndex(())
    rhs = prefactor_F(p, empty) * eval_fc(p, as_point((x,)), DEFAULT_REL_TOL).value
    lhs = euler_integral_m1(p, x, abs_tol=max(1e-12, 0.01 * rel_tol * abs(rhs)))
    residual = abs(lhs - rhs) / max(abs(rhs), 1e-300)
    return RelationReport(
        identity_name="euler_integral",
        lhs=lhs,
        rhs=rhs,
        residual=residual,
        tolerance=rel_tol,
        passed=residual <= rel_tol,
    )
