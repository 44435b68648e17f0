import cmath
import math

import numpy as np
import pytest
import scipy.special

from lauricella_fc.core import (EvaluationPoint, ParameterSet, SubsetIndex,
                                distance_to_integers)
from lauricella_fc.errors import GammaPoleError, PrefactorSingularityError
from lauricella_fc.series import eval_fc
from lauricella_fc.special import (gamma, log_gamma, pairing_g, pairing_g_dual,
                                   prefactor_F)

P1 = ParameterSet(1, 0.3, 0.45, (0.7,))
EMPTY = SubsetIndex(())
ONE = SubsetIndex((1,))


def test_log_gamma_known_values():
    assert abs(log_gamma(1)) < 1e-15
    assert abs(log_gamma(5) - math.log(24)) < 1e-14
    assert abs(log_gamma(0.5) - math.log(math.sqrt(math.pi))) < 1e-14


def test_log_gamma_pole():
    for z in (0, -1, -7, 0.0 + 0j):
        with pytest.raises(GammaPoleError):
            log_gamma(z)


def test_log_gamma_against_scipy():
    rng = np.random.default_rng(99)
    for _ in range(200):
        z = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
        if distance_to_integers(z) < 0.05:
            continue
        mine = gamma(z)
        ref = complex(scipy.special.gamma(z))
        assert abs(mine - ref) <= 1e-13 * abs(ref), z


def test_reflection_formula_sample():
    rng = np.random.default_rng(7)
    count = 0
    while count < 100:
        z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        if distance_to_integers(z) < 0.05:
            continue
        count += 1
        lhs = gamma(z) * gamma(1 - z)
        rhs = math.pi / cmath.sin(math.pi * z)
        assert abs(lhs - rhs) <= 1e-12 * abs(rhs), z


def test_log_gamma_recurrence():
    rng = np.random.default_rng(13)
    for _ in range(100):
        z = complex(rng.uniform(0.5, 5), rng.uniform(-3, 3))
        res = log_gamma(z + 1) - log_gamma(z) - cmath.log(z)
        assert abs(res) < 1e-13, z


def _gamma_ref(*factors):
    num = 1.0 + 0j
    for f in factors:
        num *= complex(scipy.special.gamma(f))
    return num


def test_prefactor_empty_subset_m1():
    # reduces to Gamma(1-c) Gamma(c-a) / Gamma(1-a); Gamma(1-b) cancels
    a, b, c = 0.2, 0.3, 0.9
    p = ParameterSet(1, a, b, (c,))
    expected = _gamma_ref(1 - c, c - a) / _gamma_ref(1 - a)
    assert abs(prefactor_F(p, EMPTY) - expected) < 1e-13 * abs(expected)


def test_prefactor_full_subset_m1():
    # reduces to Gamma(c-1) Gamma(1-b) / Gamma(c-b)
    a, b, c = 0.3, 0.45, 0.7
    p = ParameterSet(1, a, b, (c,))
    expected = _gamma_ref(c - 1, 1 - b) / _gamma_ref(c - b)
    assert abs(prefactor_F(p, ONE) - expected) < 1e-13 * abs(expected)


def test_prefactor_m2_generic_subset():
    a, b = 0.3, 0.45
    c1, c2 = 0.7, 0.85
    p = ParameterSet(2, a, b, (c1, c2))
    I = SubsetIndex((1,))
    expected = (_gamma_ref(c1 - 1, 1 - c2, c1 + c2 - a - 1, 1 - b)
                / _gamma_ref(c1 - a, c1 - b))
    assert abs(prefactor_F(p, I) - expected) < 1e-13 * abs(expected)


def test_pairing_ratio_is_x_independent():
    ratios = []
    for x in (0.01, 0.02, 0.05):
        pt = EvaluationPoint((x,))
        ratios.append(pairing_g(P1, EMPTY, pt) / eval_fc(P1, pt).value)
    for r in ratios[1:]:
        assert abs(r - ratios[0]) <= 1e-12 * abs(ratios[0])
    assert abs(ratios[0] - prefactor_F(P1, EMPTY)) <= 1e-12 * abs(ratios[0])


def test_pairing_product_has_no_x_power():
    # exponents 1-c and c-1 cancel between the pairing and its dual, so the
    # product is a product of two series values and two Gamma prefactors
    from lauricella_fc.basis import dual_parameters, transform_parameters

    pt = EvaluationPoint((0.05,))
    product = pairing_g(P1, ONE, pt) * pairing_g_dual(P1, ONE, pt)
    dual = dual_parameters(P1)
    spec = transform_parameters(P1, ONE)
    spec_dual = transform_parameters(dual, ONE)
    expected = (prefactor_F(P1, ONE) * prefactor_F(dual, ONE)
                * eval_fc(spec.parameter_set(), pt).value
                * eval_fc(spec_dual.parameter_set(), pt).value)
    assert abs(product - expected) <= 1e-12 * abs(expected)


def test_pairing_product_small_x_limit():
    # as x -> 0 both series factors tend to 1, leaving
    # Gamma(1-c)Gamma(c-a)/Gamma(1-a) * Gamma(c-1)Gamma(a-c)/Gamma(a-1)
    a, b, c = 0.3, 0.45, 0.7
    pt = EvaluationPoint((1e-8,))
    product = pairing_g(P1, EMPTY, pt) * pairing_g_dual(P1, EMPTY, pt)
    expected = (_gamma_ref(1 - c, c - a) / _gamma_ref(1 - a)
                * _gamma_ref(c - 1, a - c) / _gamma_ref(a - 1))
    assert abs(product - expected) <= 1e-6 * abs(expected)


def test_pairing_rejects_zero_coordinate():
    with pytest.raises(PrefactorSingularityError):
        pairing_g(P1, ONE, EvaluationPoint((0.0,)))
