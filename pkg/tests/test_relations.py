import numpy as np
import pytest

from lauricella_fc.core import EvaluationPoint, ParameterSet
from lauricella_fc.errors import DegenerateParameterError
from lauricella_fc.relations import tpr1_raw, tpr1_reduced, tpr2_reduced
from lauricella_fc.sampling import random_generic_parameters, random_point

P1 = ParameterSet(1, 0.3, 0.45, (0.7,))
P2 = ParameterSet(2, 0.3, 0.45, (0.7, 0.85))
P3 = ParameterSet(3, 0.3, 0.45, (0.7, 0.85, 1.15))
X1 = EvaluationPoint((0.05,))
X2 = EvaluationPoint((0.01, 0.02))
X3 = EvaluationPoint((0.004, 0.005, 0.006))


def test_tpr1_rational_identity_at_origin():
    # at x = 0 all series factors are 1 and the identity is rational:
    # (1-a)/b - (c-a)/(b-c+1) = (1-c)(1-a+b)/(b(b-c+1))
    rep = tpr1_reduced(P1, EvaluationPoint((0.0,)))
    assert rep.residual <= 1e-14
    a, b, c = 0.3, 0.45, 0.7
    lhs_hand = (1 - a) / b - (c - a) / (b - c + 1)
    assert abs(rep.lhs - lhs_hand) < 1e-15
    assert abs(rep.rhs - (1 - c) * (1 - a + b) / (b * (b - c + 1))) < 1e-15


def test_tpr1_reduced_examples():
    assert tpr1_reduced(P1, X1).residual <= 1e-10
    assert tpr1_reduced(P2, X2).residual <= 1e-9
    assert tpr1_reduced(P3, X3).residual <= 1e-8


def test_tpr2_reduced_examples():
    assert tpr2_reduced(P1, X1).residual <= 1e-10
    assert tpr2_reduced(P2, X2).residual <= 1e-9
    assert tpr2_reduced(P3, X3).residual <= 1e-8


def test_tpr2_m1_right_hand_side():
    # the single-variable pairing of the two cocycles does not vanish; the
    # correct right-hand side is (c-1)/(1-x), with the x = 0 limit matching
    # the term-by-term value (a-1) - (a_1-1) = c - 1
    rep = tpr2_reduced(P1, X1)
    assert abs(rep.rhs - (0.7 - 1) / (1 - 0.05)) < 1e-15
    rep0 = tpr2_reduced(P1, EvaluationPoint((0.0,)))
    assert rep0.residual <= 1e-14
    assert abs(rep0.lhs - (0.7 - 1)) < 1e-15


def test_tpr2_m2_right_hand_side_is_zero():
    assert tpr2_reduced(P2, X2).rhs == 0


def test_tpr1_raw_examples():
    assert tpr1_raw(P1, X1).residual <= 1e-9
    assert tpr1_raw(P2, X2).residual <= 1e-8


def test_raw_and_reduced_agree_in_verdict():
    rng = np.random.default_rng(71)
    for _ in range(10):
        m = int(rng.integers(1, 3))
        p = random_generic_parameters(rng, m)
        x = random_point(rng, m, 0.01)
        raw = tpr1_raw(p, x)
        reduced = tpr1_reduced(p, x)
        assert raw.passed == reduced.passed
        assert raw.passed


def test_residuals_stable_under_x_scaling():
    for scale in (1.0, 0.5, 0.25):
        x = EvaluationPoint(tuple(scale * v for v in X2.x))
        assert tpr1_reduced(P2, x).residual <= 1e-8
        assert tpr2_reduced(P2, x).residual <= 1e-8
        assert tpr1_raw(P2, x).residual <= 1e-7


def test_random_sample_m_up_to_3():
    rng = np.random.default_rng(83)
    for _ in range(15):
        m = int(rng.integers(1, 4))
        p = random_generic_parameters(rng, m)
        x = random_point(rng, m, 0.01)
        assert tpr1_reduced(p, x).residual <= 1e-8
        assert tpr2_reduced(p, x).residual <= 1e-8


def test_degenerate_b_subset_reported():
    # b = c1 + c2 - 2 makes b_I = 0 exactly for I = {1, 2}
    p = ParameterSet(2, 0.3, 0.7 + 0.85 - 2, (0.7, 0.85))
    with pytest.raises(DegenerateParameterError) as err:
        tpr1_reduced(p, X2)
    assert "{1, 2}" in str(err.value)


def test_report_term_table():
    rep = tpr1_reduced(P2, X2)
    assert [members for members, _ in rep.terms] == [(), (1,), (2,), (1, 2)]
    # terms sum to the reported left-hand side
    assert abs(sum(v for _, v in rep.terms) - rep.lhs) < 1e-14 * abs(rep.lhs)
    assert rep.verdict == "pass"
