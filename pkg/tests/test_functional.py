import math
from fractions import Fraction as F

import pytest
from hypothesis import assume, given

from biortho import ModelParams, Poly, classify, derivedFunctionals, genP, genQ, momentsU0, momentsU1
from biortho.errors import RegularityError, SingularSystemError
from biortho.functional import moment_table, pair_exact
from biortho.polyseq import check_regularity
from biortho.weights import case_params

from conftest import dual_moments, model_params

AIRY = ModelParams(0, 0, 0, 0, 1)


def regular(p, N):
    try:
        check_regularity(p, N)
    except RegularityError:
        return False
    return True


def test_classification_tags():
    assert classify(AIRY).tag == "S2"
    assert classify(ModelParams(0, 0, 1, 3, F(1, 2))).tag == "S2"
    assert classify(ModelParams(1, 1, 0, 1, 1)).tag == "S1"
    for alpha in (0, F(3, 2)):
        sys = classify(case_params("III.2", alpha=alpha))
        assert sys.tag == "S3"
        assert sys.sigma == Poly((0, -1))
        assert sys.tau == Poly((alpha, -1))


def test_singular_system():
    # eta = 2 r alpha1 - gamma = 0 and delta0 = s + r = 0
    with pytest.raises(SingularSystemError):
        classify(ModelParams(1, -1, 0, 1, 2))


def test_airy_moments():
    sys = classify(AIRY)
    m0 = momentsU0(sys, 12)
    assert m0[:7] == [1, 0, 0, 2, 0, 0, 40]
    for n in range(5):
        assert m0[3 * n] == F(math.factorial(3 * n), 3 ** n * math.factorial(n))
    m1 = momentsU1(sys, m0, 12)
    assert m1[:5] == [0, 1, 0, 0, 8]
    for n in range(4):
        assert m1[3 * n + 1] == F(math.factorial(3 * n + 1), 3 ** n * math.factorial(n))


def test_laguerre_moments():
    sys = classify(case_params("III.2", alpha=0))
    m0 = momentsU0(sys, 8)
    assert m0 == [math.factorial(k) for k in range(9)]
    m1 = momentsU1(sys, m0, 8)
    assert m1[:6] == [0, 1, 0, 6, 0, 120]
    for n in range(1, 9):
        assert m1[n] == n * m0[n - 1] - n * m1[n - 1]


def test_derived_functionals_examples():
    p = ModelParams(F(1, 3), F(-1, 2), F(2), F(5, 4), F(-3, 7))
    t = moment_table(classify(p), 6)
    P = genP(p, 3)
    assert pair_exact(P[1], t.v0) == -p.delta0
    assert pair_exact(P[2], t.v1) == -2 * p.delta1
    assert [pair_exact(P[j], t.m2) for j in range(3)] == [0, 0, 1]


def test_moment_table_lengths():
    t = moment_table(classify(AIRY), 10)
    assert all(len(seq) == 11 for seq in (t.m0, t.m1, t.m2, t.v0, t.v1))
    with pytest.raises(ValueError):
        pair_exact(Poly((0,) * 12 + (1,)), t.m0)


@given(model_params())
def test_functional_moments_match_dual_basis(p):
    assume(regular(p, 14))
    sys = classify(p) if not (p.eta == 0 and p.delta0 == 0) else None
    assume(sys is not None)
    m0 = momentsU0(sys, 13)
    m1 = momentsU1(sys, m0, 12)
    d0, d1 = dual_moments(genP(p, 12), 12)
    assert m0[:13] == d0
    assert m1 == d1


@given(model_params())
def test_exact_two_orthogonality(p):
    assume(regular(p, 14) and not (p.eta == 0 and p.delta0 == 0))
    t = moment_table(classify(p), 14)
    P = genP(p, 14)
    x = Poly.x()
    for k, mk in ((0, t.m0), (1, t.m1)):
        for m in range(0, 7):
            xm = Poly((0,) * m + (1,))
            for n in range(2 * m + k, 15 - m):
                val = pair_exact(xm * P[n], mk)
                if n >= 2 * m + k + 1:
                    assert val == 0
                else:
                    assert val != 0


@given(model_params())
def test_dual_pairing(p):
    assume(regular(p, 15) and not (p.eta == 0 and p.delta0 == 0))
    t = moment_table(classify(p), 14)
    P, Q = genP(p, 14), genQ(p, 14)
    assert pair_exact(P[1], t.v0) == -p.delta0
    assert pair_exact(P[2], t.v1) == -2 * p.delta1
    for n in range(15):
        assert pair_exact(Q[n], t.v0) == (1 if n == 0 else 0)
        assert pair_exact(Q[n], t.v1) == (1 if n == 1 else 0)


@given(model_params())
def test_functional_recurrence_n0(p):
    assume(regular(p, 14) and not (p.eta == 0 and p.delta0 == 0))
    t = moment_table(classify(p), 10)
    for n in range(10):
        assert t.m0[n + 1] == p.beta0 * t.m0[n] + p.alpha1 * t.m1[n] + p.gamma1 * t.m2[n]


@given(model_params())
def test_phi_sigma_eta_identity(p):
    assume(not (p.eta == 0 and p.delta0 == 0))
    sys = classify(p)
    assert sys.phi + sys.sigma * sys.delta0 + sys.eta == Poly.const(0)
