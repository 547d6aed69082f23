from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import assume, given

from biortho import ModelParams, Poly, coeffs, derivative_Q, genP, genQ
from biortho.errors import RegularityError
from biortho.polyseq import check_regularity

from conftest import model_params

AIRY = ModelParams(0, 0, 0, 0, 1)


def regular(p, N):
    try:
        check_regularity(p, N + 1)
    except RegularityError:
        return False
    return True


def test_coeffs_at_r_s_zero():
    p = ModelParams(0, 0, F(3, 2), F(-1, 3), F(5, 7))
    for n in range(8):
        c = coeffs(p, n)
        assert c.beta == F(3, 2)
        assert c.alpha_next == (n + 1) * F(-1, 3)
        assert c.gamma_next == (n + 2) * (n + 1) * F(5, 7)


def test_coeffs_beta1_example():
    assert coeffs(ModelParams(1, 0, 0, 1, 1), 1).beta == -2


def test_low_degree_polynomials():
    p = ModelParams(F(1, 2), F(-1, 3), F(2), F(3, 4), F(-5, 2))
    P = genP(p, 4)
    x = Poly.x()
    assert P[0] == Poly.const(1)
    assert P[1] == x - p.beta0
    assert P[2] == (x - coeffs(p, 1).beta) * P[1] - p.alpha1
    assert all(P[n].degree == n and P[n].coefficients[-1] == 1 for n in range(5))


def test_airy_case_p3():
    P = genP(AIRY, 3)
    assert P[3] == Poly((-2, 0, 0, 1))
    assert str(P[3]) == "x^3 - 2"


def test_q1():
    p = ModelParams(F(1, 3), F(2, 5), F(7, 2), 1, 1)
    Q = genQ(p, 2)
    assert Q[1] == Poly.x() - (-p.r - p.s + p.beta0)


def test_regularity_names_index():
    # gamma_1 = 2 gamma vanishes when gamma = 0
    with pytest.raises(RegularityError) as exc:
        genP(ModelParams(0, 0, 0, 1, 0), 4)
    assert exc.value.index == 1


def test_two_symmetry_sparsity():
    P = genP(AIRY, 16)
    for n, p in enumerate(P):
        for j, c in enumerate(p.coefficients):
            if c != 0:
                assert (n - j) % 3 == 0
    nz = [j for j, c in enumerate(P[7].coefficients) if c != 0]
    assert nz == [1, 4, 7]


def test_poly_arithmetic_and_float_eval():
    p = Poly((1, F(1, 2), -3))
    q = Poly((0, 2))
    assert (p * q).coefficients == (0, 2, 1, -6)
    assert (p + q - p) == q
    assert p.deriv() == Poly((F(1, 2), -6))
    assert p(F(2)) == 1 + 1 - 12
    assert np.allclose(p(np.array([0.0, 2.0])), [1.0, -10.0])
    assert str(Poly((F(-1, 2), 0, 3))) == "3*x^2 - 1/2"


@given(model_params())
def test_hahn_property(p):
    assume(regular(p, 16))
    P = genP(p, 17)
    assert genQ(p, 16) == derivative_Q(P)


@given(model_params())
def test_beta_tilde_link(p):
    for n in range(17):
        assert coeffs(p, n).beta_t == coeffs(p, n + 1).beta + p.delta(n)


@given(model_params())
def test_p_from_q(p):
    assume(regular(p, 16))
    P, Q = genP(p, 16), genQ(p, 16)
    for n in range(1, 17):
        assert P[n] == Q[n] - p.delta(n + 1) * n * Q[n - 1]
