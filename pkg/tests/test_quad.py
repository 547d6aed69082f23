import math

import mpmath as mp
import numpy as np
import pytest

from biortho import buildMeasure, integrate, moments, pair, specfun as sf
from biortho.errors import BudgetExceeded, DomainError
from biortho.polyseq import Poly
from biortho.quad import default_tol
from biortho.weights import tricomiConstants


def test_gaussian_mass():
    r = integrate(lambda x: np.exp(-x * x) / math.sqrt(math.pi), (-math.inf, math.inf))
    assert abs(r.value - 1) < 1e-10
    assert r.converged and r.errorEstimate <= 1e-10 and len(r.truncationPoints) == 2


@pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0])
def test_airy_exponential_integral(alpha):
    f = lambda x: np.exp(alpha * x) * sf.airy_vec(x + alpha ** 2)[0]
    r = integrate(f, [(-math.inf, 0.0), (0.0, math.inf)], tol=1e-12)
    assert abs(r.value / math.exp(-2 * alpha ** 3 / 3) - 1) < 1e-8


@pytest.mark.parametrize("p,q", [(-0.6, -0.6), (-0.7, -0.5)])
def test_tricomi_laplace_i1(p, q):
    f = lambda x: np.exp(-x) * sf.tricomi_vec(1 + p, 2 + p + q, 2 * np.maximum(x, 1e-300))
    num = integrate(f, [(0.0, 1e-3), (1e-3, math.inf)], tol=1e-12).value
    closed = math.gamma(-p - q) / math.gamma(1 - q) * sf.hyp2F1(1, 1 + p, 1 - q, -1)
    assert abs(num / closed - 1) < 1e-9
    assert abs(tricomiConstants(p, q)["I1"] / closed - 1) < 1e-12
    ref = float(mp.quad(lambda x: mp.exp(-x) * mp.hyperu(1 + p, 2 + p + q, 2 * x), [0, 1, mp.inf]))
    assert abs(closed / ref - 1) < 1e-9


def test_vector_integrand_and_piecewise_consistency():
    f = lambda x: np.vstack([np.exp(-np.abs(x)), x ** 2 * np.exp(-np.abs(x))])
    whole = integrate(f, [(-math.inf, 0.0), (0.0, math.inf)], tol=1e-11)
    left = integrate(f, (-math.inf, 0.0), tol=1e-11)
    right = integrate(f, (0.0, math.inf), tol=1e-11)
    assert np.allclose(whole.value, [2.0, 4.0], rtol=1e-11)
    assert np.all(np.abs(whole.value - left.value - right.value) <= 2e-11 * np.abs(whole.value))


def test_halving_tol_is_stable():
    f = lambda x: np.cos(3 * x) * np.exp(-0.2 * x * x)
    a = integrate(f, (-math.inf, math.inf), tol=1e-8)
    b = integrate(f, (-math.inf, math.inf), tol=5e-9)
    assert abs(a.value - b.value) <= max(a.errorEstimate, b.errorEstimate) + 1e-16


def test_bit_stable():
    f = lambda x: np.exp(-x * x) * np.sin(x) ** 2
    a = integrate(f, (-math.inf, math.inf))
    b = integrate(f, (-math.inf, math.inf))
    assert a.value == b.value and a.panelsUsed == b.panelsUsed


def test_budget_exceeded_carries_partial():
    f = lambda x: np.sin(1.0 / np.maximum(x, 1e-12))
    with pytest.raises(BudgetExceeded) as exc:
        integrate(f, (1e-6, 1.0), tol=1e-12, budget=50)
    assert exc.value.partial is not None


def test_bad_arguments():
    with pytest.raises(DomainError):
        integrate(lambda x: x, (0.0, 1.0), tol=0.0)
    with pytest.raises(DomainError):
        integrate(lambda x: x, (1.0, 0.0))


def test_default_tol_env(monkeypatch):
    assert default_tol() == 1e-10 and default_tol(True) == 1e-8
    monkeypatch.setenv("BIORTHO_TOL", "1e-9")
    assert default_tol() == 1e-9


def test_pair_examples(case_ids):
    for c in case_ids:
        b = buildMeasure(c)
        tol = 1e-6 if (b.mu0.signed or b.mu0.oscillatory) else 1e-8
        assert abs(pair(b.mu0, 1) - 1) <= tol, c
        tol = 1e-6 if (b.mu1.signed or b.mu1.oscillatory) else 1e-8
        assert abs(pair(b.mu1, 1)) <= tol, c
    airy = buildMeasure("I.2")
    assert abs(pair(airy.mu0, Poly((0, 0, 0, 1))) - 2) < 1e-8


def test_pair_callable_with_atoms():
    b = buildMeasure("III.2", alpha=1, variant="printed")
    val = pair(b.mu1, lambda x: np.ones_like(x))
    assert abs(val) < 1e-10
    with pytest.raises(DomainError):
        pair(buildMeasure("I.2").mu0, lambda x: np.ones_like(x))


def test_moments_scale_and_atoms():
    b = buildMeasure("III.2", alpha=0, variant="printed")
    r = moments(b.mu1, 3)
    assert np.allclose(r.value, [0.0, 0.5, 1.0, 3.0], atol=1e-10)
    assert np.all(r.absValue >= np.abs(r.value))
