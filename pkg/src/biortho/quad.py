"""Adaptive quadrature for measures with densities and Dirac atoms.

The integrator is vector valued: the integrand maps an array of abscissae of
shape (n,) to an array of shape (m, n) (or (n,)), so all moments of a weight
are computed from one set of function evaluations.

Each panel carries a 20-point Gauss-Legendre estimate and the embedded-grade
10-point estimate; their difference is the panel error.  Refinement is
global: panels whose normalised error is within a factor of the worst one are
bisected together in one batched evaluation, until the summed error of every
component is below ``tol`` times the integral of its absolute value.  Panels
are kept in a fixed order and reduced left to right, so results are
bit-stable across runs.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .errors import BudgetExceeded, DomainError
from . import specfun

__all__ = [
    "QuadResult",
    "integrate",
    "pair",
    "moments",
    "default_tol",
    "airy_abel_tail",
]

_X20, _W20 = np.polynomial.legendre.leggauss(20)
_X10, _W10 = np.polynomial.legendre.leggauss(10)
_NODES = np.concatenate([_X20, _X10])
_NPT = _NODES.size

DEFAULT_TOL = 1e-10
OSCILLATORY_TOL = 1e-8


def default_tol(oscillatory: bool = False) -> float:
    """Default tolerance; ``BIORTHO_TOL`` overrides the non-oscillatory value."""
    env = os.environ.get("BIORTHO_TOL")
    base = float(env) if env else DEFAULT_TOL
    return max(base, OSCILLATORY_TOL) if oscillatory else base


@dataclass
class QuadResult:
    value: np.ndarray | float
    errorEstimate: np.ndarray | float
    panelsUsed: int
    truncationPoints: tuple = ()
    converged: bool = True
    absValue: np.ndarray | float = field(default=0.0)


def _as_2d(y, n):
    y = np.asarray(y, dtype=float)
    if y.ndim == 1:
        return y.reshape(1, n)
    return y.reshape(-1, n)


def _eval_panels(f, lo, hi):
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    xs = (mid[:, None] + half[:, None] * _NODES[None, :]).ravel()
    y = _as_2d(f(xs), xs.size)
    m = y.shape[0]
    y = y.reshape(m, lo.size, _NPT)
    y20 = y[:, :, :20]
    y10 = y[:, :, 20:]
    g20 = (y20 * _W20).sum(axis=2) * half
    g10 = (y10 * _W10).sum(axis=2) * half
    a20 = (np.abs(y20) * _W20).sum(axis=2) * half
    if not np.all(np.isfinite(g20)):
        raise DomainError("integrand returned non-finite values")
    return g20, np.abs(g20 - g10), a20


def _adaptive_finite(f, a, b, tol, budget, pieces=4):
    edges = np.linspace(a, b, pieces + 1)
    lo, hi = edges[:-1].copy(), edges[1:].copy()
    val, err, aval = _eval_panels(f, lo, hi)
    used = lo.size
    while True:
        scale = aval.sum(axis=1)
        target = tol * scale
        tot_err = err.sum(axis=1)
        if np.all(tot_err <= target):
            return val.sum(axis=1), tot_err, aval.sum(axis=1), used, True
        with np.errstate(divide="ignore", invalid="ignore"):
            ne = np.where(target[:, None] > 0, err / target[:, None], np.where(err > 0, np.inf, 0.0))
        ne = ne.max(axis=0)
        # panels already at floating resolution cannot be split further
        splittable = (hi - lo) > 64 * np.finfo(float).eps * np.maximum(np.abs(lo), np.abs(hi)) + 1e-300
        ne_s = np.where(splittable, ne, 0.0)
        worst = ne_s.max()
        if worst <= 0 or used >= budget:
            ok = np.all(tot_err <= target)
            if used >= budget and not ok:
                raise BudgetExceeded(
                    f"quadrature on [{a:g}, {b:g}] exceeded {budget} panels",
                    partial=val.sum(axis=1))
            return val.sum(axis=1), tot_err, aval.sum(axis=1), used, ok
        pick = ne_s >= 0.125 * worst
        idx = np.nonzero(pick)[0]
        mids = 0.5 * (lo[idx] + hi[idx])
        nlo = np.concatenate([lo[idx], mids])
        nhi = np.concatenate([mids, hi[idx]])
        v2, e2, a2 = _eval_panels(f, nlo, nhi)
        used += nlo.size
        keep = ~pick
        # interleave children to keep panels ordered left to right
        order_lo = np.concatenate([lo[keep], nlo])
        order = np.argsort(order_lo, kind="stable")
        lo = order_lo[order]
        hi = np.concatenate([hi[keep], nhi])[order]
        val = np.concatenate([val[:, keep], v2], axis=1)[:, order]
        err = np.concatenate([err[:, keep], e2], axis=1)[:, order]
        aval = np.concatenate([aval[:, keep], a2], axis=1)[:, order]


def _tail(f, a, direction, tol, budget, h0):
    """Integrate from a to +/-infinity with geometrically growing panels."""
    total = None
    err = None
    absv = None
    used = 0
    width = h0
    start = a
    n = 0
    while True:
        end = start + direction * width
        lo, hi = (start, end) if direction > 0 else (end, start)
        v, e, av, u, _ = _adaptive_finite(f, lo, hi, tol, budget)
        used += u
        if total is None:
            total, err, absv = v.copy(), e.copy(), av.copy()
        else:
            total += v
            err += e
            absv += av
        n += 1
        if n >= 2 and np.all(av <= 0.1 * tol * absv):
            return total, err, absv, used, end
        if n > 64 or used > budget:
            raise BudgetExceeded("tail quadrature did not terminate", partial=total)
        start = end
        width *= 2.0


def integrate(f: Callable, support, tol: float | None = None, budget: int = 20000,
              tail_width: float = 1.0) -> QuadResult:
    """Integrate ``f`` over a union of intervals.

    ``support`` is an interval ``(a, b)`` or a sequence of them; endpoints may be
    infinite.  ``tol`` is relative to the integral of ``|f|`` per component.
    """
    if tol is None:
        tol = default_tol()
    if tol <= 0:
        raise DomainError("tol must be positive")
    if isinstance(support, tuple) and len(support) == 2 and not isinstance(support[0], tuple):
        intervals = [support]
    else:
        intervals = list(support)
    total = err = absv = None
    used = 0
    cuts = []
    ok = True
    for a, b in intervals:
        a, b = float(a), float(b)
        if a > b:
            raise DomainError("interval endpoints out of order")
        parts = []
        if math.isinf(a) and math.isinf(b):
            parts.append(("tail", 0.0, -1))
            parts.append(("tail", 0.0, 1))
        elif math.isinf(b):
            parts.append(("tail", a, 1))
        elif math.isinf(a):
            parts.append(("tail", b, -1))
        else:
            parts.append(("fin", a, b))
        for kind, p, q in parts:
            if kind == "fin":
                if p == q:
                    continue
                v, e, av, u, c = _adaptive_finite(f, p, q, tol, budget)
                ok = ok and c
            else:
                v, e, av, u, end = _tail(f, p, q, tol, budget, max(tail_width, abs(p)))
                cuts.append(end)
            used += u
            if total is None:
                total, err, absv = v.copy(), e.copy(), av.copy()
            else:
                total += v
                err += e
                absv += av
    if total is None:
        total = err = absv = np.zeros(1)
    scalar = total.size == 1
    return QuadResult(
        value=float(total[0]) if scalar else total,
        errorEstimate=float(err[0]) if scalar else err,
        panelsUsed=used,
        truncationPoints=tuple(cuts),
        converged=ok,
        absValue=float(absv[0]) if scalar else absv,
    )


# ---------------------------------------------------------------- Airy tails


def _airy_T(j_max, lam, rest_neg6):
    """Abel-summed int_{-inf}^{-lam} y^j Ai(y) dy for j = 0..j_max."""
    ai, aip = specfun.airy_vec(np.array([-lam]))
    ai, aip = float(ai[0]), float(aip[0])
    x = -lam
    # T(0) via two integrations by parts plus an absolutely convergent remainder
    T0 = aip / x + ai / x ** 2 + 2 * aip / x ** 4 + 8 * ai / x ** 5 + 40 * rest_neg6
    T = [T0]
    for j in range(1, j_max + 1):
        v = x ** (j - 1) * aip - (j - 1) * x ** (j - 2) * ai if j >= 2 else aip
        if j >= 3:
            v += (j - 1) * (j - 2) * T[j - 3]
        T.append(v)
    return T, ai, aip


def airy_abel_tail(j_max: int, lam: float, tol: float = 1e-12):
    """Tails int_{-inf}^{-lam} y^j F(y) dy for F = Ai and F = Ai'.

    The integrals do not converge absolutely; they are the Abel limits, reduced
    by y Ai = Ai'' to boundary terms at -lam plus the j = 0 tail, which is
    itself integrated by parts down to an absolutely convergent remainder.
    """
    rem = integrate(lambda y: y ** -6.0 * specfun.airy_vec(y)[0], (-400.0, -lam), tol=tol).value
    # beyond -400 the remainder is below 1e-17 in absolute value
    T, ai, aip = _airy_T(j_max, lam, rem)
    S = [ai]
    x = -lam
    for j in range(1, j_max + 1):
        S.append(x ** j * ai - j * T[j - 1])
    return T, S


# ---------------------------------------------------------------- measures


def _poly_eval(f, x):
    if hasattr(f, "to_float"):
        return f(x)
    return np.asarray(f(x), dtype=float) * np.ones_like(x)


def moments(measure, K: int, tol: float | None = None) -> QuadResult:
    """Quadrature moments <mu, x^k>, k = 0..K, atoms included.

    ``absValue`` carries the integrals of |x^k w|, the natural scale for the
    cancellation in signed weights.
    """
    if tol is None:
        tol = default_tol(measure.oscillatory)
    ks = np.arange(K + 1, dtype=float)

    def g(x):
        w = measure.w(x)
        return (x[None, :] ** ks[:, None]) * w[None, :]

    res = integrate(g, measure.windows, tol=tol)
    val = np.atleast_1d(np.array(res.value, dtype=float))
    absv = np.atleast_1d(np.array(res.absValue, dtype=float))
    err = np.atleast_1d(np.array(res.errorEstimate, dtype=float))
    if measure.abel is not None:
        ab = measure.abel
        c, amp, lam = ab["c"], ab["amp"], ab["lam"]
        T, S = airy_abel_tail(K, lam)
        base = T if ab["fn"] == "ai" else S
        tail = np.array([amp * c ** (-j - 1.0) * base[j] for j in range(K + 1)])
        val = val + tail
        absv = absv + np.abs(tail)
    for loc, mass in measure.atoms:
        val = val + mass * float(loc) ** ks
        absv = absv + abs(mass) * abs(float(loc)) ** ks
    return QuadResult(val, err, res.panelsUsed, res.truncationPoints, res.converged, absv)


def pair(measure, f, tol: float | None = None) -> float:
    """<mu, f>: weight integral plus atom contributions.

    Polynomials (``Poly`` or a coefficient sequence) go through the moment
    route, which includes the regularised Airy tails where relevant.
    """
    from .polyseq import Poly

    if isinstance(f, (list, tuple)):
        f = Poly(f)
    if isinstance(f, (int, float, Fraction)):
        f = Poly.const(f)
    if isinstance(f, Poly):
        deg = max(f.degree, 0)
        mom = moments(measure, deg, tol).value
        return float(sum(float(c) * mom[j] for j, c in enumerate(f.coefficients)))
    if measure.abel is not None:
        raise DomainError("non-polynomial pairing is undefined for this measure's oscillatory tail")
    if tol is None:
        tol = default_tol(measure.oscillatory)
    res = integrate(lambda x: _poly_eval(f, x) * measure.w(x), measure.windows, tol=tol)
    out = float(res.value)
    for loc, mass in measure.atoms:
        out += mass * float(f(np.array([float(loc)]))[0])
    return out
