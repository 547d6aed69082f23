"""Weight pairs (w0, w1) representing the functionals (u0, u1) for every case.

Each case pins the five recurrence parameters, then supplies explicit
densities, Dirac atoms at the origin and normalisation constants.  Densities
are vectorised over numpy arrays.  Quadrature windows are fixed at build time:
every window end is placed where the weight envelope times |x|^10 drops below
1e-19, so moments up to order 10 lose nothing to truncation.

Most cases have a single variant.  Where the printed closed forms fail the
moment oracle, the oracle-consistent form is the default (``"corrected"``) and
the printed one is kept as ``variant="printed"`` for comparison.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Callable, NamedTuple

import numpy as np

from .errors import DomainError, BiorthoError
from .functional import FunctionalSystem, classify
from .polyseq import ModelParams, to_fraction
from . import specfun
from .specfun import airy_vec, tricomi_vec, kummer_scaled_vec, omega_scaled_vec, gammainc_vec

__all__ = [
    "CASES",
    "CaseId",
    "Measure",
    "BuiltCase",
    "buildMeasure",
    "evalMeasure",
    "tricomiConstants",
    "laplace_pair",
    "case_params",
]

_LOG_CUT = math.log(1e-19)
_MOMENT_POWER = 10

# case name -> default case parameters
CASES: dict[str, dict] = {
    "I.1": {"alpha": Fraction(1)},
    "I.2": {},
    "I.3": {},
    "II": {"alpha": Fraction(1, 2)},
    "III.1": {"p": Fraction(-3, 5), "q": Fraction(-3, 5)},
    "III.1-lim1": {"beta0": Fraction(1, 2)},
    "III.1-lim2": {},
    "III.2": {"alpha": Fraction(0)},
    "IV.1": {"r": Fraction(1), "alpha1": Fraction(1)},
    "IV.2": {"mu": Fraction(-1)},
    "V.1": {"s": Fraction(1)},
    "VI.1": {"r": Fraction(5, 4), "s": Fraction(3, 4), "beta0": Fraction(-9, 10), "alpha1": Fraction(51, 20)},
    "VI.1-lim1": {"r": Fraction(5, 4), "s": Fraction(3, 4), "beta0": Fraction(-1, 8), "alpha1": Fraction(19, 16)},
    "VI.1-lim2": {"r": Fraction(5, 4), "s": Fraction(3, 4), "beta0": Fraction(-3, 2), "alpha1": Fraction(17, 4)},
    "VI.2": {"nu": Fraction(-1, 2), "alpha": Fraction(1)},
}

# defaults for the VI.1 family under the delta0*delta1 = +1 convention
PLUS_DEFAULTS = {"r": Fraction(3, 4), "s": Fraction(5, 4), "beta0": Fraction(-3, 2), "alpha1": Fraction(51, 20)}

VARIANTS = ("corrected", "printed")
CONVENTIONS = ("minus", "plus")


@dataclass(frozen=True)
class CaseId:
    """A case name plus its case parameters (rationals), variant and convention."""

    name: str
    params: tuple = ()
    variant: str = "corrected"
    convention: str = "minus"

    @classmethod
    def of(cls, name: str, variant: str = "corrected", convention: str = "minus", **kw) -> "CaseId":
        if name not in CASES:
            raise DomainError(f"unknown case {name!r}; expected one of {', '.join(CASES)}")
        if variant not in VARIANTS:
            raise DomainError(f"unknown variant {variant!r}")
        if convention not in CONVENTIONS:
            raise DomainError(f"unknown convention {convention!r}")
        base = dict(PLUS_DEFAULTS if (convention == "plus" and name == "VI.1") else CASES[name])
        for k, v in kw.items():
            if v is None:
                continue
            if k not in base:
                raise DomainError(f"case {name} has no parameter {k!r} (expected {sorted(base) or 'none'})")
            base[k] = to_fraction(v)
        return cls(name, tuple(sorted(base.items())), variant, convention)

    def get(self, key):
        return dict(self.params)[key]

    @property
    def label(self) -> str:
        inner = ",".join(f"{k}={_fmt(v)}" for k, v in self.params)
        tag = self.name + (f"({inner})" if inner else "")
        if self.variant != "corrected":
            tag += f"[{self.variant}]"
        if self.name.startswith("VI.1") and self.convention != "minus":
            tag += f"[{self.convention}]"
        return tag


def _fmt(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _as_case(case, **kw) -> CaseId:
    if isinstance(case, CaseId):
        if kw:
            d = dict(case.params)
            d.update(kw)
            return CaseId.of(case.name, case.variant, case.convention, **d)
        return case
    variant = kw.pop("variant", "corrected")
    convention = kw.pop("convention", "minus")
    return CaseId.of(case, variant, convention, **kw)


@dataclass(frozen=True)
class Measure:
    """A signed measure w(x) dx plus Dirac atoms at the origin.

    ``windows`` are the finite integration intervals (breakpoints at 0 where the
    density is piecewise), ``abel`` describes an Airy tail summed in closed
    form beyond the left window end, and ``domain`` is the closed support.
    """

    case: CaseId
    label: str
    support: str
    density: Callable
    windows: tuple
    domain: tuple
    atoms: tuple = ()
    constants: MappingProxyType = field(default_factory=lambda: MappingProxyType({}))
    oscillatory: bool = False
    signed: bool = False
    abel: dict | None = None
    right: Callable | None = None
    left: Callable | None = None
    continuous_at_zero: bool = False

    def w(self, x):
        x = np.asarray(x, dtype=float)
        return np.asarray(self.density(x), dtype=float)

    @property
    def atom_mass(self) -> float:
        return float(sum(m for _, m in self.atoms))


class BuiltCase(NamedTuple):
    mu0: Measure
    mu1: Measure
    params: ModelParams
    sys: FunctionalSystem


# ---------------------------------------------------------------- helpers


def _piecewise(right, left):
    def f(x):
        x = np.asarray(x, dtype=float)
        out = np.empty_like(x)
        m = x >= 0
        if m.any():
            out[m] = right(x[m])
        if (~m).any():
            out[~m] = left(x[~m])
        return out
    return f


def _halfline(fn):
    def f(x):
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        m = x >= 0
        if m.any():
            out[m] = fn(x[m])
        return out
    return f


def _cut(log_env, direction: int, start: float = 1.0, step: float = 0.5) -> float:
    """First |x| >= start where log envelope + 10 log|x| is below log(1e-19)."""
    x = start
    while abs(x) < 1e5:
        v = log_env(direction * x)
        if v + _MOMENT_POWER * math.log(max(1.0, x)) < _LOG_CUT:
            return direction * x
        x += step
    raise DomainError("weight does not decay fast enough for finite windows")


def _consts(**kw):
    return MappingProxyType({k: (float(v) if isinstance(v, (Fraction, int, np.floating)) else v)
                             for k, v in kw.items()})


def _mk(case, label, support, density, windows, domain, **kw) -> Measure:
    return Measure(case=case, label=label, support=support, density=density,
                   windows=tuple(windows), domain=domain, **kw)


_WHOLE = (-math.inf, math.inf)
_HALF = (0.0, math.inf)


def _check(cond: bool, msg: str):
    if not cond:
        raise DomainError(msg)


def _f(v) -> float:
    return float(v)


# ---------------------------------------------------------------- Airy cases


def _airy_envelope(alpha: float, shift: float):
    """log envelope of exp(alpha x) Ai(x + shift)."""
    def env(x):
        y = x + shift
        if y > 0:
            return alpha * x - (2.0 / 3.0) * y ** 1.5
        return alpha * x - 0.25 * math.log(max(abs(y), 1.0))
    return env


def _case_I1(cid: CaseId):
    a = cid.get("alpha")
    _check(a > 0, "case I.1 hypothesis alpha > 0 violated")
    params = ModelParams(0, 0, 0, 2 * a, 1)
    A = _f(a)
    pre = 2 * A ** 3 / 3

    def w0(x):
        ai, _ = airy_vec(x + A * A)
        return np.exp(pre + A * x) * ai

    def w1(x):
        ai, aip = airy_vec(x + A * A)
        return -np.exp(pre + A * x) * (A * ai + aip)

    env = _airy_envelope(A, A * A)
    lo = _cut(lambda x: env(x) + pre, -1)
    hi = _cut(lambda x: env(x) + pre + math.log(1 + A), 1)
    c = _consts(alpha=a, k=math.exp(pre))
    win = [(lo, hi)]
    m0 = _mk(cid, "mu0", "whole-line", w0, win, _WHOLE, constants=c, oscillatory=True, signed=True)
    m1 = _mk(cid, "mu1", "whole-line", w1, win, _WHOLE, constants=c, oscillatory=True, signed=True)
    return params, m0, m1


_ABEL_LAMBDA = 4.5


def _case_I2(cid: CaseId, scale: Fraction):
    """w0 = c Ai(c x), w1 = -c^2 Ai'(c x); c = 1 (I.2) or 3^(2/3) (I.3)."""
    c = 1.0 if scale == 1 else 3.0 ** (2.0 / 3.0)
    gamma = Fraction(1) if scale == 1 else Fraction(1, 9)
    params = ModelParams(0, 0, 0, 0, gamma)

    def w0(x):
        return c * airy_vec(c * x)[0]

    def w1(x):
        return -c * c * airy_vec(c * x)[1]

    hi = _cut(lambda x: -(2.0 / 3.0) * (c * x) ** 1.5 + 2 * math.log(c) + 0.25 * math.log(c * x + 1), 1)
    lo = -_ABEL_LAMBDA / c
    win = [(lo, 0.0), (0.0, hi)]
    k = _consts(c=c)
    m0 = _mk(cid, "mu0", "whole-line", w0, win, _WHOLE, constants=k, oscillatory=True, signed=True,
             abel={"fn": "ai", "amp": c, "c": c, "lam": _ABEL_LAMBDA})
    m1 = _mk(cid, "mu1", "whole-line", w1, win, _WHOLE, constants=k, oscillatory=True, signed=True,
             abel={"fn": "aip", "amp": -c * c, "c": c, "lam": _ABEL_LAMBDA})
    return params, m0, m1


# ---------------------------------------------------------------- Case II


def _case_II(cid: CaseId):
    a = cid.get("alpha")
    _check(a > -1, "case II hypothesis alpha > -1 violated")
    params = ModelParams(0, -1, a + 2, a + 3, 1)
    A = _f(a)

    def w0(x):
        return omega_scaled_vec(A, x, x + 1.0)

    def w1(x):
        return omega_scaled_vec(A + 1.0, x, x + 1.0) - omega_scaled_vec(A, x, x + 1.0)

    hi = _cut(lambda x: 2 * math.sqrt(x) - x - 1 + (A / 2 + 0.25) * math.log(x), 1)
    win = [(0.0, hi)]
    c = _consts(alpha=a)
    m0 = _mk(cid, "mu0", "[0,inf)", _halfline(w0), win, _HALF, constants=c)
    m1 = _mk(cid, "mu1", "[0,inf)", _halfline(w1), win, _HALF, constants=c, signed=True)
    return params, m0, m1


# ---------------------------------------------------------------- Tricomi cases


def _cU(x, p, q):
    """exp(-x) U(1+p; 2+p+q; 2x) for x >= 0."""
    return np.exp(-x) * tricomi_vec(1.0 + p, 2.0 + p + q, 2.0 * x)


def _cV(x, q, p):
    """exp(x) U(1+q; 2+p+q; -2x) for x <= 0."""
    return np.exp(x) * tricomi_vec(1.0 + q, 2.0 + p + q, -2.0 * x)


def _x_times(x, fn):
    """x * fn(x), with the value 0 at x = 0 where fn may blow up mildly."""
    out = np.zeros_like(x)
    m = x != 0
    if m.any():
        out[m] = x[m] * fn(x[m])
    return out


def tricomiConstants(p=None, q=None, variant: str = "III", params: ModelParams | None = None) -> dict:
    """Normalisation constants of the piecewise Tricomi weights.

    ``variant="III"``: the two-sided weight k1 e^{-x} U(1+p; 2+p+q; 2x) for
    x >= 0 and k2 e^{x} U(1+q; 2+p+q; -2x) for x <= 0.  The map holds Delta,
    I1, I2, k1, k2, the oracle-consistent k~i = ki/(2p) and the printed
    alternatives (``kt1_printed``, ``kt2_printed``).

    ``variant="VI"``: the Laplace-type weights of :func:`laplace_pair` for the
    given ``params``; p and q are the exponents at the left and right roots.
    """
    if variant == "III":
        _check(p is not None and q is not None, "tricomiConstants: p and q are required")
        p, q = float(p), float(q)
        _check(-1 < p < 0 and -1 < q < 0 and -2 < p + q < -1,
               "tricomiConstants: requires -1<p<0, -1<q<0, -2<p+q<-1")
        g = math.gamma(-p - q)
        I1 = g / math.gamma(1 - q) * specfun.hyp2F1(1, 1 + p, 1 - q, -1)
        I2 = g / math.gamma(1 - p) * specfun.hyp2F1(1, 1 + q, 1 - p, -1)
        delta = g * (p * specfun.hyp2F1(1, 1 + p, 1 - q, -1) + q * specfun.hyp2F1(1, 1 + q, 1 - p, -1))
        if delta == 0 or not math.isfinite(delta):
            raise DomainError("tricomiConstants: degenerate parameters (Delta vanishes)")
        k1 = p * math.gamma(1 - q) / delta
        k2 = q * math.gamma(1 - p) / delta
        return {
            "p": p, "q": q, "Delta": delta, "I1": I1, "I2": I2, "k1": k1, "k2": k2,
            "kt1": k1 / (2 * p), "kt2": k2 / (2 * p),
            "kt1_printed": q * math.gamma(-q) / (2 * delta),
            "kt2_printed": q * math.gamma(-p) / (2 * delta),
            "continuity_residual": abs(math.gamma(-p) * k1 - math.gamma(-q) * k2)
            / max(abs(math.gamma(-p) * k1), 1e-300),
        }
    if variant == "VI":
        _check(params is not None, "tricomiConstants: variant VI needs params")
        lp = laplace_pair(params)
        c = dict(lp.constants)
        if p is not None and abs(float(p) - c["a"]) > 1e-12:
            raise DomainError("tricomiConstants: p does not match the left-root exponent")
        if q is not None and abs(float(q) - c["b"]) > 1e-12:
            raise DomainError("tricomiConstants: q does not match the right-root exponent")
        c["p"], c["q"] = c["a"], c["b"]
        return c
    raise DomainError(f"tricomiConstants: unknown variant {variant!r}")


class LaplacePair(NamedTuple):
    w0: Callable
    w1: Callable
    right0: Callable
    left0: Callable
    right1: Callable
    left1: Callable
    windows: tuple
    constants: dict
    singular_at_zero: bool


def _inf_at_zero(fn):
    def g(x):
        out = np.asarray(fn(x), dtype=float)
        z = x == 0
        if z.any():
            out = out.copy()
            out[z] = math.inf
        return out
    return g


def laplace_pair(params: ModelParams) -> LaplacePair:
    """Weights for S1 systems whose phi vanishes at the origin.

    The w0 equation x w'' + (..)w' + (..)w = 0 is solved by Laplace integrals
    with kernel (t-t1)^a (t-t2)^b, giving e^{t1 x} U(1+a; C; Dx) on the right
    and e^{t2 x} U(1+b; C; -Dx) on the left (D = t2-t1, C = 2+a+b).  The
    constants make w0 continuous at 0 (or match the log singularities when
    C = 1) and normalise the total mass through closed-form Laplace
    transforms of U.
    """
    p = params
    d0, d1 = p.delta0, p.delta1
    kap = d0 * d1
    if kap == 0:
        raise DomainError("laplace_pair: requires delta0*delta1 != 0")
    phi0 = d1 * p.alpha1 + p.gamma + kap * p.beta0
    if phi0 != 0:
        raise DomainError("laplace_pair: phi must vanish at the origin")
    eta = p.eta
    if eta == 0:
        raise DomainError("laplace_pair: requires eta != 0")
    K = _f(kap)
    s, b0, a1 = _f(p.s), _f(p.beta0), _f(p.alpha1)
    # Q(t) = t^2 + q1 t + q0, P(t) = p1 t + p0 after dividing the ODE by -kappa
    q1, q0 = -2 * s / K, 1 / K
    p1, p0 = (2 * s * b0 + a1) / K + 2, -(b0 + 2 * s) / K
    disc = q1 * q1 - 4 * q0
    if disc <= 0:
        raise DomainError("laplace_pair: characteristic roots are not real and distinct")
    sq = math.sqrt(disc)
    t1, t2 = (-q1 - sq) / 2, (-q1 + sq) / 2
    if not (t1 < 0 < t2):
        raise DomainError("laplace_pair: characteristic roots do not straddle 0 "
                          "(delta1 < 0 < delta0 violated); no solution decays at both ends")
    a = (p1 * t1 + p0 - (2 * t1 + q1)) / (t1 - t2)
    b = (p1 * t2 + p0 - (2 * t2 + q1)) / (t2 - t1)
    D = t2 - t1
    C = 2 + a + b
    for v in (a, b):
        if abs(v + 1) < 1e-13:
            continue
        if v < -1:
            raise DomainError("laplace_pair: exponent below -1, weight not integrable")
        if v >= 0 and abs(v - round(v)) < 1e-13:
            raise DomainError("laplace_pair: exponent is a non-negative integer (Gamma pole)")
    a = -1.0 if abs(a + 1) < 1e-13 else a
    b = -1.0 if abs(b + 1) < 1e-13 else b
    C = 2 + a + b
    if abs(C - 1) < 1e-13:
        C = 1.0
    if C > 1:
        raise DomainError("laplace_pair: 2 + a + b > 1, boundary terms at 0 do not vanish")

    def J(aa, bb, z):
        f = specfun.hyp2F1(1 + aa, 1, 1 - bb, 1 - 1 / z)
        return math.gamma(2 - C) / math.gamma(1 - bb) / z * f / D

    J1 = J(a, b, -t1 / D)
    J2 = J(b, a, t2 / D)
    Kn = 1.0 / (math.gamma(-b) * J1 + math.gamma(-a) * J2)
    k1, k2 = math.gamma(-b) * Kn, math.gamma(-a) * Kn
    E = _f(eta)
    ph1 = -K

    def r0(x):
        return k1 * np.exp(t1 * x) * tricomi_vec(1 + a, C, D * x)

    def l0(x):
        return k2 * np.exp(t2 * x) * tricomi_vec(1 + b, C, -D * x)

    def xdr(x):
        # x * w0'(x) on x >= 0
        base = k1 * np.exp(t1 * x)
        out = t1 * x * base * tricomi_vec(1 + a, C, D * x)
        if a != -1:
            out = out - (1 + a) * D * base * _x_times(x, lambda y: tricomi_vec(2 + a, C + 1, D * y))
        return out

    def xdl(x):
        base = k2 * np.exp(t2 * x)
        out = t2 * x * base * tricomi_vec(1 + b, C, -D * x)
        if b != -1:
            out = out + (1 + b) * D * base * _x_times(x, lambda y: tricomi_vec(2 + b, C + 1, -D * y))
        return out

    def lin(xd, w, x):
        return (ph1 * xd + (ph1 + _f(d0) * (x - b0)) * w) / E

    def r1(x):
        return lin(xdr(x), r0(x), x)

    def l1(x):
        return lin(xdl(x), l0(x), x)

    if C >= 1:
        # logarithmic singularity at the origin: report it instead of a truncated value
        r0, l0, r1, l1 = (_inf_at_zero(g) for g in (r0, l0, r1, l1))

    lk = math.log(max(abs(k1), abs(k2), 1e-300)) + math.log(1 + abs(b0) + 2 * abs(_f(d0))) + 2
    hi = _cut(lambda x: t1 * x + lk, 1)
    lo = _cut(lambda x: t2 * x + lk, -1)
    consts = {"a": a, "b": b, "t1": t1, "t2": t2, "D": D, "C": C, "J1": J1, "J2": J2,
              "k1": k1, "k2": k2, "kt1": k1 / E, "kt2": k2 / E, "eta": E,
              "continuity_residual": abs(math.gamma(-a) * k1 - math.gamma(-b) * k2)
              / max(abs(math.gamma(-a) * k1), 1e-300)}
    return LaplacePair(_piecewise(r0, l0), _piecewise(r1, l1), r0, l0, r1, l1,
                       ((lo, 0.0), (0.0, hi)), consts, C >= 1)


def _from_laplace(cid, params, extra=None):
    lp = laplace_pair(params)
    c = dict(lp.constants)
    if extra:
        c.update(extra)
    c = _consts(**c)
    cont = not lp.singular_at_zero
    m0 = _mk(cid, "mu0", "piecewise-at-0", lp.w0, lp.windows, _WHOLE, constants=c,
             right=lp.right0, left=lp.left0, continuous_at_zero=cont)
    m1 = _mk(cid, "mu1", "piecewise-at-0", lp.w1, lp.windows, _WHOLE, constants=c, signed=True,
             right=lp.right1, left=lp.left1, continuous_at_zero=cont)
    return m0, m1, lp


def _case_III1(cid: CaseId):
    p, q = cid.get("p"), cid.get("q")
    _check(-1 < p < 0 and -1 < q < 0 and -2 < p + q < -1,
           "case III.1 hypotheses -1<p<0, -1<q<0, -2<p+q<-1 violated")
    b0, a1 = q - p, -(p + q)
    params = ModelParams(-1, 0, b0, a1, b0 - a1)
    tc = tricomiConstants(p, q, "III")
    P, Q, B0 = _f(p), _f(q), _f(b0)
    k1, k2 = tc["k1"], tc["k2"]
    if cid.variant == "printed":
        kt1, kt2 = tc["kt1_printed"], tc["kt2_printed"]
    else:
        kt1, kt2 = tc["kt1"], tc["kt2"]

    def r0(x):
        return k1 * _cU(x, P, Q)

    def l0(x):
        return k2 * _cV(x, Q, P)

    def r1(x):
        return kt1 * ((1 + B0) * _cU(x, P, Q) - 2 * _x_times(x, lambda y: _cU(y, P, 1 + Q)))

    def l1(x):
        return kt2 * ((1 + B0 - 2 * x) * _cV(x, Q, P) + 2 * _x_times(x, lambda y: _cV(y, Q, 1 + P)))

    lk = math.log(max(abs(k1), abs(k2), abs(kt1), abs(kt2))) + 3
    hi = _cut(lambda x: -x + lk, 1)
    win = ((-hi, 0.0), (0.0, hi))
    c = _consts(**tc)
    m0 = _mk(cid, "mu0", "piecewise-at-0", _piecewise(r0, l0), win, _WHOLE, constants=c,
             right=r0, left=l0, continuous_at_zero=True)
    m1 = _mk(cid, "mu1", "piecewise-at-0", _piecewise(r1, l1), win, _WHOLE, constants=c, signed=True,
             right=r1, left=l1, continuous_at_zero=True)
    return params, m0, m1


def _case_III1_lim1(cid: CaseId):
    b0 = cid.get("beta0")
    _check(-1 < b0 < 1, "case III.1-lim1 hypothesis -1 < beta0 < 1 violated")
    params = ModelParams(-1, 0, b0, 1, b0 - 1)
    p = -(1 + b0) / 2
    if cid.variant != "printed":
        m0, m1, _ = _from_laplace(cid, params, {"p": p, "q": -1 - p})
        return params, m0, m1
    _check(b0 != 0, "case III.1-lim1 printed form requires beta0 != 0")
    P, B0 = _f(p), _f(b0)
    k = B0 * math.gamma(2 + P) / (1 + P + B0 * specfun.hyp2F1(1, 1 + P, 2 + P, -1))
    lam0 = k / (B0 * math.gamma(1 + P))
    lam1 = -k / ((1 + B0) * math.gamma(1 + P))

    def w0(x):
        return k * _cU(x, P, -P - 1)

    def w1(x):
        return -k * (_cU(x, P, -P - 1) + 2 / (1 + B0) * x * _cU(x, P, -P))

    hi = _cut(lambda x: -x + math.log(abs(k) + 1) + 2, 1)
    c = _consts(p=p, k=k, lambda0=lam0, lambda1=lam1)
    m0 = _mk(cid, "mu0", "[0,inf)", _halfline(w0), [(0.0, hi)], _HALF, constants=c, atoms=((0.0, lam0),),
             signed=True)
    m1 = _mk(cid, "mu1", "[0,inf)", _halfline(w1), [(0.0, hi)], _HALF, constants=c, atoms=((0.0, lam1),),
             signed=True)
    return params, m0, m1


def _case_III1_lim2(cid: CaseId):
    params = ModelParams(-1, 0, 0, 2, -2)

    def r0(x):
        return 0.5 * np.exp(-x)

    def l0(x):
        return 0.5 * np.exp(x)

    def r1(x):
        return -0.25 * (1 - 2 * x) * np.exp(-x)

    def l1(x):
        return -0.25 * np.exp(x)

    hi = _cut(lambda x: -x + math.log(x + 1), 1)
    win = ((-hi, 0.0), (0.0, hi))
    c = _consts(c=Fraction(1, 2))
    m0 = _mk(cid, "mu0", "whole-line", _piecewise(r0, l0), win, _WHOLE, constants=c,
             right=r0, left=l0, continuous_at_zero=True)
    m1 = _mk(cid, "mu1", "piecewise-at-0", _piecewise(r1, l1), win, _WHOLE, constants=c, signed=True,
             right=r1, left=l1, continuous_at_zero=True)
    return params, m0, m1


# ---------------------------------------------------------------- Laguerre-type


def _case_III2(cid: CaseId):
    a = cid.get("alpha")
    _check(a >= 0, "case III.2 hypothesis alpha >= 0 violated")
    params = ModelParams(1, 0, a + 1, a + 1, 2 * (a + 1))
    A = _f(a)
    g = math.gamma(A + 1)
    two = 2.0 ** (A + 1)
    lam1 = -1.0 / two

    def w0(x):
        return x ** A * np.exp(-x) / g

    def r1(x):
        return w0(x) - np.exp(x) * gammainc_vec(A + 1, 2 * x, True) / (two * g)

    def l1(x):
        return -np.exp(x) / two

    hi = _cut(lambda x: A * math.log(x) - x, 1)
    c = _consts(alpha=a, lambda0=0, lambda1=lam1)
    m0 = _mk(cid, "mu0", "[0,inf)", _halfline(w0), [(0.0, hi)], _HALF, constants=c)
    if cid.variant == "printed":
        m1 = _mk(cid, "mu1", "[0,inf)", _halfline(r1), [(0.0, hi)], _HALF, constants=c,
                 atoms=((0.0, lam1),), signed=True)
    else:
        m1 = _mk(cid, "mu1", "piecewise-at-0", _piecewise(r1, l1), [(-hi, 0.0), (0.0, hi)], _WHOLE,
                 constants=c, signed=True, right=r1, left=l1, continuous_at_zero=False)
    return params, m0, m1


def _case_VI2(cid: CaseId):
    nu, a = cid.get("nu"), cid.get("alpha")
    _check(-1 < nu < 0 and a >= 0, "case VI.2 hypotheses -1 < nu < 0 and alpha >= 0 violated")
    r = (1 / nu + 1) / 2
    params = ModelParams(r, r - 1, a + 1, a + 1, 2 * r * (a + 1))
    N, A = _f(nu), _f(a)
    g = math.gamma(A + 1)
    sign = -1.0 if cid.variant == "printed" else 1.0
    den = (N + 1) ** (A + 1) * g

    def w0(x):
        return x ** A * np.exp(-x) / g

    def w1(x):
        return N * w0(x) + sign * N * N * np.exp(N * x) * gammainc_vec(A + 1, (N + 1) * x, False) / den

    hi = _cut(lambda x: N * x + math.log(1 + N * N / den), 1)
    c = _consts(nu=nu, alpha=a)
    m0 = _mk(cid, "mu0", "[0,inf)", _halfline(w0), [(0.0, hi)], _HALF, constants=c)
    m1 = _mk(cid, "mu1", "[0,inf)", _halfline(w1), [(0.0, hi)], _HALF, constants=c, signed=True)
    return params, m0, m1


# ---------------------------------------------------------------- Hermite-type


def _case_IV2(cid: CaseId):
    mu = cid.get("mu")
    _check(mu < 0, "case IV.2 hypothesis mu < 0 violated")
    r = 1 / (2 * mu)
    params = ModelParams(r, r, 0, Fraction(1, 2), r)
    M = _f(mu)
    pre = 0.5 * M * M * math.exp(M * M / 4)
    sp = math.sqrt(math.pi)

    def w0(x):
        return np.exp(-x * x) / sp

    def w1(x):
        return M * w0(x) + pre * np.exp(M * x) * specfun.erfc_vec(-x - M / 2)

    def w1p(x):
        erf = np.vectorize(math.erf, otypes=[float])
        return M * w0(x) + pre * (erf(x + M / 2) - math.erf(M / 2)) * np.exp(M * x)

    hi = _cut(lambda x: M * x + math.log(1 + 2 * pre), 1)
    lo = _cut(lambda x: -x * x + math.log(1 + abs(M)), -1)
    c = _consts(mu=mu)
    m0 = _mk(cid, "mu0", "whole-line", w0, [(lo, 0.0), (0.0, hi)], _WHOLE, constants=c)
    if cid.variant == "printed":
        m1 = _mk(cid, "mu1", "[0,inf)", _halfline(w1p), [(0.0, hi)], _HALF, constants=c, signed=True)
    else:
        m1 = _mk(cid, "mu1", "whole-line", w1, [(lo, 0.0), (0.0, hi)], _WHOLE, constants=c, signed=True)
    return params, m0, m1


def _smooth_U(rr: float, alpha: float, even: bool = False):
    """G = e^E F and Gz = e^E dF/dz, E = -rr x^2 + x/(2 rr), z = rr x^2.

    F = U(alpha; 1/2; z) for x >= 0; for x < 0 the combination
    A M(alpha; 1/2; z) - U(alpha; 1/2; z) continues it smoothly.  ``even``
    uses U on both sides instead.
    """
    A = 2 * math.gamma(0.5) / math.gamma(alpha + 0.5)
    # limit of x * Gz at x = 0 (the U(alpha+1; 3/2; z) ~ z^(-1/2) singularity)
    xgz0 = -alpha * math.sqrt(math.pi / rr) / math.gamma(alpha + 1)

    def G(x):
        z = rr * x * x
        E = -z + x / (2 * rr)
        out = np.exp(E) * tricomi_vec(alpha, 0.5, z)
        if not even:
            m = x < 0
            if m.any():
                xm = x[m]
                out[m] = A * np.exp(xm / (2 * rr)) * kummer_scaled_vec(alpha, 0.5, z[m]) - out[m]
        return out

    def xGz(x):
        z = rr * x * x
        E = -z + x / (2 * rr)
        nz = x != 0
        out = np.full_like(x, xgz0)
        xs, zs, Es = x[nz], z[nz], E[nz]
        u = xs * np.exp(Es) * tricomi_vec(alpha + 1, 1.5, zs)
        v = -alpha * u
        if not even:
            m = xs < 0
            if m.any():
                v[m] = alpha * u[m] + 2 * alpha * A * xs[m] * np.exp(xs[m] / (2 * rr)) * \
                    kummer_scaled_vec(alpha + 1, 1.5, zs[m])
        out[nz] = v
        return out

    return G, xGz, A


def _smooth_windows(rr: float, alpha: float, scale: float):
    lk = math.log(scale) + 3
    hi = _cut(lambda x: -rr * x * x + x / (2 * rr) + lk, 1)
    lo = _cut(lambda x: x / (2 * rr) + (2 * alpha - 1) * math.log(abs(x)) + lk, -1)
    return ((lo, 0.0), (0.0, hi))


def _normalise(G, windows) -> float:
    from .quad import integrate
    return float(integrate(G, windows, tol=1e-13).value)


def _case_IV1(cid: CaseId):
    r, a1 = cid.get("r"), cid.get("alpha1")
    _check(r > 0, "case IV.1 hypothesis r > 0 violated")
    b0 = (1 / r - a1) / (2 * r)
    params = ModelParams(r, r, b0, a1, 1)
    eta = params.eta
    alpha = eta / (16 * r ** 3)
    _check(alpha > 0, "case IV.1 hypothesis alpha = eta/(16 r^3) > 0 violated")
    R, Al, B0, E = _f(r), _f(alpha), _f(b0), _f(eta)
    even = cid.variant == "printed"
    G, xGz, A = _smooth_U(R, Al, even)
    win = _smooth_windows(R, Al, 1.0)
    J = _normalise(G, win)
    k = 1.0 / J
    win = _smooth_windows(R, Al, k * (1 + 2 * R + abs(1 / (2 * R) - 2 * R * B0)) / abs(E))

    def w0(x):
        return k * G(x)

    def w1(x):
        return k * ((1 / (2 * R) - 2 * R * B0) * G(x) + 2 * R * xGz(x)) / E

    c = _consts(r=r, alpha1=a1, alpha=alpha, J=J, k=k, kt=-k / E, A=A)
    m0 = _mk(cid, "mu0", "whole-line", w0, win, _WHOLE, constants=c, right=w0, left=w0,
             continuous_at_zero=True)
    m1 = _mk(cid, "mu1", "whole-line", w1, win, _WHOLE, constants=c, signed=True, right=w1, left=w1,
             continuous_at_zero=not even)
    return params, m0, m1


def _case_V1(cid: CaseId):
    s = cid.get("s")
    _check(s > 0, "case V.1 hypothesis s > 0 violated")
    params = ModelParams(-s, s, 0, 1 / s, -1)
    alpha = 1 / (16 * s ** 3)
    S, Al = _f(s), _f(alpha)
    G, xGz, A = _smooth_U(S, Al)
    win = _smooth_windows(S, Al, 1.0)
    J = _normalise(G, win)
    k = 1.0 / J
    win = _smooth_windows(S, Al, k * (2 + 2 * S + 1 / (2 * S)))

    def w0(x):
        return k * G(x)

    def w1(x):
        return -k * ((1 / (2 * S) - 2 * S * x) * G(x) + 2 * S * xGz(x))

    c = _consts(s=s, alpha=alpha, J=J, k=k, A=A)
    m0 = _mk(cid, "mu0", "whole-line", w0, win, _WHOLE, constants=c, right=w0, left=w0,
             continuous_at_zero=True)
    m1 = _mk(cid, "mu1", "whole-line", w1, win, _WHOLE, constants=c, signed=True, right=w1, left=w1,
             continuous_at_zero=True)
    return params, m0, m1


# ---------------------------------------------------------------- VI.1 family


def _case_VI1(cid: CaseId):
    r, s, b0, a1 = (cid.get(k) for k in ("r", "s", "beta0", "alpha1"))
    kap = 1 if cid.convention == "plus" else -1
    if s * s - r * r != kap:
        # delta0 * delta1 = s^2 - r^2
        raise DomainError(f"case {cid.name} with convention {cid.convention!r} requires s^2 - r^2 = {kap}")
    d0, d1 = s + r, s - r
    gamma = -d1 * a1 - d0 * d1 * b0
    params = ModelParams(r, s, b0, a1, gamma)
    m0, m1, lp = _from_laplace(cid, params, {"kappa": kap})
    C = lp.constants["C"]
    if cid.name == "VI.1-lim1" and abs(C - 1) > 1e-12:
        raise DomainError("case VI.1-lim1 requires exponents with a + b = -1")
    if cid.name == "VI.1-lim2" and not (lp.constants["a"] == -1 and lp.constants["b"] == -1):
        raise DomainError("case VI.1-lim2 requires a = b = -1")
    return params, m0, m1


_BUILDERS = {
    "I.1": _case_I1,
    "I.2": lambda c: _case_I2(c, Fraction(1)),
    "I.3": lambda c: _case_I2(c, Fraction(3)),
    "II": _case_II,
    "III.1": _case_III1,
    "III.1-lim1": _case_III1_lim1,
    "III.1-lim2": _case_III1_lim2,
    "III.2": _case_III2,
    "IV.1": _case_IV1,
    "IV.2": _case_IV2,
    "V.1": _case_V1,
    "VI.1": _case_VI1,
    "VI.1-lim1": _case_VI1,
    "VI.1-lim2": _case_VI1,
    "VI.2": _case_VI2,
}


def case_params(case, **kw) -> ModelParams:
    """The ModelParams a case pins, without building the weights."""
    return buildMeasure(case, **kw).params


def buildMeasure(case, **kw) -> BuiltCase:
    """Build (mu0, mu1, params, sys) for a case name or :class:`CaseId`.

    Keyword arguments override case parameters; ``variant`` and
    ``convention`` select alternative forms.
    """
    cid = _as_case(case, **kw)
    params, m0, m1 = _BUILDERS[cid.name](cid)
    sys = classify(params)
    return BuiltCase(m0, m1, params, sys)


def _in_domain(mu: Measure, x: float) -> bool:
    lo, hi = mu.domain
    return lo <= x <= hi


def evalMeasure(mu: Measure, x: float) -> float:
    """Density value w(x); at 0 the branch agreement is asserted when continuous."""
    x = float(x)
    if math.isnan(x) or not _in_domain(mu, x):
        raise DomainError(f"x = {x:g} outside the support {mu.support} of {mu.label}")
    if x == 0.0 and mu.continuous_at_zero and mu.left is not None:
        r = float(mu.right(np.array([0.0]))[0])
        l = float(mu.left(np.array([0.0]))[0])
        if abs(r - l) > 1e-9 * max(abs(r), abs(l), 1e-300):
            raise BiorthoError(f"branches of {mu.label} disagree at 0: {r!r} vs {l!r}")
        return r
    return float(mu.w(np.array([x]))[0])


def branch_gap(mu: Measure) -> float:
    """Relative gap between the branch limits at 0 (0.0 for single-formula weights)."""
    if mu.left is None or mu.right is None:
        return 0.0
    r = float(mu.right(np.array([0.0]))[0])
    l = float(mu.left(np.array([0.0]))[0])
    if not (math.isfinite(r) and math.isfinite(l)):
        return math.inf
    return abs(r - l) / max(abs(r), abs(l), 1e-300)
