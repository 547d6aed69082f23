"""Exact construction of the 2-orthogonal sequences P_n and Q_n.

All arithmetic is done with :class:`fractions.Fraction`, so orthogonality
checks downstream reduce to literal zeros.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import RegularityError

__all__ = [
    "ModelParams",
    "RecurrenceCoeffs",
    "Poly",
    "coeffs",
    "genP",
    "genQ",
    "derivative_Q",
    "check_regularity",
    "to_fraction",
]


def to_fraction(v) -> Fraction:
    """Exact conversion; floats are converted through their decimal repr."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, np.integer)):
        return Fraction(int(v))
    if isinstance(v, str):
        return Fraction(v.strip())
    if isinstance(v, (float, np.floating)):
        return Fraction(repr(float(v)))
    return Fraction(v)


@dataclass(frozen=True)
class ModelParams:
    """The five free parameters (r, s, beta0, alpha1, gamma); gamma1 = 2 gamma."""

    r: Fraction
    s: Fraction
    beta0: Fraction
    alpha1: Fraction
    gamma: Fraction

    def __post_init__(self):
        for name in ("r", "s", "beta0", "alpha1", "gamma"):
            object.__setattr__(self, name, to_fraction(getattr(self, name)))

    @classmethod
    def of(cls, r, s, beta0, alpha1, gamma) -> "ModelParams":
        return cls(r, s, beta0, alpha1, gamma)

    @property
    def delta0(self) -> Fraction:
        return self.s + self.r

    @property
    def delta1(self) -> Fraction:
        return self.s - self.r

    @property
    def eta(self) -> Fraction:
        return 2 * self.r * self.alpha1 - self.gamma

    @property
    def gamma1(self) -> Fraction:
        return 2 * self.gamma

    def delta(self, n: int) -> Fraction:
        return self.s + self.r * eps(n)

    def as_tuple(self):
        return (self.r, self.s, self.beta0, self.alpha1, self.gamma)

    def as_dict(self):
        return {"r": self.r, "s": self.s, "beta0": self.beta0,
                "alpha1": self.alpha1, "gamma": self.gamma}


def eps(n: int) -> int:
    return 1 if n % 2 == 0 else -1


@dataclass(frozen=True)
class RecurrenceCoeffs:
    """beta_n, alpha_{n+1}, gamma_{n+1} and the derivative-sequence analogues.

    ``alpha_t`` and ``gamma_t`` are None at n = 0 where they are undefined.
    """

    n: int
    beta: Fraction
    alpha_next: Fraction
    gamma_next: Fraction
    beta_t: Fraction
    alpha_t: Fraction | None
    gamma_t: Fraction | None


def _beta(p: ModelParams, n: int) -> Fraction:
    e = eps(n)
    return (e * p.r - 2 * p.s) * n - Fraction(1, 2) * (1 - e) * p.r + p.beta0


def _alpha_next(p: ModelParams, n: int) -> Fraction:
    # alpha_{n+1}
    e = eps(n)
    return (n + 1) * ((p.r ** 2 + p.s ** 2) * n + (1 - e) * p.r * p.s + p.alpha1)


def _gamma_next(p: ModelParams, n: int) -> Fraction:
    # gamma_{n+1}
    e = eps(n)
    return (n + 2) * (n + 1) * (
        e * (p.r - e * p.s) ** 2 * p.r * n
        - Fraction(1, 2) * (1 - e) * ((p.r + p.s) ** 2 + 2 * p.alpha1) * p.r
        + p.gamma
    )


def _beta_t(p: ModelParams, n: int) -> Fraction:
    e = eps(n)
    return -(e * p.r + 2 * p.s) * n - Fraction(1, 2) * (1 + e) * p.r - p.s + p.beta0


def _alpha_t(p: ModelParams, n: int) -> Fraction:
    e = eps(n)
    return n * ((p.r ** 2 + p.s ** 2) * n + (1 - e) * p.r * p.s + p.alpha1)


def _gamma_t(p: ModelParams, n: int) -> Fraction:
    e = eps(n)
    return (n + 1) * n * (
        e * (p.r - e * p.s) ** 2 * p.r * n
        - Fraction(1, 2) * (1 - e) * ((p.r + p.s) ** 2 + 2 * p.alpha1) * p.r
        + p.gamma
    )


def coeffs(params: ModelParams, n: int) -> RecurrenceCoeffs:
    """Exact recurrence coefficients at index n (n >= 0)."""
    if n < 0:
        raise ValueError("coeffs: n must be >= 0")
    return RecurrenceCoeffs(
        n=n,
        beta=_beta(params, n),
        alpha_next=_alpha_next(params, n),
        gamma_next=_gamma_next(params, n),
        beta_t=_beta_t(params, n),
        alpha_t=_alpha_t(params, n) if n >= 1 else None,
        gamma_t=_gamma_t(params, n) if n >= 1 else None,
    )


class Poly:
    """Dense polynomial with exact rational coefficients in ascending order."""

    __slots__ = ("c",)

    def __init__(self, coefficients: Iterable = (0,)):
        c = [to_fraction(v) for v in coefficients]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [Fraction(0)]
        self.c = tuple(c)

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, v) -> "Poly":
        return cls((v,))

    @property
    def coefficients(self) -> tuple:
        return self.c

    @property
    def degree(self) -> int:
        if len(self.c) == 1 and self.c[0] == 0:
            return -1
        return len(self.c) - 1

    def __len__(self):
        return len(self.c)

    def __getitem__(self, j):
        return self.c[j] if 0 <= j < len(self.c) else Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        n = max(len(self.c), len(other.c))
        return Poly(self[j] + other[j] for j in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-v for v in self.c)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            f = to_fraction(other)
            return Poly(v * f for v in self.c)
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            for j, b in enumerate(other.c):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def shift_x(self) -> "Poly":
        """Multiply by x."""
        return Poly((Fraction(0),) + self.c)

    def deriv(self) -> "Poly":
        if len(self.c) == 1:
            return Poly((0,))
        return Poly(j * self.c[j] for j in range(1, len(self.c)))

    def __call__(self, x):
        if isinstance(x, (Fraction, int)):
            acc = Fraction(0)
            for v in reversed(self.c):
                acc = acc * x + v
            return acc
        x = np.asarray(x, dtype=float)
        return np.polyval(self.to_float()[::-1], x)

    def to_float(self) -> np.ndarray:
        return np.array([float(v) for v in self.c])

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        terms = []
        for j in range(len(self.c) - 1, -1, -1):
            v = self.c[j]
            if v == 0:
                continue
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if j == 0:
                body = _fmt(a)
            else:
                mono = "x" if j == 1 else f"x^{j}"
                body = mono if a == 1 else f"{_fmt(a)}*{mono}"
            terms.append((sign, body))
        if not terms:
            return "0"
        s0, b0 = terms[0]
        out = ("-" if s0 == "-" else "") + b0
        for sg, b in terms[1:]:
            out += f" {sg} {b}"
        return out


def _fmt(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def check_regularity(params: ModelParams, N: int) -> None:
    """Raise when some gamma_n (1 <= n <= N) vanishes.

    Only the gamma_n are load-bearing for 2-orthogonality; alpha_n = 0 occurs
    legitimately for 2-symmetric sequences and is reported by
    :func:`vanishing_alphas` instead.
    """
    for n in range(1, max(N, 1) + 1):
        if _gamma_next(params, n - 1) == 0:
            raise RegularityError(f"gamma_{n} vanishes; the recurrence is not regular", index=n)


def vanishing_alphas(params: ModelParams, N: int) -> list[int]:
    return [n for n in range(1, N + 1) if _alpha_next(params, n - 1) == 0]


def _three_term(N, first, beta, alpha, gamma) -> list[Poly]:
    x = Poly.x()
    P = [Poly.const(1)]
    if N >= 1:
        P.append(x - beta(0))
    if N >= 2:
        P.append((x - beta(1)) * P[1] - first)
    for n in range(0, N - 2):
        P.append((x - beta(n + 2)) * P[n + 2] - alpha(n + 2) * P[n + 1] - gamma(n + 1) * P[n])
    return P


def genP(params: ModelParams, N: int) -> list[Poly]:
    """Monic P_0..P_N from the third-order recurrence."""
    if N < 0:
        raise ValueError("genP: N must be >= 0")
    check_regularity(params, N)
    return _three_term(
        N,
        params.alpha1,
        lambda n: _beta(params, n),
        lambda n: _alpha_next(params, n - 1),
        lambda n: _gamma_next(params, n - 1),
    )


def genQ(params: ModelParams, N: int) -> list[Poly]:
    """Monic Q_0..Q_N from the recurrence with the derivative-sequence coefficients."""
    if N < 0:
        raise ValueError("genQ: N must be >= 0")
    check_regularity(params, N + 1)
    return _three_term(
        N,
        _alpha_t(params, 1),
        lambda n: _beta_t(params, n),
        lambda n: _alpha_t(params, n),
        lambda n: _gamma_t(params, n),
    )


def derivative_Q(P: Sequence[Poly]) -> list[Poly]:
    """Q_n = P'_{n+1}/(n+1) for n = 0 .. len(P) - 2."""
    return [P[n + 1].deriv() * Fraction(1, n + 1) for n in range(len(P) - 1)]
