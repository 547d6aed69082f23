"""Functional systems and the exact moment engine.

The moment recurrences follow from pairing the distributional equations of
each system with monomials and integrating by parts at the functional level
(``<u', f> = -<u, f'>``).  Writing phi = phi1 x + phi0 and similarly for the
other degree-1 coefficients, with m_n = <u0, x^n>:

* S1/S2, from <u0, phi f'' - theta f' + chi f> = 0 with f = x^n::

      m_{n+1} = (beta0 - n theta1) m_n + (n(n-1) phi1 - n theta0) m_{n-1}
                + n(n-1) phi0 m_{n-2}

* S1 second functional, eta <u1, f> = <u0, -phi f' + rho f>.
* S2 second functional, u1 = -u0', so <u1, x^n> = n m_{n-1}.
* S3, from <sigma u0' + tau u0, x^n> = 0 and delta0 u1' - u1 = u0'::

      m_{n+1} = (tau0 - (n+1) sigma1) m_n - n sigma0 m_{n-1}
      m1_n = n m_{n-1} - delta0 n m1_{n-1},  m1_0 = 0
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import SingularSystemError, RegularityError
from .polyseq import ModelParams, Poly

__all__ = [
    "FunctionalSystem",
    "MomentTable",
    "classify",
    "momentsU0",
    "momentsU1",
    "derivedFunctionals",
    "moment_table",
    "pair_exact",
]


@dataclass(frozen=True)
class FunctionalSystem:
    tag: str
    params: ModelParams
    phi: Poly
    theta: Poly
    chi: Poly
    rho: Poly
    sigma: Poly
    tau: Poly
    Phi: tuple
    Psi: tuple
    eta: Fraction
    delta0: Fraction
    delta1: Fraction
    gamma1: Fraction
    tau0: Fraction = Fraction(0)
    tau1: Fraction = Fraction(0)
    zeta0: int = 0
    zeta1: int = 0

    @property
    def psi_slope(self) -> Fraction:
        return 1 / self.params.gamma

    def det_Phi(self) -> Poly:
        (a, b), (c, d) = self.Phi
        return a * d - b * c


@dataclass(frozen=True)
class MomentTable:
    """Exact moment sequences; optional entries are empty tuples when absent."""

    m0: tuple
    m1: tuple
    m2: tuple = field(default=())
    v0: tuple = field(default=())
    v1: tuple = field(default=())


def classify(params: ModelParams) -> FunctionalSystem:
    p = params
    if p.gamma == 0:
        raise RegularityError("gamma = 0 makes gamma_1 vanish", index=1)
    eta, d0, d1 = p.eta, p.delta0, p.delta1
    if eta == 0 and d0 == 0:
        raise SingularSystemError("eta = 0 and delta0 = 0: the matrix Phi is singular")
    if eta != 0 and d0 != 0:
        tag = "S1"
    elif eta != 0:
        tag = "S2"
    else:
        tag = "S3"
    xb = Poly((-p.beta0, 1))  # x - beta0
    phi = -d1 * d0 * xb + (d1 * p.alpha1 + p.gamma)
    theta = 2 * p.s * xb - p.alpha1
    chi = -xb
    rho = d0 * xb
    sigma = d1 * xb - p.alpha1
    tau = -xb + d1
    one = Poly.const(1)
    zero = Poly.const(0)
    Phi = (
        (one, Poly.const(-d0)),
        ((-d1 / p.gamma) * xb, Poly.const(1 + d1 * p.alpha1 / p.gamma)),
    )
    Psi = (
        (zero, one),
        (xb * (1 / p.gamma), Poly.const(-p.alpha1 / p.gamma)),
    )
    return FunctionalSystem(
        tag=tag, params=p, phi=phi, theta=theta, chi=chi, rho=rho, sigma=sigma,
        tau=tau, Phi=Phi, Psi=Psi, eta=eta, delta0=d0, delta1=d1, gamma1=p.gamma1,
        tau0=Fraction(0), tau1=-p.alpha1 / p.gamma,
    )


def _m(seq, j):
    return seq[j] if j >= 0 else Fraction(0)


def momentsU0(sys: FunctionalSystem, K: int) -> list[Fraction]:
    """Exact moments <u0, x^k>, k = 0..K."""
    if K < 0:
        raise ValueError("K must be >= 0")
    m = [Fraction(1)]
    b0 = sys.params.beta0
    if sys.tag in ("S1", "S2"):
        ph1, ph0 = sys.phi[1], sys.phi[0]
        th1, th0 = sys.theta[1], sys.theta[0]
        for n in range(K):
            m.append((b0 - n * th1) * m[n]
                     + (n * (n - 1) * ph1 - n * th0) * _m(m, n - 1)
                     + n * (n - 1) * ph0 * _m(m, n - 2))
    else:
        s1, s0 = sys.sigma[1], sys.sigma[0]
        t0 = sys.tau[0]
        for n in range(K):
            m.append((t0 - (n + 1) * s1) * m[n] - n * s0 * _m(m, n - 1))
    return m


def momentsU1(sys: FunctionalSystem, m0: Sequence[Fraction], K: int) -> list[Fraction]:
    """Exact moments <u1, x^k>, k = 0..K.  S1 needs m0 up to index K+1."""
    if sys.tag == "S1":
        if sys.eta == 0:
            raise SingularSystemError("S1 tag with eta = 0")
        if len(m0) < K + 2:
            raise ValueError("momentsU1: m0 must have at least K+2 entries for S1")
        ph1, ph0 = sys.phi[1], sys.phi[0]
        rh1, rh0 = sys.rho[1], sys.rho[0]
        return [(-ph1 * n * m0[n] - ph0 * n * _m(m0, n - 1) + rh1 * m0[n + 1] + rh0 * m0[n]) / sys.eta
                for n in range(K + 1)]
    if len(m0) < K + 1:
        raise ValueError("momentsU1: m0 too short")
    if sys.tag == "S2":
        if sys.eta == 0:
            raise SingularSystemError("S2 tag with eta = 0")
        return [n * _m(m0, n - 1) for n in range(K + 1)]
    m1 = [Fraction(0)]
    for n in range(1, K + 1):
        m1.append(n * m0[n - 1] - sys.delta0 * n * m1[n - 1])
    return m1


def derivedFunctionals(sys: FunctionalSystem, m0, m1, K: int):
    """Moments of u2, v0 and v1 up to index K (m0, m1 need K+1 entries)."""
    p = sys.params
    if len(m0) < K + 2 or len(m1) < K + 1:
        raise ValueError("derivedFunctionals: moment tables too short")
    m2 = [(m0[n + 1] - p.beta0 * m0[n] - p.alpha1 * m1[n]) / p.gamma1 for n in range(K + 1)]
    v0 = [m0[n] - sys.delta0 * m1[n] for n in range(K + 1)]
    v1 = [m1[n] - 2 * sys.delta1 * m2[n] for n in range(K + 1)]
    return m2, v0, v1


def moment_table(sys: FunctionalSystem, K: int) -> MomentTable:
    """All moment sequences up to index K."""
    m0 = momentsU0(sys, K + 2)
    m1 = momentsU1(sys, m0, K + 1)
    m2, v0, v1 = derivedFunctionals(sys, m0, m1, K)
    return MomentTable(tuple(m0[: K + 1]), tuple(m1[: K + 1]), tuple(m2), tuple(v0), tuple(v1))


def pair_exact(poly: Poly, moments: Sequence[Fraction]) -> Fraction:
    """<u, poly> from the moment sequence of u."""
    if poly.degree >= len(moments):
        raise ValueError("pair_exact: not enough moments for this degree")
    return sum((c * moments[j] for j, c in enumerate(poly.coefficients)), Fraction(0))
