from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

settings.register_profile("biortho", deadline=None, max_examples=40, derandomize=True)
settings.load_profile("biortho")


def rationals(max_num=6, max_den=4):
    return st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))


@st.composite
def model_params(draw, nonzero_gamma=True):
    from biortho import ModelParams

    r, s, b0, a1 = (draw(rationals()) for _ in range(4))
    g = draw(rationals().filter(lambda v: v != 0)) if nonzero_gamma else draw(rationals())
    return ModelParams(r, s, b0, a1, g)


def dual_moments(P, K):
    """Moments of u0 and u1 from the dual-basis definition.

    x^n is expanded in the P basis by a triangular solve; the coefficient of
    P_0 is <u0, x^n> and that of P_1 is <u1, x^n>.  Independent of any
    functional-equation recurrence.
    """
    m0, m1 = [], []
    for n in range(K + 1):
        rem = [Fraction(0)] * n + [Fraction(1)]
        c = [Fraction(0)] * (n + 1)
        for k in range(n, -1, -1):
            c[k] = rem[k] if k < len(rem) else Fraction(0)
            pk = P[k].coefficients
            rem = [rem[j] - c[k] * (pk[j] if j < len(pk) else 0) for j in range(len(rem))]
        m0.append(c[0])
        m1.append(c[1] if n >= 1 else Fraction(0))
    return m0, m1


@pytest.fixture(scope="session")
def case_ids():
    from biortho.verify import all_cases

    return all_cases()


ACCEPTANCE_LINES: dict = {}


def record_acceptance(number, ok, detail):
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
