"""Shared independent oracles for the test suite.

Everything here recomputes answers by a different route than the library:
high-precision interval evaluation for surds, brute-force double loops
for enumerations, and direct condition scans for the forcing rule.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import pytest

from reebforce.surd import Surd


ORACLE_BITS = 200
# decisiveness margin: the oracle only votes when the 200-bit value is
# farther than this from the decision boundary
ORACLE_EPS = mpmath.mpf(2) ** -150


def mp_value(s: Surd, bits: int = ORACLE_BITS):
    with mpmath.workprec(bits):
        return (s.a + s.b * mpmath.sqrt(s.d)) / s.c


def oracle_compare(s: Surd, t: Surd):
    """-1/0/+1 when decisive at 200 bits, else None."""
    with mpmath.workprec(ORACLE_BITS):
        diff = mp_value(s) - mp_value(t)
        if abs(diff) < ORACLE_EPS:
            return 0 if (s.a, s.b, s.c, s.d) == (t.a, t.b, t.c, t.d) else None
        return 1 if diff > 0 else -1


def oracle_floor(s: Surd):
    """Exact floor when decisive at 200 bits, else None."""
    with mpmath.workprec(ORACLE_BITS):
        v = mp_value(s)
        f = mpmath.floor(v)
        if min(v - f, f + 1 - v) < ORACLE_EPS:
            return None
        return int(f)


def in_interval(q: int, p: int, lo: Surd, hi: Surd, kind: str) -> bool:
    frac = Fraction(q, p)
    cl, ch = lo.compare(frac), hi.compare(frac)
    lo_ok = cl < 0 if kind in ("open", "open_closed") else cl <= 0
    hi_ok = ch > 0 if kind in ("open", "closed_open") else ch >= 0
    return lo_ok and hi_ok


def brute_force_interval(lo: Surd, hi: Surd, max_p: int, kind: str):
    """All coprime (p, q), 1 <= p <= max_p, q/p in the interval, by a
    double loop over an exactly safe q-range."""
    out = []
    for p in range(1, max_p + 1):
        q_lo = math.floor(float(lo) * p) - 2
        q_hi = math.ceil(float(hi) * p) + 2
        for q in range(q_lo, q_hi + 1):
            if math.gcd(abs(p), abs(q)) == 1 and in_interval(q, p, lo, hi, kind):
                out.append((p, q))
    out.sort()
    return out


def brute_force_forcing(theta1: Surd, theta2: Surd, max_p: int):
    """Forced class set recomputed by direct condition scans."""
    one = Surd.rational(1)
    s1, s2 = theta1.sign(), theta2.sign()
    if s1 > 0 and s2 > 0:
        lo, hi = (theta1, theta2) if theta1 < theta2 else (theta2, theta1)
        return set(brute_force_interval(lo, hi, max_p, "open"))
    if s1 < 0 and s2 > 0:
        return set(brute_force_interval(theta1, theta2, max_p, "open"))
    if s1 > 0 and s2 < 0:
        swapped = brute_force_forcing(theta2.inverse(), theta1.inverse(), max_p)
        return {(q, p) for p, q in swapped}
    part_a = set(brute_force_interval(theta1, one, max_p, "open_closed"))
    part_b = {(p, q) for q, p in
              brute_force_interval(theta2.inverse(), one, max_p, "open_closed")}
    return part_a | part_b


@pytest.fixture
def sqrt2() -> Surd:
    return Surd.sqrt(2)
