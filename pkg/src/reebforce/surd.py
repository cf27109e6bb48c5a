"""Exact arithmetic in real quadratic fields.

A :class:`Surd` stores the value (a + b*sqrt(d)) / c with arbitrary-precision
integers, kept in a unique canonical form so equal values have equal field
tuples.  All comparisons, floors and interval tests are exact integer
arithmetic; no floating point enters any decision.

The module also provides the coprime-fraction enumerator used by the orbit
forcing computations: all reduced fractions q/p with bounded denominator
inside a surd interval, found by Stern-Brocot descent.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction as _QQ
from typing import Iterator, Union

from .errors import FieldMixError, InputError

Scalar = Union[int, _QQ, "Surd"]

_SQUAREFREE_TRIAL_LIMIT = 10_000


def _squarefree_decompose(d: int) -> tuple[int, int]:
    """Return (s, d0) with d = s^2 * d0 and d0 square-free."""
    if d < 0:
        raise InputError("negative radicand")
    if d in (0, 1):
        return 1, d
    s, rem = 1, d
    f = 2
    while f * f <= rem and f <= _SQUAREFREE_TRIAL_LIMIT:
        while rem % (f * f) == 0:
            rem //= f * f
            s *= f
        f += 1
    # rem may still contain a large square factor; catch perfect squares
    r = math.isqrt(rem)
    if r * r == rem:
        s *= r
        rem = 1
    return s, rem


@dataclass(frozen=True)
class Surd:
    """The real number (a + b*sqrt(d)) / c in canonical form.

    Invariants: c > 0, d square-free and >= 0, b == 0 iff d == 0,
    gcd(a, b, c) == 1.  Instances are immutable and hashable.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        a, b, c, d = self.a, self.b, self.c, self.d
        if c == 0:
            raise InputError("zero denominator in surd")
        if d < 0:
            raise InputError("negative radicand in surd")
        s, d0 = _squarefree_decompose(d)
        b *= s
        d = d0
        if d <= 1:
            # sqrt(0) = 0, sqrt(1) = 1: fold into the rational part
            a += b * d
            b, d = 0, 0
        if b == 0:
            d = 0
        if c < 0:
            a, b, c = -a, -b, -c
        g = math.gcd(math.gcd(abs(a), abs(b)), c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    # -- constructors ----------------------------------------------------

    @staticmethod
    def rational(num: int | _QQ, den: int = 1) -> "Surd":
        if isinstance(num, _QQ):
            f = num / den
            return Surd(f.numerator, 0, f.denominator, 0)
        return Surd(num, 0, den, 0)

    @staticmethod
    def sqrt(n: int) -> "Surd":
        return Surd(0, 1, 1, n)

    @staticmethod
    def parse(text: str) -> "Surd":
        """Parse ``(a+b*sqrt(d))/c``, with ``p/q`` or ``n`` for rationals."""
        s = text.strip().replace(" ", "")
        m = re.fullmatch(
            r"\((-?\d+)([+-]\d+)\*sqrt\((\d+)\)\)(?:/(-?\d+))?", s
        )
        if m:
            a, b, d = int(m.group(1)), int(m.group(2)), int(m.group(3))
            c = int(m.group(4)) if m.group(4) else 1
            if c == 0:
                raise InputError(f"zero denominator in surd: {text!r}")
            return Surd(a, b, c, d)
        m = re.fullmatch(r"(-?\d+)(?:/(-?\d+))?", s)
        if m:
            p = int(m.group(1))
            q = int(m.group(2)) if m.group(2) else 1
            if q == 0:
                raise InputError(f"zero denominator in rational: {text!r}")
            return Surd(p, 0, q, 0)
        m = re.fullmatch(r"sqrt\((\d+)\)", s)
        if m:
            return Surd.sqrt(int(m.group(1)))
        raise InputError(f"cannot parse surd: {text!r}")

    # -- presentation ----------------------------------------------------

    def __str__(self) -> str:
        if self.b == 0:
            return f"{self.a}" if self.c == 1 else f"{self.a}/{self.c}"
        core = f"({self.a}{self.b:+d}*sqrt({self.d}))"
        return core if self.c == 1 else f"{core}/{self.c}"

    def __float__(self) -> float:
        return (self.a + self.b * math.sqrt(self.d)) / self.c

    def to_mpf(self, prec_bits: int = 200):
        """High-precision mpmath value (used only by numeric oracles)."""
        import mpmath

        with mpmath.workprec(prec_bits):
            return (self.a + self.b * mpmath.sqrt(self.d)) / self.c

    # -- predicates ------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def as_fraction(self) -> _QQ:
        if not self.is_rational:
            raise InputError(f"{self} is irrational")
        return _QQ(self.a, self.c)

    # -- exact sign / comparison -----------------------------------------

    def sign(self) -> int:
        """Exact sign of (a + b*sqrt(d)) / c, with c > 0."""
        a, b, d = self.a, self.b, self.d
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        sa, sb = (a > 0) - (a < 0), (b > 0) - (b < 0)
        if sa == sb:
            return sa
        t = a * a - b * b * d
        if t == 0:
            return 0
        return sa if t > 0 else sb

    def compare(self, other: Scalar) -> int:
        """Exact trichotomy: -1, 0 or +1 for self <, ==, > other."""
        other = _coerce(other)
        if self.d == other.d or self.b == 0 or other.b == 0:
            d = self.d if self.b != 0 else other.d
            diff = Surd(
                self.a * other.c - other.a * self.c,
                self.b * other.c - other.b * self.c,
                self.c * other.c,
                d,
            )
            return diff.sign()
        # distinct radicands: sign of P + Q with P = A + B*sqrt(d1) and
        # Q = C*sqrt(d2); square once to land back in one field
        A = self.a * other.c - other.a * self.c
        B = self.b * other.c
        C = -other.b * self.c
        P = Surd(A, B, 1, self.d)
        sp, sq = P.sign(), (C > 0) - (C < 0)
        if sp == 0:
            return sq
        if sq == 0 or sp == sq:
            return sp
        # opposite signs: |P|^2 vs |Q|^2 decides
        Psq = Surd(A * A + B * B * self.d - C * C * other.d,
                   2 * A * B, 1, self.d)
        t = Psq.sign()
        if t == 0:
            return 0
        return sp if t > 0 else sq

    def __lt__(self, other: Scalar) -> bool:
        return self.compare(other) < 0

    def __le__(self, other: Scalar) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: Scalar) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: Scalar) -> bool:
        return self.compare(other) >= 0

    # -- arithmetic (single-radical fields only) -------------------------

    def _join_field(self, other: "Surd") -> int:
        if self.b == 0:
            return other.d
        if other.b == 0 or self.d == other.d:
            return self.d
        raise FieldMixError(
            f"cannot combine sqrt({self.d}) with sqrt({other.d})"
        )

    def __add__(self, other: Scalar) -> "Surd":
        other = _coerce(other)
        d = self._join_field(other)
        return Surd(
            self.a * other.c + other.a * self.c,
            self.b * other.c + other.b * self.c,
            self.c * other.c,
            d,
        )

    __radd__ = __add__

    def __neg__(self) -> "Surd":
        return Surd(-self.a, -self.b, self.c, self.d)

    def __sub__(self, other: Scalar) -> "Surd":
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> "Surd":
        return _coerce(other) - self

    def __mul__(self, other: Scalar) -> "Surd":
        other = _coerce(other)
        d = self._join_field(other)
        return Surd(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            self.c * other.c,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Surd":
        if self.is_zero:
            raise ZeroDivisionError("surd division by zero")
        # c / (a + b*sqrt(d)) = c*(a - b*sqrt(d)) / (a^2 - b^2 d)
        n = self.a * self.a - self.b * self.b * self.d
        return Surd(self.c * self.a, -self.c * self.b, n, self.d)

    def __truediv__(self, other: Scalar) -> "Surd":
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other: Scalar) -> "Surd":
        return _coerce(other) * self.inverse()

    # -- floor / ceiling -------------------------------------------------

    def floor(self) -> int:
        """Exact floor, correct for negative values."""
        a, b, c, d = self.a, self.b, self.c, self.d
        if b == 0:
            return a // c
        m = math.isqrt(b * b * d)
        # b*sqrt(d) lies in [m, m+1) for b > 0, in (-m-1, -m] for b < 0
        n = (a + (m if b > 0 else -(m + 1))) // c
        while self.compare(n + 1) >= 0:
            n += 1
        while self.compare(n) < 0:
            n -= 1
        return n

    def ceil(self) -> int:
        return -((-self).floor())


def _coerce(x: Scalar) -> Surd:
    if isinstance(x, Surd):
        return x
    if isinstance(x, int):
        return Surd(x, 0, 1, 0)
    if isinstance(x, _QQ):
        return Surd(x.numerator, 0, x.denominator, 0)
    raise TypeError(f"cannot coerce {type(x).__name__} to Surd")


def normalize(a: int, b: int, c: int, d: int) -> Surd:
    """Canonical surd for (a + b*sqrt(d)) / c; rejects c == 0."""
    return Surd(a, b, c, d)


def compare(s: Scalar, t: Scalar) -> int:
    return _coerce(s).compare(t)


def floor(s: Scalar) -> int:
    return _coerce(s).floor()


def ceil(s: Scalar) -> int:
    return _coerce(s).ceil()


def is_resonant(k: int, s: Scalar) -> bool:
    """True iff k*s is an integer (degenerate rotation at cover k)."""
    if k < 1:
        raise InputError("cover k must be >= 1")
    s = _coerce(s)
    if not s.is_rational:
        return False
    return (k * s.a) % s.c == 0


@dataclass(frozen=True, order=True)
class CoprimePair:
    """A reduced fraction q/p; p plays the denominator role."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p == 0 and self.q == 0:
            raise InputError("(0, 0) is not a homotopy class")

    @property
    def is_simple(self) -> bool:
        return math.gcd(abs(self.p), abs(self.q)) == 1


_KINDS = {"open", "closed", "open_closed", "closed_open"}


def _member(q: int, p: int, lo: Surd, hi: Surd, kind: str) -> bool:
    cl = lo.compare(_QQ(q, p))
    ch = hi.compare(_QQ(q, p))
    lo_ok = cl < 0 if kind in ("open", "open_closed") else cl <= 0
    hi_ok = ch > 0 if kind in ("open", "closed_open") else ch >= 0
    return lo_ok and hi_ok


def _stern_brocot(lo: Surd, hi: Surd, max_p: int, kind: str) -> Iterator[tuple[int, int]]:
    # boundaries -1/0 and 1/0 bracket every rational; every fraction
    # strictly between nodes L, R has denominator >= pL + pR, which
    # makes the max_p pruning exact
    if _member(0, 1, lo, hi, kind):
        yield 0, 1
    stack = []
    if lo.sign() < 0:
        stack.append(((-1, 0), (0, 1)))
    if hi.sign() > 0:
        stack.append(((0, 1), (1, 0)))
    while stack:
        (ql, pl), (qr, pr) = stack.pop()
        q, p = ql + qr, pl + pr
        if p > max_p:
            continue
        if _member(q, p, lo, hi, kind):
            yield q, p
        if lo.compare(_QQ(q, p)) < 0:
            stack.append(((ql, pl), (q, p)))
        if hi.compare(_QQ(q, p)) > 0:
            stack.append(((q, p), (qr, pr)))


def enumerate_coprime_in_interval(
    lo: Scalar, hi: Scalar, max_p: int, kind: str = "open"
) -> list[CoprimePair]:
    """All coprime (p, q), 1 <= p <= max_p, with q/p in the interval.

    Each reduced fraction appears exactly once; result sorted by (p, q).
    The descent decides every membership with exact surd comparisons.
    """
    if kind not in _KINDS:
        raise InputError(f"unknown interval kind {kind!r}")
    if max_p < 1:
        raise InputError("max_p must be >= 1")
    lo, hi = _coerce(lo), _coerce(hi)
    if lo.compare(hi) >= 0:
        raise InputError("empty interval: lo >= hi")
    pairs = [CoprimePair(p, q) for q, p in _stern_brocot(lo, hi, max_p, kind)]
    pairs.sort()
    return pairs
