"""Integrable star-shaped models on the 3-sphere.

Two families are covered: the irrational ellipsoid (two simple elliptic
orbits) and the surfaces generated by a monotone profile curve in the
(r1^2, r2^2)-quadrant, whose Reeb flow foliates the Hopf-link complement
by invariant tori.  The closed-orbit classification, the per-class
contact-homology ranks relative to the Hopf link, the implied-orbit
enumeration for a Hopf link with given rotation numbers, and the linking
arithmetic of torus orbits all reduce to exact interval membership of
reduced fractions, decided with surd comparisons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction as _QQ
from typing import Optional, Sequence

from .errors import HypothesisError, InputError, ResonanceError
from .surd import CoprimePair, Surd, enumerate_coprime_in_interval

_ZERO = Surd.rational(0)
_ONE = Surd.rational(1)


@dataclass(frozen=True, order=True)
class HopfClass:
    """Homotopy class (p, q) in the Hopf-link complement.

    p is the linking number with the core through r2 = 0's complement
    (H2), q the linking number with H1.
    """

    p: int
    q: int

    @property
    def is_simple(self) -> bool:
        return math.gcd(abs(self.p), abs(self.q)) == 1

    @property
    def degree_base(self) -> int:
        return 2 * (self.p + self.q)


@dataclass(frozen=True)
class GammaProfile:
    """Endpoint normal slopes of the generating curve, plus optional
    samples (t, x, y, x', y') for the numeric oracle.

    The classification depends only on (theta1, theta2); samples are
    validated (star-shapedness, strict slope monotonicity per arc,
    endpoint conditions) when given.
    """

    theta1: Surd
    theta2: Surd
    samples: Optional[tuple[tuple[float, float, float, float, float], ...]] = None

    def __post_init__(self) -> None:
        if self.theta1.is_rational or self.theta2.is_rational:
            raise ResonanceError("endpoint slopes must be irrational")
        if self.samples is not None:
            object.__setattr__(self, "samples", tuple(map(tuple, self.samples)))
            self._validate_samples()

    def _validate_samples(self) -> None:
        pts = self.samples
        if len(pts) < 3:
            raise InputError("need at least 3 samples")
        t0, x0, y0, xp0, yp0 = pts[0]
        t1, x1, y1, xp1, yp1 = pts[-1]
        if not (x0 > 0 and y0 == 0 and yp0 > 0):
            raise InputError("curve must start on the x-axis moving upward")
        if not (x1 == 0 and y1 > 0 and xp1 < 0):
            raise InputError("curve must end on the y-axis moving leftward")
        for (_, x, y, xp, yp) in pts:
            if x * yp - xp * y <= 0:
                raise InputError("curve is not star-shaped: x*y' - x'*y <= 0")
        # the normal slope -x'/y' must be monotone in one consistent
        # direction along the curve (constant for ellipsoids)
        slopes = [-xp / yp for (_, _, _, xp, yp) in pts if yp != 0]
        diffs = [b - a for a, b in zip(slopes, slopes[1:])]
        if diffs and not (all(d >= 0 for d in diffs)
                          or all(d <= 0 for d in diffs)):
            raise InputError("normal slope must be monotone")


@dataclass(frozen=True)
class TorusOrbitFamily:
    """A Morse-Bott torus of closed orbits in one homotopy class."""

    cls: HopfClass
    arc: str
    gradings: tuple[int, int]

    def __post_init__(self) -> None:
        if abs(self.gradings[0] - self.gradings[1]) != 1:
            raise InputError("gradings must be adjacent integers")
        if not self.cls.is_simple:
            raise InputError(f"class {self.cls} is not simple")


class CCHResult:
    """Per-class rank table: homotopy class -> degree -> rank over Q."""

    def __init__(self, table: dict[HopfClass, dict[int, int]]):
        self._table = {c: dict(d) for c, d in table.items()}

    def classes(self) -> list[HopfClass]:
        return sorted(self._table)

    def rank(self, cls: HopfClass, degree: int) -> int:
        return self._table.get(cls, {}).get(degree, 0)

    def degrees(self, cls: HopfClass) -> dict[int, int]:
        return dict(self._table.get(cls, {}))

    def total_rank(self, cls: HopfClass) -> int:
        return sum(self._table.get(cls, {}).values())

    def __eq__(self, other) -> bool:
        return isinstance(other, CCHResult) and self._table == other._table


# -- ellipsoids ---------------------------------------------------------


@dataclass(frozen=True)
class EllipsoidOrbits:
    """Rotation data of the two simple orbits of an irrational ellipsoid."""

    P_theta: Surd
    Q_theta: Surd

    @staticmethod
    def linking(k_P: int, k_Q: int = 1) -> int:
        # covers of Hopf fibers link with multiplicity
        return k_P * k_Q


def ellipsoid_orbits(a_over_b: Surd) -> EllipsoidOrbits:
    """Rotation numbers 1 + a/b and 1 + b/a of the two ellipsoid orbits."""
    if a_over_b.is_rational:
        raise ResonanceError("rational axis ratio: orbits degenerate")
    if a_over_b.sign() <= 0:
        raise InputError("axis ratio must be positive")
    return EllipsoidOrbits(P_theta=_ONE + a_over_b,
                           Q_theta=_ONE + a_over_b.inverse())


# -- closed-orbit classification ---------------------------------------


def _grade(cls: HopfClass, up: bool) -> tuple[int, int]:
    base = cls.degree_base
    return (base, base + 1) if up else (base, base - 1)


def _all_coprime_box(max_p: int) -> list[CoprimePair]:
    out = []
    for p in range(1, max_p + 1):
        for q in range(1, max_p + 1):
            if math.gcd(p, q) == 1:
                out.append(CoprimePair(p, q))
    return out


def classify_orbits(profile: GammaProfile, max_p: int) -> list[TorusOrbitFamily]:
    """All Morse-Bott orbit tori of the model surface, one family per
    admissible homotopy class, bounded by max_p per linking coordinate."""
    t1, t2 = profile.theta1, profile.theta2
    s1, s2 = t1.sign(), t2.sign()
    fams: list[TorusOrbitFamily] = []

    if s1 > 0 and s2 > 0:
        if t1.compare(t2) == 0:
            raise InputError("equal endpoint slopes: no forcing interval")
        lo, hi = (t1, t2) if t1.compare(t2) < 0 else (t2, t1)
        up = t1.compare(t2) < 0
        for pr in enumerate_coprime_in_interval(lo, hi, max_p, "open"):
            cls = HopfClass(pr.p, pr.q)
            fams.append(TorusOrbitFamily(cls, "second", _grade(cls, up)))
        return fams

    if s1 < 0 and s2 > 0:
        for pr in enumerate_coprime_in_interval(t1, t2, max_p, "open"):
            cls = HopfClass(pr.p, pr.q)
            arc = "first" if pr.q < 0 else ("t1-endpoint" if pr.q == 0 else "second")
            fams.append(TorusOrbitFamily(cls, arc, _grade(cls, True)))
        return fams

    if s1 > 0 and s2 < 0:
        # relabeling symmetry: swap the link components, which inverts
        # and swaps the endpoint slopes and transposes each class
        swapped = GammaProfile(t2.inverse(), t1.inverse())
        arc_map = {"first": "third", "t1-endpoint": "t2-endpoint",
                   "second": "second"}
        for fam in classify_orbits(swapped, max_p):
            cls = HopfClass(fam.cls.q, fam.cls.p)
            fams.append(TorusOrbitFamily(cls, arc_map[fam.arc],
                                         _grade(cls, True)))
        fams.sort(key=lambda f: f.cls)
        return fams

    # both slopes negative: first arc, both endpoint tori, a full second
    # arc and the third arc; the unbounded arcs are truncated at max_p in
    # both linking coordinates
    for pr in enumerate_coprime_in_interval(t1, _ZERO, max_p, "open"):
        cls = HopfClass(pr.p, pr.q)
        fams.append(TorusOrbitFamily(cls, "first", _grade(cls, True)))
    fams.append(TorusOrbitFamily(HopfClass(1, 0), "t1-endpoint",
                                 _grade(HopfClass(1, 0), True)))
    for pr in _all_coprime_box(max_p):
        cls = HopfClass(pr.p, pr.q)
        fams.append(TorusOrbitFamily(cls, "second", _grade(cls, True)))
    fams.append(TorusOrbitFamily(HopfClass(0, 1), "t2-endpoint",
                                 _grade(HopfClass(0, 1), True)))
    # third arc: classes (p, q), p < 0 < q, with q/p < theta2; enumerated
    # as fractions p/q in (1/theta2, 0) with the q coordinate bounded
    for pr in enumerate_coprime_in_interval(t2.inverse(), _ZERO, max_p, "open"):
        cls = HopfClass(pr.q, pr.p)
        fams.append(TorusOrbitFamily(cls, "third", _grade(cls, True)))
    fams.sort(key=lambda f: f.cls)
    return fams


# -- implied existence / forcing ---------------------------------------


@dataclass(frozen=True)
class ForcedOrbit:
    cls: HopfClass
    link_L1: int
    link_L2: int


def _forced_classes(theta1: Surd, theta2: Surd, max_p: int) -> list[HopfClass]:
    s1, s2 = theta1.sign(), theta2.sign()
    if s1 == 0 or s2 == 0 or theta1.is_rational or theta2.is_rational:
        raise InputError("rotation numbers must be irrational and non-zero")

    if s1 > 0 and s2 > 0:
        if theta1.compare(theta2) == 0:
            raise InputError("theta1 == theta2: empty forcing interval")
        lo, hi = (theta1, theta2) if theta1.compare(theta2) < 0 else (theta2, theta1)
        return [HopfClass(pr.p, pr.q)
                for pr in enumerate_coprime_in_interval(lo, hi, max_p, "open")]

    if s1 < 0 and s2 > 0:
        return [HopfClass(pr.p, pr.q)
                for pr in enumerate_coprime_in_interval(theta1, theta2, max_p, "open")]

    if s1 > 0 and s2 < 0:
        # relabel the link components so the negative slope comes first
        return sorted(HopfClass(c.q, c.p)
                      for c in _forced_classes(theta2.inverse(),
                                               theta1.inverse(), max_p))

    # both negative: p > 0 with q/p in (theta1, 1], union q > 0 with
    # p/q in (1/theta2, 1]
    out = {HopfClass(pr.p, pr.q)
           for pr in enumerate_coprime_in_interval(theta1, _ONE, max_p,
                                                   "open_closed")}
    inv2 = theta2.inverse()
    out |= {HopfClass(pr.q, pr.p)
            for pr in enumerate_coprime_in_interval(inv2, _ONE, max_p,
                                                    "open_closed")}
    return sorted(out)


def forcing_hopf(theta1: Surd, theta2: Surd, max_p: int) -> list[ForcedOrbit]:
    """Simple closed orbits forced by a non-degenerate elliptic Hopf link
    with rotation numbers theta1, theta2; each links q with L1, p with L2."""
    return [ForcedOrbit(c, link_L1=c.q, link_L2=c.p)
            for c in _forced_classes(theta1, theta2, max_p)]


# -- contact homology rel the Hopf link --------------------------------


def cch_hopf_complement(profile: GammaProfile, max_p: int) -> CCHResult:
    """Rank table of the per-class homology rel the Hopf link.

    Each admissible class holds exactly one Morse-Bott circle, so the
    differential vanishes and the circle contributes one generator in
    each of two adjacent degrees.
    """
    t1, t2 = profile.theta1, profile.theta2
    up = not (t1.sign() > 0 and t2.sign() > 0 and t2.compare(t1) < 0)
    table: dict[HopfClass, dict[int, int]] = {}
    for cls in _forced_classes(t1, t2, max_p):
        d0, d1 = _grade(cls, up)
        table[cls] = {d0: 1, d1: 1}
    return CCHResult(table)


# -- torus-knot linking and the two-torus-knot complement --------------


def linking_torus_orbits(K1: tuple[int, int], K2: tuple[int, int]) -> int:
    """Linking number of leaves on two distinct invariant tori.

    For slope l/m < l'/m' the value is l'*m; arguments in either order.
    """
    l, m = K1
    l2, m2 = K2
    cmp = l * m2 - l2 * m
    if cmp == 0:
        raise InputError("equal slopes: orbits lie on one torus")
    if (cmp < 0) == (m * m2 > 0):
        return l2 * m
    return l * m2


@dataclass(frozen=True)
class Example3Result:
    plc_ok: bool
    ranks: dict[int, int]


def example3_cch(profile: GammaProfile, T1: HopfClass, T2: HopfClass,
                 target: HopfClass) -> Example3Result:
    """Homology of the target class rel two torus-knot orbits T1, T2.

    Requires 0 < theta1 < theta2, the slope ordering
    theta1 < q'/p' < q/p < theta2 and p/q < p''/q'' < p'/q', and all three
    classes coprime.  The proper-link-class gate is the pair of linking
    inequalities q'' != q and p' != p''.
    """
    t1, t2 = profile.theta1, profile.theta2
    if not (t1.sign() > 0 and t2.sign() > 0 and t1.compare(t2) < 0):
        raise HypothesisError("need 0 < theta1 < theta2")
    for c in (T1, T2, target):
        if not c.is_simple:
            raise InputError(f"class {c} is not coprime")
    p, q = T1.p, T1.q
    p2, q2 = T2.p, T2.q
    p3, q3 = target.p, target.q
    if min(p, q, p2, q2, p3, q3) <= 0:
        raise HypothesisError("all class coordinates must be positive")
    if not (t1.compare(_QQ(q2, p2)) < 0 and _QQ(q2, p2) < _QQ(q, p)
            and t2.compare(_QQ(q, p)) > 0):
        raise HypothesisError("need theta1 < q'/p' < q/p < theta2")
    if not (_QQ(p, q) < _QQ(p3, q3) < _QQ(p2, q2)):
        raise HypothesisError("need p/q < p''/q'' < p'/q'")
    plc_ok = (q3 != q) and (p2 != p3)
    base = target.degree_base
    return Example3Result(plc_ok=plc_ok, ranks={base: 1, base + 1: 1})
