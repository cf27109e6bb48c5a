"""Asymptotic intersection arithmetic for punctured holomorphic maps.

Implements the combinatorial side of the intersection pairing between
asymptotically cylindrical maps: the extremal-winding quantities Omega+/-,
the asymptotic defect Delta, the pairing star = iota + Omega + Delta/2, the
positivity decomposition check, the asymptotic contribution over a link
component, and the lower bound for branched covers of an orbit cylinder.

The perturbed interior count iota is always an input: it is homotopy data
that cannot be recovered from puncture combinatorics alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import HypothesisError, InputError
from .orbits import OrbitSpec, alpha_minus, alpha_plus
from .surd import Surd

POSITIVE = +1
NEGATIVE = -1


@dataclass(frozen=True)
class PunctureDatum:
    """One asymptotic end: sign, limiting orbit and covering number.

    ``winding`` is the winding of the asymptotic eigensection, needed only
    for the delta-infinity computation.  When present it must respect the
    asymptotic-formula constraint (<= alpha_minus at positive punctures,
    >= alpha_plus at negative ones) relative to the orbit's own rotation
    data.
    """

    sign: int
    orbit: OrbitSpec
    cover: int
    winding: Optional[int] = None

    def __post_init__(self) -> None:
        if self.sign not in (POSITIVE, NEGATIVE):
            raise InputError("puncture sign must be +1 or -1")
        if self.cover < 1:
            raise InputError("covering number must be >= 1")
        if self.winding is not None:
            if self.sign == POSITIVE:
                if self.winding > alpha_minus(self.orbit, self.cover):
                    raise InputError(
                        f"winding {self.winding} exceeds alpha_minus at "
                        f"positive puncture over {self.orbit.name}"
                    )
            elif self.winding < alpha_plus(self.orbit, self.cover):
                raise InputError(
                    f"winding {self.winding} below alpha_plus at negative "
                    f"puncture over {self.orbit.name}"
                )


@dataclass(frozen=True)
class AsymptoticMap:
    """Puncture data of an abstract asymptotically cylindrical map."""

    punctures: tuple[PunctureDatum, ...]
    genus: int = 0

    def __post_init__(self) -> None:
        if not self.punctures:
            raise InputError("an asymptotically cylindrical map has punctures")
        if self.genus < 0:
            raise InputError("genus must be >= 0")

    @property
    def positive(self) -> tuple[PunctureDatum, ...]:
        return tuple(z for z in self.punctures if z.sign == POSITIVE)

    @property
    def negative(self) -> tuple[PunctureDatum, ...]:
        return tuple(z for z in self.punctures if z.sign == NEGATIVE)


def cylinder(orbit_top: OrbitSpec, k_top: int,
             orbit_bot: OrbitSpec, k_bot: int) -> AsymptoticMap:
    return AsymptoticMap((
        PunctureDatum(POSITIVE, orbit_top, k_top),
        PunctureDatum(NEGATIVE, orbit_bot, k_bot),
    ))


def plane(orbit: OrbitSpec, k: int = 1) -> AsymptoticMap:
    return AsymptoticMap((PunctureDatum(POSITIVE, orbit, k),))


def omega_plus(P: OrbitSpec, k1: int, k2: int) -> int:
    """k1*k2 * max(alpha_minus(P,k1)/k1, alpha_minus(P,k2)/k2)."""
    return max(k2 * alpha_minus(P, k1), k1 * alpha_minus(P, k2))


def omega_minus(P: OrbitSpec, k1: int, k2: int) -> int:
    """k1*k2 * min(alpha_plus(P,k1)/k1, alpha_plus(P,k2)/k2)."""
    return min(k2 * alpha_plus(P, k1), k1 * alpha_plus(P, k2))


def _same_orbit(z: PunctureDatum, z2: PunctureDatum) -> bool:
    return z.orbit == z2.orbit


def delta_pair(z: PunctureDatum, z2: PunctureDatum) -> int:
    """Omega_minus - Omega_plus for a pair of same-sign punctures over the
    same orbit; zero otherwise.  Always non-negative."""
    if z.sign != z2.sign or not _same_orbit(z, z2):
        return 0
    return (omega_minus(z.orbit, z.cover, z2.cover)
            - omega_plus(z.orbit, z.cover, z2.cover))


def delta_total(U: AsymptoticMap, V: AsymptoticMap) -> int:
    total = 0
    for z in U.positive:
        for z2 in V.positive:
            total += delta_pair(z, z2)
    for z in U.negative:
        for z2 in V.negative:
            total += delta_pair(z, z2)
    return total


def _omega_pairing(U: AsymptoticMap, V: AsymptoticMap) -> int:
    total = 0
    for z in U.positive:
        for z2 in V.positive:
            if _same_orbit(z, z2):
                total += omega_plus(z.orbit, z.cover, z2.cover)
    for z in U.negative:
        for z2 in V.negative:
            if _same_orbit(z, z2):
                total -= omega_minus(z.orbit, z.cover, z2.cover)
    return total


def star(U: AsymptoticMap, V: AsymptoticMap, iota: int) -> Fraction:
    """The homotopy-invariant pairing iota + Omega + Delta/2.

    ``iota`` is the trivialization-dependent perturbed intersection count,
    supplied by the caller.  The result may be half-integral.
    """
    return Fraction(iota) + _omega_pairing(U, V) + Fraction(delta_total(U, V), 2)


def decomposition_check(int_count: int, delta_inf: int,
                        U: AsymptoticMap, V: AsymptoticMap, iota: int) -> bool:
    """Does star(U,V) = int + delta_infinity + Delta/2 with both
    asymptotic terms admissible (non-negative)?"""
    if int_count < 0 or delta_inf < 0:
        return False
    return star(U, V, iota) == int_count + delta_inf + Fraction(delta_total(U, V), 2)


def delta_infinity_over_link(
    L_i: OrbitSpec,
    punctures: Sequence[PunctureDatum],
    theta_plus: Surd,
    theta_minus: Surd,
) -> int:
    """Asymptotic contribution of a map against the cylinder over L_i.

    Sums -w + floor(k*theta_plus) over positive punctures and
    w - ceil(k*theta_minus) over negative punctures; every puncture must
    carry a winding and be asymptotic to a cover of L_i.
    """
    total = 0
    for z in punctures:
        if z.orbit != L_i:
            raise InputError(
                f"puncture over {z.orbit.name} is not asymptotic to {L_i.name}"
            )
        if z.winding is None:
            raise InputError("delta_infinity requires a winding at every puncture")
        if z.sign == POSITIVE:
            bound = (theta_plus * z.cover).floor()
            if z.winding > bound:
                raise InputError(
                    f"winding {z.winding} exceeds extremal winding {bound}"
                )
            total += -z.winding + bound
        else:
            bound = (theta_minus * z.cover).ceil()
            if z.winding < bound:
                raise InputError(
                    f"winding {z.winding} below extremal winding {bound}"
                )
            total += z.winding - bound
    return total


@dataclass(frozen=True)
class BranchedCoverBound:
    degree: int
    star_lower: Fraction
    bound: Fraction
    satisfied: bool


def branched_cover_bound(
    theta_plus: Surd,
    theta_minus: Surd,
    k_plus: int,
    k_minus: Sequence[int],
) -> BranchedCoverBound:
    """Lower bound for a genus-0 branched cover of the cylinder over an
    elliptic link component, paired against that cylinder.

    The mapping degree is floor(k+ * theta+) - sum(floor(k- * theta-) + 1);
    each of the 1 + len(k_minus) punctures contributes at least 1 to the
    asymptotic defect, giving star >= degree + (1 + #punctures_minus)/2,
    which must dominate (1 - #punctures_minus)/2.
    """
    if k_plus < 1 or any(k < 1 for k in k_minus):
        raise InputError("covering numbers must be >= 1")
    if k_minus and sum(k_minus) != k_plus:
        raise InputError("negative covers must partition the positive cover")
    if theta_plus.compare(theta_minus) < 0:
        raise HypothesisError(
            "theta_plus < theta_minus: degree control is lost"
        )
    degree = (theta_plus * k_plus).floor() - sum(
        (theta_minus * k).floor() + 1 for k in k_minus
    )
    n_neg = len(k_minus)
    star_lower = degree + Fraction(1 + n_neg, 2)
    bound = Fraction(1 - n_neg, 2)
    return BranchedCoverBound(degree, star_lower, bound, star_lower >= bound)
