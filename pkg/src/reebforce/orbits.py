"""Conley-Zehnder indices and extremal windings of closed Reeb orbits.

All indices are taken with respect to the fixed global trivialization of
the tight contact structure on the 3-sphere; no per-orbit framing data is
carried.  Elliptic orbits are described by an exact rotation number theta,
hyperbolic ones by an integer n; the k-th cover then has

    elliptic:    cz = 2*floor(k*theta) + 1
    hyperbolic:  cz = k*n
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .errors import InputError, ResonanceError
from .surd import Surd, is_resonant


@dataclass(frozen=True)
class OrbitSpec:
    """Linear data of a closed Reeb orbit.

    Exactly one of ``theta`` (elliptic rotation number, a Surd) and ``n``
    (hyperbolic winding integer) must be given.  ``action`` is the period
    integral of the contact form, when known; ``in_link`` flags membership
    in the distinguished link.
    """

    name: str
    theta: Optional[Surd] = None
    n: Optional[int] = None
    action: Optional[Surd] = field(default=None)
    in_link: bool = False

    def __post_init__(self) -> None:
        if (self.theta is None) == (self.n is None):
            raise InputError("orbit must be elliptic (theta) xor hyperbolic (n)")
        if self.action is not None and self.action.sign() <= 0:
            raise InputError("orbit action must be positive")

    @property
    def is_elliptic(self) -> bool:
        return self.theta is not None

    @staticmethod
    def elliptic(name: str, theta: Surd, **kw) -> "OrbitSpec":
        return OrbitSpec(name, theta=theta, **kw)

    @staticmethod
    def hyperbolic(name: str, n: int, **kw) -> "OrbitSpec":
        return OrbitSpec(name, n=n, **kw)


def _check_cover(orbit: OrbitSpec, k: int) -> None:
    if k < 1:
        raise InputError("cover k must be >= 1")
    if orbit.is_elliptic and is_resonant(k, orbit.theta):
        raise ResonanceError(
            f"orbit {orbit.name}: cover {k} of rotation {orbit.theta} is degenerate"
        )


def cz(orbit: OrbitSpec, k: int) -> int:
    """Conley-Zehnder index of the k-th cover."""
    _check_cover(orbit, k)
    if orbit.is_elliptic:
        return 2 * (orbit.theta * k).floor() + 1
    return k * orbit.n


def alpha_minus(orbit: OrbitSpec, k: int) -> int:
    """Winding of the eigensection at the largest negative eigenvalue."""
    _check_cover(orbit, k)
    if orbit.is_elliptic:
        return (orbit.theta * k).floor()
    return math.floor(k * orbit.n / 2)


def alpha_plus(orbit: OrbitSpec, k: int) -> int:
    """Winding of the eigensection at the least positive eigenvalue."""
    _check_cover(orbit, k)
    if orbit.is_elliptic:
        return (orbit.theta * k).ceil()
    return math.ceil(k * orbit.n / 2)


def parity(orbit: OrbitSpec, k: int) -> int:
    """cz - 2*alpha_minus: 1 for elliptic covers, (k*n) mod 2 otherwise."""
    return cz(orbit, k) - 2 * alpha_minus(orbit, k)


def sft_good(orbit: OrbitSpec, k: int) -> bool:
    """False exactly for even covers of an odd-index orbit.

    Only a hyperbolic orbit with odd n has odd index together with an
    even-index even cover; elliptic covers are always good.
    """
    if k < 1:
        raise InputError("cover k must be >= 1")
    if orbit.is_elliptic:
        return True
    return not (k % 2 == 0 and orbit.n % 2 == 1)
