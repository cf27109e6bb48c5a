"""Rotation numbers of closed geodesics on the 2-sphere.

The linearized geodesic flow along a closed geodesic of length L reduces
to the Sturm system

    x' = -K(t) y,    y' = x

with K the Gauss curvature along the geodesic.  Zeros of y are counted by
unwrapping the phase of (x, y) — every half-turn is one transverse
crossing of the x-axis — and the rotation number is the asymptotic zero
density rho = (L/2) #zeros / horizon.  The satellite table translates an
exact rho into the implied-orbit enumeration through the slopes
theta1 = 2 rho - 1 and theta2 = 1/(2 rho - 1).
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np
from numba import njit

from .errors import InputError, OracleError
from .star_models import _forced_classes
from .surd import Surd

_ONE = Surd.rational(1)


@dataclass(frozen=True)
class CurvatureProfile:
    """Gauss curvature along one period of a closed geodesic.

    ``k_values`` samples K at the uniform grid j*L/n, j = 0..n-1; the
    function is extended periodically with linear interpolation.
    """

    name: str
    L: float
    k_values: tuple[float, ...]

    def __post_init__(self) -> None:
        if not (self.L > 0 and math.isfinite(self.L)):
            raise InputError("period L must be positive and finite")
        vals = tuple(float(v) for v in self.k_values)
        if len(vals) < 2:
            raise InputError("need at least 2 curvature samples")
        if not all(math.isfinite(v) for v in vals):
            raise InputError("curvature samples must be finite")
        # sample-level continuity: adjacent jumps must stay small next to
        # the overall variation (wrap-around included)
        spread = max(vals) - min(vals)
        tol = max(1e-9, 0.35 * (spread + 1.0))
        for i in range(len(vals)):
            if abs(vals[i] - vals[i - 1]) > tol:
                raise InputError("curvature samples are not continuous")
        object.__setattr__(self, "k_values", vals)

    @staticmethod
    def constant(c: float, L: float, name: str = "") -> "CurvatureProfile":
        return CurvatureProfile(name or f"K={c}", L, (float(c),) * 8)

    @staticmethod
    def from_function(f: Callable[[float], float], L: float,
                      n: int = 1024, name: str = "") -> "CurvatureProfile":
        ts = [j * L / n for j in range(n)]
        return CurvatureProfile(name or "sampled", L, tuple(f(t) for t in ts))

    @staticmethod
    def from_csv(path: str) -> "CurvatureProfile":
        """Read (t, K) rows; a header line ``L=<value>`` fixes the period."""
        L = None
        rows: list[tuple[float, float]] = []
        with open(path, newline="") as fh:
            for rec in csv.reader(fh):
                if not rec:
                    continue
                if rec[0].strip().startswith("L="):
                    L = float(rec[0].split("=", 1)[1])
                    continue
                if rec[0].strip().lower() in ("t", "time"):
                    continue
                rows.append((float(rec[0]), float(rec[1])))
        if L is None or not rows:
            raise InputError("profile file needs an L= header and samples")
        rows.sort()
        n = len(rows)
        for i, (t, _) in enumerate(rows):
            if abs(t - i * L / n) > L / n * 0.51:
                raise InputError("samples must cover one period uniformly")
        return CurvatureProfile(path, L, tuple(k for _, k in rows))

    def grid(self) -> np.ndarray:
        return np.asarray(self.k_values, dtype=np.float64)


@dataclass(frozen=True)
class RotationEstimate:
    rho: float
    error: float
    zero_counts: tuple[tuple[float, int], ...]
    converged: bool

    def __post_init__(self) -> None:
        if self.rho <= 0:
            raise OracleError("rotation estimate must be positive")


@njit(cache=True)
def _sturm_phase(k_grid, L, horizon, step):  # pragma: no cover - jit body
    n = k_grid.shape[0]
    inv_dt = n / L
    steps = int(horizon / step)
    h = horizon / steps
    x, y = 1.0, 0.0
    phase = 0.0
    t = 0.0
    for _ in range(steps):
        # K by periodic linear interpolation at t, t+h/2, t+h
        u = (t * inv_dt) % n
        i = int(u)
        k0 = k_grid[i] + (u - i) * (k_grid[(i + 1) % n] - k_grid[i])
        u = ((t + 0.5 * h) * inv_dt) % n
        i = int(u)
        k1 = k_grid[i] + (u - i) * (k_grid[(i + 1) % n] - k_grid[i])
        u = ((t + h) * inv_dt) % n
        i = int(u)
        k2 = k_grid[i] + (u - i) * (k_grid[(i + 1) % n] - k_grid[i])

        ax1 = -k0 * y
        ay1 = x
        ax2 = -k1 * (y + 0.5 * h * ay1)
        ay2 = x + 0.5 * h * ax1
        ax3 = -k1 * (y + 0.5 * h * ay2)
        ay3 = x + 0.5 * h * ax2
        ax4 = -k2 * (y + h * ay3)
        ay4 = x + h * ax3
        xn = x + h / 6.0 * (ax1 + 2.0 * ax2 + 2.0 * ax3 + ax4)
        yn = y + h / 6.0 * (ay1 + 2.0 * ay2 + 2.0 * ay3 + ay4)

        phase += math.atan2(x * yn - y * xn, x * xn + y * yn)
        norm = math.hypot(xn, yn)
        if norm == 0.0 or not math.isfinite(norm):
            return math.nan
        x, y = xn / norm, yn / norm
        t += h
    return phase


def sturm_zero_count(profile: CurvatureProfile, horizon: float,
                     step: Optional[float] = None) -> int:
    """Zeros of y on (0, horizon] for the solution with (x, y)(0) = (1, 0)."""
    if horizon <= 0:
        raise InputError("horizon must be positive")
    if step is None:
        step = profile.L / 256
    if step <= 0 or step > profile.L / 256 + 1e-12:
        raise InputError("step must be positive and resolve the period")
    phase = _sturm_phase(profile.grid(), profile.L, float(horizon), float(step))
    if not math.isfinite(phase):
        raise OracleError("integrator produced non-finite values")
    # each accumulated half-turn is one transverse crossing of the x-axis
    return int(math.floor(phase / math.pi + 1e-6))


def rho(profile: CurvatureProfile, horizon: float,
        step: Optional[float] = None) -> RotationEstimate:
    """Zero-density estimate (L/2)*count/N, cross-checked at two horizons."""
    c_half = sturm_zero_count(profile, horizon / 2, step)
    c_full = sturm_zero_count(profile, horizon, step)
    est_half = (profile.L / 2) * c_half / (horizon / 2)
    est_full = (profile.L / 2) * c_full / horizon
    # the count is quantized, so the half-horizon run serves as the error
    # gauge rather than an extrapolation partner; the density error also
    # can never beat one count over the horizon
    err = max(abs(est_full - est_half), profile.L / (2 * horizon))
    return RotationEstimate(
        rho=est_full,
        error=err,
        zero_counts=((horizon / 2, c_half), (horizon, c_full)),
        converged=abs(est_full - est_half) < 1e-4,
    )


@dataclass(frozen=True)
class CzZeroCheck:
    cz_band: tuple[int, int]
    consistent: Optional[bool]
    conclusive: bool


def cz_zero_dictionary(zero_count_on_kT: int, k: int,
                       rho_est: float, resonance_tol: float = 1e-3) -> CzZeroCheck:
    """Index band (count-2, count+2) against the prediction 2*floor(2k*rho)+1.

    Near-resonant rho (2k*rho within resonance_tol of an integer) yields
    an inconclusive result instead of a guess.
    """
    if k < 1:
        raise InputError("cover k must be >= 1")
    band = (zero_count_on_kT - 2, zero_count_on_kT + 2)
    twokrho = 2 * k * rho_est
    if abs(twokrho - round(twokrho)) <= resonance_tol:
        return CzZeroCheck(band, None, False)
    predicted = 2 * math.floor(twokrho) + 1
    return CzZeroCheck(band, band[0] < predicted < band[1], True)


@dataclass(frozen=True)
class SatelliteRow:
    p: int
    q: int
    link_gamma: int
    link_gamma_bar: int


def angenent_table(rho_val: Surd | str, max_pq: int) -> list[SatelliteRow]:
    """Implied (p, q)-satellite orbits of a geodesic with exact rotation
    number rho: the classes forced by the slopes 2*rho - 1 and its inverse,
    truncated at |p|, |q| <= max_pq.  The symmetric partner (q, p) appears
    on its own row (the two traversal directions)."""
    if isinstance(rho_val, str):
        rho_val = Surd.parse(rho_val)
    if rho_val.sign() <= 0:
        raise InputError("rho must be positive")
    if rho_val.compare(_ONE) == 0:
        raise InputError("rho = 1 is resonant")
    theta1 = rho_val * 2 - _ONE
    if theta1.sign() == 0:
        raise InputError("rho = 1/2 is resonant")
    theta2 = theta1.inverse()
    rows = []
    for cls in _forced_classes(theta1, theta2, max_pq):
        if abs(cls.p) <= max_pq and abs(cls.q) <= max_pq:
            rows.append(SatelliteRow(cls.p, cls.q,
                                     link_gamma=cls.p, link_gamma_bar=cls.q))
    rows.sort(key=lambda r: (r.p, r.q))
    return rows
