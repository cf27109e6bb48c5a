"""Numerical cross-validation of the exact modules.

Integrates the ambient Hamiltonian vector field of a star-shaped model
surface in R^4 (the radii must come out as integrals of motion), detects
rational angle-slopes, estimates Conley-Zehnder bands from unwrapped
transverse phases, and computes linking numbers of closed curves in the
3-sphere by stereographic projection and the discretized Gauss integral.

Everything here is deterministic: fixed-step integration, fixed pole
candidates, no randomness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import InputError, OracleError
from .star_models import GammaProfile

_SURFACE_TOL = 1e-9


@dataclass(frozen=True)
class FlowState:
    """Point of a trajectory in (r1, theta1, r2, theta2) coordinates;
    the angles are unwrapped (not reduced mod 2*pi)."""

    r1: float
    theta1: float
    r2: float
    theta2: float
    time: float

    def __post_init__(self) -> None:
        if self.r1 < 0 or self.r2 < 0:
            raise InputError("radii must be non-negative")


@dataclass(frozen=True)
class LinearizedState:
    """Transverse-plane vector with its accumulated phase (2*pi*Delta)."""

    x: float
    y: float
    phase: float

    def __post_init__(self) -> None:
        if self.x == 0 and self.y == 0:
            raise InputError("linearized solution cannot vanish")


@dataclass(frozen=True)
class Trajectory:
    states: tuple[FlowState, ...]
    r_drift: float
    surface_residual: float
    slope_ratio: float

    @property
    def initial(self) -> FlowState:
        return self.states[0]

    @property
    def final(self) -> FlowState:
        return self.states[-1]


class _SurfaceRadius:
    """Polar radius R(phi) of the profile curve in the squared-radius
    quadrant, with the induced degree-1-homogeneous Hamiltonian
    H(X, Y) = |(X, Y)| / R(atan2(Y, X))."""

    def __init__(self, profile: GammaProfile):
        if profile.samples is None:
            raise InputError("flow integration needs a sampled profile")
        phis, radii = [], []
        for (_, x, y, _, _) in profile.samples:
            phis.append(math.atan2(y, x))
            radii.append(math.hypot(x, y))
        if any(b <= a for a, b in zip(phis, phis[1:])):
            raise InputError("samples must advance monotonically in angle")
        self._spline = CubicSpline(phis, radii)
        self._dspline = self._spline.derivative()
        self.phi_range = (phis[0], phis[-1])

    def value(self, X: float, Y: float) -> float:
        rho = math.hypot(X, Y)
        return rho / float(self._spline(math.atan2(Y, X)))

    def gradient(self, X: float, Y: float) -> tuple[float, float]:
        phi = math.atan2(Y, X)
        rho = math.hypot(X, Y)
        R = float(self._spline(phi))
        dR = float(self._dspline(phi))
        hx = X / (rho * R) + dR * Y / (rho * R * R)
        hy = Y / (rho * R) - dR * X / (rho * R * R)
        return hx, hy


def _curve_point(profile: GammaProfile, t: float) -> tuple[float, float, float, float]:
    """Linear interpolation of (x, y, x', y') at curve parameter t."""
    pts = profile.samples
    ts = [p[0] for p in pts]
    if not ts[0] <= t <= ts[-1]:
        raise InputError(f"torus parameter {t} outside sampled range")
    i = max(j for j, tj in enumerate(ts) if tj <= t)
    if i == len(ts) - 1:
        _, x, y, xp, yp = pts[-1]
        return x, y, xp, yp
    t0, x0, y0, xp0, yp0 = pts[i]
    t1, x1, y1, xp1, yp1 = pts[i + 1]
    w = (t - t0) / (t1 - t0)
    return (x0 + w * (x1 - x0), y0 + w * (y1 - y0),
            xp0 + w * (xp1 - xp0), yp0 + w * (yp1 - yp0))


def integrate_model_flow(
    profile: GammaProfile,
    torus_param: float,
    init_angles: tuple[float, float],
    duration: float,
    step: float = 1e-3,
    record_every: int = 100,
) -> Trajectory:
    """Trajectory of the Hamiltonian field through the invariant torus at
    the given curve parameter.

    The field rotates each C-plane with angular speed 2*dH/dX, 2*dH/dY, so
    the radii are integrals; the integration runs in Cartesian R^4 and the
    reported r_drift measures how well that survives discretization.  The
    angle-slope ratio theta2'/theta1' equals -x'(t) / y'(t).
    """
    if duration < 0 or step <= 0:
        raise InputError("duration must be >= 0 and step positive")
    surface = _SurfaceRadius(profile)
    X0, Y0, _, _ = _curve_point(profile, torus_param)
    r1_0, r2_0 = math.sqrt(X0), math.sqrt(Y0)
    th1, th2 = init_angles
    z = np.array([r1_0 * math.cos(th1), r1_0 * math.sin(th1),
                  r2_0 * math.cos(th2), r2_0 * math.sin(th2)])

    def field(v: np.ndarray) -> np.ndarray:
        X = v[0] * v[0] + v[1] * v[1]
        Y = v[2] * v[2] + v[3] * v[3]
        hx, hy = surface.gradient(X, Y)
        return np.array([-2 * hx * v[1], 2 * hx * v[0],
                         -2 * hy * v[3], 2 * hy * v[2]])

    n = max(1, round(duration / step)) if duration > 0 else 0
    h = duration / n if n else 0.0
    states = []
    phase1 = th1
    phase2 = th2
    prev = z.copy()
    r_drift = 0.0
    residual = abs(surface.value(X0, Y0) - 1.0)

    def record(t: float) -> None:
        r1 = math.hypot(z[0], z[1])
        r2 = math.hypot(z[2], z[3])
        states.append(FlowState(r1, phase1, r2, phase2, t))

    record(0.0)
    for i in range(n):
        k1 = field(z)
        k2 = field(z + 0.5 * h * k1)
        k3 = field(z + 0.5 * h * k2)
        k4 = field(z + h * k3)
        z = z + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        if not np.all(np.isfinite(z)):
            raise OracleError("flow integration diverged")
        # unwrapped angle increments per plane
        phase1 += math.atan2(prev[0] * z[1] - prev[1] * z[0],
                             prev[0] * z[0] + prev[1] * z[1])
        phase2 += math.atan2(prev[2] * z[3] - prev[3] * z[2],
                             prev[2] * z[2] + prev[3] * z[3])
        prev = z.copy()
        r1 = math.hypot(z[0], z[1])
        r2 = math.hypot(z[2], z[3])
        r_drift = max(r_drift, abs(r1 - r1_0), abs(r2 - r2_0))
        X = r1 * r1
        Y = r2 * r2
        residual = max(residual, abs(surface.value(X, Y) - 1.0))
        if residual > 1e-6:
            raise OracleError(f"off-surface drift {residual:.3e}")
        if (i + 1) % record_every == 0 or i == n - 1:
            record((i + 1) * h)

    if duration > 0:
        d1 = phase1 - th1
        d2 = phase2 - th2
        slope = d2 / d1 if d1 != 0 else math.inf
    else:
        _, _, xp, yp = _curve_point(profile, torus_param)
        slope = -xp / yp if yp != 0 else math.inf
    return Trajectory(tuple(states), r_drift, residual, slope)


def detect_closed_orbit(slope_ratio: float, max_den: int,
                        tol: float = 1e-9) -> Optional[Fraction]:
    """Best rational p/q with q <= max_den within tol of the slope, via
    continued fractions; None when no rational is that close."""
    if max_den < 1:
        raise InputError("max_den must be >= 1")
    if not math.isfinite(slope_ratio):
        return None
    cand = Fraction(slope_ratio).limit_denominator(max_den)
    if abs(float(cand) - slope_ratio) <= tol:
        return cand
    return None


# -- Conley-Zehnder bands from transverse phases -----------------------


@dataclass(frozen=True)
class NumericCZ:
    two_delta: float
    band: tuple[int, int]


def numeric_cz(two_delta_at_step: Callable[[float], float],
               step: float = 1e-3) -> NumericCZ:
    """Band (ceil(2D)-2, floor(2D)+2) of admissible indices from the
    unwrapped transverse phase 2*pi*Delta.

    The phase is recomputed at half the step; disagreement beyond a
    half-turn triggers one more halving, then an error.
    """
    d = two_delta_at_step(step)
    d_half = two_delta_at_step(step / 2)
    if abs(d - d_half) > 0.5:
        d_quarter = two_delta_at_step(step / 4)
        if abs(d_half - d_quarter) > 0.5:
            raise OracleError("phase unwrap did not stabilize under halving")
        d_half = d_quarter
    band = (math.ceil(d_half) - 2, math.floor(d_half) + 2)
    return NumericCZ(d_half, band)


def constant_rotation_phase(theta: float, k: int) -> Callable[[float], float]:
    """2*Delta for the k-th cover of a torus orbit with transverse
    rotation number theta: the phase 2*pi*k*theta is exact."""
    if k < 1:
        raise InputError("cover k must be >= 1")
    return lambda step: 2.0 * k * theta


def sturm_phase_for_cover(profile, k: int) -> Callable[[float], float]:
    """2*Delta over k lifted periods (T = 2L) of a geodesic curvature
    profile, from the Sturm linearization."""
    from .geodesic import _sturm_phase

    if k < 1:
        raise InputError("cover k must be >= 1")
    grid = profile.grid()

    def eval_at(step: float) -> float:
        phase = _sturm_phase(grid, profile.L, k * 2.0 * profile.L, step)
        if not math.isfinite(phase):
            raise OracleError("linearized integration diverged")
        return phase / math.pi

    return eval_at


# -- Gauss linking of closed curves in the 3-sphere --------------------


def torus_curve(r1: float, r2: float, p: int, q: int,
                n: int = 400, offset1: float = 0.0,
                offset2: float = 0.0) -> np.ndarray:
    """Closed (p, q) curve on the torus of radii (r1, r2), as n points in
    R^4; (k, 0) and (0, k) give k-fold covers of the core circles."""
    ts = np.linspace(0.0, 2 * math.pi, n, endpoint=False)
    return np.column_stack([
        r1 * np.cos(p * ts + offset1), r1 * np.sin(p * ts + offset1),
        r2 * np.cos(q * ts + offset2), r2 * np.sin(q * ts + offset2),
    ])


def _pole_candidates() -> np.ndarray:
    # fixed, order-stable candidate poles: signed diagonals and the
    # sixteen double-plane bisectors
    cands = []
    for sx in (1.0, -1.0):
        for sy in (1.0, -1.0):
            for sz in (1.0, -1.0):
                for sw in (1.0, -1.0):
                    cands.append((sx, sy, sz, sw))
    for i in range(4):
        for j in range(i + 1, 4):
            for si in (1.0, -1.0):
                for sj in (1.0, -1.0):
                    v = [0.0, 0.0, 0.0, 0.0]
                    v[i], v[j] = si, sj
                    cands.append(tuple(v))
    arr = np.array(cands)
    return arr / np.linalg.norm(arr, axis=1, keepdims=True)


def _stereographic(points: np.ndarray, pole: np.ndarray) -> np.ndarray:
    # orthonormal frame of pole-perp, deterministic via Gram-Schmidt on
    # the standard basis
    basis = []
    for e in np.eye(4):
        v = e - (e @ pole) * pole
        for b in basis:
            v = v - (v @ b) * b
        nv = np.linalg.norm(v)
        if nv > 1e-9:
            basis.append(v / nv)
        if len(basis) == 3:
            break
    frame = np.array(basis)
    denom = 1.0 - points @ pole
    return (points @ frame.T) / denom[:, None]


def _gauss_sum(c1: np.ndarray, c2: np.ndarray) -> float:
    x_mid = 0.5 * (c1 + np.roll(c1, -1, axis=0))
    dx = np.roll(c1, -1, axis=0) - c1
    y_mid = 0.5 * (c2 + np.roll(c2, -1, axis=0))
    dy = np.roll(c2, -1, axis=0) - c2
    diff = x_mid[:, None, :] - y_mid[None, :, :]
    cross = np.cross(dx[:, None, :], dy[None, :, :])
    dist3 = np.linalg.norm(diff, axis=2) ** 3
    return float(np.sum(np.sum(diff * cross, axis=2) / dist3) / (4 * math.pi))


@dataclass(frozen=True)
class LinkingEstimate:
    value: int
    estimate: float
    confidence: float


def numeric_linking(curve1: np.ndarray, curve2: np.ndarray,
                    min_confidence: float = 0.2) -> LinkingEstimate:
    """Linking number of two disjoint closed polylines on S^3.

    Projects stereographically from the fixed candidate pole farthest
    from both curves, evaluates the Gauss double sum at full and half
    resolution with Richardson extrapolation, and rounds; the confidence
    is the distance of the estimate to the nearest half-integer.
    """
    c1 = np.asarray(curve1, dtype=float)
    c2 = np.asarray(curve2, dtype=float)
    sep = np.min(np.linalg.norm(c1[:, None, :] - c2[None, :, :], axis=2))
    if sep < 1e-9:
        raise InputError("curves must be disjoint")
    poles = _pole_candidates()
    dists = np.minimum(
        np.min(np.linalg.norm(c1[None, :, :] - poles[:, None, :], axis=2), axis=1),
        np.min(np.linalg.norm(c2[None, :, :] - poles[:, None, :], axis=2), axis=1),
    )
    pole = poles[int(np.argmax(dists))]

    p1 = _stereographic(c1, pole)
    p2 = _stereographic(c2, pole)
    est_full = _gauss_sum(p1, p2)
    est_half = _gauss_sum(p1[::2], p2[::2])
    # midpoint-rule error is O(h^2)
    est = (4 * est_full - est_half) / 3
    conf = 0.5 - abs(est - round(est))
    if conf < min_confidence:
        raise OracleError(
            f"linking estimate {est:.4f} too close to a half-integer"
        )
    return LinkingEstimate(int(round(est)), est, conf)
