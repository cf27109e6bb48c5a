"""Periodic-orbit growth for an open book with hyperbolic torus monodromy.

The page is a punctured torus and the monodromy acts linearly through a
hyperbolic matrix A in SL(2, Z).  Period-k orbit classes correspond to
fixed points of A^k on T^2, counted exactly by |det(A^k - I)| =
trace(A^k) - 2; the non-trivial Nielsen classes are the non-zero cosets
of Z^2/(A^k - I)Z^2, labelled in Smith-normal-form coordinates.  The
linear part is realized as the time-one flow of an explicit quadratic
Hamiltonian, which the numeric check integrates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InputError
from .orbits import OrbitSpec, cz as _cz
from .surd import Surd


@dataclass(frozen=True)
class MonodromyMatrix:
    """Hyperbolic element of SL(2, Z)."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.a * self.d - self.b * self.c != 1:
            raise InputError("monodromy must have determinant 1")
        if abs(self.a + self.d) <= 2:
            raise InputError("monodromy must be hyperbolic (|trace| > 2)")

    @property
    def trace(self) -> int:
        return self.a + self.d

    @property
    def eigenvalue(self) -> Surd:
        """Largest eigenvalue (trace + sqrt(trace^2 - 4)) / 2."""
        t = self.trace
        return Surd(t, 1, 2, t * t - 4)

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def power(self, k: int) -> tuple[tuple[int, int], tuple[int, int]]:
        if k < 0:
            raise InputError("power must be >= 0")
        m = ((1, 0), (0, 1))
        base = self.rows()
        while k:
            if k & 1:
                m = _matmul(m, base)
            base = _matmul(base, base)
            k >>= 1
        return m


def _matmul(m, n):
    return (
        (m[0][0] * n[0][0] + m[0][1] * n[1][0],
         m[0][0] * n[0][1] + m[0][1] * n[1][1]),
        (m[1][0] * n[0][0] + m[1][1] * n[1][0],
         m[1][0] * n[0][1] + m[1][1] * n[1][1]),
    )


FIGURE_EIGHT = MonodromyMatrix(2, 1, 1, 1)


@dataclass(frozen=True)
class NielsenClassLabel:
    """A non-trivial period-k fixed-point class in Smith coordinates."""

    period: int
    v: tuple[int, int]

    def __post_init__(self) -> None:
        if self.v == (0, 0):
            raise InputError("the origin is the puncture class")


def periodic_point_count(A: MonodromyMatrix, k: int) -> int:
    """Fixed points of A^k on the torus: |det(A^k - I)|."""
    if k < 1:
        raise InputError("period k must be >= 1")
    (a, b), (c, d) = A.power(k)
    return abs((a - 1) * (d - 1) - b * c)


def nontrivial_class_count(A: MonodromyMatrix, k: int) -> int:
    """Fixed-point classes away from the puncture (the origin's class)."""
    return periodic_point_count(A, k) - 1


def _smith_2x2(m: tuple[tuple[int, int], tuple[int, int]]) -> tuple[int, int]:
    """Invariant factors (d1, d2), d1 | d2, of a nonsingular 2x2 integer
    matrix: d1 = gcd of entries, d1*d2 = |det|."""
    (a, b), (c, d) = m
    det = abs(a * d - b * c)
    if det == 0:
        raise InputError("singular matrix has no finite cokernel")
    g = math.gcd(math.gcd(abs(a), abs(b)), math.gcd(abs(c), abs(d)))
    return g, det // g


def class_labels(A: MonodromyMatrix, k: int) -> list[NielsenClassLabel]:
    """Non-zero cosets of Z^2/(A^k - I)Z^2 in Smith coordinates,
    lexicographically ordered."""
    if k < 1:
        raise InputError("period k must be >= 1")
    (a, b), (c, d) = A.power(k)
    d1, d2 = _smith_2x2(((a - 1, b), (c, d - 1)))
    return [
        NielsenClassLabel(k, (i, j))
        for i in range(d1)
        for j in range(d2)
        if (i, j) != (0, 0)
    ]


@dataclass(frozen=True)
class GrowthReport:
    counts: tuple[int, ...]
    rate_estimate: float
    rate_exact: Surd

    @property
    def rate_exact_float(self) -> float:
        return math.log(float(self.rate_exact.to_mpf()))


def growth_report(A: MonodromyMatrix, k_max: int) -> GrowthReport:
    """Fixed-point counts trace(A^k) - 2 for k = 1..k_max and the
    exponential rate.

    The estimate is log(count_{k_max} / count_{k_max - 1}); the exact rate
    is log(lambda), carried symbolically as the eigenvalue surd.
    """
    if k_max < 4:
        raise InputError("k_max must be >= 4")
    counts = tuple(periodic_point_count(A, k) for k in range(1, k_max + 1))
    if counts[-2] == 0:
        raise InputError("count sequence degenerate below k_max")
    rate = math.log(counts[-1] / counts[-2])
    return GrowthReport(counts, rate, A.eigenvalue)


def action_bound(k: int, C: float) -> float:
    """Action upper bound C*k for an orbit linking the binding k times."""
    if C <= 0:
        raise InputError("return-time bound C must be positive")
    if k < 1:
        raise InputError("period k must be >= 1")
    return C * k


def binding_cz(T_param: Surd, k: int) -> int:
    """Index 2*floor(k*T) + 1 of the k-th cover of the elliptic binding."""
    return _cz(OrbitSpec.elliptic("B", T_param), k)


# -- the explicit quadratic Hamiltonian --------------------------------

#: (1/sqrt(5)) * log((3+sqrt(5))/2), the eigen-log constant of the
#: figure-eight monodromy
_Q_COEFF = math.log((3 + math.sqrt(5)) / 2) / math.sqrt(5)


def monodromy_hamiltonian(x: float, y: float) -> float:
    """Q(x, y) = (1/sqrt(5)) log((3+sqrt(5))/2) (x^2 - xy - y^2).

    Valid in the linear region away from the puncture; the time-one
    Hamiltonian flow of Q is the figure-eight monodromy matrix.
    """
    return _Q_COEFF * (x * x - x * y - y * y)


def _hamiltonian_matrix() -> np.ndarray:
    # X_Q = (-dQ/dy, dQ/dx) is linear: v' = L v
    c = _Q_COEFF
    return np.array([[c, 2 * c], [2 * c, -c]], dtype=float)


def time_one_check(tolerance: float = 1e-6, step: float = 1e-4,
                   perturb: float = 0.0) -> bool:
    """Integrate the flow of Q for unit time from the basis vectors and
    compare with the matrix [[2,1],[1,1]] entrywise.  ``perturb`` scales a
    deliberate off-diagonal defect for negative-control tests."""
    L = _hamiltonian_matrix()
    if perturb:
        L = L + perturb * np.array([[0.0, 1.0], [0.0, 0.0]])
    n = max(1, round(1.0 / step))
    h = 1.0 / n
    M = np.eye(2)
    for _ in range(n):
        k1 = L @ M
        k2 = L @ (M + 0.5 * h * k1)
        k3 = L @ (M + 0.5 * h * k2)
        k4 = L @ (M + h * k3)
        M = M + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
    target = np.array([[2.0, 1.0], [1.0, 1.0]])
    return bool(np.max(np.abs(M - target)) < tolerance)
