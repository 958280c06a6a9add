"""Measures on [1, oo) discretized on a uniform grid in u = log x.

Node j carries the mass attributed to u = j*h; node 0 is x = 1.  Because
u adds under multiplication of x, multiplicative convolution of measures
becomes the Cauchy product of the mass sequences, and the exp/log/inverse
of a measure under convolution are the classic power-series recurrences,
computed exactly on the grid (no transform tricks, by design: the
recurrences are lower-triangular, so truncation at a node count is exact).

Mass placement convention: a mass element at u* belongs to its nearest
node, i.e. node j represents the half-open cell [j*h - h/2, j*h + h/2)
clipped to u >= 0.  ``cumulative`` is right-continuous in the node index:
the node's full mass counts at u = j*h.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DomainError,
    InvalidPrimeMeasureError,
    NonInvertibleError,
    NotNormalizedError,
    SpacingMismatchError,
)

__all__ = [
    "LogGridMeasure",
    "delta",
    "conv",
    "exp_conv",
    "log_conv",
    "inv_conv",
    "mellin",
    "cumulative",
]


@dataclass(frozen=True)
class LogGridMeasure:
    """A measure supported on grid nodes u = j*h, j = 0..n-1.

    ``signed`` records whether negative masses are permitted; it is
    metadata for validation, not behavior.
    """

    h: float
    masses: np.ndarray
    signed: bool = False
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if not (self.h > 0.0):
            raise DomainError(f"grid spacing must be positive, got {self.h}")
        m = np.asarray(self.masses, dtype=float)
        if m.ndim != 1 or m.size < 1:
            raise DomainError("masses must be a one-dimensional, non-empty array")
        if not np.all(np.isfinite(m)):
            raise DomainError("masses must be finite")
        if not self.signed and np.any(m < 0.0):
            raise DomainError("negative mass in an unsigned measure")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "masses", m)

    @property
    def n(self) -> int:
        return int(self.masses.size)

    @property
    def u_nodes(self) -> np.ndarray:
        return np.arange(self.n) * self.h

    def mellin(self, s: complex) -> complex:
        return mellin(self, s)

    def cumulative(self, u: float) -> float:
        return cumulative(self, u)

    def total_mass(self) -> float:
        return float(np.sum(self.masses))

    def with_masses(self, masses: np.ndarray, signed: bool | None = None, label: str | None = None) -> "LogGridMeasure":
        return LogGridMeasure(
            self.h,
            masses,
            self.signed if signed is None else signed,
            self.label if label is None else label,
        )

    def __neg__(self) -> "LogGridMeasure":
        return LogGridMeasure(self.h, -self.masses, signed=True, label=self.label)


def delta(h: float, n: int = 1) -> LogGridMeasure:
    """The unit mass at x = 1 (node 0), padded to ``n`` nodes."""
    m = np.zeros(n)
    m[0] = 1.0
    return LogGridMeasure(h, m, signed=False, label="delta")


def _check_spacing(a: LogGridMeasure, b: LogGridMeasure):
    if a.h != b.h:
        raise SpacingMismatchError(f"spacings differ: {a.h} vs {b.h}")


def conv(a: LogGridMeasure, b: LogGridMeasure, max_len: int | None = None) -> LogGridMeasure:
    """Multiplicative convolution: Cauchy product of the mass sequences.

    The full product has length n_a + n_b - 1; ``max_len`` truncates it.
    Truncation is exact for the retained nodes (lower triangularity).
    """
    _check_spacing(a, b)
    c = np.convolve(a.masses, b.masses)
    if max_len is not None:
        c = c[:max_len]
    return LogGridMeasure(a.h, c, signed=a.signed or b.signed)


def exp_conv(b: LogGridMeasure, length: int | None = None) -> LogGridMeasure:
    """Convolution exponential A = exp*(B) = delta + B + B*B/2! + ...

    Power-series recurrence, exact on the grid:

        a_0 = 1,   a_j = (1/j) * sum_{i=1..j} i * b_i * a_{j-i}.

    Requires b_0 = 0 (a prime measure has no mass at x = 1).
    """
    if b.masses[0] != 0.0:
        raise InvalidPrimeMeasureError("exp_conv requires zero mass at node 0")
    n = b.n if length is None else int(length)
    w = np.zeros(n)
    k = min(n, b.n)
    w[:k] = np.arange(k) * b.masses[:k]
    a = np.zeros(n)
    a[0] = 1.0
    for j in range(1, n):
        # Loop-carried: a_j needs all previous a's. One BLAS dot per node.
        a[j] = np.dot(w[1 : j + 1], a[j - 1 :: -1]) / j
    return LogGridMeasure(b.h, a, signed=b.signed)


def log_conv(a: LogGridMeasure, length: int | None = None) -> LogGridMeasure:
    """Convolution logarithm, the inverse recurrence of :func:`exp_conv`.

        b_0 = 0,   b_j = a_j - (1/j) * sum_{i=1..j-1} i * b_i * a_{j-i}.
    """
    if a.masses[0] != 1.0:
        raise NotNormalizedError("log_conv requires unit mass at node 0")
    n = a.n if length is None else int(length)
    am = np.zeros(n)
    am[: min(n, a.n)] = a.masses[: min(n, a.n)]
    b = np.zeros(n)
    wb = np.zeros(n)  # wb_i = i * b_i, filled as b is discovered
    for j in range(1, n):
        s = np.dot(wb[1:j], am[j - 1 : 0 : -1]) if j > 1 else 0.0
        b[j] = am[j] - s / j
        wb[j] = j * b[j]
    return LogGridMeasure(a.h, b, signed=True)


def inv_conv(a: LogGridMeasure, length: int | None = None) -> LogGridMeasure:
    """Convolution inverse M with conv(A, M) = delta (up to truncation).

        m_0 = 1/a_0,   m_j = -(1/a_0) * sum_{i=1..j} a_i * m_{j-i}.
    """
    a0 = a.masses[0]
    if a0 == 0.0:
        raise NonInvertibleError("inv_conv requires nonzero mass at node 0")
    n = a.n if length is None else int(length)
    am = np.zeros(n)
    am[: min(n, a.n)] = a.masses[: min(n, a.n)]
    m = np.zeros(n)
    m[0] = 1.0 / a0
    for j in range(1, n):
        m[j] = -np.dot(am[1 : j + 1], m[j - 1 :: -1]) / a0
    return LogGridMeasure(a.h, m, signed=True)


def mellin(a: LogGridMeasure, s: complex) -> complex:
    """Mellin-Stieltjes sum of the discretized measure.

    Returns sum_j m_j * exp(-s * j * h); node u = j*h carries x = e^u.
    The sum is finite, so the caller owns the truncation meaning.
    """
    s = complex(s)
    expo = -s * a.u_nodes
    if s.imag == 0.0:
        val = complex(np.dot(a.masses, np.exp(expo.real)))
    else:
        val = complex(np.dot(a.masses.astype(complex), np.exp(expo)))
    return val


def cumulative(a: LogGridMeasure, u: float) -> float:
    """Sum of masses at nodes with j*h <= u (right-continuous step value)."""
    if u < 0.0:
        raise DomainError(f"cumulative requires u >= 0, got {u}")
    # Tolerate u sitting a rounding error below a node.
    j = int(math.floor(u / a.h + 1e-9))
    j = min(j, a.n - 1)
    return float(np.sum(a.masses[: j + 1]))
