"""Adaptive Simpson quadrature with breakpoint splitting.

The integrands in this package are smooth except at isolated, known
locations (atom positions, support edges, bump boundaries).  The strategy
is: split at the supplied breakpoints first, then run classic adaptive
Simpson on each smooth piece.

Tolerances: the relative part is measured against the *whole piece's*
magnitude, not each subinterval's, and is converted once into an absolute
budget that halves per split.  A subinterval-relative tolerance would be
unreachable where the integrand has interior near-zeros next to huge
values (think e^u (1 + cos u): the error estimate's floating-point noise
scales with e^u while the local piece vanishes), which otherwise forces
the refinement to the depth cap.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

__all__ = ["adaptive_simpson", "integrate_with_breakpoints"]

_MAX_DEPTH = 40
_EPS = 2.220446049250313e-16


def _simpson(fa, fm, fb, a, b):
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb)


def _adapt(f, a, fa, b, fb, m, fm, whole, budget, depth):
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = f(lm)
    frm = f(rm)
    left = _simpson(fa, flm, fm, a, m)
    right = _simpson(fm, frm, fb, m, b)
    err = left + right - whole
    too_narrow = (b - a) <= 8.0 * _EPS * max(abs(a), abs(b), 1.0)
    if depth >= _MAX_DEPTH or too_narrow or abs(err) <= 15.0 * budget:
        return left + right + err / 15.0
    half = 0.5 * budget
    return _adapt(f, a, fa, m, fm, lm, flm, left, half, depth + 1) + _adapt(
        f, m, fm, b, fb, rm, frm, right, half, depth + 1
    )


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    abs_tol: float = 1e-10,
    rel_tol: float = 1e-12,
) -> float:
    """Integrate ``f`` over [a, b] with adaptive Simpson refinement.

    The effective absolute budget is max(abs_tol, rel_tol * scale) where
    the scale is the magnitude of the first refined estimate of the piece.
    """
    if a == b:
        return 0.0
    if b < a:
        return -adaptive_simpson(f, b, a, abs_tol, rel_tol)
    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = _simpson(fa, fm, fb, a, b)
    lm, rm = 0.5 * (a + m), 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    refined = _simpson(fa, flm, fm, a, m) + _simpson(fm, frm, fb, m, b)
    scale = max(abs(whole), abs(refined))
    budget = max(abs_tol, rel_tol * scale)
    return _adapt(f, a, fa, m, fm, lm, flm, _simpson(fa, flm, fm, a, m), 0.5 * budget, 1) + _adapt(
        f, m, fm, b, fb, rm, frm, _simpson(fm, frm, fb, m, b), 0.5 * budget, 1
    )


def integrate_with_breakpoints(
    f: Callable[[float], float],
    a: float,
    b: float,
    breakpoints: Iterable[float] = (),
    abs_tol: float = 1e-10,
    rel_tol: float = 1e-12,
) -> float:
    """Integrate ``f`` over [a, b], splitting at interior breakpoints.

    Breakpoints outside (a, b) are ignored; duplicates and unsorted input
    are tolerated.
    """
    if b < a:
        return -integrate_with_breakpoints(f, b, a, breakpoints, abs_tol, rel_tol)
    cuts: Sequence[float] = sorted({float(c) for c in breakpoints if a < c < b})
    edges = [a, *cuts, b]
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        total += adaptive_simpson(f, lo, hi, abs_tol, rel_tol)
    return total
