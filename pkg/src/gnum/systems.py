"""Generalized prime systems: validation, counting functions, discretization.

A system is either discrete (a nondecreasing list of real primes > 1,
repeats meaning multiplicity) or continuous (a prime measure dPi given by
a density plus atoms).  Densities are stored in the scaled form

    density_x(u) = dPi/dx evaluated at x = e^u,

which stays O(1/u) for all the bundled examples and never overflows; the
log-coordinate density is dPi/du = e^u * density_x(u).  All bundled
densities are vectorized over numpy arrays of u.

Comparisons of the form p^m <= x are done in log coordinates with a
relative guard of 1e-12, so exact prime powers are counted despite
floating-point roots.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import (
    DivergenceDomainError,
    DomainError,
    GridPlacementWarning,
    UnsupportedOperationError,
    ValidationError,
)
from .grid import LogGridMeasure
from .quadrature import integrate_with_breakpoints

__all__ = [
    "PrimeSystem",
    "StepFunction",
    "validate",
    "load_system",
    "builtin",
    "builtin_names",
    "pi_count",
    "Pi_value",
    "Pi_values",
    "Pi0_value",
    "Pi0_values",
    "to_grid",
    "sieve_primes",
]

_LOG_EPS = 1e-12
_U_CAP = 700.0  # beyond this, e^u overflows float64; atoms/evaluations are capped

LOG2 = math.log(2.0)


# ---------------------------------------------------------------------------
# step functions


class StepFunction:
    """Right-continuous nondecreasing step function from merged jumps."""

    def __init__(self, jumps: Sequence[tuple[float, float]]):
        xs = np.array([x for x, _ in jumps], dtype=float)
        ds = np.array([d for _, d in jumps], dtype=float)
        if np.any(ds <= 0.0):
            raise DomainError("step function jumps must be positive")
        order = np.argsort(xs, kind="stable")
        xs, ds = xs[order], ds[order]
        # merge equal abscissae
        if xs.size:
            keep = np.concatenate([[True], np.diff(xs) > 0.0])
            idx = np.cumsum(keep) - 1
            merged = np.zeros(int(idx[-1]) + 1)
            np.add.at(merged, idx, ds)
            xs = xs[keep]
            ds = merged
        self.xs = xs
        self.heights = np.cumsum(ds)
        self.deltas = ds

    @classmethod
    def from_values(cls, values: Sequence[float]) -> "StepFunction":
        return cls([(v, 1.0) for v in values])

    def __call__(self, x: float) -> float:
        i = int(np.searchsorted(self.xs, x * (1.0 + _LOG_EPS), side="right"))
        return 0.0 if i == 0 else float(self.heights[i - 1])

    @property
    def jumps(self) -> list[tuple[float, float]]:
        return list(zip(self.xs.tolist(), self.deltas.tolist()))


# ---------------------------------------------------------------------------
# the system record


@dataclass(frozen=True)
class PrimeSystem:
    """A validated generalized prime system (immutable after construction)."""

    kind: str
    label: str
    primes: np.ndarray | None = None
    density_x: Callable[[np.ndarray], np.ndarray] | None = None
    atoms_fn: Callable[[float], np.ndarray] | None = field(default=None, repr=False)
    breakpoints_fn: Callable[[float], list[float]] | None = field(default=None, repr=False)
    log_zeta: Callable[[complex], complex] | None = field(default=None, repr=False)
    cosine_terms: tuple[tuple[float, float, float], ...] | None = None
    beta_terms: dict | None = None
    params: dict = field(default_factory=dict)

    @property
    def is_discrete(self) -> bool:
        return self.kind == "discrete"

    def density_u(self, u):
        """dPi/du at u (log-coordinate density e^u * density_x)."""
        u = np.atleast_1d(np.asarray(u, dtype=float))
        return np.exp(u) * self.density_x(u)

    def atoms(self, u_max: float) -> np.ndarray:
        """Atoms (u_j, w_j) of dPi with u_j <= u_max, as an (k, 2) array."""
        if self.atoms_fn is None:
            return np.empty((0, 2))
        out = np.asarray(self.atoms_fn(min(u_max, _U_CAP)), dtype=float)
        return out.reshape(-1, 2)

    def breakpoints(self, u_max: float) -> list[float]:
        """Known kinks/edges of the density in (0, u_max), for quadrature."""
        if self.breakpoints_fn is None:
            return []
        return [b for b in self.breakpoints_fn(u_max) if 0.0 < b < u_max]

    def log_primes(self) -> np.ndarray:
        if not self.is_discrete:
            raise UnsupportedOperationError("log_primes is defined for discrete systems only")
        return np.log(self.primes)


# ---------------------------------------------------------------------------
# validation and loading


def _validate_discrete(primes, issues) -> np.ndarray | None:
    try:
        arr = np.asarray(primes, dtype=float)
    except (TypeError, ValueError):
        issues.append("primes must be a sequence of real numbers")
        return None
    if arr.ndim != 1 or arr.size == 0:
        issues.append("primes must be a non-empty one-dimensional sequence")
        return None
    if not np.all(np.isfinite(arr)):
        issues.append("primes must be finite")
        return None
    if arr[0] <= 1.0:
        issues.append(f"first prime must exceed 1, got {arr[0]}")
    if np.any(np.diff(arr) < 0.0):
        issues.append("prime sequence must be nondecreasing")
    return arr


def validate(spec: dict) -> PrimeSystem:
    """Validate a raw system description and build a PrimeSystem.

    Raises :class:`ValidationError` listing every violated invariant.
    Accepted shapes:

    * ``{"kind": "discrete", "primes": [...], "label": ...}``
    * ``{"kind": "continuous", "density": {"u": [...], "rho_x": [...]},
      "atoms": [[u, w], ...], "label": ...}``  (``rho_u`` accepted instead
      of ``rho_x``; tabulated densities are interpolated linearly)
    * ``{"kind": "builtin", "builtin": {"name": ..., "params": {...}}}``
    """
    issues: list[str] = []
    if not isinstance(spec, dict):
        raise ValidationError(["system description must be a mapping"])
    kind = spec.get("kind")
    label = spec.get("label", kind or "system")

    if kind == "discrete":
        arr = _validate_discrete(spec.get("primes"), issues)
        if issues:
            raise ValidationError(issues)
        return PrimeSystem(kind="discrete", label=label, primes=arr)

    if kind == "continuous":
        dens = spec.get("density") or {}
        us = np.asarray(dens.get("u", []), dtype=float)
        key = "rho_x" if "rho_x" in dens else "rho_u"
        vals = np.asarray(dens.get(key, []), dtype=float)
        if us.size != vals.size or us.size < 2:
            issues.append("density must tabulate matching 'u' and 'rho_x'/'rho_u' arrays (>= 2 samples)")
        else:
            if np.any(np.diff(us) <= 0.0):
                issues.append("density sample abscissae must be strictly increasing")
            if np.any(vals < 0.0):
                bad = float(vals.min())
                issues.append(f"negative density sample: {bad}")
            if key == "rho_u":
                with np.errstate(over="ignore"):
                    vals = vals * np.exp(-us)  # convert dPi/du to dPi/dx
        atoms_raw = np.asarray(spec.get("atoms", []), dtype=float).reshape(-1, 2)
        for u0, w0 in atoms_raw:
            if u0 <= 0.0:
                issues.append(f"atom position must be positive, got {u0}")
            if w0 <= 0.0:
                issues.append(f"atom weight must be positive, got {w0}")
        if issues:
            raise ValidationError(issues)

        us_t, vals_t = us, vals

        def density_x(u, _us=us_t, _vals=vals_t):
            u = np.asarray(u, dtype=float)
            return np.interp(u, _us, _vals, left=0.0, right=0.0)

        atoms_arr = atoms_raw[np.argsort(atoms_raw[:, 0])] if atoms_raw.size else np.empty((0, 2))
        return PrimeSystem(
            kind="continuous",
            label=label,
            density_x=density_x,
            atoms_fn=lambda umax, _a=atoms_arr: _a[_a[:, 0] <= umax],
            breakpoints_fn=lambda umax, _us=us_t: [float(_us[0]), float(_us[-1])],
        )

    if kind == "builtin":
        info = spec.get("builtin") or {}
        name = info.get("name")
        params = info.get("params", {}) or {}
        try:
            return builtin(name, **params)
        except (ValidationError, TypeError) as exc:
            raise ValidationError([str(exc)]) from exc

    raise ValidationError([f"unknown system kind: {kind!r}"])


def load_system(source) -> PrimeSystem:
    """Build a system from 'builtin:name', a dict, or a JSON file path."""
    if isinstance(source, PrimeSystem):
        return source
    if isinstance(source, dict):
        return validate(source)
    text = str(source)
    if text.startswith("builtin:"):
        return builtin(text.split(":", 1)[1])
    with open(text, "r", encoding="utf-8") as fh:
        return validate(json.load(fh))


# ---------------------------------------------------------------------------
# counting functions


def pi_count(system: PrimeSystem, x: float) -> float:
    """pi(x): number of primes <= x, with multiplicity (discrete only)."""
    if not system.is_discrete:
        raise UnsupportedOperationError("pi is defined for discrete systems only")
    if x < 1.0:
        raise DomainError(f"pi requires x >= 1, got {x}")
    return float(np.searchsorted(system.primes, x * (1.0 + _LOG_EPS), side="right"))


def _discrete_Pi(system: PrimeSystem, xs: np.ndarray) -> np.ndarray:
    logp = system.log_primes()
    lp1 = logp[0]
    out = np.zeros_like(xs, dtype=float)
    logx = np.log(np.maximum(xs, 1.0))
    kmax = int(np.max(logx) / lp1 + _LOG_EPS) if xs.size else 0
    for m in range(1, kmax + 1):
        # p^m <= x  <=>  log p <= log x / m, with relative guard
        thresh = logx / m + _LOG_EPS * np.maximum(1.0, logx)
        out += np.searchsorted(logp, thresh, side="right") / m
    return out


def Pi_value(system: PrimeSystem, x: float) -> float:
    """Pi(x) = pi(x) + pi(x^(1/2))/2 + pi(x^(1/3))/3 + ... (or its
    continuous analog: integral of the density plus atom weights)."""
    if x < 1.0:
        raise DomainError(f"Pi requires x >= 1, got {x}")
    return float(Pi_values(system, np.array([math.log(x)]))[0])


def Pi_values(system: PrimeSystem, us: np.ndarray) -> np.ndarray:
    """Pi(e^u) for a sorted array of u >= 0 (marching evaluation)."""
    us = np.asarray(us, dtype=float)
    if us.size and (np.any(us < 0.0) or np.any(np.diff(us) < 0.0)):
        raise DomainError("u samples must be nonnegative and sorted")
    if np.any(us > _U_CAP):
        raise DomainError(f"u beyond {_U_CAP} overflows; rescale the experiment")
    if system.is_discrete:
        return _discrete_Pi(system, np.exp(us))

    bps = system.breakpoints(float(us[-1]) if us.size else 0.0)
    dens = lambda v: float(system.density_u(np.array([v]))[0])
    out = np.zeros_like(us)
    acc = 0.0
    prev = 0.0
    for i, u in enumerate(us):
        if u > prev:
            acc += integrate_with_breakpoints(dens, prev, u, bps)
            prev = u
        out[i] = acc
    atoms = system.atoms(float(us[-1]) if us.size else 0.0)
    if atoms.size:
        pos = atoms[:, 0]
        w = atoms[:, 1]
        idx = np.searchsorted(pos, us * (1.0 + _LOG_EPS), side="right")
        cw = np.concatenate([[0.0], np.cumsum(w)])
        out += cw[idx]
    return out


def _pi0_integrand(v: float) -> float:
    # (1 - 1/x)/log x dx in u-coordinates: (e^v - 1)/v, value 1 at v = 0
    if abs(v) < 1e-8:
        return 1.0 + v / 2.0
    return math.expm1(v) / v


def Pi0_value(x: float) -> float:
    """Pi0(x) = integral_1^x (1 - 1/t)/log t dt, the canonical comparator.

    The integrand extends continuously with value 1 at t = 1; quadrature is
    done in u = log t where the removable singularity is polynomial.
    """
    if x < 1.0:
        raise DomainError(f"Pi0 requires x >= 1, got {x}")
    return integrate_with_breakpoints(_pi0_integrand, 0.0, math.log(x))


def Pi0_values(us: np.ndarray) -> np.ndarray:
    """Pi0(e^u) for a sorted array of u >= 0 (marching evaluation)."""
    us = np.asarray(us, dtype=float)
    out = np.zeros_like(us)
    acc = 0.0
    prev = 0.0
    for i, u in enumerate(us):
        if u > prev:
            acc += integrate_with_breakpoints(_pi0_integrand, prev, u)
            prev = u
        out[i] = acc
    return out


# ---------------------------------------------------------------------------
# discretization


def to_grid(system: PrimeSystem, h: float, u_max: float) -> LogGridMeasure:
    """Discretize dPi onto the log grid with spacing h, support <= u_max.

    Discrete systems contribute mass 1/m at u = m*log(p) per prime power;
    continuous systems bin the density over each node's nearest-node cell
    [j*h - h/2, j*h + h/2) and add atoms.  Every mass element goes to its
    nearest node; a warning is emitted when an atom sits more than h/4 off
    its node.  Node 0 never carries mass (dPi has none at x = 1).
    """
    if h <= 0.0 or u_max <= 0.0:
        raise DomainError("to_grid requires h > 0 and u_max > 0")
    n = int(round(u_max / h)) + 1
    masses = np.zeros(n)

    def place_atom(u0: float, w0: float):
        # node 0 is x = 1 and must stay empty; sub-h/2 positions go to node 1
        j = max(1, int(round(u0 / h)))
        if j >= n:
            return
        off = abs(u0 - j * h)
        if off > h / 4.0:
            warnings.warn(
                f"atom at u={u0:.6g} lands {off:.3g} from node {j} (> h/4)",
                GridPlacementWarning,
                stacklevel=2,
            )
        masses[j] += w0

    if system.is_discrete:
        for lp in system.log_primes():
            m = 1
            while m * lp <= u_max + _LOG_EPS:
                place_atom(m * lp, 1.0 / m)
                m += 1
        if masses[0] != 0.0:
            raise DomainError("prime at x = 1 produced mass at node 0")
        return LogGridMeasure(h, masses, signed=False, label=system.label)

    # continuous: vectorized per-cell Simpson on the smooth part
    j = np.arange(n)
    lo = np.maximum((j - 0.5) * h, 0.0)
    hi = np.minimum((j + 0.5) * h, u_max)
    mid = 0.5 * (lo + hi)
    dens = system.density_u
    cells = (hi - lo) / 6.0 * (dens(lo) + 4.0 * dens(mid) + dens(hi))

    # cells containing a density kink get an exact split integral
    scalar_dens = lambda v: float(dens(np.array([v]))[0])
    for bp in system.breakpoints(u_max):
        jb = int(round(bp / h))
        for jj in (jb - 1, jb, jb + 1):
            if 1 <= jj < n and lo[jj] < hi[jj]:
                cells[jj] = integrate_with_breakpoints(
                    scalar_dens, float(lo[jj]), float(hi[jj]), system.breakpoints(u_max)
                )

    # node 0 is x = 1 and carries no prime mass; credit the [0, h/2) sliver
    # to node 1 so total mass (and the Mellin transform) stay faithful
    if n > 1:
        cells[1] += cells[0]
    cells[0] = 0.0
    masses += cells

    for u0, w0 in system.atoms(u_max):
        place_atom(float(u0), float(w0))
    masses[0] = 0.0
    return LogGridMeasure(h, masses, signed=False, label=system.label)


# ---------------------------------------------------------------------------
# builtin systems


def sieve_primes(limit: int) -> np.ndarray:
    """Classical primes <= limit by Eratosthenes (numpy bitmap)."""
    if limit < 2:
        return np.empty(0)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.nonzero(mask)[0].astype(float)


class BumpSpline:
    """C^(k+1) bump on (0, 1) built from the cardinal B-spline of degree k+2.

    The j-th derivative is a piecewise polynomial evaluated in closed form,
    so derivative sup-norms are exact up to sampling.  The scale is chosen
    so that the sampled sup of |phi^(k)| equals ``target`` (default 1/16,
    half the 1/8 budget the construction allows).
    """

    def __init__(self, k: int, target: float = 1.0 / 16.0):
        if k < 2:
            raise ValidationError(["bump smoothness k must be at least 2"])
        self.k = k
        self.degree = k + 2
        d = self.degree
        i = np.arange(d + 2)
        self._alt_binom = (-1.0) ** i * np.array([math.comb(d + 1, int(ii)) for ii in i])
        self.scale = 1.0
        t = np.linspace(0.0, 1.0, 8193)
        sup = float(np.max(np.abs(self.deriv(k, t))))
        self.scale = target / sup

    def deriv(self, j: int, t) -> np.ndarray:
        """phi^(j)(t), vectorized; zero outside (0, 1).  Needs j <= degree-1."""
        d = self.degree
        if j > d - 1:
            raise DomainError(f"derivative order {j} exceeds spline smoothness")
        t = np.asarray(t, dtype=float)
        z = (d + 1) * t  # map (0,1) to the spline's native support (0, d+1)
        p = d - j
        shifted = z[..., None] - np.arange(d + 2)
        powers = np.where(shifted > 0.0, shifted, 0.0) ** p
        val = powers @ self._alt_binom / math.factorial(p)
        return self.scale * (d + 1) ** j * val

    def __call__(self, t) -> np.ndarray:
        return self.deriv(0, t)


def _builtin_rational(limit: int = 1_000_000) -> PrimeSystem:
    limit = int(limit)
    if limit < 2:
        raise ValidationError(["rational system needs limit >= 2"])
    return PrimeSystem(
        kind="discrete",
        label=f"rational<= {limit}",
        primes=sieve_primes(limit),
        params={"limit": limit},
    )


def _builtin_pi0() -> PrimeSystem:
    def density_x(u):
        u = np.asarray(u, dtype=float)
        out = np.empty_like(u)
        small = np.abs(u) < 1e-8
        out[small] = 1.0 - u[small] / 2.0
        with np.errstate(divide="ignore", invalid="ignore"):
            out[~small] = -np.expm1(-u[~small]) / u[~small]
        out[u < 0.0] = 0.0
        return out

    def log_zeta(s: complex) -> complex:
        import cmath

        return cmath.log(s / (s - 1.0))

    return PrimeSystem(kind="continuous", label="pi0", density_x=density_x, log_zeta=log_zeta)


def _builtin_ex41(k: int = 2, target: float = 1.0 / 16.0) -> PrimeSystem:
    k = int(k)
    if k < 2:
        raise ValidationError(["ex41 requires an integer k >= 2"])
    phi = BumpSpline(k, target=target)

    def _bump_terms(u):
        """g(u) and g'(u) where g(u) = sum_n phi^(k-1)(beta_n (u - n))/(n beta_n).

        Bump n is supported on (n, n + beta_n^(-1)) with beta_n >= 1 for
        n >= 3, so at most the single term n = floor(u) is active.
        """
        u = np.asarray(u, dtype=float)
        nn = np.floor(u).astype(int)
        g = np.zeros_like(u)
        gp = np.zeros_like(u)
        act = nn >= 3
        if np.any(act):
            na = nn[act].astype(float)
            beta = np.log(na) ** (1.0 / k)
            t = beta * (u[act] - na)
            inside = (t > 0.0) & (t < 1.0)
            if np.any(inside):
                tv = t[inside]
                bi = beta[inside]
                ni = na[inside]
                g_part = phi.deriv(k - 1, tv) / (ni * bi)
                gp_part = phi.deriv(k, tv) / ni
                gi = np.zeros_like(na)
                gpi = np.zeros_like(na)
                gi[inside] = g_part
                gpi[inside] = gp_part
                g[act] = gi
                gp[act] = gpi
        return g, gp

    def density_x(u):
        u = np.asarray(u, dtype=float)
        base = _builtin_pi0().density_x(u)
        g, gp = _bump_terms(u)
        return base + g + gp

    def bump_sum(u):
        """The correction Pi(x) - Pi0(x), divided by x, at x = e^u."""
        g, _ = _bump_terms(u)
        return g

    def breakpoints_fn(u_max):
        bps = []
        n = 3
        while n <= u_max:
            beta = math.log(n) ** (1.0 / k)
            bps.extend([float(n), float(n) + 1.0 / beta])
            n += 1
        return bps

    sys = PrimeSystem(
        kind="continuous",
        label=f"ex41(k={k})",
        density_x=density_x,
        breakpoints_fn=breakpoints_fn,
        params={"k": k, "phi_scale": phi.scale},
    )
    object.__setattr__(sys, "bump_sum", bump_sum)
    return sys


def _builtin_ex42() -> PrimeSystem:
    def density_x(u):
        u = np.asarray(u, dtype=float)
        out = np.zeros_like(u)
        m = u >= LOG2
        # 1 + cos u written as 2 cos^2(u/2): no cancellation at the zeros,
        # which matters when the e^u weight amplifies absolute noise
        c = np.cos(0.5 * u[m])
        out[m] = 2.0 * c * c / u[m]
        return out

    def log_zeta(s: complex) -> complex:
        from scipy.special import exp1

        s = complex(s)
        if s.real <= 1.0:
            raise DivergenceDomainError("ex42 zeta diverges for Re s <= 1")
        return complex(
            exp1((s - 1.0) * LOG2)
            + 0.5 * exp1((s - 1.0 - 1j) * LOG2)
            + 0.5 * exp1((s - 1.0 + 1j) * LOG2)
        )

    return PrimeSystem(
        kind="continuous",
        label="ex42",
        density_x=density_x,
        breakpoints_fn=lambda umax: [LOG2],
        log_zeta=log_zeta,
        cosine_terms=((math.sqrt(2.0) / 2.0, 1.0, -math.pi / 4.0),),
        beta_terms={"eta": None, "terms": [(1.0, -0.5)], "kind": "upper"},
    )


def _builtin_ex43(max_k: int = 1000) -> PrimeSystem:
    def atoms_fn(u_max):
        out = []
        k = 1
        while (k + 0.5) * LOG2 <= u_max and k <= max_k:
            out.append(((k + 0.5) * LOG2, 2.0 ** (k + 0.5) / k))
            k += 1
        return np.array(out).reshape(-1, 2)

    def log_zeta(s: complex) -> complex:
        import cmath

        s = complex(s)
        w = cmath.exp(-(s - 1.0) * LOG2)  # 2^{-(s-1)}
        return -cmath.exp(-(s - 1.0) * LOG2 / 2.0) * cmath.log(1.0 - w)

    eta = 2.0 * math.pi / LOG2
    return PrimeSystem(
        kind="continuous",
        label="ex43",
        density_x=lambda u: np.zeros_like(np.asarray(u, dtype=float)),
        atoms_fn=atoms_fn,
        log_zeta=log_zeta,
        beta_terms={
            "eta": eta,
            "t_of": lambda m: 4.0 * math.pi * m / LOG2,
            "beta": -1.0,
            "kind": "upper",
        },
        params={"max_k": max_k},
    )


def _omega_default(u):
    """omega(e^u) for the default omega(x) = 1/log log x (x >= e^e), else 1."""
    u = np.asarray(u, dtype=float)
    out = np.ones_like(u)
    m = u > math.e
    out[m] = 1.0 / np.log(u[m])
    return out


def _builtin_ex51() -> PrimeSystem:
    base = _builtin_pi0().density_x

    def density_x(u):
        u = np.asarray(u, dtype=float)
        t = base(u)
        return t + t * t * _omega_default(u)

    return PrimeSystem(
        kind="continuous",
        label="ex51",
        density_x=density_x,
        breakpoints_fn=lambda umax: [math.e],
        params={"omega": "1/loglog"},
    )


def _builtin_ex52(
    a_base: float = 2.0,
    a_ratio: float = 4.0,
    b_scale: float = 0.75,
    b_power: float = 0.4,
) -> PrimeSystem:
    """Kahane-style system: base density dx/log x with, for each j, the mass
    on [e^(a_j), e^(a_j + b_j)) removed and recredited as an atom at e^(a_j).

    The sequences satisfy the construction's requirements (b_j < a_{j+1} -
    a_j, b_j increasing to infinity, sum b_j^2 / a_j finite).
    """
    if a_base <= LOG2 or a_ratio <= 1.0 or b_scale <= 0.0 or b_power <= 0.0:
        raise ValidationError(["ex52 sequence parameters out of range"])

    def seq(u_max):
        a_j, j = a_base, 1
        out = []
        while a_j <= u_max:
            b_j = b_scale * j**b_power
            if b_j >= a_j * (a_ratio - 1.0):
                raise ValidationError(["ex52 gap exceeds atom spacing"])
            out.append((a_j, b_j))
            a_j *= a_ratio
            j += 1
        return out

    def density_x(u):
        u = np.asarray(u, dtype=float)
        out = np.zeros_like(u)
        m = u >= LOG2
        out[m] = 1.0 / u[m]
        for a_j, b_j in seq(float(u.max()) if u.size else 0.0):
            out[(u >= a_j) & (u < a_j + b_j)] = 0.0
        return out

    def atoms_fn(u_max):
        return np.array(
            [(a_j, math.exp(a_j) * math.log1p(b_j / a_j)) for a_j, b_j in seq(u_max)]
        ).reshape(-1, 2)

    def breakpoints_fn(u_max):
        out = [LOG2]
        for a_j, b_j in seq(u_max):
            out.extend([a_j, a_j + b_j])
        return out

    return PrimeSystem(
        kind="continuous",
        label="ex52",
        density_x=density_x,
        atoms_fn=atoms_fn,
        breakpoints_fn=breakpoints_fn,
        params={"a_base": a_base, "a_ratio": a_ratio, "b_scale": b_scale, "b_power": b_power},
    )


_BUILTINS = {
    "rational": _builtin_rational,
    "pi0": _builtin_pi0,
    "ex41": _builtin_ex41,
    "ex42": _builtin_ex42,
    "ex43": _builtin_ex43,
    "ex51": _builtin_ex51,
    "ex52": _builtin_ex52,
}


def builtin_names() -> list[str]:
    return sorted(_BUILTINS)


def builtin(name: str, **params) -> PrimeSystem:
    """Construct a bundled example system by name."""
    if name not in _BUILTINS:
        raise ValidationError([f"unknown builtin system: {name!r} (have {builtin_names()})"])
    return _BUILTINS[name](**params)
