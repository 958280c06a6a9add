"""The zeta side: zeta values, J(s), the density constant, L1 defects,
cosine criteria, boundary probes, and the Chebyshev functional.

Everything here is finite-sample evidence, never proof.  Boundary
conditions are probed on rectangles strictly right of Re s = 1; integral
dichotomies (finite vs infinite) are reported as Cauchy-style evidence
from a geometric ladder of partial integrals.

J(s) is evaluated by integration by parts, which is exact for step
functions and reduces to smooth quadrature otherwise:

    J(s) = integral_1^X x^(-1-s) (Pi - Pi0) dx
         = (1/s) [MellinPi(s; X) - MellinPi0(s; X)]
           - (X^(-s)/s) (Pi(X) - Pi0(X)),

with the Mellin partial integrals taken over [1, X].  The identity
log zeta(s) = s*J(s) + log(s/(s-1)) ties this to the zeta function and is
exercised by the tests.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DivergenceDomainError, DomainError, ValidationError
from .grid import LogGridMeasure, exp_conv, mellin as grid_mellin
from .quadrature import integrate_with_breakpoints
from .semigroup import iter_value_omega_mu
from .systems import (
    Pi0_values,
    Pi_values,
    PrimeSystem,
    to_grid,
)

__all__ = [
    "ZetaResult",
    "JResult",
    "DensityResult",
    "LadderReport",
    "CosineTermSpec",
    "CriterionReport",
    "BetaTermSpec",
    "ProbeReport",
    "ChebyshevReport",
    "zeta",
    "log_zeta_value",
    "J_value",
    "density_constant",
    "l1_defect",
    "density_defect",
    "evidence_verdict",
    "cosine_criterion",
    "boundary_probe",
    "chebyshev_ratio",
]

_U_CAP = 600.0

CONVERGENT = "convergence evidence"
DIVERGENT = "divergence evidence"


# ---------------------------------------------------------------------------
# result records


@dataclass(frozen=True)
class ZetaResult:
    value: complex
    tail_bound: float
    method: str

    def __complex__(self) -> complex:
        return complex(self.value)


@dataclass(frozen=True)
class JResult:
    value: complex
    tail_bound: float
    tail_model: str


@dataclass(frozen=True)
class DensityResult:
    a: float
    J1: float
    tail_bound: float
    reliable: bool
    evidence: "LadderReport | None" = None


@dataclass(frozen=True)
class LadderReport:
    """Partial integrals on a geometric ladder plus the evidence verdict."""

    rungs: tuple[float, ...]
    partials: tuple[float, ...]
    verdict: str
    factor: float
    tail: int

    @property
    def increments(self) -> tuple[float, ...]:
        return tuple(b - a for a, b in zip(self.partials, self.partials[1:]))

    @property
    def ratios(self) -> tuple[float, ...]:
        inc = self.increments
        return tuple(b / a if a != 0.0 else math.inf for a, b in zip(inc, inc[1:]))

    @property
    def convergent(self) -> bool:
        return self.verdict == CONVERGENT


@dataclass(frozen=True)
class CosineTermSpec:
    """Cosine perturbation terms (b_j, t_j, y_j) with distinct t_j > 0."""

    terms: tuple[tuple[float, float, float], ...]

    def __post_init__(self):
        ts = [t for _, t, _ in self.terms]
        if any(t <= 0.0 for t in ts):
            raise ValidationError(["cosine term frequencies t_j must be positive"])
        if len(set(ts)) != len(ts):
            raise ValidationError(["cosine term frequencies t_j must be distinct"])

    @property
    def thetas(self) -> tuple[float, ...]:
        return tuple(y + math.atan(t) for _, t, y in self.terms)


@dataclass(frozen=True)
class CriterionReport:
    values: tuple[float, ...]
    verdict: bool
    strengthened: bool
    bound: float = 2.0


@dataclass(frozen=True)
class BetaTermSpec:
    """Singular-term catalog for the boundary probes.

    ``kind`` selects the inequality direction: 'upper' for the log|zeta|
    upper bound (beta_n > -1) and 'lower' for the m(x) = o(1) condition
    (beta_n < 1, with the extra +log|s-1| term).
    """

    eta: float
    terms: tuple[tuple[float, float], ...]
    kind: str = "upper"

    def __post_init__(self):
        if self.kind not in ("upper", "lower"):
            raise ValidationError([f"unknown probe kind {self.kind!r}"])
        if not (self.eta > 0.0):
            raise ValidationError(["eta must be positive"])
        last = self.eta
        for t_n, beta_n in self.terms:
            if t_n <= last:
                raise ValidationError(["probe frequencies must satisfy 0 < eta < t_1 < t_2 < ..."])
            last = t_n
            if self.kind == "upper" and beta_n <= -1.0:
                raise ValidationError(["upper-kind exponents must satisfy beta_n > -1"])
            if self.kind == "lower" and beta_n >= 1.0:
                raise ValidationError(["lower-kind exponents must satisfy beta_n < 1"])


@dataclass(frozen=True)
class ProbeReport:
    kind: str
    sigma_range: tuple[float, float]
    t_range: tuple[float, float]
    steps: tuple[int, int]
    extremum: float
    arg_sigma: float
    arg_t: float
    samples: np.ndarray | None = field(default=None, repr=False, compare=False)

    @property
    def bounded_value(self) -> float:
        """sup Q for the upper kind, inf Q for the lower kind."""
        return self.extremum


@dataclass(frozen=True)
class ChebyshevReport:
    sup: float
    arg_x: float
    growth_flag: bool
    samples: np.ndarray = field(repr=False, compare=False, default=None)


# ---------------------------------------------------------------------------
# zeta and J


def _require_sigma_gt1(s: complex, what: str):
    if complex(s).real <= 1.0:
        raise DivergenceDomainError(f"{what} requires Re s > 1, got {complex(s)}")


def zeta(
    system: PrimeSystem,
    s: complex,
    cutoff: float = 1e6,
    h: float = 1e-3,
    u_max: float = 40.0,
    budget: int | None = None,
    prefer_closed_form: bool = True,
) -> ZetaResult:
    """zeta(s) = sum n_k^(-s) (discrete, direct summation to ``cutoff``)
    or exp(Mellin of dPi) (continuous, grid-discretized or closed form).

    The reported tail bound is the crude geometric estimate
    N(cutoff) * cutoff^(-sigma) * sigma/(sigma-1) for the discrete sum and
    a density-based bound at u_max for the grid path.
    """
    s = complex(s)
    _require_sigma_gt1(s, "zeta")
    sigma = s.real
    if system.is_discrete:
        vals = []
        n_seen = 0
        batch: list[float] = []
        acc = 0.0 + 0.0j
        for value, _, _ in iter_value_omega_mu(system, cutoff, budget=budget):
            batch.append(value)
            n_seen += 1
            if len(batch) == 65536:
                xs = np.array(batch)
                acc += np.sum(np.exp(-s * np.log(xs)))
                batch.clear()
        if batch:
            xs = np.array(batch)
            acc += np.sum(np.exp(-s * np.log(xs)))
        tail = (n_seen / cutoff) * cutoff ** (1.0 - sigma) * sigma / (sigma - 1.0)
        return ZetaResult(complex(acc), float(tail), "direct-sum")
    if prefer_closed_form and system.log_zeta is not None:
        return ZetaResult(cmath.exp(system.log_zeta(s)), 0.0, "closed-form")
    lz = log_zeta_value(system, s, h=h, u_max=u_max, prefer_closed_form=False)
    dens_end = float(np.exp(u_max) * system.density_x(np.array([u_max]))[0])
    tail = dens_end * math.exp(-(sigma - 1.0) * u_max) / (sigma - 1.0) / max(u_max, 1.0)
    val = cmath.exp(lz)
    return ZetaResult(val, abs(val) * tail, "grid")


def log_zeta_value(
    system: PrimeSystem,
    s: complex,
    h: float = 1e-3,
    u_max: float = 40.0,
    prefer_closed_form: bool = True,
    _grid_cache: dict | None = None,
) -> complex:
    """log zeta(s) = Mellin-Stieltjes transform of dPi at s (Re s > 1)."""
    s = complex(s)
    _require_sigma_gt1(s, "log zeta")
    if prefer_closed_form and system.log_zeta is not None:
        return complex(system.log_zeta(s))
    if system.is_discrete:
        return _discrete_mellin_pi(system, s, math.exp(u_max))
    key = (id(system), h, u_max)
    if _grid_cache is not None and key in _grid_cache:
        g = _grid_cache[key]
    else:
        g = to_grid(system, h, u_max)
        if _grid_cache is not None:
            _grid_cache[key] = g
    return grid_mellin(g, s)


def _discrete_mellin_pi(system: PrimeSystem, s: complex, X: float) -> complex:
    """Mellin partial of dPi over [1, X]: sum over p^m <= X of p^(-ms)/m."""
    logp = system.log_primes()
    logX = math.log(X)
    out = 0.0 + 0.0j
    m = 1
    while m * logp[0] <= logX + 1e-12:
        sel = logp[logp * m <= logX + 1e-12 * max(1.0, logX)]
        if sel.size == 0:
            break
        out += np.sum(np.exp(-s * m * sel)) / m
        m += 1
    return complex(out)


def _continuous_mellin_pi(system: PrimeSystem, s: complex, U: float) -> complex:
    """Mellin partial of dPi over [1, e^U]: integral of e^{-(s-1)v} rho_x(v) dv
    plus the atom sum, all in scaled (overflow-free) form."""
    bps = system.breakpoints(U)

    if s.imag == 0.0:
        sig = s.real

        def f(v: float) -> float:
            return math.exp(-(sig - 1.0) * v) * float(system.density_x(np.array([v]))[0])

        val = complex(integrate_with_breakpoints(f, 0.0, U, bps))
    else:
        # complex quadrature: real and imaginary parts separately
        def f_re(v: float) -> float:
            return (cmath.exp(-(s - 1.0) * v) * float(system.density_x(np.array([v]))[0])).real

        def f_im(v: float) -> float:
            return (cmath.exp(-(s - 1.0) * v) * float(system.density_x(np.array([v]))[0])).imag

        val = complex(
            integrate_with_breakpoints(f_re, 0.0, U, bps),
            integrate_with_breakpoints(f_im, 0.0, U, bps),
        )
    atoms = system.atoms(U)
    for u0, w0 in atoms:
        # computed as w * e^{-s u}; stable because w ~ e^{u} * O(1)
        val += w0 * cmath.exp(-s * u0)
    return val


def _mellin_pi0_partial(s: complex, U: float) -> complex:
    """Mellin partial of dPi0 over [1, e^U]: integral of
    e^{-(s-1)v} (1 - e^{-v})/v dv, value log(s/(s-1)) as U -> infinity."""

    def g(v: float) -> float:
        if abs(v) < 1e-8:
            return 1.0 - v / 2.0
        return -math.expm1(-v) / v

    if s.imag == 0.0:
        sig = s.real
        return complex(integrate_with_breakpoints(lambda v: math.exp(-(sig - 1.0) * v) * g(v), 0.0, U))
    return complex(
        integrate_with_breakpoints(lambda v: (cmath.exp(-(s - 1.0) * v) * g(v)).real, 0.0, U),
        integrate_with_breakpoints(lambda v: (cmath.exp(-(s - 1.0) * v) * g(v)).imag, 0.0, U),
    )


def J_value(system: PrimeSystem, s: complex, U: float, tail_model: str = "pi0") -> JResult:
    """J(s) = integral_1^(e^U) x^(-1-s) (Pi(x) - Pi0(x)) dx plus a modeled
    tail, via integration by parts (exact across Pi's jumps).

    Tail models: 'pi0' continues Pi by Pi0 beyond the cutoff (tail 0),
    'xlogx' continues Pi by x/log x, 'none' reports the bare partial.
    The reported tail bound is the magnitude of the boundary correction,
    which sets the scale of what the cutoff can still move.
    """
    s = complex(s)
    if s.real < 1.0:
        raise DivergenceDomainError(f"J(s) requires Re s >= 1, got {s}")
    if U <= 0.0:
        raise DomainError("J needs a positive cutoff U")
    if U > _U_CAP:
        raise DomainError(f"U beyond {_U_CAP} overflows the counting functions")
    if tail_model not in ("pi0", "xlogx", "none"):
        raise DomainError(f"unknown tail model {tail_model!r}")

    X = math.exp(U)
    if system.is_discrete:
        mell_pi = _discrete_mellin_pi(system, s, X)
    else:
        mell_pi = _continuous_mellin_pi(system, s, U)
    mell_pi0 = _mellin_pi0_partial(s, U)
    pi_U = float(Pi_values(system, np.array([U]))[0])
    pi0_U = float(Pi0_values(np.array([U]))[0])
    boundary = cmath.exp(-s * U) / s * (pi_U - pi0_U)
    val = (mell_pi - mell_pi0) / s - boundary

    tail = 0.0 + 0.0j
    if tail_model == "xlogx":
        # beyond X, model Pi by x/log x: tail = int_U^inf e^{-su} (e^u/u - Pi0(e^u)) du
        horizon = min(U + 60.0 / max(s.real, 1.0), _U_CAP + 100.0)

        def tail_f(v: float, part: int) -> float:
            pi0_v = float(Pi0_values(np.array([v]))[0])
            w = cmath.exp(-s * v) * (math.exp(v) / v - pi0_v)
            return w.real if part == 0 else w.imag

        tail = complex(
            integrate_with_breakpoints(lambda v: tail_f(v, 0), U, horizon),
            integrate_with_breakpoints(lambda v: tail_f(v, 1), U, horizon),
        )
    return JResult(val + tail, abs(boundary), tail_model)


def density_constant(
    system: PrimeSystem,
    U: float,
    tail_model: str = "pi0",
    ladder_kwargs: dict | None = None,
) -> DensityResult:
    """a = exp(J(1)), with L1-defect convergence evidence attached.

    When the defect ladder reports divergence evidence the hypothesis of
    the density theorem fails numerically and the value is tagged
    unreliable (not fatal; the number is still reported).
    """
    evidence = l1_defect(system, U, **(ladder_kwargs or {}))
    res = J_value(system, 1.0, U, tail_model=tail_model)
    j1 = res.value.real
    return DensityResult(
        a=math.exp(j1),
        J1=j1,
        tail_bound=res.tail_bound,
        reliable=evidence.convergent,
        evidence=evidence,
    )


# ---------------------------------------------------------------------------
# evidence ladders


def evidence_verdict(
    increments: Sequence[float],
    factor: float = 0.5,
    tail: int = 3,
    eps: float = 1e-12,
) -> str:
    """Cauchy-style verdict: convergent evidence iff each of the last
    ``tail`` increments falls below ``factor`` times its predecessor.
    Increments below ``eps`` (relative to the largest) count as converged.
    """
    inc = [float(v) for v in increments]
    if len(inc) < tail + 1:
        raise DomainError(f"need at least {tail + 1} increments for a verdict")
    floor = eps * max(1.0, max(abs(v) for v in inc))
    for prev, cur in zip(inc[-tail - 1 : -1], inc[-tail:]):
        if cur <= floor:
            continue
        if not (cur < factor * prev):
            return DIVERGENT
    return CONVERGENT


def _default_rungs(U: float, ratio: float, num: int, lo: float) -> list[float]:
    rungs = [U / ratio**k for k in range(num)][::-1]
    return [r for r in rungs if r > lo * 1.5] or [U]


def _sample_grid(system: PrimeSystem, lo: float, hi: float, du: float) -> np.ndarray:
    pts = {lo, hi}
    pts.update(np.arange(lo, hi, du).tolist())
    for b in system.breakpoints(hi):
        if lo < b < hi:
            pts.update((b, min(b + 1e-9, hi)))
    for u0, _ in system.atoms(hi):
        if lo < u0 < hi:
            pts.update((float(u0), min(float(u0) + 1e-9, hi)))
    if system.is_discrete:
        logp = system.log_primes()
        m = 1
        while m * logp[0] <= hi:
            for v in (m * logp)[m * logp <= hi]:
                if v > lo:
                    pts.update((float(v), min(float(v) + 1e-9, hi)))
            m += 1
    return np.array(sorted(pts))


def l1_defect(
    system: PrimeSystem,
    U: float,
    comparator: str = "pi0",
    rungs: Sequence[float] | None = None,
    ratio: float = 2.0,
    num_rungs: int = 8,
    factor: float = 0.5,
    tail: int = 3,
    du: float = 0.02,
) -> LadderReport:
    """Partial integrals of |Pi(x) - comparator(x)| dx/x^2 on a geometric
    ladder, with the Cauchy-evidence verdict.

    Comparators: 'pi0' (the canonical smooth Pi0) or 'xlogx' (x/log x);
    the integrals start at x = 2 as in the defining condition.
    """
    if comparator not in ("pi0", "xlogx"):
        raise DomainError(f"unknown comparator {comparator!r}")
    lo = math.log(2.0)
    if U <= lo:
        raise DomainError("l1_defect needs U > log 2")
    if U > _U_CAP:
        raise DomainError(f"U beyond {_U_CAP} overflows the counting functions")
    rung_list = list(rungs) if rungs is not None else _default_rungs(U, ratio, num_rungs, lo)
    us = _sample_grid(system, lo, float(rung_list[-1]), du)
    pi_vals = Pi_values(system, us)
    if comparator == "pi0":
        comp = Pi0_values(us)
    else:
        comp = np.exp(us) / us
    integrand = np.abs(pi_vals - comp) * np.exp(-us)
    cum = np.concatenate([[0.0], np.cumsum(0.5 * (integrand[1:] + integrand[:-1]) * np.diff(us))])
    partials = [float(np.interp(r, us, cum)) for r in rung_list]
    inc = np.diff(partials)
    verdict = evidence_verdict(inc, factor=factor, tail=min(tail, max(1, len(inc) - 1)))
    return LadderReport(tuple(rung_list), tuple(partials), verdict, factor, tail)


def density_defect(
    system: PrimeSystem,
    a: float | None,
    U: float,
    h: float = 2.5e-3,
    rungs: Sequence[float] | None = None,
    ratio: float = 2.0,
    num_rungs: int = 8,
    factor: float = 0.5,
    tail: int = 3,
    window: tuple[float, float] | None = None,
    budget: int | None = None,
) -> LadderReport:
    """Partial integrals of |N(x) - a x| dx/x^2 on a geometric ladder.

    For continuous systems N is reconstructed on the grid and the ratio is
    read in the midpoint-cumulative convention (N_j - dN_j/2), which
    cancels the lattice sampling bias of the node convention.  When ``a``
    is None it is estimated as the window mean of that same ratio (default
    window: [0.78 U, 0.97 U]), i.e. the defect is measured against the
    computed system's own asymptote; this is the honest reading of
    "for some a > 0" at finite resolution, since the grid system's density
    differs from the continuum constant at O(h).
    """
    if a is not None and a <= 0.0:
        raise DomainError("density_defect needs a > 0")
    if U > _U_CAP:
        raise DomainError(f"U beyond {_U_CAP} overflows the counting functions")
    rung_list = list(rungs) if rungs is not None else _default_rungs(U, ratio, num_rungs, 0.0)
    top = float(rung_list[-1])

    if system.is_discrete:
        from .semigroup import enumerate_up_to

        xs = [g.value for g in enumerate_up_to(system, math.exp(top), budget=budget)]
        arr = np.array(xs)
        us = _sample_grid(system, 0.0, top, min(0.01, top / 2048))
        counts = np.searchsorted(arr, np.exp(us) * (1.0 + 1e-12), side="right")
        R = counts * np.exp(-us)
        uu = us
    else:
        n = int(round((top + 2.0) / h)) + 1
        dN = exp_conv(to_grid(system, h, (n - 1) * h)).masses
        N = np.cumsum(dN)
        uu = np.arange(n) * h
        R = (N - 0.5 * dN) * np.exp(-uu)

    if a is None:
        w_lo, w_hi = window if window is not None else (0.78 * top, 0.97 * top)
        mask = (uu >= w_lo) & (uu <= w_hi)
        if not np.any(mask):
            raise DomainError("empty estimation window for the density constant")
        a = float(np.mean(R[mask]))

    integrand = np.abs(R - a)
    cum = np.concatenate([[0.0], np.cumsum(0.5 * (integrand[1:] + integrand[:-1]) * np.diff(uu))])
    partials = [float(np.interp(r, uu, cum)) for r in rung_list]
    inc = np.diff(partials)
    verdict = evidence_verdict(inc, factor=factor, tail=min(tail, max(1, len(inc) - 1)))
    return LadderReport(tuple(rung_list), tuple(partials), verdict, factor, tail)


# ---------------------------------------------------------------------------
# cosine criterion


def cosine_criterion(spec: CosineTermSpec, strengthened: bool = False) -> CriterionReport:
    """Evaluate b_j (1+t_j^2)^(1/2) cos(y_j + arctan t_j) per term.

    Plain variant passes iff every value is < 2; the strengthened variant
    (sufficient for the Moebius-sum decay) takes absolute values first.
    """
    values = []
    for (b, t, y), theta in zip(spec.terms, spec.thetas):
        c = b * math.sqrt(1.0 + t * t) * math.cos(theta)
        values.append(abs(c) if strengthened else c)
    verdict = all(v < 2.0 for v in values)
    return CriterionReport(tuple(values), verdict, strengthened)


# ---------------------------------------------------------------------------
# boundary probe


def boundary_probe(
    system: PrimeSystem,
    spec: BetaTermSpec,
    sigma_range: tuple[float, float] = (1.005, 2.0),
    t_range: tuple[float, float] | None = None,
    steps: tuple[int, int] = (200, 400),
    h: float = 1e-3,
    u_max: float = 40.0,
    keep_samples: bool = False,
    threads: int = 1,
) -> ProbeReport:
    """Sample Q(sigma, t) on a rectangle right of the boundary line.

    Upper kind:  Q = log|zeta| - sum beta_n log|sigma-1 + i(t - t_n)|,
    reported as a sup (evidence for the upper bound's K_T).
    Lower kind:  Q = log|zeta| + log|sigma-1+it|
                     - sum beta_n log|sigma-1 + i(t - t_n)|,
    reported as an inf (evidence for the lower bound's -K_T).

    Sigma samples are log-spaced toward 1, where the singular terms vary
    fastest.  This is sampling evidence only; no bound is certified.
    """
    s_lo, s_hi = sigma_range
    if not (1.0 < s_lo < s_hi <= 2.0):
        raise DomainError("sigma range must sit inside (1, 2]")
    if t_range is None:
        top = spec.terms[-1][0] * 1.25 if spec.terms else 4.0 * spec.eta
        t_range = (spec.eta / 2.0 if spec.kind == "upper" else 1e-3, top)
    t_lo, t_hi = t_range
    n_sig, n_t = steps
    sigmas = 1.0 + np.geomspace(s_lo - 1.0, s_hi - 1.0, n_sig)
    ts = np.linspace(t_lo, t_hi, n_t)

    cache: dict = {}

    def logzeta_abs(sig: float, t: float) -> float:
        return log_zeta_value(system, complex(sig, t), h=h, u_max=u_max, _grid_cache=cache).real

    want_sup = spec.kind == "upper"
    best = -math.inf if want_sup else math.inf
    arg = (sigmas[0], ts[0])
    rows = []

    def q_row(sig: float) -> np.ndarray:
        lz = np.array([logzeta_abs(sig, t) for t in ts])
        q = lz.copy()
        if spec.kind == "lower":
            q += 0.5 * np.log((sig - 1.0) ** 2 + ts**2)
        for t_n, beta_n in spec.terms:
            q -= beta_n * 0.5 * np.log((sig - 1.0) ** 2 + (ts - t_n) ** 2)
        return q

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as ex:
            row_vals = list(ex.map(q_row, sigmas))
    else:
        row_vals = [q_row(sig) for sig in sigmas]

    for sig, q in zip(sigmas, row_vals):
        if keep_samples:
            rows.append(q)
        i = int(np.argmax(q) if want_sup else np.argmin(q))
        v = float(q[i])
        if (want_sup and v > best) or (not want_sup and v < best):
            best = v
            arg = (float(sig), float(ts[i]))

    samples = None
    if keep_samples:
        samples = np.column_stack(
            [
                np.repeat(sigmas, n_t),
                np.tile(ts, n_sig),
                np.concatenate(rows),
            ]
        )
    return ProbeReport(
        kind=spec.kind,
        sigma_range=(float(s_lo), float(s_hi)),
        t_range=(float(t_lo), float(t_hi)),
        steps=(int(n_sig), int(n_t)),
        extremum=best,
        arg_sigma=arg[0],
        arg_t=arg[1],
        samples=samples,
    )


# ---------------------------------------------------------------------------
# Chebyshev functional


def chebyshev_ratio(system: PrimeSystem, X: float, samples: int = 400) -> ChebyshevReport:
    """Sampled sup of Pi(x) log x / x over (2, X].

    Sample points are geometric in log x, enriched with every jump point
    (prime powers for discrete systems, atoms for continuous ones), where
    the right-continuous ratio attains its local maxima.  The growth flag
    reports whether the running maximum still increased in the last decade
    (factor 10 of x).
    """
    if X <= 2.0:
        raise DomainError("chebyshev_ratio needs X > 2")
    top = math.log(X)
    if top > _U_CAP:
        raise DomainError(f"log X beyond {_U_CAP} overflows the counting functions")
    us = set(np.geomspace(math.log(2.0) * 1.01, top, samples).tolist())
    if system.is_discrete:
        logp = system.log_primes()
        m = 1
        while m * logp[0] <= top:
            us.update((m * logp)[m * logp <= top].tolist())
            m += 1
    else:
        for u0, _ in system.atoms(top):
            us.add(float(u0))
    us = np.array(sorted(u for u in us if u > math.log(2.0)))
    pi_vals = Pi_values(system, us)
    ratios = pi_vals * us * np.exp(-us)
    i_max = int(np.argmax(ratios))
    running = np.maximum.accumulate(ratios)
    cut = top - math.log(10.0)
    before = running[np.searchsorted(us, cut, side="right") - 1] if us[0] < cut else 0.0
    growth = bool(running[-1] > before * (1.0 + 1e-9))
    return ChebyshevReport(
        sup=float(ratios[i_max]),
        arg_x=float(math.exp(us[i_max])),
        growth_flag=growth,
        samples=np.column_stack([np.exp(us), ratios]),
    )
