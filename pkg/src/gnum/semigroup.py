"""Exact enumeration of generalized integers for discrete prime systems.

Elements of the free commutative semigroup on the indexed primes are
generated in nondecreasing value order by a priority queue.  Each element
has a unique canonical construction (append primes in nondecreasing index
order), and popping an element pushes at most two candidates: the element
times its own largest prime again, and its parent times the next prime.
So every element is created exactly once, with O(N) heap traffic and no
deduplication.

Identity is the exponent list, never the floating value: systems with
repeated prime values (e.g. {2, 2}) have distinct generators whose
products are distinct elements even when values collide.
"""

from __future__ import annotations

import heapq
import math
import os
from dataclasses import dataclass
from typing import Iterator

from .errors import BudgetExceededError, DomainError, UnsupportedOperationError
from .grid import cumulative, exp_conv
from .systems import PrimeSystem, to_grid

__all__ = [
    "GeneralizedInteger",
    "enumerate_up_to",
    "iter_value_omega_mu",
    "N_count",
    "CountResult",
    "mu_of",
    "lambda_of",
    "default_budget",
]

_DEFAULT_BUDGET = 100_000_000


def default_budget() -> int:
    """Element budget for enumeration; override with env var GNUM_BUDGET."""
    raw = os.environ.get("GNUM_BUDGET")
    if raw is None:
        return _DEFAULT_BUDGET
    try:
        return int(float(raw))
    except ValueError:
        return _DEFAULT_BUDGET


@dataclass(frozen=True)
class GeneralizedInteger:
    """One semigroup element: sparse exponents over prime indices."""

    exponents: tuple[tuple[int, int], ...]
    value: float

    @property
    def omega_total(self) -> int:
        """Omega: number of prime factors counted with multiplicity."""
        return sum(e for _, e in self.exponents)

    @property
    def max_index(self) -> int:
        return self.exponents[-1][0] if self.exponents else -1

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        return "*".join(f"p{i}^{e}" if e > 1 else f"p{i}" for i, e in self.exponents)


def mu_of(g: GeneralizedInteger) -> int:
    """Free-semigroup Moebius mark: 0 on non-squarefree elements, else
    (-1)^(number of distinct prime indices)."""
    for _, e in g.exponents:
        if e >= 2:
            return 0
    return -1 if len(g.exponents) % 2 else 1


def lambda_of(g: GeneralizedInteger) -> int:
    """Liouville mark (-1)^Omega."""
    return -1 if g.omega_total % 2 else 1


def _require_discrete(system: PrimeSystem, op: str):
    if not system.is_discrete:
        raise UnsupportedOperationError(f"{op} requires a discrete system")


def enumerate_up_to(
    system: PrimeSystem, X: float, budget: int | None = None
) -> Iterator[GeneralizedInteger]:
    """Yield every generalized integer with value <= X, value-ordered.

    Ties (genuine for systems like {2, 2}) break by lexicographic exponent
    list, which the heap realizes by comparing candidate tuples.  Raises
    :class:`BudgetExceededError` once more than ``budget`` elements would
    be emitted.
    """
    _require_discrete(system, "enumerate")
    if X < 1.0:
        raise DomainError(f"enumerate requires X >= 1, got {X}")
    cap = default_budget() if budget is None else int(budget)
    primes = system.primes
    K = len(primes)

    yield GeneralizedInteger((), 1.0)
    count = 1
    # heap entries: (value, exponents, idx, parent_value, parent_exponents)
    heap: list[tuple] = []
    if K and primes[0] <= X:
        heap.append((float(primes[0]), ((0, 1),), 0, 1.0, ()))
    while heap:
        value, exps, idx, pval, pexps = heapq.heappop(heap)
        if count >= cap:
            raise BudgetExceededError(cap)
        yield GeneralizedInteger(exps, value)
        count += 1
        # same-prime child: bump the last exponent
        child_val = value * primes[idx]
        if child_val <= X:
            bumped = exps[:-1] + ((idx, exps[-1][1] + 1),)
            heapq.heappush(heap, (child_val, bumped, idx, value, exps))
        # next sibling: parent extended by the next prime index
        j = idx + 1
        if j < K:
            sib_val = pval * primes[j]
            if sib_val <= X:
                heapq.heappush(heap, (sib_val, pexps + ((j, 1),), j, pval, pexps))


def iter_value_omega_mu(
    system: PrimeSystem, X: float, budget: int | None = None
) -> Iterator[tuple[float, int, int]]:
    """Slim enumeration yielding (value, Omega, mu) without exponent lists.

    Same ordering and budget semantics as :func:`enumerate_up_to`; used by
    the summatory ladders where only the marks matter and the element count
    can reach the budget scale.
    """
    _require_discrete(system, "enumerate")
    if X < 1.0:
        raise DomainError(f"enumerate requires X >= 1, got {X}")
    cap = default_budget() if budget is None else int(budget)
    primes = [float(p) for p in system.primes]
    K = len(primes)

    yield (1.0, 0, 1)
    count = 1
    # (value, idx, omega, mu, repeated, parent_value, parent_omega, parent_mu)
    heap: list[tuple] = []
    if K and primes[0] <= X:
        heap.append((primes[0], 0, 1, -1, False, 1.0, 0, 1))
    push = heapq.heappush
    pop = heapq.heappop
    while heap:
        value, idx, om, mu, rep, pval, pom, pmu = pop(heap)
        if count >= cap:
            raise BudgetExceededError(cap)
        yield (value, om, mu)
        count += 1
        child_val = value * primes[idx]
        if child_val <= X:
            push(heap, (child_val, idx, om + 1, 0, True, value, om, mu))
        j = idx + 1
        if j < K:
            sib_val = pval * primes[j]
            if sib_val <= X:
                push(heap, (sib_val, j, pom + 1, -pmu, False, pval, pom, pmu))


@dataclass(frozen=True)
class CountResult:
    """N(x) with provenance: exact enumeration or grid reconstruction."""

    value: float
    method: str
    h: float | None = None
    u_max: float | None = None

    def __float__(self) -> float:
        return float(self.value)


def N_count(
    system: PrimeSystem,
    x: float,
    h: float | None = None,
    u_max: float | None = None,
    budget: int | None = None,
) -> CountResult:
    """N(x): exact for discrete systems, grid-reconstructed for continuous.

    The continuous path computes cumulative(exp_conv(to_grid(dPi))) at
    log x and tags the result with its grid resolution.
    """
    if x < 1.0:
        raise DomainError(f"N requires x >= 1, got {x}")
    if system.is_discrete:
        n = sum(1 for _ in enumerate_up_to(system, x, budget=budget))
        return CountResult(float(n), method="exact")
    if h is None or u_max is None:
        raise DomainError("continuous N(x) needs grid parameters h and u_max")
    if math.log(x) > u_max:
        raise DomainError("log x exceeds u_max; enlarge the grid")
    dN = exp_conv(to_grid(system, h, u_max))
    return CountResult(cumulative(dN, math.log(x)), method="grid", h=h, u_max=u_max)
