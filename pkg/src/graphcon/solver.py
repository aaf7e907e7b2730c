"""Periodic-point solver by residue-subsequence iteration.

Given an order n, the forward orbit of a start point splits into n
subsequences by index residue, each advancing by T^n from its own seed.
When T contracts at order n the step distances inside each subsequence
decay geometrically, so each subsequence is Cauchy and its limit can be
bracketed by a geometric tail bound. The n limits chain cyclically under
T, and matching them against cyclic shifts of divisor length recovers the
period of the limit cycle, which always divides n.

Stopping rule
-------------
The solver does not know the true contraction constant. Each subsequence
tracks an empirical ratio estimate (max of its last three step ratios,
clamped below 1) and stops once the geometric tail bound computed from it
falls under the requested tolerance, or once the subsequence becomes
exactly constant. On exact-arithmetic (finite) spaces only the constancy
exit is used, so finite results carry zero residual by construction. A
step-ratio pattern at or above 1 keeps the bound large and eventually
surfaces as NotConvergedError.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

from .errors import (
    ConsistencyViolationError,
    GammaOutOfRangeError,
    NotConvergedError,
    ToleranceAmbiguityError,
)
from .maps import MapModel, iterate
from .spaces import FiniteSpace, PointRef, SpaceModel

__all__ = [
    "cauchy_tail_bound",
    "TailBoundStopper",
    "SubsequenceState",
    "advance_subsequences",
    "LimitCase",
    "classify_limits",
    "PeriodicSolution",
    "solve",
    "divisors",
]

DEFAULT_TOL = 1e-10
DEFAULT_CLUSTER_TOL = 1e-7  # 10^3 * tol: clustering must dominate truncation
DEFAULT_MAX_OUTER = 100_000
GAMMA_CAP = 1 - 1e-9
RATIO_WINDOW = 3


def divisors(n: int) -> List[int]:
    """Positive divisors of n in increasing order."""
    return [q for q in range(1, n + 1) if n % q == 0]


def cauchy_tail_bound(d1, gamma, k: int):
    """Upper bound on d(x_k, x_{k+m}) for every m >= 1.

    Valid for any sequence whose consecutive step distances satisfy
    d(x_{j+1}, x_j) <= gamma * d(x_j, x_{j-1}) with first step d1:
    the whole tail beyond term k is dominated by the geometric series
    gamma^(k-1) * d1 / (1 - gamma).
    """
    if gamma < 0 or gamma >= 1:
        raise GammaOutOfRangeError(f"gamma must lie in [0, 1), got {gamma}")
    if d1 < 0:
        raise ValueError("first step distance cannot be negative")
    if k < 1:
        raise ValueError("term index k must be >= 1")
    return gamma ** (k - 1) * d1 / (1 - gamma)


class TailBoundStopper:
    """Convergence detector for one iteratively advanced subsequence.

    Feed it consecutive step distances with :meth:`observe`; it reports
    convergence once the step is exactly zero (the sequence is constant
    from there on, since each term is a function of the previous one) or,
    when ``use_bound`` is set, once the empirical geometric tail bound
    drops below ``tol``.
    """

    def __init__(self, tol: float, use_bound: bool = True):
        if tol <= 0:
            raise ValueError("tolerance must be positive")
        self.tol = tol
        self.use_bound = use_bound
        self.steps: list = []
        self.gamma_hat = None
        self.bound = None
        self.converged = False
        self.constant = False

    def observe(self, step) -> bool:
        """Record d(t_k, t_{k+1}); True once convergence is established.

        Steps keep being recorded after convergence (callers may advance
        further in lockstep with slower neighbours); detection only runs
        until the first True.
        """
        self.steps.append(step)
        if self.converged:
            return True
        if step == 0:
            self.converged = True
            self.constant = True
            if self.gamma_hat is None:
                self.gamma_hat = 0.0
            return True
        if not self.use_bound or len(self.steps) < 2:
            return False
        recent = self.steps[-(RATIO_WINDOW + 1):]
        # every recorded step here is positive: a zero step exits above
        g = max(recent[i] / recent[i - 1] for i in range(1, len(recent)))
        if g > GAMMA_CAP:
            g = GAMMA_CAP
        self.gamma_hat = g
        self.bound = cauchy_tail_bound(self.steps[0], g, len(self.steps) + 1)
        if self.bound < self.tol:
            self.converged = True
        return self.converged


@dataclass
class SubsequenceState:
    """Progress record of one residue subsequence (residue is 1-based)."""

    residue: int
    terms: list
    steps: list
    gamma_hat: float
    converged: bool
    limit: Optional[PointRef]

    @property
    def last_step(self):
        return self.steps[-1] if self.steps else None


def advance_subsequences(
    space: SpaceModel,
    map_: MapModel,
    n: int,
    start: PointRef,
    max_outer: int = DEFAULT_MAX_OUTER,
    tol: float = DEFAULT_TOL,
) -> List[SubsequenceState]:
    """Advance all n residue subsequences of the orbit of ``start``.

    Subsequence i seeds at T^(i-1) start and advances by T^n. The strands
    move in lockstep: every outer iteration extends each of them by one
    term, and the loop runs until every strand's stopping rule has fired.
    Sharing the horizon keeps all final terms on one orbit prefix, so
    applying T to the i-th final term lands exactly on the (i+1)-th (and
    the n-th wraps to one step past the first), which is what the solver's
    consistency checks rely on. Raises NotConvergedError if some strand
    has not converged after ``max_outer`` terms.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    if max_outer < 2:
        raise ValueError("max_outer must allow at least one advance")
    seeds = [map_.space.check_point(start)]
    for _ in range(n - 1):
        seeds.append(map_.apply(seeds[-1]))
    use_bound = not isinstance(space, FiniteSpace)
    stoppers = [TailBoundStopper(tol, use_bound=use_bound) for _ in range(n)]
    terms = [[seed] for seed in seeds]
    current = list(seeds)
    pending = set(range(n))
    for _ in range(max_outer - 1):
        for i in range(n):
            nxt = iterate(map_, current[i], n)
            step = space.distance(current[i], nxt)
            terms[i].append(nxt)
            current[i] = nxt
            if stoppers[i].observe(step):
                pending.discard(i)
        if not pending:
            break
    if pending:
        i = min(pending)
        st = stoppers[i]
        raise NotConvergedError(
            i + 1,
            st.steps[-1] if st.steps else None,
            st.gamma_hat if st.gamma_hat is not None else 0.0,
        )
    return [
        SubsequenceState(
            residue=i + 1,
            terms=terms[i],
            steps=stoppers[i].steps,
            gamma_hat=float(
                stoppers[i].gamma_hat if stoppers[i].gamma_hat is not None else 0.0
            ),
            converged=True,
            limit=terms[i][-1],
        )
        for i in range(n)
    ]


class LimitCase(str, Enum):
    """Shape of the n subsequence limits.

    A: all n limits pairwise distinct (period equals the order).
    B: all limits coincide (fixed point).
    D: the limits repeat with a proper divisor period.

    A proper repeat of two consecutive limits with a later distinct one
    cannot occur for a continuous map (it would make the repeated limit
    both fixed and not fixed); numerically it surfaces as
    ToleranceAmbiguityError.
    """

    A_ALL_DISTINCT = "A"
    B_ALL_EQUAL = "B"
    D_PERIODIC_PATTERN = "D"


def classify_limits(
    space: SpaceModel, limits, cluster_tol: float = DEFAULT_CLUSTER_TOL
):
    """Match the limit list against cyclic shifts of divisor length.

    Returns ``(case, p)`` where p is the smallest divisor of n whose shift
    maps the limit list onto itself within ``cluster_tol``. The first p
    limits must then be pairwise separated by more than ``cluster_tol``;
    any inconsistency raises ToleranceAmbiguityError.
    """
    n = len(limits)
    if n < 1:
        raise ValueError("need at least one limit")
    period = None
    for q in divisors(n):
        if all(
            space.distance(limits[i], limits[(i + q) % n]) <= cluster_tol
            for i in range(n)
        ):
            period = q
            break
    if period is None:
        raise ToleranceAmbiguityError(
            f"no divisor of {n} shifts the limits onto themselves "
            f"within {cluster_tol}"
        )
    for i in range(period):
        for j in range(i + 1, period):
            if space.distance(limits[i], limits[j]) <= cluster_tol:
                raise ToleranceAmbiguityError(
                    f"limits {i} and {j} coincide within {cluster_tol} "
                    f"although the shift test chose period {period}"
                )
    if period == 1:
        case = LimitCase.B_ALL_EQUAL
    elif period == n:
        case = LimitCase.A_ALL_DISTINCT
    else:
        case = LimitCase.D_PERIODIC_PATTERN
    return case, period


@dataclass(frozen=True)
class PeriodicSolution:
    """Verified output of :func:`solve`. ``period`` always divides ``order``."""

    order: int
    limits: tuple
    case: LimitCase
    period: int
    representative: PointRef
    residual: float
    cycle: tuple
    iterations_used: int


def solve(
    space: SpaceModel,
    map_: MapModel,
    n: int,
    start: PointRef,
    tol: float = DEFAULT_TOL,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    max_outer: int = DEFAULT_MAX_OUTER,
) -> PeriodicSolution:
    """Find a periodic point by advancing and classifying the n subsequences.

    After classification the solution is verified: consecutive limits must
    chain under T within the residual tolerance (set equal to
    ``cluster_tol``), the representative must return to itself after p
    steps, and no proper divisor below p may already bring it back.
    """
    states = advance_subsequences(space, map_, n, start, max_outer=max_outer, tol=tol)
    limits = [st.limit for st in states]
    case, period = classify_limits(space, limits, cluster_tol=cluster_tol)
    residual_tol = cluster_tol

    for i in range(n):
        gap = space.distance(map_.apply(limits[i]), limits[(i + 1) % n])
        if gap > residual_tol:
            raise ConsistencyViolationError(
                f"T(limit {i + 1}) misses limit {(i + 1) % n + 1} by {gap}; "
                "the map is not continuous at the limits or the tolerances "
                "are inconsistent"
            )
    representative = limits[0]
    residual = space.distance(iterate(map_, representative, period), representative)
    if residual > residual_tol:
        raise ConsistencyViolationError(
            f"representative fails to return after {period} steps "
            f"(residual {residual})"
        )
    for q in divisors(n):
        if q >= period:
            break
        if space.distance(iterate(map_, representative, q), representative) <= residual_tol:
            raise ToleranceAmbiguityError(
                f"representative already returns after {q} steps although "
                f"classification chose period {period}"
            )
    iterations = (n - 1) + sum(n * (len(st.terms) - 1) for st in states)
    return PeriodicSolution(
        order=n,
        limits=tuple(limits),
        case=case,
        period=period,
        representative=representative,
        residual=float(residual),
        cycle=tuple(limits[:period]),
        iterations_used=iterations,
    )
