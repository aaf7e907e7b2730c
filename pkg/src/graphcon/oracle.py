"""Exhaustive ground truth on finite spaces.

Everything here is brute force in exact arithmetic: periodic points are
found by literally applying the map, random instances are built so the
metric axioms hold by construction, and solver outputs are compared
point-for-point against the enumeration.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .analysis import Verdict, alpha_exact
from .maps import MapModel, TableMap
from .solver import PeriodicSolution, divisors
from .spaces import FiniteSpace

__all__ = [
    "OracleResult",
    "enumerate_periodic",
    "random_instance",
    "CrosscheckResult",
    "crosscheck",
]


@dataclass(frozen=True)
class OracleResult:
    periodic: tuple  # ((point, prime_period), ...)
    orbits: tuple  # disjoint cycles, each a tuple of points
    divisor_ok: bool

    def period_of(self, point) -> Optional[int]:
        for p, per in self.periodic:
            if p == point:
                return per
        return None


def enumerate_periodic(
    space: FiniteSpace, map_: MapModel, n: int, full_scan: bool = False
) -> OracleResult:
    """All periodic points whose exact period is admissible for order n.

    Default mode tests only divisors of n (the periods the theory allows
    on a contraction of order n); the minimal matching divisor is then the
    prime period. ``full_scan`` scans every period up to |X| instead,
    which can exhibit periods that do not divide n on non-contractions.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    candidates = set(range(1, space.size + 1)) if full_scan else set(divisors(n))
    horizon = max(candidates)
    periodic = []
    for x in space.points():
        y = x
        for p in range(1, horizon + 1):
            y = map_.apply(y)
            if y == x and p in candidates:
                periodic.append((x, p))
                break

    seen = set()
    orbits = []
    for x, p in periodic:
        if x in seen:
            continue
        cyc = [x]
        for _ in range(p - 1):
            cyc.append(map_.apply(cyc[-1]))
        seen.update(cyc)
        orbits.append(tuple(cyc))

    all_divide = all(n % p == 0 for _, p in periodic)
    is_contraction = alpha_exact(space, map_, n).verdict is Verdict.CONTRACTION
    nonempty_when_needed = bool(periodic) or not is_contraction
    return OracleResult(tuple(periodic), tuple(orbits), all_divide and nonempty_when_needed)


def random_instance(seed: int, max_points: int) -> Tuple[FiniteSpace, TableMap]:
    """Seeded random finite space with a random self-map.

    Random symmetric positive edge weights are completed to a metric by
    all-pairs shortest paths in exact rationals, so validation always
    passes. Same seed, same instance.
    """
    if not 2 <= max_points <= 12:
        raise ValueError("max_points must be between 2 and 12")
    rng = random.Random(seed)
    size = rng.randint(2, max_points)
    dist = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            w = Fraction(rng.randint(1, 12), rng.randint(1, 4))
            dist[i][j] = dist[j][i] = w
    for k in range(size):
        for i in range(size):
            dik = dist[i][k]
            for j in range(size):
                through = dik + dist[k][j]
                if through < dist[i][j]:
                    dist[i][j] = through
    labels = tuple(f"x{i + 1}" for i in range(size))
    space = FiniteSpace(labels, tuple(tuple(row) for row in dist))
    images = tuple(rng.randrange(size) for _ in range(size))
    return space, TableMap(space, images)


@dataclass(frozen=True)
class CrosscheckResult:
    agree: bool
    detail: str

    @property
    def label(self) -> str:
        return "Agree" if self.agree else "Disagree"


def crosscheck(
    space: FiniteSpace, map_: MapModel, n: int, solution: PeriodicSolution
) -> CrosscheckResult:
    """Compare a solver solution against the exhaustive enumeration.

    Agreement means: the representative is enumerated as periodic with the
    same prime period, and the solver cycle equals the enumerated orbit of
    the representative as a set.
    """
    result = enumerate_periodic(space, map_, n)
    rep = solution.representative
    oracle_period = result.period_of(rep)
    if oracle_period is None:
        return CrosscheckResult(
            False, f"representative {rep} is not periodic for order {n}"
        )
    if oracle_period != solution.period:
        return CrosscheckResult(
            False,
            f"period mismatch at {rep}: solver {solution.period}, "
            f"oracle {oracle_period}",
        )
    orbit_set = next(set(c) for c in result.orbits if rep in c)
    if set(solution.cycle) != orbit_set:
        return CrosscheckResult(
            False,
            f"cycle mismatch at {rep}: solver {sorted(solution.cycle)}, "
            f"oracle {sorted(orbit_set)}",
        )
    return CrosscheckResult(True, "representative, period and cycle all match")
