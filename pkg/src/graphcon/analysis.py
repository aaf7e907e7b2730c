"""Pointwise contraction ratios and minimal-alpha estimation.

The central quantity is the order-n step ratio at a point x,

    d(T^n x, T^2n x) / d(x, T^n x),

whose supremum over the space is the least admissible contraction
constant. On finite spaces the supremum is an exact rational maximum over
every point; on sequence spaces it is sampled over the anchors and a
prefix of the family, and the verdict is labelled accordingly. Sampling
can refute (a sampled ratio above 1) but never certify an infinite space,
so near-1 sampled suprema are reported as inconclusive rather than as
contractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional

from .maps import MapModel, iterate
from .spaces import FiniteSpace, PointRef, SequenceSpace, SpaceModel, as_fraction

__all__ = [
    "RatioSample",
    "Verdict",
    "ContractionReport",
    "ratio",
    "alpha_exact",
    "alpha_sampled",
    "ratio_limit_probe",
    "ContractionClass",
    "ClassCheck",
    "check_iterated_class",
]

# sampled sup within this margin of 1 is never certified as a contraction
INCONCLUSIVE_MARGIN = 1e-3


@dataclass(frozen=True)
class RatioSample:
    """One evaluation of the order-n ratio at a point.

    ``value`` is None exactly when the point is trivially satisfied
    (x = T^n x, which forces both sides of the inequality to zero).
    """

    point: PointRef
    order: int
    numer: object
    denom: object
    value: object  # Fraction | float | None

    @property
    def trivial(self) -> bool:
        return self.value is None

    @property
    def status(self) -> str:
        return "trivial" if self.trivial else "ratio"


class Verdict(str, Enum):
    CONTRACTION = "Contraction"
    NOT_CONTRACTION = "NotContraction"
    INCONCLUSIVE_SAMPLED = "InconclusiveSampled"


@dataclass(frozen=True)
class ContractionReport:
    """Per-order verdict with the supporting samples.

    ``exact`` is True when every point of a finite space was checked in
    rational arithmetic; then ``alpha_min`` is the true maximum ratio.
    Otherwise ``alpha_min`` is the sampled supremum. ``witness`` is set
    only for NotContraction.
    """

    order: int
    alpha_min: object
    exact: bool
    verdict: Verdict
    witness: Optional[PointRef]
    samples: tuple

    @property
    def trivial_count(self) -> int:
        return sum(1 for s in self.samples if s.trivial)


def ratio(space: SpaceModel, map_: MapModel, n: int, x: PointRef) -> RatioSample:
    """Order-n ratio at x. Exact on finite spaces, float otherwise."""
    if n < 1:
        raise ValueError("order must be >= 1")
    tn = iterate(map_, x, n)
    t2n = iterate(map_, tn, n)
    numer = space.distance(tn, t2n)
    denom = space.distance(x, tn)
    if denom == 0:
        # x = T^n x forces T^n x = T^2n x
        assert numer == 0, f"denominator 0 with numerator {numer} at {x!r}"
        return RatioSample(x, n, numer, denom, None)
    return RatioSample(x, n, numer, denom, numer / denom)


def _report_from_samples(order, samples, exact):
    informative = [s for s in samples if not s.trivial]
    zero = Fraction(0) if exact else 0.0
    alpha_min = max((s.value for s in informative), default=zero)
    if exact:
        over = next((s for s in informative if s.value >= 1), None)
        if over is not None:
            return ContractionReport(
                order, alpha_min, True, Verdict.NOT_CONTRACTION, over.point, tuple(samples)
            )
        return ContractionReport(
            order, alpha_min, True, Verdict.CONTRACTION, None, tuple(samples)
        )
    # Sampled: only a strict exceedance refutes; a sampled ratio of exactly 1
    # (or a sup within the margin) stays inconclusive.
    over = next((s for s in informative if s.value > 1), None)
    if over is not None:
        return ContractionReport(
            order, alpha_min, False, Verdict.NOT_CONTRACTION, over.point, tuple(samples)
        )
    if alpha_min >= 1 - INCONCLUSIVE_MARGIN:
        return ContractionReport(
            order, alpha_min, False, Verdict.INCONCLUSIVE_SAMPLED, None, tuple(samples)
        )
    return ContractionReport(
        order, alpha_min, False, Verdict.CONTRACTION, None, tuple(samples)
    )


def alpha_exact(space: FiniteSpace, map_: MapModel, n: int) -> ContractionReport:
    """Ratio at every point of a finite space, in exact arithmetic."""
    if not isinstance(space, FiniteSpace):
        raise TypeError("alpha_exact needs a finite space")
    samples = [ratio(space, map_, n, x) for x in space.points()]
    return _report_from_samples(n, samples, exact=True)


def alpha_sampled(
    space: SequenceSpace, map_: MapModel, n: int, index_cap: int = 200
) -> ContractionReport:
    """Ratio at a, b and the first ``index_cap`` family points."""
    if not isinstance(space, SequenceSpace):
        raise TypeError("alpha_sampled needs a sequence space")
    if index_cap < 1:
        raise ValueError("index_cap must be >= 1")
    samples = [ratio(space, map_, n, p) for p in space.sample_points(index_cap)]
    return _report_from_samples(n, samples, exact=False)


def ratio_limit_probe(
    space: SequenceSpace,
    map_: MapModel,
    n: int,
    subsequence_selector: Callable[[int], int],
    k: int,
) -> float:
    """Order-n ratio at the k-th selected family point.

    Reproduces limit computations along a chosen index subsequence, e.g.
    ``selector = lambda k: 4 * k - 1``. Trivially satisfied points probe
    as 0.0.
    """
    sample = ratio(space, map_, n, space.x(subsequence_selector(k)))
    return 0.0 if sample.trivial else float(sample.value)


class ContractionClass(str, Enum):
    BANACH = "banach"
    KANNAN = "kannan"
    CHATTERJEA = "chatterjea"


@dataclass(frozen=True)
class ClassCheck:
    """Outcome of an exhaustive pairwise class inequality check for T^n."""

    contraction_class: ContractionClass
    order: int
    alpha: Fraction
    holds: bool
    witness: Optional[tuple]  # (x, y) violating pair
    effective_alpha: Fraction
    tightest: Optional[Fraction]  # max class ratio found over informative pairs


def check_iterated_class(
    space: FiniteSpace,
    map_: MapModel,
    n: int,
    contraction_class: ContractionClass,
    alpha,
) -> ClassCheck:
    """Exhaustively test whether T^n satisfies a classical contraction class.

    For every ordered pair (x, y) the class inequality is checked exactly:

    * banach:     d(T^n x, T^n y) <= alpha * d(x, y)
    * kannan:     d(T^n x, T^n y) <= alpha * (d(x, T^n x) + d(y, T^n y))
    * chatterjea: d(T^n x, T^n y) <= alpha * (d(x, T^n y) + d(y, T^n x))

    When the class holds, the order-n ratio is bounded by the effective
    constant obtained by substituting y = T^n x: alpha itself for banach,
    alpha / (1 - alpha) for the other two (below 1 only when alpha < 1/2).
    That bound against ``alpha_exact`` is asserted before returning.
    """
    if not isinstance(space, FiniteSpace):
        raise TypeError("check_iterated_class needs a finite space")
    alpha = as_fraction(alpha)
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")
    cls = ContractionClass(contraction_class)
    if cls is ContractionClass.BANACH:
        effective = alpha
    else:
        effective = alpha / (1 - alpha)

    image = {x: iterate(map_, x, n) for x in space.points()}
    d = space.distance
    witness = None
    tightest: Optional[Fraction] = None
    for x in space.points():
        for y in space.points():
            lhs = d(image[x], image[y])
            if cls is ContractionClass.BANACH:
                rhs = d(x, y)
            elif cls is ContractionClass.KANNAN:
                rhs = d(x, image[x]) + d(y, image[y])
            else:
                rhs = d(x, image[y]) + d(y, image[x])
            if lhs > alpha * rhs and witness is None:
                witness = (x, y)
            if rhs > 0:
                q = lhs / rhs
                if tightest is None or q > tightest:
                    tightest = q
    holds = witness is None
    if holds:
        bound = alpha_exact(space, map_, n).alpha_min
        assert bound <= effective, (
            f"order-{n} ratio {bound} exceeds effective constant {effective}"
        )
    return ClassCheck(cls, n, alpha, holds, witness, effective, tightest)
