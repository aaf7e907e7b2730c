"""Self-map models and orbit bookkeeping.

A map is either a full lookup table over a finite space or the shift map
on a sequence space (each family point advances to the next index, the two
anchors swap). Iteration is by repeated application; the step counts in
this problem domain are small.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import BadParamsError
from .spaces import FiniteSpace, PointRef, SeqPoint, SequenceSpace

__all__ = [
    "TableMap",
    "ShiftMap",
    "MapModel",
    "OrbitTrace",
    "iterate",
    "orbit",
    "prime_period",
]

PERIOD_EQ_TOL = 1e-9  # coordinate slack for period detection on float spaces


@dataclass(frozen=True)
class TableMap:
    """Total self-map of a finite space, one image index per point."""

    space: FiniteSpace
    images: tuple

    def __post_init__(self):
        if len(self.images) != self.space.size:
            raise BadParamsError(
                f"map table has {len(self.images)} images for "
                f"{self.space.size} points"
            )
        for i, img in enumerate(self.images):
            if not isinstance(img, int) or not 0 <= img < self.space.size:
                raise BadParamsError(f"image of point {i} is {img!r}, not a point")

    def apply(self, x: int) -> int:
        return self.images[self.space.check_point(x)]


@dataclass(frozen=True)
class ShiftMap:
    """x_n -> x_{n+1}, a -> b, b -> a on a sequence space."""

    space: SequenceSpace

    def apply(self, p: SeqPoint) -> SeqPoint:
        p = self.space.check_point(p)
        if p.role == "a":
            return self.space.b_point
        if p.role == "b":
            return self.space.a_point
        return self.space.x(p.n + 1)


MapModel = Union[TableMap, ShiftMap]


@dataclass(frozen=True)
class OrbitTrace:
    """Recorded forward orbit with the distance of each step."""

    start: PointRef
    points: tuple
    step_dists: tuple


def iterate(map_: MapModel, x: PointRef, k: int) -> PointRef:
    """k-fold application; k = 0 returns x unchanged."""
    if k < 0:
        raise ValueError("iteration count must be >= 0")
    y = map_.space.check_point(x)
    for _ in range(k):
        y = map_.apply(y)
    return y


def orbit(map_: MapModel, x: PointRef, length: int) -> OrbitTrace:
    """First ``length`` orbit points starting at x, with step distances."""
    if length < 1:
        raise ValueError("orbit length must be >= 1")
    pts = [map_.space.check_point(x)]
    for _ in range(length - 1):
        pts.append(map_.apply(pts[-1]))
    dists = tuple(
        map_.space.distance(pts[i], pts[i + 1]) for i in range(length - 1)
    )
    return OrbitTrace(x, tuple(pts), dists)


def points_equal(map_: MapModel, x: PointRef, y: PointRef, tol: float = PERIOD_EQ_TOL) -> bool:
    """Exact identity on finite spaces, coordinate residual on float spaces."""
    if isinstance(map_.space, FiniteSpace):
        return x == y
    return map_.space.distance(x, y) <= tol


def prime_period(
    map_: MapModel, x: PointRef, max_p: int, tol: float = PERIOD_EQ_TOL
) -> int | None:
    """Least p <= max_p with T^p x = x, or None if there is none.

    On sequence spaces the return test uses a coordinate tolerance, which
    only guards rounding of the anchor parameters; the shift map returns
    to a and b exactly.
    """
    if max_p < 1:
        raise ValueError("max_p must be >= 1")
    y = map_.space.check_point(x)
    for p in range(1, max_p + 1):
        y = map_.apply(y)
        if points_equal(map_, x, y, tol):
            return p
    return None
