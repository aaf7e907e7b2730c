"""Metric-space models.

Two kinds of space are supported:

* ``FiniteSpace``: an explicit point set with an exact rational distance
  matrix. All oracle-grade checking happens here, so entries are
  ``fractions.Fraction`` and every comparison is exact.
* ``SequenceSpace``: a countable subset of the real line built from one of
  two generating families (geometric approach points clustered below ``a``
  and above ``b``), with the usual absolute-difference distance in binary
  floating point.

Both models are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from .errors import (
    BadParamsError,
    IdentityViolationError,
    InvalidPointError,
    NegativeEntryError,
    NonSquareError,
    SymmetryViolationError,
    TriangleViolationError,
)

__all__ = [
    "as_fraction",
    "validate_finite",
    "distance",
    "FiniteSpace",
    "SequenceFamily",
    "SeqPoint",
    "SequenceSpace",
    "SpaceModel",
    "PointRef",
]

DEFAULT_INDEX_CAP = 10**6


def as_fraction(value) -> Fraction:
    """Parse a distance entry into an exact rational.

    Accepts ``Fraction``, ``int``, strings of the form ``"p/q"`` or decimal
    strings like ``"0.25"``, and floats (converted through their shortest
    decimal representation, so ``0.1`` means 1/10, not the binary float).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not distances")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(str(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational distance")


def validate_finite(dist: Sequence[Sequence]) -> None:
    """Check the metric axioms on a square matrix, exactly.

    Raises the error for the first violated axiom, scanning axioms in the
    order: squareness, non-negativity, identity (zero diagonal, positive
    off-diagonal), symmetry, triangle inequality. The raised error carries
    the witnessing indices; ``TriangleViolationError`` indices ``(i, j, k)``
    mean ``d(i,j) > d(i,k) + d(k,j)``.
    """
    n = len(dist)
    for i, row in enumerate(dist):
        if len(row) != n:
            raise NonSquareError(
                f"row {i} has {len(row)} entries, expected {n}", (i,)
            )
    for i in range(n):
        for j in range(n):
            if dist[i][j] < 0:
                raise NegativeEntryError(
                    f"d({i},{j}) = {dist[i][j]} is negative", (i, j)
                )
    for i in range(n):
        if dist[i][i] != 0:
            raise IdentityViolationError(
                f"d({i},{i}) = {dist[i][i]}, diagonal must be zero", (i, i)
            )
        for j in range(n):
            if i != j and dist[i][j] == 0:
                raise IdentityViolationError(
                    f"d({i},{j}) = 0 for distinct points", (i, j)
                )
    for i in range(n):
        for j in range(i + 1, n):
            if dist[i][j] != dist[j][i]:
                raise SymmetryViolationError(
                    f"d({i},{j}) = {dist[i][j]} but d({j},{i}) = {dist[j][i]}",
                    (i, j),
                )
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if dist[i][j] > dist[i][k] + dist[k][j]:
                    raise TriangleViolationError(
                        f"d({i},{j}) = {dist[i][j]} exceeds "
                        f"d({i},{k}) + d({k},{j}) = {dist[i][k] + dist[k][j]}",
                        (i, j, k),
                    )


@dataclass(frozen=True)
class FiniteSpace:
    """Finite metric space given by labels and an exact distance matrix.

    Points are referenced by integer index into ``labels``. The matrix is
    validated on construction; an invalid matrix never yields a space.
    """

    labels: tuple
    dist: tuple

    def __post_init__(self):
        if len(self.labels) != len(self.dist):
            raise NonSquareError(
                f"{len(self.labels)} labels but {len(self.dist)} rows", ()
            )
        if len(set(self.labels)) != len(self.labels):
            raise BadParamsError("point labels must be distinct")
        validate_finite(self.dist)

    @classmethod
    def from_rows(cls, labels: Iterable[str], rows: Iterable[Iterable]) -> "FiniteSpace":
        """Build a space from any nested sequence of rational-like entries."""
        mat = tuple(tuple(as_fraction(v) for v in row) for row in rows)
        return cls(tuple(labels), mat)

    @property
    def size(self) -> int:
        return len(self.labels)

    def points(self) -> Iterator[int]:
        return iter(range(self.size))

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InvalidPointError(f"no point labelled {label!r}") from None

    def check_point(self, x) -> int:
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < self.size:
            raise InvalidPointError(f"{x!r} is not a point index of this space")
        return x

    def distance(self, x, y) -> Fraction:
        return self.dist[self.check_point(x)][self.check_point(y)]


class SequenceFamily(str, Enum):
    """Generating formulas for the two built-in real-line point families.

    Values double as the instance-file / gallery wire ids.
    """

    # two interleaved strands: odd indices approach a from below with
    # halving gaps, even indices approach b from above
    TWO_PHASE = "example_2_3"
    # four interleaved strands: halving gaps below a / above b, then
    # thirding gaps below a / above b, repeating with period 4
    FOUR_PHASE = "example_2_4"


def _recip_pow(base: int, k: int) -> float:
    # int/int true division underflows to 0.0 instead of overflowing
    if base == 2:
        return math.ldexp(1.0, -k)
    return 1 / (base**k)


@dataclass(frozen=True)
class SeqPoint:
    """A point of a ``SequenceSpace``: one of the anchors a, b or a family
    member x_n. ``coord`` is fixed at creation by the owning space."""

    role: str  # "a" | "b" | "x"
    n: int
    coord: float

    @property
    def name(self) -> str:
        return self.role if self.role in ("a", "b") else f"x{self.n}"

    def __repr__(self) -> str:
        return f"SeqPoint({self.name}={self.coord})"


@dataclass(frozen=True)
class SequenceSpace:
    """Countable real-line space {a, b, x_1, x_2, ...} for one family.

    Only the generating formulas are stored; points materialize on demand
    through :meth:`x`, up to ``max_index``. The anchors a and b are exact
    members (they are the accumulation points of the family).
    """

    family: SequenceFamily
    a: float
    b: float
    max_index: int = DEFAULT_INDEX_CAP

    def __post_init__(self):
        if not self.a < self.b:
            raise BadParamsError(f"need a < b, got a={self.a}, b={self.b}")
        if self.max_index < 1:
            raise BadParamsError("max_index must be positive")

    # -- point constructors -------------------------------------------------

    @property
    def a_point(self) -> SeqPoint:
        return SeqPoint("a", 0, self.a)

    @property
    def b_point(self) -> SeqPoint:
        return SeqPoint("b", 0, self.b)

    def x(self, n: int) -> SeqPoint:
        """The n-th family point (1-based)."""
        if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= self.max_index:
            raise InvalidPointError(
                f"index {n!r} outside 1..{self.max_index}"
            )
        return SeqPoint("x", n, self._coord(n))

    def _x_side_offset(self, n: int):
        """Family point n as (below_a, offset from its anchor)."""
        if self.family is SequenceFamily.TWO_PHASE:
            return n % 2 == 1, _recip_pow(2, n)
        r = n % 4
        if r == 1:
            return True, _recip_pow(2, (n + 3) // 4)
        if r == 2:
            return False, _recip_pow(2, (n + 2) // 4)
        if r == 3:
            return True, _recip_pow(3, (n + 1) // 4)
        return False, _recip_pow(3, n // 4)

    def _coord(self, n: int) -> float:
        below, off = self._x_side_offset(n)
        return self.a - off if below else self.b + off

    # -- membership and distance --------------------------------------------

    def check_point(self, p) -> SeqPoint:
        if not isinstance(p, SeqPoint):
            raise InvalidPointError(f"{p!r} is not a point of a sequence space")
        if p.role == "a":
            expect = self.a
        elif p.role == "b":
            expect = self.b
        elif p.role == "x":
            if not 1 <= p.n <= self.max_index:
                raise InvalidPointError(f"index {p.n} outside 1..{self.max_index}")
            expect = self._coord(p.n)
        else:
            raise InvalidPointError(f"unknown point role {p.role!r}")
        if p.coord != expect:
            raise InvalidPointError(
                f"{p!r} does not belong to this space (expected coord {expect})"
            )
        return p

    def _side_offset(self, p: SeqPoint):
        """Locate p as (below_a, offset): a - offset or b + offset."""
        if p.role == "a":
            return True, 0.0
        if p.role == "b":
            return False, 0.0
        return self._x_side_offset(p.n)

    def distance(self, x, y) -> float:
        """Absolute coordinate difference, evaluated from the generating
        offsets so that nearby points around the anchors do not cancel."""
        below_x, off_x = self._side_offset(self.check_point(x))
        below_y, off_y = self._side_offset(self.check_point(y))
        if below_x == below_y:
            return abs(off_x - off_y)
        return (self.b - self.a) + off_x + off_y

    def point_named(self, name: str) -> SeqPoint:
        """Resolve ``"a"``, ``"b"``, ``"x12"`` or ``"x_12"``."""
        s = name.strip()
        if s == "a":
            return self.a_point
        if s == "b":
            return self.b_point
        body = s[1:].lstrip("_") if s[:1] == "x" else ""
        if body.isdigit():
            return self.x(int(body))
        raise InvalidPointError(f"cannot parse point name {name!r}")

    def sample_points(self, index_cap: int):
        """a, b and the first ``index_cap`` family points."""
        yield self.a_point
        yield self.b_point
        for n in range(1, index_cap + 1):
            yield self.x(n)


SpaceModel = Union[FiniteSpace, SequenceSpace]
PointRef = Union[int, SeqPoint]


def distance(space: SpaceModel, x: PointRef, y: PointRef):
    """Distance in ``space``; exact Fraction on finite spaces, float otherwise."""
    return space.distance(x, y)
