"""Planar geometry core: points, rank orders, rectangles, perimeters.

Everything here is immutable and pure. Coordinates are doubles; when every
input coordinate is an integer value all rectangle perimeters and cycle
lengths reduce to sums/differences of coordinates, which are exactly
representable, so exact equality comparisons are safe (``exact_mode``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"invalid coordinate: ({self.x}, {self.y})")


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle; degenerate (zero width/height) is allowed."""

    xmin: float
    xmax: float
    ymin: float
    ymax: float

    def __post_init__(self):
        if not (self.xmin <= self.xmax and self.ymin <= self.ymax):
            raise ValueError(f"invalid rect: {self}")

    @property
    def width(self) -> float:
        return self.xmax - self.xmin

    @property
    def height(self) -> float:
        return self.ymax - self.ymin

    def contains_point(self, p: Point, strict: bool = False) -> bool:
        if strict:
            return self.xmin < p.x < self.xmax and self.ymin < p.y < self.ymax
        return self.xmin <= p.x <= self.xmax and self.ymin <= p.y <= self.ymax

    def contains_rect(self, other: "Rect") -> bool:
        """Closed containment: boundaries may coincide."""
        return (self.xmin <= other.xmin and other.xmax <= self.xmax
                and self.ymin <= other.ymin and other.ymax <= self.ymax)

    def interior_intersects(self, other: "Rect") -> bool:
        """True iff the open interiors overlap; degenerate interiors are empty."""
        return (max(self.xmin, other.xmin) < min(self.xmax, other.xmax)
                and max(self.ymin, other.ymin) < min(self.ymax, other.ymax))


@dataclass(frozen=True)
class PointSet:
    """Punctures with precomputed deterministic rank orders.

    x_rank sorts by (x, y, input index), y_rank by (y, x, input index);
    x_pos/y_pos are the inverse permutations (position of each point in the
    respective order). The total tie-break makes every solver reproducible.
    """

    points: tuple[Point, ...]
    x_rank: tuple[int, ...]
    y_rank: tuple[int, ...]
    x_pos: tuple[int, ...]
    y_pos: tuple[int, ...]
    exact_mode: bool

    @property
    def n(self) -> int:
        return len(self.points)

    def sorted_xs(self) -> list[float]:
        """x-coordinates in x_rank order (nondecreasing)."""
        return [self.points[i].x for i in self.x_rank]

    def sorted_ys(self) -> list[float]:
        return [self.points[i].y for i in self.y_rank]


def _as_point(p) -> Point:
    if isinstance(p, Point):
        return p
    x, y = p
    return Point(float(x), float(y))


def build_point_set(points: Iterable) -> PointSet:
    """Build a PointSet from Points or (x, y) pairs.

    Raises ValueError on an empty input or non-finite coordinates.
    Duplicate points are permitted.
    """
    pts = tuple(_as_point(p) for p in points)
    if not pts:
        raise ValueError("empty instance: need at least one point")
    idx = range(len(pts))
    x_rank = tuple(sorted(idx, key=lambda i: (pts[i].x, pts[i].y, i)))
    y_rank = tuple(sorted(idx, key=lambda i: (pts[i].y, pts[i].x, i)))
    x_pos = [0] * len(pts)
    y_pos = [0] * len(pts)
    for pos, i in enumerate(x_rank):
        x_pos[i] = pos
    for pos, i in enumerate(y_rank):
        y_pos[i] = pos
    exact = all(float(p.x).is_integer() and float(p.y).is_integer() for p in pts)
    return PointSet(pts, x_rank, y_rank, tuple(x_pos), tuple(y_pos), exact)


def bounding_rect(ps: PointSet, subset: Iterable[int]) -> Rect:
    """Tight axis-aligned bounding rectangle of a nonempty index subset."""
    idx = list(subset)
    if not idx:
        raise ValueError("empty subset")
    xs = [ps.points[i].x for i in idx]
    ys = [ps.points[i].y for i in idx]
    return Rect(min(xs), max(xs), min(ys), max(ys))


def rect_perimeter(r: Rect) -> float:
    return 2.0 * (r.xmax - r.xmin) + 2.0 * (r.ymax - r.ymin)


def euclid_dist(p: Point, q: Point) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def points_bbox(points: Sequence[Point]) -> Rect:
    """Bounding rectangle of a plain point sequence (rendering helper)."""
    if not points:
        raise ValueError("empty subset")
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return Rect(min(xs), max(xs), min(ys), max(ys))
