"""Exact geometric predicates and combinatorial crossing oracles.

Everything here is integer arithmetic on immutable values: Python ints never
overflow, so every predicate is exact regardless of coordinate size.  The
combinatorial oracles (`convex_cross`, `wheel_cross`) decide crossings from
vertex indices alone, which is what makes verification on convex and wheel
configurations independent of any coordinate approximation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from itertools import combinations
from typing import Callable, Optional, Sequence, Tuple

from .errors import (
    CollinearOverlap,
    ConfigMismatch,
    DegenerateInput,
    InvalidN,
    SharedEndpoint,
)

Edge = Tuple[int, int]
CrossingOracle = Callable[[Edge, Edge], bool]


class Orientation(IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


class Side(IntEnum):
    RIGHT = -1
    ON = 0
    LEFT = 1


class Config(Enum):
    CONVEX = "convex"
    WHEEL = "wheel"
    GENERAL = "general"


@dataclass(frozen=True)
class Point:
    x: int
    y: int

    def __post_init__(self):
        if not isinstance(self.x, int) or not isinstance(self.y, int):
            raise TypeError("coordinates must be integers")


@dataclass(frozen=True)
class OrientedLine:
    """Line through `anchor` with integer `direction`.

    `side_of_line` classifies the plane by the sign of the cross product
    direction x (p - anchor); negating the direction swaps LEFT and RIGHT.
    """

    anchor: Point
    direction: Tuple[int, int]

    def __post_init__(self):
        if self.direction == (0, 0):
            raise ValueError("direction must be nonzero")


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    """Sign of the determinant of (q - p, r - p)."""
    det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if det > 0:
        return Orientation.CCW
    if det < 0:
        return Orientation.CW
    return Orientation.COLLINEAR


def side_of_line(line: OrientedLine, p: Point) -> Side:
    dx, dy = line.direction
    det = dx * (p.y - line.anchor.y) - dy * (p.x - line.anchor.x)
    if det > 0:
        return Side.LEFT
    if det < 0:
        return Side.RIGHT
    return Side.ON


def edge(a: int, b: int) -> Edge:
    """Canonical unordered vertex pair."""
    if a == b:
        raise ValueError("an edge needs two distinct vertices")
    return (a, b) if a < b else (b, a)


def segments_properly_cross(e1: Tuple[Point, Point], e2: Tuple[Point, Point]) -> bool:
    """True iff the open segments meet in exactly one interior point.

    Segments sharing an endpoint never cross.  Collinear overlap raises
    CollinearOverlap: it signals input violating general position.
    """
    p1, p2 = e1
    q1, q2 = e2
    if p1 in (q1, q2) or p2 in (q1, q2):
        return False
    d1 = orientation(q1, q2, p1)
    d2 = orientation(q1, q2, p2)
    d3 = orientation(p1, p2, q1)
    d4 = orientation(p1, p2, q2)
    if d1 == d2 == Orientation.COLLINEAR:
        # all four points on one line; any touching means degenerate overlap
        lo1, hi1 = sorted(((p1.x, p1.y), (p2.x, p2.y)))
        lo2, hi2 = sorted(((q1.x, q1.y), (q2.x, q2.y)))
        if lo1 < hi2 and lo2 < hi1:
            raise CollinearOverlap(f"segments {e1} and {e2} overlap")
        return False
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return False


def _in_open_arc(x: int, lo: int, hi: int, n: int) -> bool:
    """x strictly inside the ccw arc from lo to hi on 0..n-1."""
    return (x - lo) % n < (hi - lo) % n and x != lo


def convex_cross(n: int, e1: Edge, e2: Edge) -> bool:
    """Chord crossing on n points in convex position, by index interleaving."""
    a, b = e1
    c, d = e2
    for v in (a, b, c, d):
        if not 0 <= v < n:
            raise ValueError(f"index {v} out of range for n={n}")
    if len({a, b, c, d}) < 4:
        raise SharedEndpoint(f"{e1} and {e2} share a vertex")
    return _in_open_arc(c, a, b, n) != _in_open_arc(d, a, b, n)


def wheel_cross(m: int, e1: Edge, e2: Edge) -> bool:
    """Crossing oracle for the regular wheel: m rim points plus center.

    Rim vertices are 0..m-1 in ccw order, the center is the sentinel index m.
    m must be odd, so no chord passes through the center.  Two radial edges
    share the center and return False; any other shared endpoint is an error.
    """
    if m % 2 == 0:
        raise ValueError("rim count must be odd")
    r1 = m in e1
    r2 = m in e2
    if r1 and r2:
        return False
    a, b = e1
    c, d = e2
    if len({a, b, c, d}) < 4:
        raise SharedEndpoint(f"{e1} and {e2} share a vertex")
    if not r1 and not r2:
        return _in_open_arc(c, a, b, m) != _in_open_arc(d, a, b, m)
    if r1:
        j = a if b == m else b
        p, q = e2
    else:
        j = c if d == m else d
        p, q = e1
    # the radial to j crosses chord (p,q) iff j lies in the shorter arc
    if (q - p) % m < (p - q) % m:
        lo, hi = p, q
    else:
        lo, hi = q, p
    return _in_open_arc(j, lo, hi, m)


def convex_hull(points: Sequence[Point]) -> list[int]:
    """Counter-clockwise hull vertex indices (monotone chain)."""
    if len(points) < 3:
        raise DegenerateInput("hull needs at least 3 points")
    order = sorted(range(len(points)), key=lambda i: (points[i].x, points[i].y))

    def build(idx):
        chain = []
        for i in idx:
            while len(chain) >= 2 and orientation(
                points[chain[-2]], points[chain[-1]], points[i]
            ) != Orientation.CCW:
                chain.pop()
            chain.append(i)
        return chain

    lower = build(order)
    upper = build(reversed(order))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateInput("all points collinear")
    return hull


def in_general_position(points: Sequence[Point]) -> bool:
    if len(set((p.x, p.y) for p in points)) != len(points):
        return False
    for i, j, k in combinations(range(len(points)), 3):
        if orientation(points[i], points[j], points[k]) == Orientation.COLLINEAR:
            return False
    return True


@dataclass(frozen=True)
class PointSet:
    """Input points plus their configuration tag.

    Convex sets list their points in ccw convex-position order; wheel sets
    have an even count with one center and the rim in ccw circular order.
    """

    points: Tuple[Point, ...]
    config: Config = Config.GENERAL
    center_index: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        n = len(self.points)
        if n < 3:
            raise DegenerateInput("need at least 3 points")
        if not in_general_position(self.points):
            raise DegenerateInput("duplicate or collinear points")
        if self.config is Config.CONVEX:
            if self.center_index is not None:
                raise ConfigMismatch("convex sets have no center")
            if not _is_ccw_convex_order(self.points):
                raise DegenerateInput("points are not in ccw convex order")
        elif self.config is Config.WHEEL:
            if n % 2 != 0:
                raise InvalidN(f"wheel sets need even n, got {n}")
            if self.center_index is None or not 0 <= self.center_index < n:
                raise DegenerateInput("wheel sets need a valid center_index")
            rim = [p for i, p in enumerate(self.points) if i != self.center_index]
            if not _is_ccw_convex_order(tuple(rim)):
                raise DegenerateInput("rim is not in ccw circular order")
        elif self.center_index is not None:
            raise ConfigMismatch("center_index only applies to wheel sets")

    def __len__(self):
        return len(self.points)

    def rim_order(self) -> list[int]:
        """Original indices of the rim in listed (ccw) order; wheel only."""
        if self.config is not Config.WHEEL:
            raise ConfigMismatch("rim_order needs a wheel set")
        return [i for i in range(len(self.points)) if i != self.center_index]


def _is_ccw_convex_order(points: Tuple[Point, ...]) -> bool:
    n = len(points)
    if n < 3:
        return False
    for i in range(n):
        if orientation(points[i], points[(i + 1) % n], points[(i + 2) % n]) != Orientation.CCW:
            return False
    return True



def convex_oracle(n: int) -> CrossingOracle:
    def oracle(e1: Edge, e2: Edge) -> bool:
        return convex_cross(n, e1, e2)

    return oracle


def wheel_oracle(n: int, center_index: Optional[int] = None) -> CrossingOracle:
    """Oracle over original indices of a wheel set with n points total.

    Defaults to the center stored last; otherwise indices are relabeled to
    the sentinel convention internally.
    """
    m = n - 1
    center = n - 1 if center_index is None else center_index

    def relabel(v: int) -> int:
        if v == center:
            return m
        return v if v < center else v - 1

    def oracle(e1: Edge, e2: Edge) -> bool:
        a, b = relabel(e1[0]), relabel(e1[1])
        c, d = relabel(e2[0]), relabel(e2[1])
        return wheel_cross(m, (a, b), (c, d))

    return oracle


def coordinate_oracle(points: Sequence[Point]) -> CrossingOracle:
    def oracle(e1: Edge, e2: Edge) -> bool:
        return segments_properly_cross(
            (points[e1[0]], points[e1[1]]), (points[e2[0]], points[e2[1]])
        )

    return oracle


def oracle_for(ps: PointSet) -> CrossingOracle:
    """The verification oracle matching the set's configuration."""
    if ps.config is Config.CONVEX:
        return convex_oracle(len(ps))
    if ps.config is Config.WHEEL:
        return wheel_oracle(len(ps), ps.center_index)
    return coordinate_oracle(ps.points)
