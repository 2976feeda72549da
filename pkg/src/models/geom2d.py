"""
Exact planar geometry values: points, proper rigid motions and simple polygons.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from src.conf import messages
from src.conf.config import config
from src.exceptions import DegenerateInput
from src.models.exactnum import ExactLike, FieldElem, exact


@dataclass(frozen=True, eq=True)
class Point:
    x: FieldElem
    y: FieldElem

    __hash__ = None

    @classmethod
    def of(cls, x: ExactLike | str, y: ExactLike | str) -> Point:
        return cls(exact(x), exact(y))

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def scaled(self, k: ExactLike) -> Point:
        return Point(self.x * k, self.y * k)

    def dot(self, other: Point) -> FieldElem:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point) -> FieldElem:
        return self.x * other.y - self.y * other.x

    def norm2(self) -> FieldElem:
        return self.dot(self)

    @property
    def depth(self) -> int:
        return max(self.x.depth, self.y.depth)

    def __str__(self):
        return f"({self.x}, {self.y})"


def dist2(p: Point, q: Point) -> FieldElem:
    return (q - p).norm2()


def orient2d(a: Point, b: Point, c: Point) -> int:
    """
    The orient2d function is the exact orientation predicate: +1 when a, b, c turn
    counter-clockwise, -1 when clockwise and 0 when collinear.

    :param a: Point: First point
    :param b: Point: Second point
    :param c: Point: Third point
    :return: The sign of the cross product (b - a) x (c - a)
    """
    return (b - a).cross(c - a).sign()


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def signed_area(vertices: Sequence[Point]) -> FieldElem:
    """
    The signed_area function evaluates the shoelace formula over a closed vertex
    sequence. It is positive for counter-clockwise order.

    :param vertices: Sequence[Point]: The vertices in order
    :return: Half the sum of x_i * y_(i+1) - x_(i+1) * y_i
    """
    total = FieldElem(0)
    n = len(vertices)
    for i in range(n):
        p, q = vertices[i], vertices[(i + 1) % n]
        total = total + (p.x * q.y - q.x * p.y)
    return total / 2


@dataclass(frozen=True, eq=True)
class RigidMotion:
    """
    ``p -> R(c, s) p + t`` with the rotation matrix ``[[c, -s], [s, c]]``.

    A motion is proper when ``c^2 + s^2 == 1``; anything else can be
    represented (a verifier must be able to read it) but is reported invalid.
    """

    c: FieldElem
    s: FieldElem
    tx: FieldElem
    ty: FieldElem

    __hash__ = None

    @classmethod
    def of(cls, c, s, tx=0, ty=0) -> RigidMotion:
        return cls(exact(c), exact(s), exact(tx), exact(ty))

    @classmethod
    def identity(cls) -> RigidMotion:
        return cls.of(1, 0, 0, 0)

    @classmethod
    def translation(cls, dx: ExactLike, dy: ExactLike) -> RigidMotion:
        return cls.of(1, 0, dx, dy)

    @classmethod
    def rotation_about(cls, center: Point, c: ExactLike, s: ExactLike) -> RigidMotion:
        """Rotation by the angle with cosine c and sine s around center."""
        c, s = exact(c), exact(s)
        tx = center.x - (c * center.x - s * center.y)
        ty = center.y - (s * center.x + c * center.y)
        return cls(c, s, tx, ty)

    @property
    def is_proper(self) -> bool:
        return self.c * self.c + self.s * self.s == 1

    @property
    def translation_vector(self) -> Point:
        return Point(self.tx, self.ty)

    def apply(self, p: Point) -> Point:
        return Point(
            self.c * p.x - self.s * p.y + self.tx,
            self.s * p.x + self.c * p.y + self.ty,
        )

    def compose(self, other: RigidMotion) -> RigidMotion:
        """``self.compose(other)`` applies ``other`` first, then ``self``."""
        c = self.c * other.c - self.s * other.s
        s = self.s * other.c + self.c * other.s
        t = self.apply(other.translation_vector)
        return RigidMotion(c, s, t.x, t.y)

    def inverse(self) -> RigidMotion:
        return RigidMotion(
            self.c,
            -self.s,
            -(self.c * self.tx + self.s * self.ty),
            self.s * self.tx - self.c * self.ty,
        )

    @property
    def depth(self) -> int:
        return max(e.depth for e in (self.c, self.s, self.tx, self.ty))


def apply(m: RigidMotion, p: Point) -> Point:
    return m.apply(p)


def compose(m1: RigidMotion, m2: RigidMotion) -> RigidMotion:
    return m1.compose(m2)


def invert(m: RigidMotion) -> RigidMotion:
    return m.inverse()


def _segments_intersect(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    d1 = orient2d(q1, q2, p1)
    d2 = orient2d(q1, q2, p2)
    d3 = orient2d(p1, p2, q1)
    d4 = orient2d(p1, p2, q2)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return (
        (d1 == 0 and _on_segment(q1, q2, p1))
        or (d2 == 0 and _on_segment(q1, q2, p2))
        or (d3 == 0 and _on_segment(p1, p2, q1))
        or (d4 == 0 and _on_segment(p1, p2, q2))
    )


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    # p collinear with a, b
    return (p - a).dot(p - b).sign() <= 0


def _drop_collinear(points: list[Point]) -> list[Point]:
    changed = True
    while changed and len(points) >= 3:
        changed = False
        for i in range(len(points)):
            prev, cur, nxt = points[i - 1], points[i], points[(i + 1) % len(points)]
            if orient2d(prev, cur, nxt) == 0:
                del points[i]
                changed = True
                break
    return points


class Polygon:
    """
    A simple polygon in canonical form: counter-clockwise, at least three
    vertices, no repeated or collinear consecutive vertices, positive area.
    """

    def __init__(self, vertices: Iterable[Point], check_simple: bool = True):
        points = _drop_collinear(list(vertices))
        if len(points) < 3:
            raise DegenerateInput(messages.TOO_FEW_VERTICES)
        area = signed_area(points)
        if area.sign() == 0:
            raise DegenerateInput(messages.DEGENERATE_POLYGON)
        if area.sign() < 0:
            points.reverse()
            area = -area
        self.vertices: tuple[Point, ...] = tuple(points)
        if check_simple and not self._is_simple():
            raise DegenerateInput(messages.NOT_SIMPLE)
        self.__dict__["area"] = area

    @classmethod
    def of(cls, *coords) -> Polygon:
        """``Polygon.of((0, 0), (1, 0), (0, 1))`` from exact coordinate pairs."""
        return cls(Point.of(x, y) for x, y in coords)

    @classmethod
    def convex(cls, vertices: Iterable[Point]) -> Polygon:
        """Build from a vertex list already known to bound a convex region."""
        return cls(vertices, check_simple=False)

    @classmethod
    def _trusted(cls, vertices: tuple[Point, ...], area: FieldElem) -> Polygon:
        poly = object.__new__(cls)
        poly.vertices = vertices
        poly.__dict__["area"] = area
        return poly

    @classmethod
    def rectangle(cls, x0: ExactLike, y0: ExactLike, x1: ExactLike, y1: ExactLike) -> Polygon:
        return cls.of((x0, y0), (x1, y0), (x1, y1), (x0, y1))

    def _is_simple(self) -> bool:
        n = len(self.vertices)
        if n == 3:
            return True
        edges = self.edges()
        for i in range(n):
            for j in range(i + 2, n):
                if i == 0 and j == n - 1:
                    continue
                if _segments_intersect(*edges[i], *edges[j]):
                    return False
        return True

    def edges(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    @functools.cached_property
    def area(self) -> FieldElem:
        return signed_area(self.vertices)

    @functools.cached_property
    def is_convex(self) -> bool:
        v = self.vertices
        n = len(v)
        return all(orient2d(v[i - 1], v[i], v[(i + 1) % n]) > 0 for i in range(n))

    @functools.cached_property
    def bounds(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """Certified bounding box ``(min_x, min_y, max_x, max_y)`` enclosing the polygon."""
        eps = config.bounds_eps
        xs = [p.x.to_interval(eps) for p in self.vertices]
        ys = [p.y.to_interval(eps) for p in self.vertices]
        return (
            min(lo for lo, _ in xs),
            min(lo for lo, _ in ys),
            max(hi for _, hi in xs),
            max(hi for _, hi in ys),
        )

    def bounds_disjoint(self, other: Polygon) -> bool:
        """True when certified boxes prove the interiors cannot meet."""
        ax0, ay0, ax1, ay1 = self.bounds
        bx0, by0, bx1, by1 = other.bounds
        return ax1 <= bx0 or bx1 <= ax0 or ay1 <= by0 or by1 <= ay0

    def transformed(self, motion: RigidMotion) -> Polygon:
        moved = tuple(motion.apply(p) for p in self.vertices)
        if motion.is_proper:
            return Polygon._trusted(moved, self.area)
        return Polygon(moved)

    def translated(self, dx: ExactLike, dy: ExactLike) -> Polygon:
        return self.transformed(RigidMotion.translation(dx, dy))

    @property
    def depth(self) -> int:
        return max(p.depth for p in self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, Polygon):
            return NotImplemented
        n = len(self.vertices)
        if n != len(other.vertices):
            return False
        for shift in range(n):
            if all(self.vertices[i] == other.vertices[(i + shift) % n] for i in range(n)):
                return True
        return False

    __hash__ = None

    def __repr__(self):
        return "Polygon(" + ", ".join(str(p) for p in self.vertices) + ")"
