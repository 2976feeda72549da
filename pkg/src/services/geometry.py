"""
Exact polygon algorithms: ear-clipping triangulation, Sutherland-Hodgman
clipping of convex polygons and interior overlap areas.
"""

import logging

from src.conf import messages
from src.exceptions import DegenerateInput, InvalidInput, NonConvexInput
from src.models.exactnum import FieldElem, exact
from src.models.geom2d import Point, Polygon, orient2d

logger = logging.getLogger(__name__)


def _in_triangle(a: Point, b: Point, c: Point, p: Point) -> bool:
    # closed triangle a, b, c (counter-clockwise)
    return orient2d(a, b, p) >= 0 and orient2d(b, c, p) >= 0 and orient2d(c, a, p) >= 0


def triangulate(polygon: Polygon) -> list[Polygon]:
    """
    The triangulate function cuts a simple polygon into triangles by ear clipping.
    Every test is an exact orientation predicate, so the triangle areas add up to
    the polygon area exactly.

    :param polygon: Polygon: A simple counter-clockwise polygon
    :return: A list of len(polygon) - 2 triangles (fewer if collinear vertices appear)
    """
    if polygon.area.sign() == 0:
        raise DegenerateInput(messages.DEGENERATE_POLYGON)
    if len(polygon) == 3:
        return [polygon]

    ring = list(polygon.vertices)
    triangles: list[Polygon] = []
    while len(ring) > 3:
        n = len(ring)
        for i in range(n):
            prev, cur, nxt = ring[i - 1], ring[i], ring[(i + 1) % n]
            turn = orient2d(prev, cur, nxt)
            if turn == 0:
                # straight vertex left behind by an earlier ear
                del ring[i]
                break
            if turn < 0:
                continue
            blocked = any(
                _in_triangle(prev, cur, nxt, p)
                for j, p in enumerate(ring)
                if j not in (i - 1 if i else n - 1, i, (i + 1) % n)
            )
            if blocked:
                continue
            triangles.append(Polygon.convex((prev, cur, nxt)))
            del ring[i]
            break
        else:
            raise DegenerateInput(messages.NO_EAR)
    if orient2d(*ring) > 0:
        triangles.append(Polygon.convex(ring))
    logger.debug("ear clipping: %d vertices, %d triangles", len(polygon), len(triangles))
    return triangles


def convex_parts(polygon: Polygon) -> list[Polygon]:
    return [polygon] if polygon.is_convex else triangulate(polygon)


def _cut_point(a: Point, b: Point, s: Point, e: Point) -> Point:
    ds = (b - a).cross(s - a)
    de = (b - a).cross(e - a)
    return s + (e - s).scaled(ds / (ds - de))


def clip_half_plane(points: list[Point], a: Point, b: Point) -> list[Point]:
    """Keep the part of a convex vertex ring on the left of the directed line a -> b."""
    if not points:
        return []
    output: list[Point] = []
    s = points[-1]
    s_side = orient2d(a, b, s)
    for e in points:
        e_side = orient2d(a, b, e)
        if e_side >= 0:
            if s_side < 0:
                output.append(_cut_point(a, b, s, e))
            output.append(e)
        elif s_side > 0:
            output.append(_cut_point(a, b, s, e))
        s, s_side = e, e_side
    return output


def convex_clip(p: Polygon, q: Polygon) -> Polygon | None:
    """
    The convex_clip function intersects two convex polygons exactly.

    :param p: Polygon: The subject polygon, convex
    :param q: Polygon: The clip polygon, convex
    :return: The intersection polygon, or None when the interiors are disjoint
    """
    if not p.is_convex or not q.is_convex:
        raise NonConvexInput()
    if p.bounds_disjoint(q):
        return None
    points = list(p.vertices)
    for a, b in q.edges():
        points = clip_half_plane(points, a, b)
        if len(points) < 3:
            return None
    try:
        return Polygon.convex(points)
    except DegenerateInput:
        return None


def overlap_area(p: Polygon, q: Polygon) -> FieldElem:
    """
    The overlap_area function measures the interior intersection of two simple
    polygons. Boundary contact has zero area.

    :param p: Polygon: First polygon
    :param q: Polygon: Second polygon
    :return: The exact area of the intersection
    """
    total = FieldElem(0)
    if p.bounds_disjoint(q):
        return total
    q_parts = convex_parts(q)
    for part_p in convex_parts(p):
        for part_q in q_parts:
            clipped = convex_clip(part_p, part_q)
            if clipped is not None:
                total = total + clipped.area
    return total


def _exterior_turn(n: int) -> tuple[FieldElem, FieldElem]:
    sqrt2 = FieldElem(2).sqrt()
    sqrt3 = FieldElem(3).sqrt()
    turns = {
        3: (FieldElem(-1) / 2, sqrt3 / 2),
        4: (FieldElem(0), FieldElem(1)),
        6: (FieldElem(1) / 2, sqrt3 / 2),
        8: (sqrt2 / 2, sqrt2 / 2),
        12: (sqrt3 / 2, FieldElem(1) / 2),
    }
    return turns[n]


EXACT_NGONS = (3, 4, 6, 8, 12)


def regular_polygon(n: int, side) -> Polygon:
    """
    The regular_polygon function builds the regular n-gon with exact vertices,
    counter-clockwise, starting with the edge (0, 0) -> (side, 0).
    Only the n whose exterior angle has cosine and sine in Q(sqrt 2) or
    Q(sqrt 3) are available.

    :param n: int: Number of sides, one of EXACT_NGONS
    :param side: The exact side length, positive
    :return: The polygon
    """
    if n < 3:
        raise InvalidInput(messages.NGON_TOO_SMALL)
    if n not in EXACT_NGONS:
        raise InvalidInput(messages.UNSUPPORTED_NGON.format(n=n, supported=EXACT_NGONS))
    side = exact(side)
    if side.sign() <= 0:
        raise InvalidInput(messages.NON_POSITIVE_SIDE)
    c, s = _exterior_turn(n)
    points = [Point.of(0, 0)]
    direction = Point.of(1, 0)
    for _ in range(n - 1):
        points.append(points[-1] + direction.scaled(side))
        direction = Point(c * direction.x - s * direction.y, s * direction.x + c * direction.y)
    return Polygon.convex(points)
