"""
Constructive scissors congruence: every polygon set is cut into the width-1
canonical rectangle of its area, and two sets of equal area are joined through it.
"""

from __future__ import annotations

import logging
from typing import Sequence

from src.conf import messages
from src.exceptions import AreaMismatch, DegenerateInput, InvalidInput, InvalidWidth
from src.models.dissection import Dissection, Piece
from src.models.exactnum import ExactLike, FieldElem, exact, parse_rational
from src.models.geom2d import Point, Polygon, RigidMotion, midpoint
from src.services.dissection import DissectionService
from src.services.geometry import EXACT_NGONS, regular_polygon, triangulate

logger = logging.getLogger(__name__)

Cell = tuple[Polygon, RigidMotion]


def canonical_rect(height: ExactLike) -> Polygon:
    return Polygon.rectangle(0, 0, 1, height)


def rectangle_extent(poly: Polygon) -> tuple[FieldElem, FieldElem, FieldElem, FieldElem] | None:
    """
    The rectangle_extent function recognises axis-aligned rectangles.

    :param poly: Polygon: Any polygon
    :return: (x0, y0, x1, y1) for an axis-aligned rectangle, otherwise None
    """
    if len(poly) != 4:
        return None
    for p, q in poly.edges():
        if p.x != q.x and p.y != q.y:
            return None
    xs = [p.x for p in poly]
    ys = [p.y for p in poly]
    return min(xs), min(ys), max(xs), max(ys)


def _halvings(u: FieldElem, w: FieldElem) -> int:
    """Number of halving or doubling moves that bring u into [w, 2w)."""
    steps = 0
    while u >= 2 * w:
        u = u / 2
        steps += 1
    while u < w:
        u = u * 2
        steps += 1
    return steps


class WbgService:
    def __init__(self, dissections: DissectionService | None = None):
        """
        The __init__ function keeps the dissection service used to chain the
        individual stages together.

        :param self: Represent the instance of the class
        :param dissections: DissectionService: Composition and inversion of certificates
        :return: Nothing
        """
        self.dissections = dissections or DissectionService()

    def _stage(self, before: Polygon, cells: Sequence[Cell], after: Polygon) -> Dissection:
        """One cut-and-move stage from a single source to a single target."""
        pieces = tuple(Piece(shape, 0, motion, 0) for shape, motion in cells)
        return Dissection((before,), (after,), pieces)

    def _chain(self, current: Dissection | None, stage: Dissection) -> Dissection:
        """Append a stage to the certificate built so far."""
        if current is None:
            return stage
        return self.dissections.compose(current, stage)

    def triangle_to_rect(self, triangle: Polygon) -> Dissection:
        """
        The triangle_to_rect function cuts a triangle along its midline and turns the
        two small corner triangles by 180 degrees about the side midpoints. The result
        is the rectangle on the longest side with half the altitude, placed at the
        origin with that side on the x-axis.

        :param self: Represent the instance of the class
        :param triangle: Polygon: A triangle
        :return: A dissection with at most 3 pieces
        """
        if len(triangle) != 3:
            raise DegenerateInput(messages.NOT_A_TRIANGLE)
        edges = triangle.edges()
        lengths = [(q - p).norm2() for p, q in edges]
        k = max(range(3), key=lambda i: (lengths[i], -i))
        p, q = edges[k]
        apex = triangle.vertices[(k + 2) % 3]
        length = lengths[k].sqrt()
        d = q - p
        c, s = d.x / length, -d.y / length
        origin = Point(-(c * p.x - s * p.y), -(s * p.x + c * p.y))
        to_axis = RigidMotion(c, s, origin.x, origin.y)
        top = to_axis.apply(apex)
        height = top.y
        base_left, base_right = Point.of(0, 0), Point(length, FieldElem(0))
        m1 = midpoint(base_left, top)
        m2 = midpoint(base_right, top)
        foot = Point(top.x, height / 2)
        back = to_axis.inverse()

        cells: list[Cell] = [(Polygon.convex((base_left, base_right, m2, m1)), to_axis)]
        for corner, pivot in (((m1, foot, top), m1), ((foot, m2, top), m2)):
            try:
                shape = Polygon.convex(corner)
            except DegenerateInput:
                continue
            half_turn = RigidMotion.of(-1, 0, 2 * pivot.x, 2 * pivot.y)
            cells.append((shape, half_turn.compose(to_axis)))

        pieces = tuple(Piece(shape.transformed(back), 0, motion, 0) for shape, motion in cells)
        target = Polygon.rectangle(0, 0, length, height / 2)
        logger.debug("triangle on side %s becomes a %s x %s rectangle", length, length, height / 2)
        return Dissection((triangle,), (target,), pieces)

    def rect_to_width(self, rect: Polygon, width: ExactLike) -> Dissection:
        """
        The rect_to_width function turns an axis-aligned rectangle into the rectangle
        of the same area and the given width, standing at the origin.

        The width u is first brought into [w, 2w) by halving (cut across, stack the
        right half on top) or doubling (cut along, put the top half to the right).
        A quarter turn is used when the height already fits better. The last stage
        is the three-piece slide along the diagonal of the common bounding box.

        :param self: Represent the instance of the class
        :param rect: Polygon: An axis-aligned rectangle
        :param width: The target width, positive
        :return: A dissection from rect to the w x (area / w) rectangle
        """
        w = exact(width)
        if w.sign() <= 0:
            raise InvalidWidth()
        extent = rectangle_extent(rect)
        if extent is None:
            raise InvalidInput(messages.NOT_A_RECTANGLE)
        x0, y0, x1, y1 = extent
        u, v = x1 - x0, y1 - y0

        current: Dissection | None = None
        placed = Polygon.rectangle(0, 0, u, v)
        if x0.sign() != 0 or y0.sign() != 0:
            current = self._stage(rect, [(rect, RigidMotion.translation(-x0, -y0))], placed)
        else:
            placed = rect

        if u != w and (v == w or _halvings(v, w) < _halvings(u, w)):
            turned = Polygon.rectangle(0, 0, v, u)
            current = self._chain(
                current, self._stage(placed, [(placed, RigidMotion.of(0, 1, v, 0))], turned)
            )
            placed, u, v = turned, v, u

        while u >= 2 * w:
            half = u / 2
            after = Polygon.rectangle(0, 0, half, 2 * v)
            cells = [
                (Polygon.rectangle(0, 0, half, v), RigidMotion.identity()),
                (Polygon.rectangle(half, 0, u, v), RigidMotion.translation(-half, v)),
            ]
            current = self._chain(current, self._stage(placed, cells, after))
            placed, u, v = after, half, 2 * v

        while u < w:
            half = v / 2
            after = Polygon.rectangle(0, 0, 2 * u, half)
            cells = [
                (Polygon.rectangle(0, 0, u, half), RigidMotion.identity()),
                (Polygon.rectangle(0, half, u, v), RigidMotion.translation(u, -half)),
            ]
            current = self._chain(current, self._stage(placed, cells, after))
            placed, u, v = after, 2 * u, half

        if u != w:
            current = self._chain(current, self._slide(placed, u, v, w))

        if current is None:
            return Dissection.identity([rect])
        return current

    def _slide(self, placed: Polygon, u: FieldElem, v: FieldElem, w: FieldElem) -> Dissection:
        """
        The _slide function cuts the u x v rectangle along the line from (u, 0) to
        (0, uv / w) and slides the two corner triangles so that the pieces fill the
        w x (uv / w) rectangle. Requires w < u < 2w.

        :param self: Represent the instance of the class
        :param placed: Polygon: The u x v rectangle at the origin
        :param u: FieldElem: Current width
        :param v: FieldElem: Current height
        :param w: FieldElem: Target width
        :return: A three-piece stage
        """
        height = u * v / w
        y1 = v * (u - w) / w
        cells = [
            (
                Polygon.convex(
                    (
                        Point.of(0, 0),
                        Point(w, FieldElem(0)),
                        Point(w, y1),
                        Point(u - w, v),
                        Point(FieldElem(0), v),
                    )
                ),
                RigidMotion.identity(),
            ),
            (
                Polygon.convex((Point(w, FieldElem(0)), Point(u, FieldElem(0)), Point(w, y1))),
                RigidMotion.translation(-w, v),
            ),
            (
                Polygon.convex((Point(u - w, v), Point(u, FieldElem(0)), Point(u, v))),
                RigidMotion.translation(-(u - w), height - v),
            ),
        ]
        return self._stage(placed, cells, Polygon.rectangle(0, 0, w, height))

    def _to_unit_width(self, polygon: Polygon) -> list[Dissection]:
        if rectangle_extent(polygon) is not None:
            return [self.rect_to_width(polygon, 1)]
        parts = []
        for triangle in triangulate(polygon):
            to_rect = self.triangle_to_rect(triangle)
            parts.append(
                self.dissections.compose(to_rect, self.rect_to_width(to_rect.targets[0], 1))
            )
        return parts

    def canonicalize(self, polygons: Sequence[Polygon]) -> Dissection:
        """
        The canonicalize function cuts a polygon set into the width-1 rectangle of
        the same total area. Each polygon is triangulated (rectangles are taken as
        they are), every triangle is turned into a unit-width rectangle and the
        rectangles are stacked bottom to top in input order.

        :param self: Represent the instance of the class
        :param polygons: Sequence[Polygon]: The polygon set
        :return: A dissection from polygons to the canonical rectangle
        """
        polygons = tuple(polygons)
        if not polygons:
            raise DegenerateInput(messages.DEGENERATE_POLYGON)
        pieces: list[Piece] = []
        offset = FieldElem(0)
        for index, polygon in enumerate(polygons):
            for part in self._to_unit_width(polygon):
                lift = RigidMotion.translation(0, offset)
                for piece in part.pieces:
                    pieces.append(Piece(piece.shape, index, lift.compose(piece.motion), 0))
                offset = offset + part.targets[0].area
        logger.debug("canonical rectangle of height %s from %d pieces", offset, len(pieces))
        return Dissection(polygons, (canonical_rect(offset),), tuple(pieces))

    def equidecompose(
        self, sources: Sequence[Polygon], targets: Sequence[Polygon]
    ) -> Dissection:
        """
        The equidecompose function builds a dissection between two polygon sets of
        equal total area through their common canonical rectangle.

        :param self: Represent the instance of the class
        :param sources: Sequence[Polygon]: The polygons to cut
        :param targets: Sequence[Polygon]: The polygons to assemble
        :return: A dissection from sources to targets
        """
        source_area = sum((p.area for p in sources), FieldElem(0))
        target_area = sum((p.area for p in targets), FieldElem(0))
        if source_area != target_area:
            raise AreaMismatch(
                messages.AREA_MISMATCH.format(source=source_area, target=target_area)
            )
        forward = self.canonicalize(sources)
        backward = self.dissections.invert(self.canonicalize(targets))
        result = self.dissections.compose(forward, backward)
        logger.info(
            "equidecomposed %d sources into %d targets with %d pieces",
            len(result.sources),
            len(result.targets),
            len(result.pieces),
        )
        return result

    def pythagorean_dissection(self, a, b, n: int = 3) -> Dissection:
        """
        The pythagorean_dissection function cuts the regular n-gons on sides a and b
        into pieces that form the regular n-gon on the hypotenuse sqrt(a^2 + b^2).
        The second source is placed to the right of the first.

        :param self: Represent the instance of the class
        :param a: First side, positive rational
        :param b: Second side, positive rational
        :param n: int: Number of sides, one of EXACT_NGONS
        :return: A dissection from the two small n-gons to the large one
        """
        a, b = parse_rational(a), parse_rational(b)
        if a <= 0 or b <= 0:
            raise InvalidInput(messages.NON_POSITIVE_LEG)
        if n not in EXACT_NGONS:
            raise InvalidInput(messages.UNSUPPORTED_NGON.format(n=n, supported=EXACT_NGONS))
        c = FieldElem(a * a + b * b).sqrt()
        first = regular_polygon(n, a)
        second = regular_polygon(n, b).translated(first.bounds[2] + 1, 0)
        return self.equidecompose([first, second], [regular_polygon(n, c)])
