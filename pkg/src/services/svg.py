"""
SVG figures of the rotation configuration and of dissections.

Exact coordinates are drawn at the midpoint of their certified interval and
printed with a fixed number of decimals, so the same input always yields the
same bytes.
"""

from __future__ import annotations

from fractions import Fraction
from html import escape
from typing import Iterable, Sequence

from src.conf.config import config
from src.models.dissection import Dissection
from src.models.exactnum import FieldElem, format_decimal
from src.models.geom2d import Point, Polygon
from src.services.construction import RotationConfiguration

PALETTE = (
    "#4e79a7",
    "#f28e2b",
    "#e15759",
    "#76b7b2",
    "#59a14f",
    "#edc948",
    "#b07aa1",
    "#ff9da7",
    "#9c755f",
    "#bab0ac",
)

OUTLINE = "#333333"

CONFIGURATION_FILLS = {
    "ABC2DC1": "#ff9da7",
    "ABD": "#f28e2b",
    "ACC1": "#4e79a7",
    "BCC2": "#59a14f",
    "C2DC1C": "#edc948",
    "BCA": "#bab0ac",
}

MIRRORED_FILLS = {
    "ABD": "#f28e2b",
    "ACC1": "#4e79a7",
    "BCC2": "#59a14f",
    "BCA": "#bab0ac",
}

DECOMPOSITION_FILLS = {
    "ABD": "#f28e2b",
    "BC2D": "#e15759",
    "AC1D": "#b07aa1",
    "ACC1": "#4e79a7",
    "BCC2": "#59a14f",
    "BCA": "#bab0ac",
    "C2DC1C": "#edc948",
}


class SvgService:
    def __init__(self, decimals: int = config.SVG_DECIMALS, eps: Fraction = config.report_eps):
        """
        The __init__ function fixes the numeric rendering of exact coordinates.

        :param self: Represent the instance of the class
        :param decimals: int: Decimals printed per coordinate
        :param eps: Fraction: Width of the interval each coordinate is evaluated to
        :return: Nothing
        """
        self.decimals = decimals
        self.eps = eps

    def _approx(self, value: FieldElem) -> Fraction:
        lo, hi = value.to_interval(self.eps)
        return (lo + hi) / 2

    def _xy(self, p: Point) -> tuple[Fraction, Fraction]:
        # y axis points down in SVG
        return self._approx(p.x), -self._approx(p.y)

    def _num(self, q: Fraction) -> str:
        return format_decimal(q, self.decimals)

    def _points(self, vertices: Iterable[Point]) -> str:
        coords = []
        for p in vertices:
            x, y = self._xy(p)
            coords.append(f"{self._num(x)},{self._num(y)}")
        return " ".join(coords)

    def _view_box(self, polygons: Sequence[Polygon]) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        xs, ys = [], []
        for poly in polygons:
            for p in poly:
                x, y = self._xy(p)
                xs.append(x)
                ys.append(y)
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
        pad = max(x1 - x0, y1 - y0) / 20
        return x0 - pad, y0 - pad, x1 - x0 + 2 * pad, y1 - y0 + 2 * pad

    def _document(self, view_box, body: list[str]) -> str:
        x, y, w, h = view_box
        stroke = self._num(max(w, h) / 400)
        lines = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{self._num(x)} {self._num(y)} '
            f'{self._num(w)} {self._num(h)}">',
            f'<g stroke="{OUTLINE}" stroke-width="{stroke}" stroke-linejoin="round">',
            *body,
            "</g>",
            "</svg>",
        ]
        return "\n".join(lines) + "\n"

    def _polygon(self, poly: Polygon, fill: str, title: str | None = None, opacity: str = "0.6") -> str:
        inner = f"<title>{escape(title)}</title>" if title else ""
        return (
            f'<polygon points="{self._points(poly)}" fill="{fill}" fill-opacity="{opacity}">'
            f"{inner}</polygon>"
        )

    def _label(self, name: str, p: Point, size: Fraction) -> str:
        x, y = self._xy(p)
        return (
            f'<text x="{self._num(x)}" y="{self._num(y - size / 3)}" font-size="{self._num(size)}" '
            f'font-family="sans-serif" stroke="none" fill="{OUTLINE}">{escape(name)}</text>'
        )

    def _figure(self, cfg: RotationConfiguration, fills: dict[str, str]) -> str:
        polys = {name: cfg.polygon(name) for name in fills}
        shapes = list(polys.values())
        view_box = self._view_box(shapes)
        size = max(view_box[2], view_box[3]) / 30
        body = [self._polygon(polys[name], fill, name) for name, fill in fills.items()]
        body.extend(self._label(name, p, size) for name, p in cfg.labelled_points().items())
        return self._document(view_box, body)

    def configuration_svg(self, cfg: RotationConfiguration) -> str:
        """
        The configuration_svg function draws the pentagon ABC2DC1, the three
        equilateral triangles, the parallelogram and the right triangle, and labels
        the six points. With mirrored senses only the triangles are drawn.

        :param self: Represent the instance of the class
        :param cfg: RotationConfiguration: A built configuration
        :return: The SVG document
        """
        return self._figure(cfg, MIRRORED_FILLS if cfg.mirrored else CONFIGURATION_FILLS)

    def decompositions_svg(self, cfg: RotationConfiguration) -> str:
        """
        The decompositions_svg function draws both decompositions of the pentagon
        ABC2DC1 over each other: ABD with the two copies of the right triangle, and
        ACC1, BCC2, BCA with the parallelogram C2DC1C.

        :param self: Represent the instance of the class
        :param cfg: RotationConfiguration: A built configuration
        :return: The SVG document
        """
        return self._figure(cfg, DECOMPOSITION_FILLS)

    def dissection_svg(self, dissection: Dissection) -> str:
        """
        The dissection_svg function draws the sources on the left and the targets on
        the right, each piece in the same palette colour at both of its positions.

        :param self: Represent the instance of the class
        :param dissection: Dissection: The dissection to draw
        :return: The SVG document
        """
        left = list(dissection.sources)
        lx0, _, lw, _ = self._view_box(left)
        right_view = self._view_box(list(dissection.targets))
        shift = lx0 + lw - right_view[0]
        shift_elem = FieldElem(shift)

        def shifted(poly: Polygon) -> Polygon:
            return poly.translated(shift_elem, 0)

        right = [shifted(t) for t in dissection.targets]
        view_box = self._view_box(left + right)
        body = [self._polygon(s, "none", f"source {i}", "0") for i, s in enumerate(left)]
        body.extend(self._polygon(t, "none", f"target {i}", "0") for i, t in enumerate(right))
        for index, piece in enumerate(dissection.pieces):
            fill = PALETTE[index % len(PALETTE)]
            body.append(self._polygon(piece.shape, fill, f"piece {index}"))
            body.append(self._polygon(shifted(piece.moved), fill, f"piece {index}"))
        return self._document(view_box, body)
