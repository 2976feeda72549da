"""
Verification and algebra of dissection certificates.
"""

from __future__ import annotations

import logging
from typing import Iterable

from src.exceptions import DegenerateInput, MidspaceMismatch
from src.models.dissection import Dissection, DissectionStats, Piece
from src.models.exactnum import FieldElem
from src.models.geom2d import Polygon
from src.models.report import CheckResult, VerificationReport
from src.services.geometry import convex_clip, convex_parts, overlap_area

logger = logging.getLogger(__name__)

MOTION_VALID = "MOTION_VALID"
AREA_CONSERVED = "AREA_CONSERVED"
SOURCE_CONTAINMENT = "SOURCE_CONTAINMENT"
TARGET_CONTAINMENT = "TARGET_CONTAINMENT"
SOURCE_NON_OVERLAP = "SOURCE_NON_OVERLAP"
TARGET_NON_OVERLAP = "TARGET_NON_OVERLAP"


def _total_area(polygons: Iterable[Polygon]) -> FieldElem:
    total = FieldElem(0)
    for poly in polygons:
        total = total + poly.area
    return total


class DissectionService:
    def verify_dissection(self, dissection: Dissection) -> VerificationReport:
        """
        The verify_dissection function runs the six certificate checks in a fixed
        order. Each check is evaluated independently so one report lists every
        problem at once; witnesses describe the first failing piece or pair.

        :param self: Represent the instance of the class
        :param dissection: Dissection: The certificate to check
        :return: The verification report
        """
        moved = self._moved_pieces(dissection)
        checks = (
            self._check_motions(dissection),
            self._check_area(dissection),
            self._check_containment(
                SOURCE_CONTAINMENT,
                [(p.shape, dissection.sources[p.source_index]) for p in dissection.pieces],
            ),
            self._check_containment(
                TARGET_CONTAINMENT,
                [
                    (shape, dissection.targets[p.target_index])
                    for p, shape in zip(dissection.pieces, moved)
                    if shape is not None
                ],
            ),
            self._check_overlap(
                SOURCE_NON_OVERLAP,
                [(p.source_index, p.shape) for p in dissection.pieces],
            ),
            self._check_overlap(
                TARGET_NON_OVERLAP,
                [
                    (p.target_index, shape)
                    for p, shape in zip(dissection.pieces, moved)
                    if shape is not None
                ],
            ),
        )
        report = VerificationReport(checks)
        logger.info(
            "dissection with %d pieces: %s",
            len(dissection.pieces),
            "pass" if report.verdict else "failed " + ", ".join(report.failed),
        )
        return report

    @staticmethod
    def _moved_pieces(dissection: Dissection) -> list[Polygon | None]:
        moved: list[Polygon | None] = []
        for piece in dissection.pieces:
            try:
                moved.append(piece.moved)
            except DegenerateInput:
                # an improper motion can collapse the piece
                moved.append(None)
        return moved

    @staticmethod
    def _check_motions(dissection: Dissection) -> CheckResult:
        for index, piece in enumerate(dissection.pieces):
            m = piece.motion
            if not m.is_proper:
                return CheckResult(
                    MOTION_VALID,
                    False,
                    {
                        "piece": FieldElem(index),
                        "c": m.c,
                        "s": m.s,
                        "c^2+s^2": m.c * m.c + m.s * m.s,
                    },
                )
        return CheckResult(MOTION_VALID, True)

    @staticmethod
    def _check_area(dissection: Dissection) -> CheckResult:
        sources = _total_area(dissection.sources)
        targets = _total_area(dissection.targets)
        pieces = _total_area(p.shape for p in dissection.pieces)
        witnesses = {"sources": sources, "targets": targets, "pieces": pieces}
        return CheckResult(AREA_CONSERVED, sources == pieces == targets, witnesses)

    @staticmethod
    def _check_containment(name: str, pairs: list[tuple[Polygon, Polygon]]) -> CheckResult:
        for index, (shape, region) in enumerate(pairs):
            inside = overlap_area(shape, region)
            if inside != shape.area:
                return CheckResult(
                    name,
                    False,
                    {
                        "piece": FieldElem(index),
                        "area": shape.area,
                        "area_inside": inside,
                        "area_outside": shape.area - inside,
                    },
                )
        return CheckResult(name, True)

    @staticmethod
    def _check_overlap(name: str, shapes: list[tuple[int, Polygon]]) -> CheckResult:
        for i in range(len(shapes)):
            index_i, shape_i = shapes[i]
            for j in range(i + 1, len(shapes)):
                index_j, shape_j = shapes[j]
                if index_i != index_j:
                    continue
                common = overlap_area(shape_i, shape_j)
                if common.sign() != 0:
                    return CheckResult(
                        name,
                        False,
                        {
                            "first": FieldElem(i),
                            "second": FieldElem(j),
                            "overlap_area": common,
                        },
                    )
        return CheckResult(name, True)

    def compose(self, first: Dissection, second: Dissection) -> Dissection:
        """
        The compose function chains two dissections through their shared middle
        polygon list. Every moved piece of the first is intersected with every
        piece of the second cut from the same middle polygon; each nonempty
        intersection is pulled back into the original sources.

        :param self: Represent the instance of the class
        :param first: Dissection: sources to middle
        :param second: Dissection: middle to targets
        :return: A dissection from first.sources to second.targets
        """
        if first.targets != second.sources:
            raise MidspaceMismatch()
        pieces: list[Piece] = []
        for p1 in first.pieces:
            back = p1.motion.inverse()
            middle_parts = convex_parts(p1.moved)
            for p2 in second.pieces:
                if p2.source_index != p1.target_index:
                    continue
                motion = p2.motion.compose(p1.motion)
                for part in middle_parts:
                    for q in convex_parts(p2.shape):
                        clipped = convex_clip(part, q)
                        if clipped is None:
                            continue
                        pieces.append(
                            Piece(
                                clipped.transformed(back),
                                p1.source_index,
                                motion,
                                p2.target_index,
                            )
                        )
        logger.debug(
            "composed %d and %d pieces into %d",
            len(first.pieces),
            len(second.pieces),
            len(pieces),
        )
        return Dissection(first.sources, second.targets, tuple(pieces))

    def invert(self, dissection: Dissection) -> Dissection:
        """
        The invert function swaps sources and targets: each piece is taken at its
        target position and moved back by the inverse motion.

        :param self: Represent the instance of the class
        :param dissection: Dissection: The dissection to reverse
        :return: A dissection from dissection.targets to dissection.sources
        """
        pieces = tuple(
            Piece(p.moved, p.target_index, p.motion.inverse(), p.source_index)
            for p in dissection.pieces
        )
        return Dissection(dissection.targets, dissection.sources, pieces)

    def stats(self, dissection: Dissection) -> DissectionStats:
        """
        The stats function summarizes a certificate: piece count, the deepest
        tower among shapes and motions, the total vertex count and the exact area.

        :param self: Represent the instance of the class
        :param dissection: Dissection: The certificate
        :return: The statistics
        """
        depth = 0
        vertices = 0
        for piece in dissection.pieces:
            depth = max(depth, piece.shape.depth, piece.motion.depth)
            vertices += len(piece.shape)
        return DissectionStats(
            piece_count=len(dissection.pieces),
            max_tower_depth=depth,
            vertex_count=vertices,
            total_area=_total_area(p.shape for p in dissection.pieces),
        )
