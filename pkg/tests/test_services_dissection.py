import unittest

from src.exceptions import InvalidInput, MidspaceMismatch, ReflectionsUnsupported
from src.models.dissection import Dissection, Piece
from src.models.exactnum import FieldElem
from src.models.geom2d import Polygon, RigidMotion
from src.services.dissection import (
    AREA_CONSERVED,
    MOTION_VALID,
    SOURCE_CONTAINMENT,
    SOURCE_NON_OVERLAP,
    TARGET_CONTAINMENT,
    TARGET_NON_OVERLAP,
    DissectionService,
)
from tests.conftest import square_to_strip, unit_square

CHECK_ORDER = [
    MOTION_VALID,
    AREA_CONSERVED,
    SOURCE_CONTAINMENT,
    TARGET_CONTAINMENT,
    SOURCE_NON_OVERLAP,
    TARGET_NON_OVERLAP,
]


def one_piece(shape: Polygon, motion: RigidMotion) -> Dissection:
    square = unit_square()
    return Dissection([square], [square], [Piece(shape, 0, motion, 0)])


class TestVerifyDissection(unittest.TestCase):
    def setUp(self):
        self.service = DissectionService()

    def assertOnlyFails(self, report, name):
        self.assertFalse(report.verdict)
        self.assertEqual(report.failed, [name])

    def test_identity(self):
        report = self.service.verify_dissection(Dissection.identity([unit_square()]))
        self.assertTrue(report.verdict)
        self.assertEqual([c.name for c in report.checks], CHECK_ORDER)

    def test_square_to_strip(self):
        self.assertTrue(self.service.verify_dissection(square_to_strip()).verdict)

    def test_motion_that_is_not_rigid(self):
        report = self.service.verify_dissection(
            one_piece(unit_square(), RigidMotion.of("999/1000", 0))
        )
        self.assertOnlyFails(report, MOTION_VALID)
        self.assertEqual(report[MOTION_VALID].witnesses["c^2+s^2"], FieldElem("998001/1000000"))

    def test_missing_piece(self):
        report = self.service.verify_dissection(
            one_piece(Polygon.rectangle(0, 0, "1/2", 1), RigidMotion.identity())
        )
        self.assertOnlyFails(report, AREA_CONSERVED)
        self.assertEqual(report[AREA_CONSERVED].witnesses["pieces"], FieldElem("1/2"))

    def test_piece_outside_its_source(self):
        report = self.service.verify_dissection(
            one_piece(Polygon.rectangle("1/2", 0, "3/2", 1), RigidMotion.translation("-1/2", 0))
        )
        self.assertOnlyFails(report, SOURCE_CONTAINMENT)
        self.assertEqual(report[SOURCE_CONTAINMENT].witnesses["area_outside"], FieldElem("1/2"))

    def test_piece_moved_outside_its_target(self):
        report = self.service.verify_dissection(
            one_piece(unit_square(), RigidMotion.translation("1/2", 0))
        )
        self.assertOnlyFails(report, TARGET_CONTAINMENT)

    def test_pieces_overlapping_in_source(self):
        strip = Polygon.rectangle(0, 0, 2, 1)
        dissection = Dissection(
            [strip],
            [strip],
            [
                Piece(unit_square(), 0, RigidMotion.identity(), 0),
                Piece(unit_square(), 0, RigidMotion.translation(1, 0), 0),
            ],
        )
        report = self.service.verify_dissection(dissection)
        self.assertOnlyFails(report, SOURCE_NON_OVERLAP)
        self.assertEqual(report[SOURCE_NON_OVERLAP].witnesses["overlap_area"], 1)

    def test_pieces_overlapping_in_target(self):
        strip = Polygon.rectangle(0, 0, 2, 1)
        dissection = Dissection(
            [strip],
            [strip],
            [
                Piece(unit_square(), 0, RigidMotion.identity(), 0),
                Piece(Polygon.rectangle(1, 0, 2, 1), 0, RigidMotion.translation(-1, 0), 0),
            ],
        )
        report = self.service.verify_dissection(dissection)
        self.assertOnlyFails(report, TARGET_NON_OVERLAP)
        self.assertEqual(report[TARGET_NON_OVERLAP].witnesses["overlap_area"], 1)

    def test_rotated_piece(self):
        quarter = RigidMotion.rotation_about(unit_square().vertices[0], 0, 1)
        square = unit_square()
        target = square.transformed(quarter)
        dissection = Dissection([square], [target], [Piece(square, 0, quarter, 0)])
        self.assertTrue(self.service.verify_dissection(dissection).verdict)


class TestDissectionModel(unittest.TestCase):
    def test_bad_index(self):
        with self.assertRaises(InvalidInput):
            Dissection([unit_square()], [unit_square()], [Piece(unit_square(), 1, RigidMotion.identity(), 0)])

    def test_reflections_refused(self):
        with self.assertRaises(ReflectionsUnsupported):
            Dissection([unit_square()], [unit_square()], allow_reflections=True)


class TestAlgebra(unittest.TestCase):
    def setUp(self):
        self.service = DissectionService()

    def test_invert(self):
        inverse = self.service.invert(square_to_strip())
        self.assertEqual(inverse.sources, square_to_strip().targets)
        self.assertTrue(self.service.verify_dissection(inverse).verdict)

    def test_compose_round_trip(self):
        forward = square_to_strip()
        round_trip = self.service.compose(forward, self.service.invert(forward))
        self.assertEqual(round_trip.targets, (unit_square(),))
        self.assertEqual(len(round_trip.pieces), 2)
        self.assertTrue(self.service.verify_dissection(round_trip).verdict)
        for piece in round_trip.pieces:
            self.assertEqual(piece.motion, RigidMotion.identity())

    def test_compose_refines_pieces(self):
        strip = Polygon.rectangle(0, 0, 2, "1/2")
        halves = Dissection(
            [strip],
            [Polygon.rectangle(0, 0, 1, 1)],
            [
                Piece(Polygon.rectangle(0, 0, 1, "1/2"), 0, RigidMotion.identity(), 0),
                Piece(Polygon.rectangle(1, 0, 2, "1/2"), 0, RigidMotion.translation(-1, "1/2"), 0),
            ],
        )
        self.assertTrue(self.service.verify_dissection(halves).verdict)
        twisted = Dissection(
            [unit_square()],
            [unit_square()],
            [
                Piece(Polygon.rectangle(0, 0, "1/2", 1), 0, RigidMotion.identity(), 0),
                Piece(Polygon.rectangle("1/2", 0, 1, 1), 0, RigidMotion.identity(), 0),
            ],
        )
        composed = self.service.compose(self.service.compose(square_to_strip(), halves), twisted)
        self.assertEqual(len(composed.pieces), 4)
        self.assertTrue(self.service.verify_dissection(composed).verdict)

    def test_midspace_mismatch(self):
        with self.assertRaises(MidspaceMismatch):
            self.service.compose(square_to_strip(), square_to_strip())

    def test_stats(self):
        stats = self.service.stats(square_to_strip())
        self.assertEqual(stats.piece_count, 2)
        self.assertEqual(stats.vertex_count, 8)
        self.assertEqual(stats.max_tower_depth, 0)
        self.assertEqual(stats.total_area, 1)


def moved_everywhere(dissection: Dissection, motion: RigidMotion) -> Dissection:
    return Dissection(
        dissection.sources,
        [target.transformed(motion) for target in dissection.targets],
        [
            Piece(p.shape, p.source_index, motion.compose(p.motion), p.target_index)
            for p in dissection.pieces
        ],
    )


class TestGlobalMotion(unittest.TestCase):
    def setUp(self):
        self.service = DissectionService()
        sqrt3 = FieldElem(3).sqrt()
        self.motions = [
            RigidMotion.rotation_about(unit_square().vertices[2], "3/5", "4/5"),
            RigidMotion.of("1/2", sqrt3 / 2, sqrt3, "-2/7"),
        ]

    def test_verdict_does_not_move(self):
        strip = Polygon.rectangle(0, 0, 2, 1)
        certificates = [
            square_to_strip(),
            one_piece(unit_square(), RigidMotion.translation("1/2", 0)),
            one_piece(Polygon.rectangle(0, 0, "1/2", 1), RigidMotion.identity()),
            Dissection(
                [strip],
                [strip],
                [
                    Piece(unit_square(), 0, RigidMotion.identity(), 0),
                    Piece(Polygon.rectangle(1, 0, 2, 1), 0, RigidMotion.translation(-1, 0), 0),
                ],
            ),
        ]
        for dissection in certificates:
            before = self.service.verify_dissection(dissection)
            for motion in self.motions:
                after = self.service.verify_dissection(moved_everywhere(dissection, motion))
                self.assertEqual(after.verdict, before.verdict)
                self.assertEqual(after.failed, before.failed)
