import json
import tempfile
import unittest
from pathlib import Path

from src.exceptions import InvalidInput
from src.models.geom2d import Polygon
from src.repositories.files import DissectionRepo, PolygonRepo
from tests.conftest import UNIT_SQUARE, square_to_strip


class FileRepoTestCase(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.root = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def write(self, name: str, text: str) -> Path:
        path = self.root / name
        path.write_text(text, encoding="utf-8")
        return path


class TestPolygonRepo(FileRepoTestCase):
    def setUp(self):
        super().setUp()
        self.repo = PolygonRepo()

    def test_load(self):
        path = self.write("square.json", json.dumps(UNIT_SQUARE))
        self.assertEqual(self.repo.load(path), Polygon.rectangle(0, 0, 1, 1))

    def test_save_and_load(self):
        triangle = Polygon.of((0, 0), ("1/2", 0), (0, "3/7"))
        path = self.repo.save(self.root / "triangle.json", triangle)
        self.assertEqual(self.repo.load(path), triangle)

    def test_missing_file(self):
        with self.assertRaises(InvalidInput):
            self.repo.load(self.root / "nope.json")

    def test_malformed_json(self):
        path = self.write("broken.json", '{"vertices": [')
        with self.assertRaises(InvalidInput):
            self.repo.load(path)

    def test_degenerate_polygon(self):
        body = {"vertices": [["0", "0"], ["1", "1"], ["2", "2"]]}
        path = self.write("line.json", json.dumps(body))
        with self.assertRaises(InvalidInput):
            self.repo.load(path)


class TestDissectionRepo(FileRepoTestCase):
    def setUp(self):
        super().setUp()
        self.repo = DissectionRepo()

    def test_save_and_load(self):
        path = self.repo.save(self.root / "strip.json", square_to_strip())
        loaded = self.repo.load(path)
        self.assertEqual(loaded.sources, square_to_strip().sources)
        self.assertEqual(len(loaded.pieces), 2)
        self.assertEqual(loaded.pieces[1].motion, square_to_strip().pieces[1].motion)

    def test_saved_file_is_indented(self):
        path = self.repo.save(self.root / "strip.json", square_to_strip())
        text = path.read_text(encoding="utf-8")
        self.assertTrue(text.endswith("\n"))
        self.assertIn('\n  "sources"', text)

    def test_bad_piece_index(self):
        body = {
            "sources": [UNIT_SQUARE],
            "targets": [UNIT_SQUARE],
            "pieces": [
                {
                    "shape": UNIT_SQUARE,
                    "source_index": 0,
                    "motion": {"c": "1", "s": "0", "t": ["0", "0"]},
                    "target_index": 3,
                }
            ],
        }
        path = self.write("dangling.json", json.dumps(body))
        with self.assertRaises(InvalidInput):
            self.repo.load(path)

    def test_reflections_flag(self):
        body = {"sources": [UNIT_SQUARE], "targets": [UNIT_SQUARE], "allow_reflections": True}
        path = self.write("mirror.json", json.dumps(body))
        with self.assertRaises(InvalidInput):
            self.repo.load(path)
