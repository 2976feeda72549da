import json

import pytest

from src.models.geom2d import Polygon, RigidMotion
from src.models.dissection import Dissection, Piece

UNIT_SQUARE = {"vertices": [["0", "0"], ["1", "0"], ["1", "1"], ["0", "1"]]}

RIGHT_TRIANGLE_2_1 = {"vertices": [["0", "0"], ["2", "0"], ["0", "1"]]}

HALF_SQUARE_TRIANGLE = {"vertices": [["0", "0"], ["1", "0"], ["0", "1"]]}


def unit_square() -> Polygon:
    return Polygon.rectangle(0, 0, 1, 1)


def square_to_strip() -> Dissection:
    """The unit square cut in half horizontally and laid out as a 2 x 1/2 strip."""
    return Dissection(
        sources=[unit_square()],
        targets=[Polygon.rectangle(0, 0, 2, "1/2")],
        pieces=[
            Piece(Polygon.rectangle(0, 0, 1, "1/2"), 0, RigidMotion.identity(), 0),
            Piece(
                Polygon.rectangle(0, "1/2", 1, 1),
                0,
                RigidMotion.translation(1, "-1/2"),
                0,
            ),
        ],
    )


@pytest.fixture
def write_json(tmp_path):
    def _write(name: str, body) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(body), encoding="utf-8")
        return str(path)

    return _write
