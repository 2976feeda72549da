import json
from pathlib import Path

from main import main
from tests.conftest import HALF_SQUARE_TRIANGLE, RIGHT_TRIANGLE_2_1, UNIT_SQUARE


def test_construct_json(capsys):
    code = main(["construct", "--a", "3", "--b", "4", "--report", "json"])
    assert code == 0
    body = json.loads(capsys.readouterr().out)
    assert body["verdict"] is True
    assert [check["name"] for check in body["checks"]] == [
        "COINCIDENCE",
        "EQUILATERALS",
        "CONGRUENCES",
        "PENTAGON_IDENTITY",
        "PARALLELOGRAM",
        "ANGLES",
        "CONCLUSION",
    ]
    angles = body["checks"][5]
    assert "120" in angles["note"]
    assert "150" in angles["note"]
    conclusion = body["checks"][6]
    assert conclusion["witnesses"]["|AD|^2"]["exact"] == "25"


def test_construct_text(capsys):
    code = main(["construct", "--a", "1/2", "--b", "7/3"])
    assert code == 0
    out = capsys.readouterr().out
    assert "PENTAGON_IDENTITY    PASS" in out
    assert out.rstrip().endswith("verdict: PASS")


def test_construct_mirrored(capsys):
    code = main(["construct", "--a", "3", "--b", "4", "--mirrored", "--report", "json"])
    assert code == 0
    body = json.loads(capsys.readouterr().out)
    assert len(body["checks"]) == 5
    assert body["checks"][-1]["note"]


def test_construct_non_positive_leg(capsys):
    assert main(["construct", "--a", "0", "--b", "1"]) == 2
    assert "positive" in capsys.readouterr().err


def test_construct_decimal_refused():
    assert main(["construct", "--a", "0.5", "--b", "1"]) == 2


def test_construct_svg_is_deterministic(tmp_path):
    first, second = tmp_path / "first.svg", tmp_path / "second.svg"
    assert main(["construct", "--a", "3", "--b", "4", "--svg", str(first)]) == 0
    assert main(["construct", "--a", "3", "--b", "4", "--svg", str(second)]) == 0
    text = first.read_text(encoding="utf-8")
    assert text == second.read_text(encoding="utf-8")
    assert text.startswith("<?xml")
    assert text.count("<polygon") == 6
    assert text.count("<text") == 6


def test_construct_svg_matches_stored_figure(tmp_path):
    path = tmp_path / "figure.svg"
    assert main(["construct", "--a", "3", "--b", "4", "--svg", str(path)]) == 0
    expected = Path(__file__).parent / "fixtures" / "configuration_3_4.svg"
    assert path.read_bytes() == expected.read_bytes()


def test_construct_decompositions_figure(tmp_path):
    path = tmp_path / "parts.svg"
    code = main(
        ["construct", "--a", "3", "--b", "4", "--svg", str(path), "--figure", "decompositions"]
    )
    assert code == 0
    assert path.read_text(encoding="utf-8").count("<polygon") == 7


def test_ngon_holds(capsys):
    assert main(["ngon", "--a", "3", "--b", "4", "--c", "5", "--n", "3"]) == 0
    assert "HOLDS" in capsys.readouterr().out


def test_ngon_fails(capsys):
    assert main(["ngon", "--a", "2", "--b", "3", "--c", "4", "--n", "6"]) == 1
    assert "FAILS" in capsys.readouterr().out


def test_ngon_sweep_json(capsys):
    code = main(
        ["ngon", "--a", "5", "--b", "12", "--c", "13", "--n", "3", "--n-max", "8", "--report", "json"]
    )
    assert code == 0
    body = json.loads(capsys.readouterr().out)
    assert [item["n"] for item in body] == [3, 4, 5, 6, 7, 8]
    assert all(item["holds"] for item in body)


def test_ngon_too_few_sides():
    assert main(["ngon", "--a", "3", "--b", "4", "--c", "5", "--n", "2"]) == 2


def test_ngon_empty_range():
    assert main(["ngon", "--a", "3", "--b", "4", "--c", "5", "--n", "6", "--n-max", "4"]) == 2


def test_pythagoras_then_verify(tmp_path, capsys):
    out = tmp_path / "dissection.json"
    assert main(["pythagoras", "--a", "3", "--b", "4", "--out", str(out)]) == 0
    assert "pieces:" in capsys.readouterr().out
    assert main(["verify", "--dissection", str(out), "--report", "json"]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body["verdict"] is True
    assert len(body["checks"]) == 6


def test_pythagoras_tower_limit(tmp_path):
    out = tmp_path / "dissection.json"
    code = main(
        ["pythagoras", "--a", "1", "--b", "1", "--max-tower-depth", "1", "--out", str(out)]
    )
    assert code == 3


def test_pythagoras_unsupported_n(tmp_path):
    out = tmp_path / "dissection.json"
    assert main(["pythagoras", "--a", "3", "--b", "4", "--n", "7", "--out", str(out)]) == 2


def test_wbg_square_to_triangle(tmp_path, write_json):
    square = write_json("square.json", UNIT_SQUARE)
    triangle = write_json("triangle.json", RIGHT_TRIANGLE_2_1)
    out, svg = tmp_path / "d.json", tmp_path / "d.svg"
    code = main(
        ["wbg", "--source", square, "--target", triangle, "--out", str(out), "--svg", str(svg)]
    )
    assert code == 0
    assert out.exists()
    assert "<polygon" in svg.read_text(encoding="utf-8")
    assert main(["verify", "--dissection", str(out)]) == 0


def test_wbg_output_is_deterministic(tmp_path, write_json):
    square = write_json("square.json", UNIT_SQUARE)
    triangle = write_json("triangle.json", RIGHT_TRIANGLE_2_1)
    outputs = []
    for run in ("first", "second"):
        out, svg = tmp_path / f"{run}.json", tmp_path / f"{run}.svg"
        args = ["wbg", "--source", square, "--target", triangle, "--out", str(out)]
        assert main(args + ["--svg", str(svg)]) == 0
        outputs.append((out.read_bytes(), svg.read_bytes()))
    assert outputs[0] == outputs[1]


def test_wbg_area_mismatch(tmp_path, write_json, capsys):
    square = write_json("square.json", UNIT_SQUARE)
    triangle = write_json("triangle.json", HALF_SQUARE_TRIANGLE)
    code = main(
        ["wbg", "--source", square, "--target", triangle, "--out", str(tmp_path / "d.json")]
    )
    assert code == 2
    assert "areas differ" in capsys.readouterr().err


def test_verify_identity(write_json, capsys):
    piece = {
        "shape": UNIT_SQUARE,
        "source_index": 0,
        "motion": {"c": "1", "s": "0", "t": ["0", "0"]},
        "target_index": 0,
    }
    path = write_json(
        "identity.json", {"sources": [UNIT_SQUARE], "targets": [UNIT_SQUARE], "pieces": [piece]}
    )
    assert main(["verify", "--dissection", path]) == 0
    assert "verdict: PASS" in capsys.readouterr().out


def test_verify_bad_motion(write_json, capsys):
    piece = {
        "shape": UNIT_SQUARE,
        "source_index": 0,
        "motion": {"c": "999/1000", "s": "0", "t": ["0", "0"]},
        "target_index": 0,
    }
    path = write_json(
        "scaled.json", {"sources": [UNIT_SQUARE], "targets": [UNIT_SQUARE], "pieces": [piece]}
    )
    assert main(["verify", "--dissection", path]) == 1
    out = capsys.readouterr().out
    assert "MOTION_VALID         FAIL" in out
    assert "verdict: FAIL" in out


def test_verify_unreadable_file(write_json):
    path = write_json("bad.json", {"sources": "nope"})
    assert main(["verify", "--dissection", path]) == 2


def test_zero_denominator_flag(capsys):
    assert main(["construct", "--a", "1/0", "--b", "1"]) == 2
    assert main(["ngon", "--a", "3", "--b", "4", "--c", "5/0", "--n", "3"]) == 2
    assert main(["pythagoras", "--a", "3/0", "--b", "4", "--out", "unused.json"]) == 2
    assert "Traceback" not in capsys.readouterr().err


def test_zero_denominator_in_file(write_json, tmp_path):
    square = write_json("square.json", {"vertices": [["0", "0"], ["1/0", "0"], ["1", "1"]]})
    code = main(
        ["wbg", "--source", square, "--target", square, "--out", str(tmp_path / "d.json")]
    )
    assert code == 2
