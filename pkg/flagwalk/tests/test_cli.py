"""Tests for the command-line interface."""

import json
from io import StringIO
from pathlib import Path
from typing import NoReturn

import pytest

from flagwalk.cli import main as cli_main
from flagwalk.cli.main import build_parser, run
from flagwalk.repositories import FixtureRepository
from flagwalk.services.families import build_H
from flagwalk.services.flagmap import read_mapfile, write_mapfile


@pytest.fixture(scope="module")
def fixtures_dir(tmp_path_factory: pytest.TempPathFactory) -> Path:
    target = tmp_path_factory.mktemp("fixtures")
    FixtureRepository().export(target)
    return target


def _run(argv: list[str], stdin: str = "") -> tuple[int, str]:
    out = StringIO()
    code = run(argv, stdin=StringIO(stdin), stdout=out)
    return code, out.getvalue()


def test_parser_reads_options() -> None:
    parser = build_parser()
    args = parser.parse_args(["walks", "x.map", "--group", "rotation", "--json"])
    assert (args.command, args.input, args.group, args.json) == ("walks", "x.map", "rotation", True)


def test_info(fixtures_dir: Path) -> None:
    code, out = _run(["info", str(fixtures_dir / "tetrahedron.map")])
    assert code == 0
    assert "V=4 E=6 F=4 chi=2 genus 0 orientable" in out
    assert "|Aut|=24" in out


def test_info_json(fixtures_dir: Path) -> None:
    code, out = _run(["info", str(fixtures_dir / "pp_loop.map"), "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["orientable"] is False
    assert data["crosscaps"] == 1
    assert data["group_order"] == 4


def test_generate_dual_and_sym_pipeline() -> None:
    code, generated = _run(["gen", "--family", "H", "--n", "12", "--a", "3"])
    assert code == 0
    assert read_mapfile(generated) == build_H(12, 3)

    code, dualized = _run(["dual", "-"], stdin=generated)
    assert code == 0
    assert read_mapfile(dualized).name == "D(H(12,3))"

    code, out = _run(["sym", "-"], stdin=dualized)
    assert code == 0
    assert out.strip() == "2_01"


def test_petrie_command(fixtures_dir: Path) -> None:
    code, out = _run(["petrie", str(fixtures_dir / "tetrahedron.map")])
    assert code == 0
    assert read_mapfile(out).name == "P(tetrahedron)"


def test_walks_json(fixtures_dir: Path) -> None:
    code, out = _run(["walks", str(fixtures_dir / "tetrahedron.map"), "--group", "full", "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["expected_rows"] == 4
    assert [(row["kind"], row["j"]) for row in data["rows"]] == [
        ("hole", 1),
        ("petrie", 1),
        ("hole", 2),
        ("petrie", 2),
    ]
    assert all(row["symmetric"] for row in data["rows"])


def test_walks_text_for_a_family() -> None:
    code, out = _run(["walks", "--family", "M", "--n", "3"])
    assert code == 0
    first = out.splitlines()[0]
    assert first.startswith("q=3 ")
    assert first.endswith("orbits=4")


def test_classify_json(fixtures_dir: Path) -> None:
    code, out = _run(["classify", str(fixtures_dir / "tetrahedron.map"), "--json"])
    assert code == 0
    items = json.loads(out)["items"]
    assert len(items) == 4
    assert items[0]["primary"] == "cycle"
    assert items[0]["labels"][0] == {
        "tag": "cycle",
        "length": 3,
        "d": None,
        "parity": None,
        "edge_count": None,
        "bead_count": None,
        "d_prime": None,
        "half_length": None,
        "sign": None,
    }


def test_cyclets_text(fixtures_dir: Path) -> None:
    code, out = _run(["cyclets", str(fixtures_dir / "tetrahedron.map")])
    assert code == 0
    assert out.strip() == "2 cyclet orbits, matches q - 1 = 2"


def test_export_fixtures(tmp_path: Path) -> None:
    code, out = _run(["export-fixtures", str(tmp_path), "--json"])
    assert code == 0
    assert json.loads(out) == {"message": "Exported 6 fixtures", "success": True}
    assert sorted(p.name for p in tmp_path.iterdir()) == sorted(
        f"{name}.map" for name in FixtureRepository().names()
    )


def test_validate_reports_invalid_map(capsys: pytest.CaptureFixture[str]) -> None:
    text = '{"flags": 4, "r0": [1,0,3,2], "r1": [1,0,3,2], "r2": [2,3,0,1]}'
    code, out = _run(["validate", "-"], stdin=text)
    assert code == 1
    assert out.startswith("invalid")
    assert "distinct_neighbours" in out

    code, _ = _run(["info", "-"], stdin=text)
    assert code == 1
    assert "error: Map axioms violated" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["info"],
        ["frobnicate"],
        ["gen"],
        ["gen", "--family", "H", "--n", "12"],
        ["gen", "--family", "M", "--n", "4", "--a", "1"],
        ["info", "missing.map", "--family", "M", "--n", "3"],
        ["info", "definitely/not/here.map"],
        ["walks", "--family", "M", "--n", "1"],
    ],
)
def test_usage_errors(argv: list[str]) -> None:
    code, _ = _run(argv)
    assert code == 2


def test_malformed_mapfile_is_a_usage_error(capsys: pytest.CaptureFixture[str]) -> None:
    code, _ = _run(["info", "-"], stdin="{not json")
    assert code == 2
    assert capsys.readouterr().err.startswith("error: ")


def test_json_error_payload(fixtures_dir: Path) -> None:
    code, out = _run(["walks", str(fixtures_dir / "pp_loop.map"), "--group", "rotation", "--json"])
    assert code == 2
    data = json.loads(out)
    assert data["success"] is False
    assert "orientable" in data["message"]


def test_round_trip_through_stdin(fixtures_dir: Path) -> None:
    text = (fixtures_dir / "M12_7.map").read_text(encoding="utf-8")
    code, out = _run(["dual", "-"], stdin=text)
    assert code == 0
    _, back = _run(["dual", "-"], stdin=out)
    assert back.strip() == write_mapfile(read_mapfile(text)) == text.strip()


def test_generated_map_is_validated(capsys: pytest.CaptureFixture[str]) -> None:
    code, out = _run(["gen", "--family", "H", "--n", "6", "--a", "0"])
    assert code == 1
    assert out == ""
    assert "error: Map axioms violated" in capsys.readouterr().err


def test_internal_errors_have_their_own_code(
    fixtures_dir: Path, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
) -> None:
    def broken(*_: object) -> NoReturn:
        raise RuntimeError("boom")

    monkeypatch.setitem(cli_main._REPORTS, "sym", broken)
    code, _ = _run(["sym", str(fixtures_dir / "tetrahedron.map")])
    assert code == 4
    err = capsys.readouterr().err
    assert "error: Internal error" in err
    assert "boom" in err
