import json
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from cli.app import build_parser, read_json, run
from core.errors import InvalidInput

FIXTURES = ROOT / "fixtures"


def _fixture(name: str) -> str:
    return str(FIXTURES / name)


def _run_json(capsys, argv):
    code = run(argv)
    return code, json.loads(capsys.readouterr().out)


def test_parser_knows_every_verb():
    parser = build_parser()
    for verb in ("cover", "periods", "autos", "extend", "realize", "hurwitz", "haupt", "bounds"):
        assert parser.parse_args(_minimal_args(verb)).verb == verb


def _minimal_args(verb: str):
    if verb in {"cover", "periods", "autos", "extend"}:
        return [verb, "--cover", "{}"]
    if verb in {"realize", "hurwitz"}:
        return [verb, "--group", "{}"]
    if verb == "haupt":
        return [verb, "--character", "{}"]
    return [verb, "--genus", "2"]


def test_hurwitz_from_fixture(capsys):
    code, payload = _run_json(capsys, ["hurwitz", "--group", _fixture("psl27.json")])

    assert code == 0
    assert payload["genus"] == 3
    assert payload["aut"] == "168"
    assert payload["bound"] == "OkExtremal"
    assert len(payload["hash"]) == 64


def test_hurwitz_without_a_tuple(capsys):
    code, payload = _run_json(capsys, ["hurwitz", "--group", _fixture("z5.json")])

    assert code == 0
    assert payload == {"found": False, "group_order": 5}


def test_haupt_inline_character(capsys):
    code, payload = _run_json(capsys, ["haupt", "--character", '{"genus": 1, "alpha": ["1"], "beta": ["i"]}'])

    assert code == 0
    assert payload["verdict"] == "FailsLatticeCondition"
    assert payload["volume"] == "1"
    assert payload["factors_through_sphere_cover"] is False

    code, payload = _run_json(capsys, ["haupt", "--character", _fixture("character_square.json")])
    assert payload["lattice"] == {"kind": "Lattice", "covolume": "1"}


def test_bounds_table(capsys):
    code = run(["bounds", "--genus", "2", "--large", "false"])
    out = capsys.readouterr().out

    assert code == 0
    assert "max degree" in out
    assert "4" in out.splitlines()[1]


def test_bounds_json_with_check(capsys):
    code, payload = _run_json(
        capsys, ["bounds", "--genus", "3", "--large", "true", "--aut-size", "168", "--format", "json"]
    )

    assert code == 0
    assert payload["max_degree"]["degree"] == 168
    assert payload["check"]["verdict"] == "OkExtremal"


def test_cover_and_periods(capsys):
    code, payload = _run_json(capsys, ["cover", "--cover", _fixture("symmetric_cover.json")])
    assert code == 0
    assert payload["surface"]["genus"] == 1
    assert payload["surface"]["kind"] == "third"

    code, payload = _run_json(capsys, ["periods", "--cover", _fixture("log_cover.json")])
    assert code == 0
    assert payload["period_lattice"]["generators"] == [{"re": "2", "im": "0"}]
    assert payload["period_lattice"]["unit"] == "2*pi*i"


def test_autos_bounded_and_refused(capsys):
    code, payload = _run_json(capsys, ["autos", "--cover", _fixture("symmetric_cover.json")])
    assert code == 0
    assert (payload["aut"]["lower"], payload["aut"]["upper"]) == (2, 4)
    assert payload["is_large"] == "unknown"

    assert run(["autos", "--cover", _fixture("log_cover.json")]) == 3
    assert run(["extend", "--cover", _fixture("symmetric_cover.json")]) == 3


def test_table_output(capsys):
    assert run(["cover", "--cover", _fixture("symmetric_cover.json"), "--format", "table"]) == 0
    out = capsys.readouterr().out
    assert "order" in out.splitlines()[0]
    assert "count" in out.splitlines()[0]


def test_input_errors_exit_with_two(capsys):
    assert run(["haupt", "--character", "{"]) == 2
    assert run(["haupt", "--character", '{"genus": 1, "alpha": [0.5], "beta": ["i"]}']) == 2
    assert run(["haupt", "--character", '{"genus": 1, "alpha": ["1"], "beta": ["i"], "extra": 1}']) == 2
    assert run(["realize", "--group", '{"catalog": "S3", "degree": 3}']) == 2
    assert run(["realize"]) == 2
    assert run(["bounds"]) == 2
    assert capsys.readouterr().out == ""


def test_read_json_reports_position():
    with pytest.raises(InvalidInput, match="line 2 column 1"):
        read_json('{"a": 1,\n}')


def test_realize_output_and_verify(tmp_path, capsys):
    target = tmp_path / "s3.json"
    code, payload = _run_json(capsys, ["realize", "--group", '{"catalog": "S3"}', "--output", str(target)])

    assert code == 0
    assert payload["aut"] == "6"
    assert json.loads(target.read_text(encoding="utf-8")) == payload

    code, report = _run_json(capsys, ["realize", "--verify", str(target)])
    assert code == 0
    assert report["ok"] is True

    payload["aut"] = "12"
    target.write_text(json.dumps(payload), encoding="utf-8")
    code, report = _run_json(capsys, ["realize", "--verify", str(target)])
    assert code == 2
    assert report["ok"] is False
    assert report["agreements"]["aut"] is False


def test_realize_third_kind(capsys):
    code, payload = _run_json(
        capsys, ["realize", "--group", _fixture("z2.json"), "--kind", "third", "--residue", "1/2"]
    )

    assert code == 0
    assert payload["kind"] == "third"
    assert payload["construction"]["residue"] == {"re": "1/2", "im": "0"}
