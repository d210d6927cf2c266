import json

import pytest

from glrs.cli import main
from glrs.errors import ParseError
from glrs.presets import LAM, PRESETS, load_preset, spec_for
from glrs.scalar import lam
from glrs.workbench import (InputError, Report, emit_report, expand_suites, export_spec, parse_spec,
                            resolve_targets, run_suite)


@pytest.mark.parametrize("name", PRESETS)
def test_round_trip(name):
    text = export_spec(name)
    spec = parse_spec(text)
    assert export_spec(spec.data) == text


def test_lambda_entry():
    spec = parse_spec(export_spec("ars"))
    assert spec.preset.rmatrix is not None
    from glrs.presets import _scalar
    assert _scalar(LAM, ["r"]) == lam()


def test_syntax_error_has_position():
    text = export_spec("ars").replace('"b*c = c*b"', '"r +"', 1)
    with pytest.raises(ParseError) as exc:
        parse_spec(text)
    e = exc.value
    assert e.where == "relations[4]"
    line = text.splitlines()[e.line - 1]
    # end of input: one past the "+", i.e. on the closing quote
    assert line.strip() == '"r +",'
    assert e.column == line.index('"r +"') + 5


def test_undeclared_symbol_position():
    text = export_spec("ars").replace('"b*c = c*b"', '"b*c = c*z"', 1)
    with pytest.raises(ParseError) as exc:
        parse_spec(text)
    e = exc.value
    assert text.splitlines()[e.line - 1][e.column - 1] == "z"


def test_json_error_and_dimension_error():
    with pytest.raises(ParseError) as exc:
        parse_spec('{"version": 1,\n  "name": }')
    assert exc.value.line == 2
    data = json.loads(export_spec("ars"))
    data["rmatrix"]["entries"].pop()
    with pytest.raises(ParseError, match="9x9"):
        parse_spec(json.dumps(data))
    data = json.loads(export_spec("ars"))
    data["tpattern"][1][1] = "q"
    with pytest.raises(ParseError, match="undeclared"):
        parse_spec(json.dumps(data))


def test_index_order_defaults_to_block_order():
    data = json.loads(export_spec("ars"))
    del data["rmatrix"]["index_order"]
    p = parse_spec(json.dumps(data)).preset
    assert p.rmatrix.to_display([(i, j) for i in range(3) for j in range(3)]) == \
        load_preset("ars").rmatrix.to_display([(i, j) for i in range(3) for j in range(3)])


def test_perturbed_qybe_fails_with_coordinates():
    data = spec_for("ars")
    data["rmatrix"]["entries"] = [[f"2*{LAM}" if x == LAM else x for x in row] for row in data["rmatrix"]["entries"]]
    p = parse_spec(json.dumps(data)).preset
    rep = run_suite([p], ["qybe"])
    assert [(r.suite, r.status) for r in rep.records] == [("qybe", "fail")]
    assert "first at ((" in rep.records[0].detail
    assert rep.exit_code == 1


def test_empty_suite_list():
    rep = run_suite([load_preset("ars")], [])
    assert rep.records == []
    assert rep.summary() == {"pass": 0, "fail": 0, "inconclusive": 0, "error": 0}
    assert rep.exit_code == 0


def test_bad_inputs():
    with pytest.raises(InputError):
        expand_suites(["nope"])
    with pytest.raises(InputError):
        run_suite([load_preset("amk")], ["qybe"])
    with pytest.raises(InputError):
        run_suite([load_preset("ars")], ["qybe"], max_degree=1)
    with pytest.raises(InputError):
        resolve_targets(["xyz"])
    with pytest.raises(InputError):
        emit_report(Report(), "yaml")


def test_suite_order_is_fixed():
    assert expand_suites(["jordanian", "qybe"]) == ["qybe", "jordanian"]
    assert expand_suites(["all"])[0] == "qybe"


def test_spec_file_matches_preset():
    suites = ["qybe", "rtt-vs-paper", "coideal", "bialgebra", "antipode", "qdet", "smash", "pq-realization"]
    a = run_suite([load_preset("ars")], suites).to_dict(timing=False)
    b = run_suite([parse_spec(export_spec("ars")).preset], suites).to_dict(timing=False)
    assert a == b


def test_report_schema():
    rep = run_suite([load_preset("ars")], ["qybe", "coideal"])
    data = json.loads(emit_report(rep, "json"))
    assert set(data) == {"version", "max_degree", "records", "summary"}
    assert data["summary"] == {"pass": 2, "fail": 0, "inconclusive": 0, "error": 0}
    assert list(data["records"][0]) == ["suite", "check", "target", "status", "detail", "elapsed"]
    text = emit_report(rep, "text")
    assert text.splitlines()[-1].startswith("summary: pass 2")


def test_cli_check_and_exit_codes(tmp_path, capsys):
    assert main(["check", "qybe", "coideal", "--preset", "ars"]) == 0
    out = tmp_path / "r.json"
    assert main(["check", "qybe", "--preset", "ars", "--report", "json", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["summary"]["pass"] == 1
    bad = tmp_path / "bad.json"
    bad.write_text('{"version": 1,')
    assert main(["check", "all", "--spec", str(bad)]) == 2
    assert "line 1" in capsys.readouterr().err
    assert main(["check", "nope", "--preset", "ars"]) == 2
    assert main(["check", "rll", "--preset", "ars"]) == 2


def test_cli_rll_fails_on_printed_list(capsys):
    assert main(["check", "rll", "--preset", "ars-dual"]) == 1
    assert "FAIL         rll/ars-dual: ideal-equivalence" in capsys.readouterr().out


def test_cli_export_and_derive(tmp_path, capsys):
    out = tmp_path / "ars.json"
    assert main(["export", "--preset", "ars", "--out", str(out)]) == 0
    assert out.read_text() == export_spec("ars")
    assert main(["export", "--preset", "xyz"]) == 2
    capsys.readouterr()
    assert main(["derive", "rtt"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 10
    assert main(["derive", "rll"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 28
    assert main(["derive", "calculus", "--report", "json"]) == 0
    recs = json.loads(capsys.readouterr().out)["records"]
    assert {"sigma[w2,b]", "chi[chi1,a]", "d[f]"} <= {r["check"] for r in recs}
    assert main(["derive", "rtt", "--preset", "amk"]) == 2
