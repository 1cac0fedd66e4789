"""Scene-grammar diagnostics, record round-trips, and exit-code contracts."""

import pytest

from geomideal.cli import (
    SceneError,
    emit_records,
    main,
    parse_records,
    parse_scene,
    records_to_report,
    render_text,
    report_to_records,
)
from geomideal.classify import classify

MINIMAL_P1 = """\
field rational
dim 1
sigma
1 0
0 1
ideal
x0
end
"""

FAT_POINT = """\
# non-reduced point with sigma-fixed support
field rational
dim 2
sigma
1 0 0
0 2 0
0 0 3
ideal
x0 + x1
x0^2
end
"""

FLAGSHIP = """\
field rational
dim 2
sigma
1 0 0
0 2 0
0 0 3
ideal
x0 - x2
x1 - x2
end
point [1:1:1]
horizon 8
maxdeg 4
declare gorenstein-z
"""


def scene_path(tmp_path, text, name="scene.scene"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def codes(err: SceneError):
    return [d.code for d in err.value.diagnostics]


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def test_minimal_scene_parses():
    sf = parse_scene(MINIMAL_P1)
    assert sf.ring.nvars == 2
    assert len(sf.ideal.gens) == 1
    assert sf.points == () and sf.against is None


def test_fat_point_scene_parses():
    sf = parse_scene(FAT_POINT)
    assert sf.ring.nvars == 3
    assert len(sf.ideal.gens) == 2


def test_comments_and_blanks_ignored():
    text = "# header\n\nfield rational  # inline\n" + MINIMAL_P1.split("\n", 1)[1]
    sf = parse_scene(text)
    assert sf.ring.nvars == 2


def test_full_grammar():
    text = FLAGSHIP + "component\nx0 - x2\nx1 - x2\nend\noracle 5\norder-bound 7\ndeclare smooth-z\n"
    sf = parse_scene(text)
    assert sf.horizon == 8 and sf.maxdeg == 4 and sf.oracle == 5
    assert sf.order_bound == 7
    assert sf.gorenstein_z and sf.smooth_z
    assert len(sf.components) == 1 and sf.components[0][1] is None
    assert str(sf.points[0]) == "[1 : 1 : 1]"


def test_component_prime_marker():
    text = FAT_POINT + "component\nx0 + x1\nx0^2\nprime\nx0\nx1\nend\n"
    sf = parse_scene(text)
    (comp, prime) = sf.components[0]
    assert len(comp.gens) == 2 and len(prime.gens) == 2


def test_singular_sigma_diagnostic():
    text = MINIMAL_P1.replace("1 0\n0 1", "1 1\n1 1")
    with pytest.raises(SceneError) as err:
        parse_scene(text)
    assert codes(err) == ["SINGULAR_SIGMA"]
    assert err.value.diagnostics[0].line == 3


def test_non_square_sigma_diagnostic():
    text = MINIMAL_P1.replace("1 0\n0 1", "1 0 0\n0 1 0")
    with pytest.raises(SceneError) as err:
        parse_scene(text)
    assert "NON_SQUARE_SIGMA" in codes(err)


def test_truncated_sigma_diagnostic():
    text = MINIMAL_P1.replace("1 0\n0 1\n", "1 0\n")
    with pytest.raises(SceneError) as err:
        parse_scene(text)
    assert "NON_SQUARE_SIGMA" in codes(err)


def test_bad_rational_diagnostic():
    text = MINIMAL_P1.replace("0 1", "0 1/0")
    with pytest.raises(SceneError) as err:
        parse_scene(text)
    assert codes(err) == ["BAD_RATIONAL"]


def test_inhomogeneous_generator_diagnostic():
    text = MINIMAL_P1.replace("x0\n", "x0 + x0*x1\n")
    with pytest.raises(SceneError) as err:
        parse_scene(text)
    assert codes(err) == ["INHOMOGENEOUS_GENERATOR"]


def test_bad_generator_diagnostic():
    text = MINIMAL_P1.replace("x0\n", "x0 +* x1\n")
    with pytest.raises(SceneError) as err:
        parse_scene(text)
    assert codes(err) == ["BAD_GENERATOR"]


def test_missing_end_diagnostic():
    with pytest.raises(SceneError) as err:
        parse_scene(MINIMAL_P1.replace("x0\nend\n", "x0\n"))
    assert "MISSING_END" in codes(err)


def test_missing_directives_all_reported():
    with pytest.raises(SceneError) as err:
        parse_scene("horizon 4\n")
    assert set(codes(err)) == {
        "MISSING_FIELD", "MISSING_DIM", "MISSING_SIGMA", "MISSING_IDEAL"
    }


def test_point_diagnostics():
    with pytest.raises(SceneError) as err:
        parse_scene(FLAGSHIP.replace("point [1:1:1]", "point [1:1]"))
    assert codes(err) == ["BAD_POINT"]
    with pytest.raises(SceneError) as err:
        parse_scene(FLAGSHIP.replace("point [1:1:1]", "point [1:one:1]"))
    assert codes(err) == ["BAD_RATIONAL"]


def test_bad_field_diagnostic():
    with pytest.raises(SceneError) as err:
        parse_scene(MINIMAL_P1.replace("field rational", "field prime 6"))
    assert "BAD_FIELD" in codes(err)


def test_prime_field_scene():
    sf = parse_scene(MINIMAL_P1.replace("field rational", "field prime 7"))
    assert sf.ring.field.p == 7


def test_multiple_diagnostics_collected():
    text = MINIMAL_P1.replace("field rational", "flied rational")
    with pytest.raises(SceneError) as err:
        parse_scene(text)
    assert "UNKNOWN_DIRECTIVE" in codes(err)
    assert "MISSING_FIELD" in codes(err)


# ---------------------------------------------------------------------------
# records
# ---------------------------------------------------------------------------

def test_records_round_trip_dicts():
    recs = [{"record": "bezout", "total": "4"},
            {"record": "tor", "j": 1, "degree": 0, "dimension": 0}]
    assert parse_records(emit_records(recs)) == recs


def test_classification_report_round_trips():
    sf = parse_scene(FLAGSHIP)
    rep = classify(sf.scene(), sample_points=sf.points, horizon=sf.horizon)
    recs = report_to_records(rep)
    assert records_to_report(parse_records(emit_records(recs))) == rep


def test_records_to_report_needs_header():
    with pytest.raises(ValueError):
        records_to_report([{"record": "row"}])


def test_empty_report_renders_header_only():
    text = render_text([{"record": "tor-table", "j_max": 3, "degrees": 6}])
    assert text == "# tor table (j = 0..3, degrees 0..6)\n"


# ---------------------------------------------------------------------------
# the command line
# ---------------------------------------------------------------------------

def test_gb_exit_zero(tmp_path, capsys):
    assert main(["gb", scene_path(tmp_path, MINIMAL_P1)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# groebner basis (1 generators")


def test_parse_error_exit_two(tmp_path, capsys):
    bad = MINIMAL_P1.replace("1 0\n0 1", "1 1\n1 1")
    assert main(["gb", scene_path(tmp_path, bad)]) == 2
    assert "SINGULAR_SIGMA" in capsys.readouterr().err


def test_missing_file_exit_two(tmp_path, capsys):
    assert main(["gb", str(tmp_path / "absent.scene")]) == 2


def test_usage_error_exit_two(tmp_path, capsys):
    assert main(["tor", scene_path(tmp_path, MINIMAL_P1)]) == 2
    assert "against" in capsys.readouterr().err


def test_verification_failure_exit_three(tmp_path, capsys):
    bad = FAT_POINT + "component\nx0\nend\n"
    assert main(["classify", scene_path(tmp_path, bad)]) == 3
    assert "Hilbert functions diverge" in capsys.readouterr().err


def test_resource_cap_exit_four(tmp_path, capsys):
    assert main(["idealizer", scene_path(tmp_path, MINIMAL_P1),
                 "--max-degree", "99"]) == 4
    assert "cap" in capsys.readouterr().err


def test_byte_identical_runs(tmp_path, capsys):
    path = scene_path(tmp_path, FLAGSHIP)
    assert main(["classify", path, "--format", "records"]) == 0
    first = capsys.readouterr().out
    assert main(["classify", path, "--format", "records"]) == 0
    assert capsys.readouterr().out == first


def test_classify_cli_emits_eight_rows(tmp_path, capsys):
    assert main(["classify", scene_path(tmp_path, FLAGSHIP),
                 "--format", "records"]) == 0
    recs = parse_records(capsys.readouterr().out)
    rows = [r for r in recs if r["record"] == "row"]
    assert len(rows) == 8
    by_name = {r["predicate"]: r for r in rows}
    assert by_name["right-noetherian"]["evidence"] == "heuristic"
    assert by_name["left-noetherian"]["evidence"] == "certified"
    assert by_name["strongly-left-noetherian"]["verdict"] == "no"


def test_classify_text_heuristic_rows_never_say_certified(tmp_path, capsys):
    assert main(["classify", scene_path(tmp_path, FAT_POINT)]) == 0
    out = capsys.readouterr().out.splitlines()
    for i, line in enumerate(out):
        if "[heuristic" in line:
            assert "certified" not in line
            assert "certified" not in out[i + 1]


def test_twist_check_text(tmp_path, capsys):
    assert main(["twist-check", scene_path(tmp_path, FLAGSHIP)]) == 0
    out = capsys.readouterr().out
    assert "x0*x1 = 2 * x1*x0" in out
    assert "associative on 27 degree-1 triples: yes" in out


def test_idealizer_oracle_column(tmp_path, capsys):
    path = scene_path(tmp_path, FLAGSHIP)
    assert main(["idealizer", path, "--max-degree", "3",
                 "--oracle-horizon", "4"]) == 0
    out = capsys.readouterr().out
    assert "oracle" in out and "agree" in out and "disagree" not in out


def test_stdin_scene(monkeypatch, capsys):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(MINIMAL_P1))
    assert main(["gb", "-"]) == 0
    assert "groebner" in capsys.readouterr().out


def test_horizon_override(tmp_path, capsys):
    path = scene_path(tmp_path, MINIMAL_P1)
    assert main(["colon", path, "--horizon", "3"]) == 0
    out = capsys.readouterr().out
    assert "degrees 1..3" in out
