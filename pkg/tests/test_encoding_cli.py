import io
import json

import pytest
from hypothesis import given

from permstat.bijections import psi_fv
from permstat.cli import main
from permstat.encoding import format_object, parse, parse_laguerre
from permstat.errors import InvalidInput, ParseError

from .conftest import TAU, permutations


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


# -- encodings ----------------------------------------------------------------


@pytest.mark.parametrize(
    "kind, text",
    [
        ("perm", "5 2 8 7 1 3 6 4 9"),
        ("sf", "3 1 5 5 0 3 2 0 0"),
        ("dyck", "UUDUDD"),
        ("wdp", "UUUUUUDDUDDDDDUUDD;0 0 2 2 0 1 0 0 0"),
        ("laguerre", "UUHUDDhDH;0 0 2 2 0 1 0 0 0;laguerre"),
        ("laguerre", "UUHhDDhH;0 0 2 2 0 1 0 0;large"),
        ("dwsf", "5 4 0 3 0 0 2 0 0;0 0 2 2 0 1 0 0 0"),
        ("composition", "(1,3,2,1,2)"),
        ("parking", "1 1 3 3 3 4 4 5 6"),
        ("tree", "5(2(1,3(,4)),8(7(6,),9))"),
    ],
)
def test_canonical_roundtrip(kind, text):
    assert format_object(parse(kind, text)) == text


def test_compact_digits():
    assert parse("perm", "528713649") == TAU
    assert parse("perm", " 5 2 8 7 1 3 6 4 9 ") == TAU
    assert parse("composition", "1,3,2,1,2") == parse("composition", "(1,3,2,1,2)")


def test_laguerre_kind_defaults_and_mismatch():
    assert parse_laguerre("H;0").kind == "laguerre"
    assert parse_laguerre(";", "large").kind == "large"
    with pytest.raises(ParseError):
        parse_laguerre("H;0;large", "laguerre")


@given(permutations())
def test_wdp_text_roundtrip(sigma):
    x = psi_fv(sigma)
    assert parse("wdp", str(x)) == x


@pytest.mark.parametrize(
    "kind, text, position",
    [
        ("perm", "5 2 x 1", 3),
        ("sf", "0 0 -1", 3),
        ("wdp", "UUDD;0 a", 3),
        ("wdp", "UUXD;0 0", 1),
        ("dwsf", "0 0;0 q", 4),
        ("laguerre", "H;0;wide", 3),
        ("composition", "(1,0x,2)", 2),
    ],
)
def test_parse_error_positions(kind, text, position):
    with pytest.raises(ParseError) as info:
        parse(kind, text)
    assert info.value.position == position
    assert f"position {position}" in str(info.value)


def test_parse_rejects_invalid_objects():
    with pytest.raises(InvalidInput):
        parse("perm", "1 1 2")
    with pytest.raises(InvalidInput):
        parse("wdp", "UDDU;0 0")
    with pytest.raises(InvalidInput):
        parse("widget", "1")
    with pytest.raises(ParseError):
        parse("perm", "1;2")


# -- CLI ----------------------------------------------------------------------


def test_stats_perm():
    code, out = run("stats", "perm", "5 2 8 7 1 3 6 4 9")
    data = json.loads(out)
    assert code == 0
    assert data["tot"] == 5
    assert data["rec"] == [1, 3, 2, 1, 2]
    assert data["gc"] == [4, 1, 1, 1, 2]
    assert sum(data["tot_k"]) == 5 and len(data["tot_k"]) == 9


def test_stats_sf_and_trivial():
    data = json.loads(run("stats", "sf", "3 1 5 5 0 3 2 0 0")[1])
    assert data["lc"] == [4, 1, 1, 1, 2] and data["dc"] == [1, 3, 2, 1, 2]
    data = json.loads(run("stats", "perm", "1")[1])
    assert data["tot"] == 0 and data["rec"] == [1]


def test_stats_other_kinds():
    for kind, text in [
        ("wdp", "UUDD;0 0"),
        ("dwsf", "1 0;0 0"),
        ("laguerre", "UD;0 0"),
        ("composition", "(2,1)"),
    ]:
        code, out = run("stats", kind, text)
        assert code == 0 and json.loads(out)
    code, out = run("stats", "composition", "(2,1)", "--format", "text")
    assert "maj: 2" in out


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["map", "Phi", "3 1 5 5 0 3 2 0 0"], "5 2 8 7 1 3 6 4 9"),
        (["map", "Psi", "5 2 8 7 1 3 6 4 9"], "5 2 8 9 7 1 3 6 4"),
        (["map", "psi", "UD;0"], "UD;0"),
        (["map", "Phi", "--inverse", "528713649"], "3 1 5 5 0 3 2 0 0"),
        (["map", "phi1", "3 1 5 5 0 3 2 0 0"], "5 4 0 3 0 0 2 0 0;0 0 2 2 0 1 0 0 0"),
        (
            ["map", "phi2", "5 4 0 3 0 0 2 0 0;0 0 2 2 0 1 0 0 0"],
            "UUUUUUDDUDDDDDUUDD;0 0 2 2 0 1 0 0 0",
        ),
        (
            ["map", "fv", "--inverse", "UUUUUDUUDDDDDUDDUD;0 0 2 2 0 1 0 0 0"],
            "5 2 8 7 1 3 6 4 9",
        ),
        (["map", "fv0", "1"], "UD;0"),
        (["map", "laguerre", "H;0"], "UD;0"),
        (["map", "large-laguerre", "--inverse", "UUDD;0 0"], "H;0;large"),
        (["map", "parking", "5 4 0 3 0 0 2 0 0"], "1 1 3 3 3 4 4 5 6"),
    ],
)
def test_map_routes(argv, expected):
    code, out = run(*argv)
    assert code == 0
    assert out.strip() == expected


def test_bst():
    code, out = run("bst", "perm", "5 2 8 9 7 1 3 6 4")
    assert code == 0 and out.strip() == "5(2(1,3(,4)),8(7(6,),9))"
    code, out = run("bst", "wdp", "UUUUUUDDUDDDDDUUDD;0 0 2 2 0 1 0 0 0", "--mode", "shifted")
    assert out.strip() == "5(2(1,3(,4)),8(7(6,),9))"


def test_matrix_command():
    code, out = run("matrix", "--n", "1")
    assert code == 0 and json.loads(out)["entries"] == [[[1]]]
    code, out = run("matrix", "--n", "3", "--family", "sf", "--format", "text")
    assert code == 0 and len(out.strip().splitlines()) == 4


def test_verify_command():
    code, out = run("verify", "--n-max", "4")
    assert code == 0 and out.strip().endswith("all checks passed")
    code, out = run("verify", "--n-max", "3", "--check", "theorem", "--format", "json")
    report = json.loads(out)
    assert report["passed"] and len(report["matrices"]) == 9


@pytest.mark.parametrize(
    "argv",
    [
        ["stats", "perm", "5 2 x"],
        ["stats", "perm", "1 1"],
        ["map", "psi", "5 2 1 3 4"],
        ["map", "fv0", "--inverse", "UUDD;0 1"],
        ["matrix", "--n", "40"],
        ["bst", "wdp", "UDUD;0 0", "--mode", "direct", "extra"],
        ["map", "nowhere", "1"],
        [],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    try:
        code = main(argv, out=io.StringIO())
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_parse_error_reports_position(capsys):
    code, _ = run("stats", "perm", "5 2 x")
    assert code == 2
    assert "position 3" in capsys.readouterr().err


def test_invariant_violation_exits_1(monkeypatch, capsys):
    from permstat import bijections, cli
    from permstat.errors import InvariantViolation

    def broken(_):
        raise InvariantViolation("placeholder left in the middle")

    monkeypatch.setitem(cli.ROUTES, "fv", ("perm", broken, "wdp", bijections.psi_fv_inv))
    code, _ = run("map", "fv", "1 2")
    assert code == 1
    assert "invariant" in capsys.readouterr().err


def test_failed_check_exits_1(monkeypatch):
    from permstat import cli
    from permstat.verify import CheckResult

    def failing(n_max, checks, jobs=1):
        result = CheckResult("theorem", 1)
        result.expect(False, "forced")
        return [result]

    monkeypatch.setattr(cli, "run_checks", failing)
    code, out = run("verify", "--n-max", "1")
    assert code == 1 and "SOME CHECKS FAILED" in out
