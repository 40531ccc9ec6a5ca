"""Command-line surface: text output, JSON round-trips, exit codes."""

import json

import pytest

from eulab.checks import CheckReport
from eulab.cli import main
from eulab.enumerators import Enumerator, EnumeratorKind, build
from eulab.perms import parse_perm
from eulab.poly import MultiPoly, parse_poly


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_perm_stats_text(capsys):
    code, out, _ = run(capsys, "perm", "stats", "2 1 3")
    assert code == 0
    assert out.strip() == "des=1 asc=1 M=0 V=1 da=1 dd=1 lrmin=2 rlmin=2"


def test_perm_stats_json(capsys):
    code, out, _ = run(capsys, "perm", "stats", "2 1 3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["des"] == 1
    assert payload["lrmin"] == 2


def test_perm_orbit_text(capsys):
    code, out, _ = run(capsys, "perm", "orbit", "2 1 3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "size=4 rep=1 2 3"
    assert lines[1:] == ["1 2 3", "2 1 3", "3 1 2", "3 2 1"]


def test_perm_orbit_dot(capsys):
    code, out, _ = run(capsys, "perm", "orbit", "2 1 3", "--dot")
    assert code == 0
    assert out.startswith("graph ")
    assert '"1 2 3" [style=bold]' in out


def test_perm_orbit_json(capsys):
    code, out, _ = run(capsys, "perm", "orbit", "2 1 3", "--json")
    payload = json.loads(out)
    assert payload["size"] == 4
    assert parse_perm(payload["representative"]) == (1, 2, 3)
    assert [parse_perm(w) for w in payload["members"]] == [
        (1, 2, 3), (2, 1, 3), (3, 1, 2), (3, 2, 1),
    ]


def test_poly_commands(capsys):
    code, out, _ = run(capsys, "poly", "bse", "-n", "2")
    assert code == 0
    assert out.strip() == "α^2*x^2 + 2*α^2*x*y + α^2*y^2 + α*x*y"

    code, out, _ = run(capsys, "poly", "ptilde", "-n", "1")
    assert code == 0
    assert out.strip() == "α*u3 + α*u5"


def test_poly_json_round_trip(capsys):
    for kind in ("bse", "bse-z", "ptilde", "se"):
        code, out, _ = run(capsys, "poly", kind, "-n", "2", "--json")
        assert code == 0
        e = Enumerator.from_json(json.loads(out))
        assert e.value == build(EnumeratorKind(kind), 2).value


def test_gamma_text(capsys):
    code, out, _ = run(capsys, "gamma", "-n", "4")
    assert code == 0
    assert out.splitlines() == [
        "gamma[0] = α^4",
        "gamma[1] = 6*α^3 + 4*α^2 + α",
        "gamma[2] = 3*α^2 + 2*α",
    ]


@pytest.mark.parametrize("interp", ["1", "2", "3"])
def test_gamma_interps_match(capsys, interp):
    code, out, _ = run(capsys, "gamma", "-n", "4", "--interp", interp)
    assert code == 0
    assert "gamma[2] = 3*α^2 + 2*α" in out


def test_gamma_json(capsys):
    code, out, _ = run(capsys, "gamma", "-n", "2", "--json")
    payload = json.loads(out)
    assert payload["n"] == 2
    gammas = [MultiPoly.from_json(g) for g in payload["gamma"]]
    assert gammas == [parse_poly("al^2"), parse_poly("al")]


def test_grammar_derive_file(tmp_path, capsys):
    path = tmp_path / "rules.txt"
    path.write_text("a -> a*al*(z+y); x -> x*y; y -> x*y;\n")
    code, out, _ = run(
        capsys, "grammar", "derive", "--file", str(path), "--start", "a",
        "--steps", "1",
    )
    assert code == 0
    assert out.strip() == "a*α*y + a*α*z"


def test_grammar_derive_builtin_json(capsys):
    code, out, _ = run(
        capsys, "grammar", "derive", "--builtin", "five-variable",
        "--start", "a", "--steps", "2", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["start"] == "a" and payload["steps"] == 2
    got = MultiPoly.from_json(payload["value"])
    assert got == parse_poly("a") * build(EnumeratorKind.PTILDE, 2).value


def test_grammar_derive_missing_file(tmp_path, capsys):
    code, _, err = run(
        capsys, "grammar", "derive", "--file", str(tmp_path / "nope.txt"),
        "--start", "a", "--steps", "1",
    )
    assert code == 2
    assert "error" in err


def test_bijection_phi(capsys):
    code, out, _ = run(capsys, "bijection", "phi", "5 4 1 2 7 3 6 10 9 8")
    assert code == 0
    assert out.strip() == "6 2 1 7 3 4 5 9 10 8"


def test_bijection_table(capsys):
    code, out, _ = run(capsys, "bijection", "table", "-n", "3")
    assert code == 0
    assert out.splitlines() == [
        "1 2 3 <-> 3 2 1",
        "1 3 2 <-> 1 3 2 (fixed)",
        "2 1 3 <-> 3 1 2",
        "3 1 2 <-> 2 1 3",
        "3 2 1 <-> 1 2 3",
    ]


def test_bijection_table_json(capsys):
    code, out, _ = run(capsys, "bijection", "table", "-n", "3", "--json")
    payload = json.loads(out)
    assert payload["n"] == 3
    pairs = {parse_perm(w): parse_perm(img) for w, img in payload["pairs"]}
    assert pairs[(1, 2, 3)] == (3, 2, 1)
    assert len(pairs) == 5


def test_verify_single_check(capsys):
    code, out, _ = run(capsys, "verify", "secant", "-n", "3")
    assert code == 0
    assert out.startswith("PASS secant")


def test_verify_single_check_json(capsys):
    code, out, _ = run(capsys, "verify", "cgk-alpha", "-a", "2", "-b", "1", "--json")
    assert code == 0
    report = CheckReport.from_json(json.loads(out))
    assert report.passed
    assert report.params == {"a": 2, "b": 1}


def test_verify_all_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "all", "--max-n", "3")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 14
    assert all(line.startswith("PASS ") for line in lines)


def test_verify_unknown_check(capsys):
    # argparse pre-filters the check name, so this is a usage error
    with pytest.raises(SystemExit) as info:
        main(["verify", "no-such-check", "-n", "2"])
    assert info.value.code == 2
    err = capsys.readouterr().err
    assert "no-such-check" in err
    assert "usage" in err


def test_usage_error_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["perm", "stats", "2 1 3", "--frobnicate"])
    assert info.value.code == 2
    err = capsys.readouterr().err
    assert "frobnicate" in err
    assert "usage" in err


def test_invalid_word_exit_two(capsys):
    code, _, err = run(capsys, "perm", "stats", "1 1 2")
    assert code == 2
    assert "INVALID_PERMUTATION" in err


def test_cap_exit_three(capsys, monkeypatch):
    monkeypatch.setenv("EULAB_MAX_N", "3")
    code, _, err = run(capsys, "poly", "bse", "-n", "6")
    assert code == 3
    assert "CAP_EXCEEDED" in err


def test_verify_fail_exit_one(capsys):
    from eulab.checks import CheckDef, CheckReport as CR, REGISTRY

    defn = CheckDef(
        name="always-fail",
        summary="fails",
        run=lambda n: CR("always-fail", {"n": n}, "FAIL", {"detail": "no"}),
        sweep=lambda max_n: [{"n": 1}],
        describe=lambda max_n: "n=1",
    )
    REGISTRY["always-fail"] = defn
    try:
        code, out, _ = run(capsys, "verify", "always-fail", "-n", "1")
        assert code == 1
        assert out.startswith("FAIL always-fail")

        code, out, _ = run(capsys, "verify", "all", "--max-n", "2")
        assert code == 1
        assert "FAIL always-fail" in out
    finally:
        del REGISTRY["always-fail"]
