"""Identity-verification registry and its reports."""

import json

import pytest

from eulab.checks import CheckReport, REGISTRY, verify, verify_all
from eulab.errors import UnknownCheckError, ValueOutOfRangeError
from eulab.poly import parse_poly


EXPECTED_CHECKS = [
    "symmetry-gamma",
    "prw-g",
    "mainthm2",
    "ji-gam",
    "mainthm2-var",
    "grammar-31",
    "grammar-32",
    "des-pk",
    "cgk-alpha",
    "secant",
    "pip",
    "gamm",
    "bijection",
    "group-action",
]


def test_registry_contents():
    assert list(REGISTRY) == EXPECTED_CHECKS
    for name, cd in REGISTRY.items():
        assert cd.name == name
        assert cd.summary


def test_symmetry_gamma_report():
    report = verify("symmetry-gamma", n=4)
    assert report.passed
    assert report.check == "symmetry-gamma"
    assert report.params == {"n": 4}
    assert report.witness["gamma"] == [
        "al^4",
        "6*al^3 + 4*al^2 + al",
        "3*al^2 + 2*al",
    ]


def test_secant_odd_vanishes():
    report = verify("secant", n=3)
    assert report.passed
    assert parse_poly(report.witness["value"]) == parse_poly("0")


def test_secant_even_value():
    report = verify("secant", n=4)
    assert report.passed
    assert parse_poly(report.witness["value"]) == parse_poly("3*al^2 + 2*al")


def test_cgk_alpha_both_sides():
    report = verify("cgk-alpha", a=2, b=1)
    assert report.passed
    assert parse_poly(report.witness["both_sides"]) == parse_poly(
        "3*al^3 + 3*al^2 + al"
    )
    assert "convention" in report.witness


def test_unknown_check():
    with pytest.raises(UnknownCheckError):
        verify("no-such-check", n=2)


def test_bad_params_rejected():
    with pytest.raises(ValueOutOfRangeError):
        verify("secant", q=3)


def test_report_json_round_trip():
    report = verify("cgk-alpha", a=2, b=2)
    payload = report.to_json()
    assert set(payload) == {"check", "params", "verdict", "witness"}
    assert CheckReport.from_json(payload) == report
    # payload is plain JSON
    assert json.loads(json.dumps(payload)) == payload


def test_report_line_format():
    report = verify("secant", n=2)
    assert report.line().startswith("PASS secant")


def test_failure_path_is_honest():
    # mathematical mismatches surface as FAIL reports, never as exceptions
    from eulab.checks import CheckDef
    from eulab.errors import NotSymmetricError

    def broken(n):
        raise NotSymmetricError("forced mismatch for the report path")

    defn = CheckDef(
        name="broken",
        summary="always fails",
        run=broken,
        sweep=lambda max_n: [{"n": 2}],
        describe=lambda max_n: "n=2",
    )
    REGISTRY["broken"] = defn
    try:
        report = verify("broken", n=2)
        assert not report.passed
        assert report.verdict == "FAIL"
        assert report.witness["error"] == "NOT_SYMMETRIC"
        assert "forced mismatch" in report.witness["message"]

        all_reports = verify_all(max_n=2)
        broken_report = next(r for r in all_reports if r.check == "broken")
        assert not broken_report.passed
    finally:
        del REGISTRY["broken"]


@pytest.mark.parametrize("name", EXPECTED_CHECKS)
def test_each_check_passes_at_small_size(name):
    if name == "cgk-alpha":
        report = verify(name, a=1, b=2)
    elif name in ("pip", "gamm"):
        report = verify(name, n=3, klass="prw")
    else:
        report = verify(name, n=3)
    assert report.passed, report.witness


def test_verify_all_small():
    reports = verify_all(max_n=4)
    assert [r.check for r in reports] == EXPECTED_CHECKS
    assert all(r.passed for r in reports)
    for r in reports:
        assert "sweep" in r.params
