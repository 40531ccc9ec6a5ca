"""Acceptance suite.

One test per acceptance criterion, in order.  Each prints a single
``ACCEPTANCE <k> <name>: PASS|FAIL`` line (visible with ``pytest -s`` and
in failure output) and then asserts, so ``pytest -v`` shows one verdict
per criterion.  All comparisons are exact; the time bounds are part of
the criteria.
"""

import subprocess
import sys
import time
from itertools import permutations
from math import comb, factorial

from eulab.bijection import mirror, pair_table
from eulab.checks import verify
from eulab.enumerators import EnumeratorKind, build
from eulab.gamma import GammaRoute, gamma_expand, gamma_from_class
from eulab.perms import PermClass, class_size, stats
from eulab.poly import MultiPoly, parse_poly


def _verdict(num, name, problems, elapsed=None, budget=None):
    if budget is not None and elapsed > budget:
        problems = list(problems) + [f"took {elapsed:.1f}s, budget {budget}s"]
    ok = not problems
    print(f"ACCEPTANCE {num} {name}: {'PASS' if ok else 'FAIL'}", flush=True)
    assert ok, f"criterion {num} ({name}): " + "; ".join(problems)


def test_criterion_01_gamma_displays():
    start = time.monotonic()
    problems = []
    expected = {
        1: ["al"],
        2: ["al^2", "al"],
        3: ["al^3", "3*al^2 + al"],
        4: ["al^4", "6*al^3 + 4*al^2 + al", "3*al^2 + 2*al"],
    }
    for n, want in expected.items():
        got = [str(g) for g in gamma_expand(build(EnumeratorKind.BSE, n).value).gammas]
        if got != want:
            problems.append(f"n={n}: {got} != {want}")
    _verdict(1, "gamma-displays", problems, time.monotonic() - start, 1.0)


def test_criterion_02_gamma_interpretations():
    start = time.monotonic()
    problems = []
    for n in range(1, 9):
        dense = list(gamma_expand(build(EnumeratorKind.BSE, n).value).gammas)
        for route in GammaRoute:
            got = gamma_from_class(route, n)
            if got != dense:
                problems.append(f"n={n} route={route.name}")
    _verdict(2, "gamma-interpretations", problems, time.monotonic() - start, 60.0)


def test_criterion_03_grammar_calculus():
    start = time.monotonic()
    problems = []
    for name in ("grammar-31", "grammar-32"):
        for n in range(1, 8):
            report = verify(name, n=n)
            if not report.passed:
                problems.append(f"{name} n={n}: {report.witness}")
    _verdict(3, "grammar-calculus", problems, time.monotonic() - start, 30.0)


def test_criterion_04_laurent_parametrization():
    problems = []
    for n in range(1, 8):
        report = verify("mainthm2-var", n=n)
        if not report.passed:
            problems.append(f"n={n}: {report.witness}")
    _verdict(4, "laurent-parametrization", problems)


def test_criterion_05_involution_suite():
    problems = []
    example = mirror((5, 4, 1, 2, 7, 3, 6, 10, 9, 8))
    if example != (6, 2, 1, 7, 3, 4, 5, 9, 10, 8):
        problems.append(f"worked example gave {example}")
    table = dict(pair_table(4))
    pinned = {
        (1, 2, 3, 4): (4, 3, 2, 1),
        (1, 2, 4, 3): (2, 1, 4, 3),
        (1, 3, 2, 4): (4, 1, 3, 2),
        (1, 3, 4, 2): (1, 4, 3, 2),
        (1, 4, 2, 3): (3, 1, 4, 2),
        (2, 1, 3, 4): (4, 3, 1, 2),
        (3, 1, 2, 4): (4, 2, 1, 3),
        (4, 1, 2, 3): (3, 2, 1, 4),  # corrected pairing
    }
    for w, img in pinned.items():
        if table.get(w) != img or table.get(img) != w:
            problems.append(f"table pairing {w} <-> {img} missing")
    for n in range(1, 9):
        report = verify("bijection", n=n)
        if not report.passed:
            problems.append(f"n={n}: {report.witness}")
    _verdict(5, "involution-suite", problems)


def test_criterion_06_convolution_identity():
    problems = []
    for a in range(1, 8):
        for b in range(1, 8 - a + 1):
            report = verify("cgk-alpha", a=a, b=b)
            if not report.passed:
                problems.append(f"a={a} b={b}: {report.witness}")
    report = verify("cgk-alpha", a=1, b=3)
    if "convention" not in (report.witness or {}):
        problems.append("missing convention report for min(a,b)=1")
    _verdict(6, "convolution-identity", problems)


def test_criterion_07_action_suite():
    start = time.monotonic()
    problems = []
    for n in range(1, 8):
        for name in ("group-action", "pip", "gamm"):
            if name == "group-action":
                report = verify(name, n=n)
                if not report.passed:
                    problems.append(f"{name} n={n}: {report.witness}")
            else:
                for klass in ("sym", "prw"):
                    report = verify(name, n=n, klass=klass)
                    if not report.passed:
                        problems.append(f"{name} {klass} n={n}: {report.witness}")
    _verdict(7, "action-suite", problems, time.monotonic() - start, 60.0)


def test_criterion_08_secant_suite():
    problems = []
    for n in range(1, 9):
        report = verify("secant", n=n)
        if not report.passed:
            problems.append(f"n={n}: {report.witness}")
    _verdict(8, "secant-suite", problems)


def test_criterion_09_structural_properties():
    problems = []
    al = MultiPoly.var("al")
    for n in range(1, 9):
        rising = MultiPoly.one()
        for i in range(n):
            rising = rising * (al + i)
        total = MultiPoly.zero()
        for p in permutations(range(1, n + 1)):
            s = stats(p)
            if s.des + s.asc != n - 1:
                problems.append(f"des+asc broken at {p}")
            if s.peaks + s.double_desc != s.des:
                problems.append(f"peaks+dd broken at {p}")
            if s.peaks + s.double_asc != s.asc:
                problems.append(f"peaks+da broken at {p}")
            if s.valleys != s.peaks + 1:
                problems.append(f"valleys broken at {p}")
            if s.double_asc + s.double_desc != n - 1 - 2 * s.peaks:
                problems.append(f"da+dd broken at {p}")
            total = total + al**s.lrmin
        if total != rising:
            problems.append(f"rising factorial broken at n={n}")
        count = class_size(PermClass.PRW, n + 1)
        want = 1 + sum(comb(n, m) * factorial(m) for m in range(1, n + 1))
        if count != want:
            problems.append(f"class count broken at n={n}: {count} != {want}")
    _verdict(9, "structural-properties", problems)


def test_criterion_10_verify_all_end_to_end():
    start = time.monotonic()
    problems = []
    proc = subprocess.run(
        [sys.executable, "-m", "eulab", "verify", "all"],
        capture_output=True,
        text=True,
        timeout=300,
    )
    elapsed = time.monotonic() - start
    if proc.returncode != 0:
        problems.append(f"exit code {proc.returncode}: {proc.stderr.strip()}")
    lines = proc.stdout.splitlines()
    if len(lines) != 14 or not all(line.startswith("PASS ") for line in lines):
        problems.append(f"unexpected report lines: {lines}")
    _verdict(10, "verify-all-end-to-end", problems, elapsed, 300.0)
