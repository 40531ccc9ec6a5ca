"""Command-line interface.

Exit codes: 0 success (all verdicts PASS), 1 any FAIL verdict, 2 usage or
input error, 3 enumeration-cap rejection.  Every command takes --json for a
machine-readable payload that round-trips into the library types.
"""

from __future__ import annotations

import argparse
import json
import sys

from .action import orbit, orbit_dot
from .bijection import mirror, pair_table
from .checks import REGISTRY, verify, verify_all
from .enumerators import EnumeratorKind, build
from .errors import CapExceededError, EulabError
from .gamma import GammaRoute, gamma_expand, gamma_from_class
from .grammar import builtin, derive, parse_grammar
from .perms import format_perm, parse_perm, stats


def _emit(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=False))


def _cmd_perm(args) -> int:
    word = parse_perm(args.word)
    if args.action == "stats":
        s = stats(word)
        if args.json:
            _emit(s._asdict())
        else:
            print(
                f"des={s.des} asc={s.asc} M={s.peaks} V={s.valleys} "
                f"da={s.double_asc} dd={s.double_desc} "
                f"lrmin={s.lrmin} rlmin={s.rlmin}"
            )
        return 0
    orb = orbit(word)
    if args.dot:
        print(orbit_dot(orb))
    elif args.json:
        _emit(
            {
                "size": orb.size,
                "representative": format_perm(orb.representative),
                "members": [format_perm(m) for m in orb.members],
            }
        )
    else:
        print(f"size={orb.size} rep={format_perm(orb.representative)}")
        for m in orb.members:
            print(format_perm(m))
    return 0


def _cmd_poly(args) -> int:
    enum = build(EnumeratorKind(args.kind), args.n)
    if args.json:
        _emit(enum.to_json())
    else:
        print(enum.value.pretty())
    return 0


def _cmd_gamma(args) -> int:
    if args.interp == "expand":
        gammas = list(gamma_expand(build(EnumeratorKind.BSE, args.n).value).gammas)
    else:
        gammas = gamma_from_class(GammaRoute(int(args.interp)), args.n)
    if args.json:
        _emit({"n": args.n, "interp": args.interp, "gamma": [g.to_json() for g in gammas]})
    else:
        for k, g in enumerate(gammas):
            print(f"gamma[{k}] = {g.pretty()}")
    return 0


def _cmd_grammar(args) -> int:
    if args.builtin:
        g = builtin(args.builtin)
    else:
        with open(args.file, encoding="utf-8") as fh:
            g = parse_grammar(fh.read())
    result = derive(g, args.start, args.steps)
    if args.json:
        _emit({"start": args.start, "steps": args.steps, "value": result.to_json()})
    else:
        print(result.pretty())
    return 0


def _cmd_bijection(args) -> int:
    if args.action == "phi":
        word = parse_perm(args.word)
        image = mirror(word)
        if args.json:
            _emit({"word": format_perm(word), "image": format_perm(image)})
        else:
            print(format_perm(image))
        return 0
    pairs = pair_table(args.n)
    if args.json:
        _emit(
            {
                "n": args.n,
                "pairs": [[format_perm(w), format_perm(p)] for w, p in pairs],
            }
        )
    else:
        for w, p in pairs:
            tail = " (fixed)" if w == p else ""
            print(f"{format_perm(w)} <-> {format_perm(p)}{tail}")
    return 0


def _cmd_verify(args) -> int:
    if args.check == "all":
        reports = verify_all(max_n=args.max_n, seed=args.seed)
        if args.json:
            _emit([r.to_json() for r in reports])
        else:
            for r in reports:
                print(f"{r.verdict} {r.check} ({r.params.get('sweep', '')})")
        return 0 if all(r.passed for r in reports) else 1

    params: dict = {}
    if args.n is not None:
        params["n"] = args.n
    if args.a is not None:
        params["a"] = args.a
    if args.b is not None:
        params["b"] = args.b
    if args.klass is not None:
        params["klass"] = args.klass
    if args.check == "group-action":
        params.setdefault("seed", args.seed)
    if args.check == "pip" or args.check == "gamm":
        if "klass" not in params:
            # run both classes when none is named
            reports = [
                verify(args.check, klass=tag, **params) for tag in ("sym", "prw")
            ]
            if args.json:
                _emit([r.to_json() for r in reports])
            else:
                for r in reports:
                    _print_report(r)
            return 0 if all(r.passed for r in reports) else 1
    report = verify(args.check, **params)
    if args.json:
        _emit(report.to_json())
    else:
        _print_report(report)
    return 0 if report.passed else 1


def _print_report(report) -> None:
    print(report.line())
    if report.witness:
        for key, value in report.witness.items():
            print(f"  {key}: {value}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulab",
        description="Exact enumeration lab for descent statistics on "
        "permutations with a decreasing prefix.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_perm = sub.add_parser("perm", help="statistics and orbits of one word")
    perm_sub = p_perm.add_subparsers(dest="action", required=True)
    p_stats = perm_sub.add_parser("stats", help="statistic profile of a word")
    p_stats.add_argument("word", help='permutation, e.g. "2 1 3"')
    p_stats.add_argument("--json", action="store_true")
    p_orbit = perm_sub.add_parser("orbit", help="toggle-action orbit of a word")
    p_orbit.add_argument("word")
    fmt = p_orbit.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--dot", action="store_true", help="emit a DOT graph")

    p_poly = sub.add_parser("poly", help="statistic-generating polynomials")
    poly_sub = p_poly.add_subparsers(dest="kind", required=True)
    for kind, desc in (
        ("bse", "descent/ascent enumerator over decreasing-prefix words"),
        ("bse-z", "same, with the decreasing prefix marked by z"),
        ("ptilde", "five-variable peak refinement"),
        ("se", "descent/ascent enumerator over the symmetric group"),
    ):
        pk = poly_sub.add_parser(kind, help=desc)
        pk.add_argument("-n", type=int, required=True)
        pk.add_argument("--json", action="store_true")

    p_gamma = sub.add_parser("gamma", help="basis coefficients of the enumerator")
    p_gamma.add_argument("-n", type=int, required=True)
    p_gamma.add_argument(
        "--interp",
        choices=("1", "2", "3", "expand"),
        default="expand",
        help="peeling (expand) or one of the three enumeration routes",
    )
    p_gamma.add_argument("--json", action="store_true")

    p_grammar = sub.add_parser("grammar", help="rule-set formal derivatives")
    grammar_sub = p_grammar.add_subparsers(dest="action", required=True)
    p_derive = grammar_sub.add_parser("derive", help="apply the derivative repeatedly")
    src = p_derive.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", help="rule-set file")
    src.add_argument(
        "--builtin", choices=("two-variable", "five-variable"), help="built-in rule set"
    )
    p_derive.add_argument("--start", required=True, help="start variable")
    p_derive.add_argument("--steps", type=int, required=True)
    p_derive.add_argument("--json", action="store_true")

    p_bij = sub.add_parser("bijection", help="the statistic-reversing involution")
    bij_sub = p_bij.add_subparsers(dest="action", required=True)
    p_phi = bij_sub.add_parser("phi", help="image of one word")
    p_phi.add_argument("word")
    p_phi.add_argument("--json", action="store_true")
    p_table = bij_sub.add_parser("table", help="full correspondence at size n")
    p_table.add_argument("-n", type=int, required=True)
    p_table.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="run identity checks")
    p_verify.add_argument(
        "check",
        metavar="check",
        choices=("all", *REGISTRY),
        help="'all' or one of: " + ", ".join(REGISTRY),
    )
    p_verify.add_argument("-n", type=int)
    p_verify.add_argument("-a", type=int)
    p_verify.add_argument("-b", type=int)
    p_verify.add_argument(
        "--class", dest="klass", choices=("sym", "prw"), help="class for pip/gamm"
    )
    p_verify.add_argument("--max-n", type=int, help="sweep bound for 'all'")
    p_verify.add_argument("--seed", type=int, default=0, help="seed for sampled properties")
    p_verify.add_argument("--json", action="store_true")

    return parser


_HANDLERS = {
    "perm": _cmd_perm,
    "poly": _cmd_poly,
    "gamma": _cmd_gamma,
    "grammar": _cmd_grammar,
    "bijection": _cmd_bijection,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except CapExceededError as exc:
        print(f"error [{exc.code}]: {exc.message}", file=sys.stderr)
        return 3
    except EulabError as exc:
        print(f"error [{exc.code}]: {exc.message}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
