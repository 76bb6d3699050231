"""Command-line front end: ``qrious {check,qpoly,positivity,ct,search,families}``.

Exit codes: 0 success (Integral, Inconclusive, MATCH, all non-negative),
1 a counterexample / NotPolynomial / negative coefficient / mismatch was found,
2 invalid input (parse errors, unbalanced or out-of-domain specs),
3 the Laurent term budget was exceeded.
"""

from __future__ import annotations

import argparse
import itertools
import sys
import time

from .families import FAMILY_NAMES, get_family, known_families
from .g2 import BudgetExceeded, g2_constant_term, resolve_budget
from .poly import format_poly
from .qratio import (
    ALL_NON_NEGATIVE,
    NotPolynomial,
    UnbalancedSpec,
    positivity_scan,
    q_ratio_exponents,
    q_ratio_poly,
)
from .ratio import (
    DEFAULT_BOX,
    DomainError,
    NonInteger,
    ParseError,
    RatioSpec,
    Status,
    UnsupportedSpec,
    check_integrality_1d,
    check_integrality_scan,
    default_d_max,
    eval_big,
    in_domain,
    parse_spec,
)
from .report import ScanReport, dumps, write_csv
from .search import search

EXIT_OK, EXIT_FOUND, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def resolve_spec(text: str) -> tuple[str, RatioSpec]:
    """Family names resolve through the registry; anything else is parsed as spec text."""
    if text in FAMILY_NAMES:
        return text, get_family(text).spec
    return text, parse_spec(text)


def parse_point(text: str, k: int) -> tuple[int, ...]:
    try:
        v = tuple(int(x) for x in text.replace("(", "").replace(")", "").split(","))
    except ValueError:
        raise InputError(f"point must be comma-separated integers, got {text!r}") from None
    if len(v) != k:
        raise InputError(f"point {v} has {len(v)} entries, spec has {k} parameters")
    return v


def _echo(args) -> str:
    return " ".join(["qrious"] + args.argv)


def _emit(args, report: ScanReport):
    if args.json:
        report.write(args.json, timing=args.timing)


def _brute(spec, box):
    rows = []
    counterexample = None
    for v in itertools.product(range(box + 1), repeat=spec.k):
        if not in_domain(spec, v):
            continue
        value = eval_big(spec, v)
        ok = not isinstance(value, NonInteger)
        rows.append({"point": list(v), "integral": ok, "value": str(value)})
        if not ok and counterexample is None:
            counterexample = {"point": list(v), "value": str(value)}
    if counterexample:
        return {"status": Status.COUNTEREXAMPLE.value, "method": "brute",
                "witness": counterexample,
                "detail": f"non-integral at {tuple(counterexample['point'])}"}, rows
    return {"status": Status.INTEGRAL.value, "method": "brute", "witness": None,
            "detail": f"integral at all {len(rows)} in-domain points of the box"}, rows


def _criterion(spec, d_max, box):
    one_d = spec.k == 1 and spec.height >= 0 and all(c > 0 for c in spec.all_coefficients())
    if one_d and spec.balanced:
        return check_integrality_1d(spec).to_dict()
    return check_integrality_scan(spec, d_max, box).to_dict()


def cmd_check(args) -> int:
    name, spec = resolve_spec(args.spec)
    box = args.box if args.box is not None else DEFAULT_BOX
    d_max = args.d_max if args.d_max is not None else default_d_max(spec)
    started = time.perf_counter()
    methods, rows = {}, []
    if args.method in ("criterion", "both"):
        methods["criterion"] = _criterion(spec, d_max, box)
    if args.method in ("brute", "both"):
        methods["brute"], rows = _brute(spec, box)

    statuses = {m: r["status"] for m, r in methods.items()}
    disagreement = None
    if statuses.get("criterion") == "Integral" and statuses.get("brute") == "Counterexample":
        disagreement = "criterion reports Integral but the brute-force box has a counterexample"
    if disagreement:
        overall = "INTERNAL-ERROR"
    elif "Counterexample" in statuses.values():
        overall = "Counterexample"
    elif statuses.get("criterion") == "Inconclusive":
        overall = "Inconclusive"
    else:
        overall = "Integral"

    result = {"status": overall, "methods": methods}
    if len(methods) == 2:
        result["agree"] = disagreement is None
    if disagreement:
        result["internal_error"] = disagreement
    report = ScanReport(_echo(args), spec.to_dict(),
                        {"method": args.method, "box": box, "d_max": d_max}, result,
                        outcomes=rows, summary={"points": len(rows)},
                        wall_time=time.perf_counter() - started)
    _emit(args, report)
    if args.csv:
        write_csv(args.csv, rows, ["point", "integral", "value"])

    print(f"{spec.text()}: {overall}")
    for m, r in methods.items():
        print(f"  {m}: {r['status']} ({r['detail']})")
    if len(methods) == 2:
        print("  methods agree" if disagreement is None else f"  INTERNAL-ERROR: {disagreement}")
    return EXIT_FOUND if overall in ("Counterexample", "INTERNAL-ERROR") else EXIT_OK


def cmd_qpoly(args) -> int:
    name, spec = resolve_spec(args.spec)
    v = parse_point(args.point, spec.k)
    poly = q_ratio_poly(spec, v)
    if isinstance(poly, NotPolynomial):
        print(f"NotPolynomial: Φ{poly.d} has exponent {poly.exponent} at {v}")
        result = {"status": "NotPolynomial", "d": poly.d, "exponent": poly.exponent}
        code = EXIT_FOUND
    else:
        if args.format == "factored":
            print(q_ratio_exponents(spec, v).factored())
        else:
            print(",".join(map(str, poly.coeffs)))
        result = {"status": "Polynomial", "degree": poly.degree,
                  "coefficients": [str(c) for c in poly.coeffs],
                  "factored": q_ratio_exponents(spec, v).factored()}
        code = EXIT_OK
    _emit(args, ScanReport(_echo(args), spec.to_dict(),
                           {"point": list(v), "format": args.format}, result))
    return code


def cmd_positivity(args) -> int:
    name, spec = resolve_spec(args.spec)
    box = args.box if args.box is not None else DEFAULT_BOX
    started = time.perf_counter()
    rep = positivity_scan(spec, box, family=name, jobs=args.jobs)
    outcomes = [o.to_dict() for o in rep.outcomes]
    report = ScanReport(_echo(args), spec.to_dict(),
                        {"box": box, "jobs": args.jobs}, rep.to_dict(), outcomes=outcomes,
                        summary={"points": rep.points_checked, "skipped": rep.skipped,
                                 "witnesses": len(rep.witnesses)},
                        wall_time=time.perf_counter() - started)
    _emit(args, report)
    if args.csv:
        write_csv(args.csv, outcomes,
                  ["point", "status", "degree", "min_value", "min_power", "d", "exponent"])
    sys.stdout.write(dumps(rep.to_dict()))
    return EXIT_OK if rep.status == ALL_NON_NEGATIVE else EXIT_FOUND


def cmd_ct(args) -> int:
    m, n = args.m, args.n
    budget = resolve_budget(args.budget)
    started = time.perf_counter()
    ct = g2_constant_term(m, n, budget, specialize_q1=args.q1)
    aspec = get_family("Aq").spec
    if args.q1:
        expected_value = eval_big(get_family("A").spec, (m, n))
        shown = str(ct.coeff(0))
        match = ct.degree <= 0 and ct.coeff(0) == expected_value
        expected = str(expected_value)
    else:
        exp_poly = q_ratio_poly(aspec, (m, n))
        shown = format_poly(ct)
        match = ct == exp_poly
        expected = format_poly(exp_poly)
    verdict = "MATCH" if match else "MISMATCH"
    print(f"{shown} — {verdict}" + ("" if match else f" (expected {expected})"))
    _emit(args, ScanReport(_echo(args), aspec.to_dict(),
                           {"m": m, "n": n, "q1": args.q1, "budget": budget},
                           {"constant_term": [str(c) for c in ct.coeffs],
                            "expected": expected, "match": match},
                           wall_time=time.perf_counter() - started))
    return EXIT_OK if match else EXIT_FOUND


def cmd_search(args) -> int:
    started = time.perf_counter()
    found = search(args.max_sum, args.max_terms)
    counts: dict[str, int] = {}
    for c in found:
        counts[c.verdict] = counts.get(c.verdict, 0) + 1
    shown = found if args.all else [c for c in found if c.verdict in ("Integral", "INTERNAL-ERROR")]
    for c in shown:
        extra = f" n={c.witness_n}" if c.witness_n is not None else ""
        extra += f" ({c.reason})" if c.reason else ""
        print(f"{c.label()} {c.verdict}{extra}")
    print(f"# {len(found)} candidates: " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    _emit(args, ScanReport(_echo(args), None,
                           {"max_sum": args.max_sum, "max_terms": args.max_terms},
                           {"internal_errors": counts.get("INTERNAL-ERROR", 0)},
                           outcomes=[c.to_dict() for c in found], summary=counts,
                           wall_time=time.perf_counter() - started))
    return EXIT_FOUND if counts.get("INTERNAL-ERROR") else EXIT_OK


def cmd_families(args) -> int:
    fams = [f.to_dict() for f in known_families()]
    for f in fams:
        print(f"{f['name']:<13} height {f['height']}  balanced={f['balanced']}  "
              f"{f['text']}  [{f['domain']}]")
    _emit(args, ScanReport(_echo(args), None, {}, {"families": fams}))
    return EXIT_OK


def _common_flags() -> argparse.ArgumentParser:
    # SUPPRESS lets the flags appear before or after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    s = argparse.SUPPRESS
    p.add_argument("--json", metavar="PATH", default=s, help="write the JSON report here")
    p.add_argument("--jobs", type=int, default=s, help="parallel worker processes")
    p.add_argument("--budget", type=int, default=s,
                   help="max stored Laurent terms (overrides $QRIOUS_BUDGET)")
    p.add_argument("--d-max", type=int, default=s, dest="d_max", help="residue-scan depth")
    p.add_argument("--box", type=int, default=s, help="per-parameter bound of the point box")
    p.add_argument("--timing", action="store_true", default=s,
                   help="include wall time in the JSON report")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="qrious", parents=[common],
                                     description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="integrality of a factorial ratio")
    p.add_argument("spec", help="spec text like '30n,n/15n,10n,6n' or a family name")
    p.add_argument("--method", choices=("criterion", "brute", "both"), default="both")
    p.add_argument("--csv", metavar="PATH", help="per-point brute-force table")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("qpoly", parents=[common], help="the q-analogue at one point")
    p.add_argument("spec")
    p.add_argument("point", help="comma-separated parameter values, e.g. 1,0")
    p.add_argument("--format", choices=("coeffs", "factored"), default="coeffs")
    p.set_defaults(func=cmd_qpoly)

    p = sub.add_parser("positivity", parents=[common], help="coefficient positivity sweep")
    p.add_argument("spec")
    p.add_argument("--csv", metavar="PATH", help="per-point table")
    p.set_defaults(func=cmd_positivity)

    p = sub.add_parser("ct", parents=[common], help="G2 constant term versus A_q(m,n)")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--q1", action="store_true", help="work at q = 1")
    p.set_defaults(func=cmd_ct)

    p = sub.add_parser("search", parents=[common], help="balanced height-one integral ratios")
    p.add_argument("--max-sum", type=int, default=31, dest="max_sum")
    p.add_argument("--max-terms", type=int, default=2, dest="max_terms")
    p.add_argument("--all", action="store_true", help="print every candidate")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("families", parents=[common], help="list the built-in families")
    p.set_defaults(func=cmd_families)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("json", None), ("jobs", 1), ("budget", None), ("d_max", None),
                          ("box", None), ("timing", False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    args.argv = argv
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc.message} at position {exc.position}", file=sys.stderr)
        if exc.text:
            print(f"  {exc.text}\n  {' ' * exc.position}^", file=sys.stderr)
        return EXIT_INPUT
    except (UnbalancedSpec, UnsupportedSpec, DomainError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
