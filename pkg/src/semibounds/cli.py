"""Command line entry point: ``semibounds <command> ...``.

Exit codes: 0 success and no violations, 1 a violation or an internal
consistency failure (witness printed), 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from . import __version__, classify, enumeration, ideals, inequalities, plane
from .errors import InternalInconsistency, ResourceLimit, SemigroupError
from .parametrization import from_parametrization, load_parametrization
from .semigroup import NumericalSemigroup

SCHEMA_VERSION = 1
EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1)


def document(argv, **payload) -> dict:
    return {"schema_version": SCHEMA_VERSION, "tool_version": __version__, "command": list(argv), **payload}


def _semigroup(gens) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(gens)


# -- info ----------------------------------------------------------------------------

def semigroup_record(S: NumericalSemigroup) -> dict:
    rep = enumeration.full_report(S)
    bk = inequalities.ag_bookkeeping(S)
    verdicts = inequalities.check_all(S, bk)
    eq = inequalities.equality_analysis(S, verdicts)
    rec = {
        "generators": list(S.minimal_generators),
        "invariants": rep.as_record(),
        "bookkeeping": bk.as_record(),
        "verdicts": {v.check_id: {"lhs": v.lhs, "rhs": v.rhs, "holds": v.holds, "equality": v.equality}
                     for v in verdicts},
        "equality": eq.as_record(),
    }
    if not S.is_full:
        rec["invariants"]["wilf_generator_value"] = classify.wilf_generator_exists(S)[1]
    return rec


def _verdict_table(verdicts: dict, out):
    print(f"  {'check':<14}{'lhs':>8}   {'rhs':>8}  holds  equality", file=out)
    for cid, v in verdicts.items():
        print(f"  {cid:<14}{v['lhs']:>8} <= {v['rhs']:<8}  {'yes' if v['holds'] else 'NO':<5}  "
              f"{'yes' if v['equality'] else ''}", file=out)


def cmd_info(args, argv, out) -> int:
    S = _semigroup(args.gens)
    rec = semigroup_record(S)
    status = EXIT_OK if all(v["holds"] for v in rec["verdicts"].values()) else EXIT_VIOLATION
    if args.json:
        print(dumps(document(argv, semigroups=[rec])), file=out)
    elif args.csv:
        print(inequalities.CSV_HEADER, file=out)
        for v in inequalities.check_all(S):
            print(v.csv_row(), file=out)
    else:
        inv = rec["invariants"]
        print(f"S = <{', '.join(map(str, rec['generators']))}>", file=out)
        for key in ("e", "nu", "frobenius", "conductor", "n", "genus", "depth_q", "type_t"):
            print(f"  {key:<18}{inv[key]}", file=out)
        print(f"  {'pseudo_frobenius':<18}{inv['pseudo_frobenius']}", file=out)
        for key in ("symmetric", "almost_symmetric", "positioned", "ordinary", "lech_extremal", "wilf_generator"):
            print(f"  {key:<18}{inv[key]}", file=out)
        bk = rec["bookkeeping"]
        print(f"  len(m/xc)={bk['len_m_xc']}  len(xRbar/m)={bk['len_xRbar_m']}  "
              f"len(ker)={bk['len_ker_phi']}  e(c)={bk['e_c']}", file=out)
        _verdict_table(rec["verdicts"], out)
    return status


# -- ideal ---------------------------------------------------------------------------

def cmd_ideal(args, argv, out) -> int:
    S = _semigroup(args.gens)
    I = ideals.parse_ideal_expression(S, args.expr)
    hi = I.threshold
    rec = {
        "expression": args.expr,
        "generators": list(S.minimal_generators),
        "min_element": I.min_element,
        "threshold": hi,
        "elements_below_threshold": I.elements_below(hi),
    }
    if args.json:
        print(dumps(document(argv, ideal=rec)), file=out)
    else:
        shown = ", ".join(map(str, rec["elements_below_threshold"]))
        print(f"{{{shown}}} U [{hi}, oo)" if shown else f"[{hi}, oo)", file=out)
    return EXIT_OK


# -- census commands -------------------------------------------------------------------

def _parse_checks(text):
    if text in (None, "all"):
        return inequalities.CHECK_IDS
    ids = [c.strip() for c in text.split(",") if c.strip()]
    bad = [c for c in ids if c not in inequalities.CHECK_IDS]
    if bad:
        raise SemigroupError(f"unknown check id(s) {bad}; known: {', '.join(inequalities.CHECK_IDS)}")
    return tuple(ids)


def cmd_verify(args, argv, out) -> int:
    checks = _parse_checks(args.check)
    if args.csv:
        print(inequalities.CSV_HEADER, file=out)

        def visit(S, report):
            for v in inequalities.check_all(S):
                if v.check_id in checks:
                    print(v.csv_row(), file=out)

        summary = enumeration.enumerate_by_genus(
            args.max_genus, filter=args.filter, visitor=visit, checks=checks,
            node_budget=args.node_budget or None)
        return summary.exit_status
    if args.backend == "python":
        summary = enumeration.enumerate_by_genus(args.max_genus, filter=args.filter, checks=checks,
                                                 node_budget=args.node_budget or None)
    else:
        summary = enumeration.sweep(
            args.max_genus, checks=checks, filter=args.filter, workers=args.workers,
            frontier_genus=args.frontier, node_budget=args.node_budget, progress=args.progress)
    if args.json:
        print(dumps(document(argv, census=summary.as_record())), file=out)
    else:
        print(f"checked {sum(summary.counts['checked'])} of {sum(summary.counts['total'])} semigroups "
              f"of genus <= {args.max_genus} (filter: {args.filter})", file=out)
        for cid in summary.checks:
            wits = summary.violation_witnesses[cid]
            line = f"  {cid:<14}violations {summary.violation_count(cid)}"
            if wits:
                w = wits[0]
                line += f"  first: <{', '.join(map(str, w['generators']))}> {w['lhs']} > {w['rhs']}"
            print(line, file=out)
        if summary.inconsistency_count():
            print(f"  internal inconsistencies: {summary.inconsistency_count()}", file=out)
            print(dumps(summary.as_record()["inconsistencies"]), file=out)
    return summary.exit_status


def cmd_enumerate(args, argv, out) -> int:
    summary = enumeration.sweep(args.max_genus, checks=(), workers=args.workers, frontier_genus=args.frontier)
    keys = ("total", "almost_symmetric", "positioned", "symmetric", "ordinary", "lech_extremal", "wilf_generator")
    if args.json:
        print(dumps(document(argv, counts={k: summary.counts[k] for k in keys})), file=out)
    elif args.count:
        print("genus,count", file=out)
        for g, n in enumerate(summary.counts["total"]):
            print(f"{g},{n}", file=out)
    else:
        print("genus," + ",".join(keys), file=out)
        for g in range(args.max_genus + 1):
            print(f"{g}," + ",".join(str(summary.counts[k][g]) for k in keys), file=out)
    return EXIT_OK


def cmd_oracle(args, argv, out) -> int:
    brute = enumeration.brute_force_census(args.max_genus)
    tree = enumeration.census_counts(args.max_genus)
    agree = brute == tree
    if args.json:
        print(dumps(document(argv, brute_force=brute, tree=tree, agree=agree)), file=out)
    else:
        print("genus,brute_force,tree", file=out)
        for g, (a, b) in enumerate(zip(brute, tree)):
            print(f"{g},{a},{b}", file=out)
        print("agree" if agree else "MISMATCH", file=out)
    return EXIT_OK if agree else EXIT_VIOLATION


# -- good semigroups -------------------------------------------------------------------

def _plane_output(args, argv, out, S, report) -> int:
    rec = {"semigroup": S.to_record()}
    if report is not None:
        rec["invariants"] = report.as_record()
    status = EXIT_OK
    if report is not None and not all(v.holds for v in report.verdicts):
        status = EXIT_VIOLATION
    if args.json:
        print(dumps(document(argv, good_semigroup=rec)), file=out)
        return status
    print(f"small elements: {S.small_elements}", file=out)
    print(f"conductor: {S.conductor}", file=out)
    p1, p2 = S.projections
    print(f"projections: <{', '.join(map(str, p1.minimal_generators))}>, "
          f"<{', '.join(map(str, p2.minimal_generators))}>", file=out)
    if report is not None:
        r = rec["invariants"]
        for key in ("e", "nu", "e_c", "length_R_c", "multiplicity_vector", "len_m_xc",
                    "len_xRbar_m", "len_ker_phi", "len_xRbar_m_dual"):
            if r[key] is not None:
                print(f"  {key:<20}{r[key]}", file=out)
        _verdict_table(r["verdicts"], out)
    return status


def cmd_gs2_info(args, argv, out) -> int:
    S, omega = plane.load_file(args.file)
    return _plane_output(args, argv, out, S, plane.invariants_plane(S, args.nu, omega))


def cmd_gs2_from_param(args, argv, out) -> int:
    gens, truncation = load_parametrization(args.file)
    S = from_parametrization(gens, args.truncation or truncation)
    report = plane.invariants_plane(S, args.nu) if args.nu else None
    return _plane_output(args, argv, out, S, report)


# -- parser -------------------------------------------------------------------------

def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semibounds", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("info", help="invariants, classification and inequality verdicts")
    q.add_argument("gens", nargs="+", type=int)
    fmt = q.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    q.set_defaults(func=cmd_info)

    q = sub.add_parser("ideal", help="evaluate an ideal expression such as 'omega - (M - M)'")
    q.add_argument("gens", nargs="+", type=int)
    q.add_argument("--expr", required=True)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_ideal)

    q = sub.add_parser("verify", help="run inequality checks over every semigroup up to a genus")
    q.add_argument("--max-genus", type=_nonneg, required=True)
    q.add_argument("--filter", choices=enumeration.FILTERS, default="all")
    q.add_argument("--check", default="all", help="comma separated check ids")
    q.add_argument("--workers", type=int, default=1)
    q.add_argument("--frontier", type=int, default=enumeration.DEFAULT_FRONTIER)
    q.add_argument("--backend", choices=("kernel", "python"), default="kernel")
    q.add_argument("--node-budget", type=_nonneg, default=0)
    q.add_argument("--progress", action="store_true")
    fmt = q.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true", help="stream one verdict row per semigroup (slow)")
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("enumerate", help="census of semigroups by genus")
    q.add_argument("--max-genus", type=_nonneg, required=True)
    q.add_argument("--count", action="store_true", help="only the per-genus totals")
    q.add_argument("--workers", type=int, default=1)
    q.add_argument("--frontier", type=int, default=enumeration.DEFAULT_FRONTIER)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_enumerate)

    q = sub.add_parser("oracle", help="cross-check the tree census against brute force")
    q.add_argument("--max-genus", type=_nonneg, required=True)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_oracle)

    gs = sub.add_parser("gs2", help="two-branch good semigroups")
    gsub = gs.add_subparsers(dest="gs2_command", required=True)
    q = gsub.add_parser("info", help="invariants of a good semigroup file")
    q.add_argument("--file", required=True)
    q.add_argument("--nu", type=int, required=True, help="embedding dimension of the ring")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_gs2_info)
    q = gsub.add_parser("from-param", help="value semigroup of a parametrization file")
    q.add_argument("--file", required=True)
    q.add_argument("--nu", type=int, help="also report invariants with this embedding dimension")
    q.add_argument("--truncation", type=int, help="override the file's truncation")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_gs2_from_param)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args, argv, out)
    except InternalInconsistency as exc:
        print(dumps({"internal_inconsistency": str(exc)}), file=out)
        return EXIT_VIOLATION
    except (SemigroupError, ResourceLimit, OSError) as exc:
        print(f"semibounds: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
