"""Command-line interface: ``wbcklab check|derive|enumerate|hunt|verify-paper``.

Machine-readable output goes to stdout (JSON, or structure files for
``derive`` and ``enumerate``); a short human summary goes to stderr.

Exit codes: 0 holds / succeeded / exhausted, 1 failure or countermodel,
2 input error, 3 size bound or time budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from .adjunction import check_adjunction, classify_groupoid, condition_s
from .axioms import CLASS_AXIOMS, OrderedAlgebra, check_axioms, classify
from .errors import BoundExceeded, InputError, PreconditionViolation
from .hunt import hunt
from .poset import ORDER_CLASSES, enumerate_posets
from .report import Report, Verdict
from .search import enumerate_tables
from .sectional import derive_j_implication, derive_m_implication
from .structfile import StructureFile, load, serialize
from .theorems import verify_all

CHECK_CLASSES = ("wbck", "wcontractive", "bck", "hilbert", "relpc", "sjp",
                 "pocrig", "pocrim", "heyting")
DERIVE_OPS = ("j-imp", "m-imp", "product")
ENUM_CLASSES = ("poset", "meetsl", "joinsl", "lattice")

OK, FAILED, INPUT_ERROR, BOUND_ERROR = 0, 1, 2, 3


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _note(text: str) -> None:
    sys.stderr.write(text.rstrip("\n") + "\n")


# check -------------------------------------------------------------------

def _with_implication(s: StructureFile) -> tuple[OrderedAlgebra, bool]:
    """The file's algebra, deriving the join-extension implication if none is given."""
    A = s.to_algebra()
    if A.imp is not None:
        return A, False
    table, report = derive_j_implication(A.poset)
    if table is None:
        raise PreconditionViolation("no implication given and none can be derived: "
                                    + report.render(A.names))
    return A.with_imp(table), True


def _product_report(A: OrderedAlgebra, with_assoc: bool) -> Report:
    prof = classify_groupoid(A)
    adj = check_adjunction(A)["ADJUNCTION"]
    report = Report([
        Verdict("COMMUTATIVE", prof.commutative),
        Verdict("INTEGRAL", prof.integral, note="top is a neutral element and the maximum"),
        adj,
    ])
    if with_assoc:
        report.add(Verdict("ASSOCIATIVE", prof.associative))
    return report


def cmd_check(args) -> int:
    s = load(args.file)
    A, derived = _with_implication(s)
    cls = args.cls
    if cls in ("pocrig", "pocrim"):
        if A.mul is None:
            mul, missing = condition_s(A)
            if mul is None:
                report = Report([Verdict("CONDITION-S", False, missing, ("x", "y"),
                                         note="no product given and condition S fails")])
            else:
                A = A.with_mul(mul)
        if A.mul is not None:
            report = _product_report(A, cls == "pocrim")
    elif cls == "heyting":
        report = Report([Verdict("LATTICE", A.poset.flags.is_lattice)])
        report.extend(check_axioms(A, CLASS_AXIOMS["relpc"]))
    else:
        report = check_axioms(A, CLASS_AXIOMS[cls])
    payload = {
        "structure": s.name,
        "class": cls,
        "holds": report.holds,
        "derived_implication": derived,
        "verdicts": report.to_dict(A.names)["verdicts"],
    }
    if args.report == "full":
        payload["memberships"] = sorted(classify(A).memberships) if A.imp is not None else []
        payload["order"] = {
            "top": A.poset.flags.has_top,
            "meetsl": A.poset.flags.is_meet_semilattice,
            "joinsl": A.poset.flags.is_join_semilattice,
            "lattice": A.poset.flags.is_lattice,
        }
    _emit(payload)
    _note(f"{s.name}: {cls} {'holds' if report.holds else 'fails'}")
    for v in report.failures:
        _note("  " + v.describe(A.names))
    return OK if report.holds else FAILED


# derive ------------------------------------------------------------------

def cmd_derive(args) -> int:
    s = load(args.file)
    P = s.poset
    if args.op == "j-imp":
        table, report = derive_j_implication(P)
        if table is None:
            _note(report.render(P.names))
            return FAILED
        if not report.holds:
            _note("derived table, but: " + "; ".join(v.describe(P.names) for v in report.failures))
        out = StructureFile(s.name, P, dict(s.ops), P.top).with_op("imp", table)
    elif args.op == "m-imp":
        table = derive_m_implication(P)
        if table is None:
            _note("some sectional pseudocomplement needed by the meet formula is missing")
            return FAILED
        out = StructureFile(s.name, P, dict(s.ops), P.top).with_op("imp", table)
    else:
        A, _ = _with_implication(s)
        mul, missing = condition_s(A)
        if mul is None:
            x, y = missing
            _note(f"condition S fails: no least z with {P.names[x]} <= {P.names[y]} -> z")
            return FAILED
        out = StructureFile(s.name, P, {"imp": A.imp, **{k: v for k, v in s.ops.items()
                                                          if k != "imp"}}, P.top).with_op("mul", mul)
    sys.stdout.write(serialize(out))
    _note(f"{s.name}: derived {args.op}")
    return OK


# enumerate ---------------------------------------------------------------

def cmd_enumerate(args) -> int:
    posets = list(enumerate_posets(args.size, args.cls))
    if args.with_op is None:
        if args.count_only:
            print(len(posets))
        else:
            for i, P in enumerate(posets):
                sys.stdout.write(serialize(StructureFile(f"p{args.size}_{i}", P, {}, None)))
        _note(f"{len(posets)} {args.cls} structures of size {args.size}")
        return OK
    total = 0
    for i, P in enumerate(posets):
        for j, imp in enumerate(enumerate_tables(P, [args.with_op])):
            total += 1
            if not args.count_only:
                name = f"p{args.size}_{i}_t{j}"
                sys.stdout.write(serialize(StructureFile(name, P, {"imp": imp}, P.top)))
    if args.count_only:
        print(total)
    _note(f"{total} {args.with_op} tables over {len(posets)} {args.cls} posets of size {args.size}")
    return OK


# hunt --------------------------------------------------------------------

def cmd_hunt(args) -> int:
    assume = list(args.assume) + list(args.cls or [])
    result = hunt(args.size_max, assume, args.refute, jobs=args.jobs, timeout=args.timeout)
    _emit(result.to_dict())
    if result.exhausted:
        _note(f"exhausted: no countermodel up to size {args.size_max}")
        return OK
    _note(f"countermodel of size {result.size} refutes {result.refuted}")
    return FAILED


# verify-paper ------------------------------------------------------------

def cmd_verify(args) -> int:
    results = verify_all(args.size_max, args.derived_max, args.jobs)
    payload = {"size_max": args.size_max, "derived_max": args.derived_max,
               "passed": all(r.passed for r in results), "criteria": []}
    for r in results:
        d = r.to_dict()
        d.pop("seconds")  # timings go to stderr so stdout stays reproducible
        payload["criteria"].append(d)
        _note(r.line())
        for msg in r.failures[:3]:
            _note("    " + msg)
    _emit(payload)
    return OK if payload["passed"] else FAILED


# entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wbcklab", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test a structure file against a class")
    p.add_argument("file")
    p.add_argument("--class", dest="cls", required=True, choices=CHECK_CLASSES)
    p.add_argument("--report", choices=("brief", "full"), default="brief")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("derive", help="add a derived operation to a structure file")
    p.add_argument("file")
    p.add_argument("--op", required=True, choices=DERIVE_OPS)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("enumerate", help="list or count posets and implication tables")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--class", dest="cls", default="poset", choices=ENUM_CLASSES)
    p.add_argument("--with-op", choices=sorted(CLASS_AXIOMS))
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("hunt", help="search for a finite countermodel")
    p.add_argument("--size-max", type=int, required=True)
    p.add_argument("--class", dest="cls", action="append", choices=ORDER_CLASSES)
    p.add_argument("--assume", action="append", default=[])
    p.add_argument("--refute", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timeout", type=float)
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("verify-paper", help="run the exhaustive verification battery")
    p.add_argument("--size-max", type=int, default=4)
    p.add_argument("--derived-max", type=int, default=6)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BoundExceeded as exc:
        _note(f"bound exceeded: {exc}")
        return BOUND_ERROR
    except (InputError, PreconditionViolation, OSError) as exc:
        _note(f"error: {exc}")
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
