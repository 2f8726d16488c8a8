"""Exhaustive verification of the order-theoretic results at small sizes.

Each ``check_*`` function sweeps every relevant finite structure up to a size
bound and returns a :class:`CheckResult` that counts the structures examined
and lists every exception found.  :func:`verify_all` runs the whole battery
and backs the ``verify-paper`` command.

Biconditionals between two axiom sets are checked "exactly": for each poset,
the set of all tables satisfying one side is enumerated and compared with the
set of all tables satisfying the other, so no table can slip through either
direction unobserved.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import naive
from .adjunction import (
    check_adjunction, check_idempotent_pocrig, check_mult_semilattice, classify_groupoid,
    condition_s_product, enumerate_pocrigs, is_adjunction,
)
from .axioms import (
    AxiomId, OrderedAlgebra, check_axiom, check_derived_laws, check_max_form, holds,
)
from .fixtures import pentagon
from .hunt import hunt
from .poset import Poset, _posets_of_size, enumerate_posets
from .search import enumerate_tables
from .tables import OpTable
from .sectional import (
    check_L1, derive_j_implication, is_sectionally_pseudocomplemented, j_implication_by_join,
    restriction_matches_star,
)
from .terms import check_law
from .varieties import (
    LOWER_IDENTITIES, LOWER_LAWS, REGG_LAW, UPPER_IDENTITIES, UPPER_LAWS, check_lowvar,
    check_uppvar,
)

POSET_COUNTS = (1, 2, 5, 16, 63, 318, 2045, 16999)
LATTICE_COUNTS = (1, 1, 1, 2, 5, 15, 53, 222)
MAX_LISTED = 25  # failures kept verbatim per check; the count covers the rest

A = AxiomId
J_AXIOMS = (A.W_EXCH, A.REG, A.COMP)
WBCK = (A.LE_TO, A.W_EXCH)


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool = True
    checked: int = 0
    failure_count: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0
    time_limit: float | None = None

    def fail(self, message: str) -> None:
        self.passed = False
        self.failure_count += 1
        if len(self.failures) < MAX_LISTED:
            self.failures.append(message)

    def expect(self, ok: bool, message) -> None:
        self.checked += 1
        if not ok:
            self.fail(message() if callable(message) else message)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"[{status}] {self.number}. {self.name}: {self.checked} checks, "
                f"{self.failure_count} exceptions, {self.seconds:.1f}s")

    def to_dict(self) -> dict:
        return {
            "number": self.number, "name": self.name, "passed": self.passed,
            "checked": self.checked, "failure_count": self.failure_count,
            "failures": self.failures, "notes": self.notes,
            "seconds": round(self.seconds, 3), "time_limit": self.time_limit,
        }


class _Timer:
    def __init__(self, result: CheckResult):
        self.result = result

    def __enter__(self):
        self.start = time.perf_counter()
        return self.result

    def __exit__(self, *exc):
        r = self.result
        r.seconds = time.perf_counter() - self.start
        if r.time_limit is not None and r.seconds > r.time_limit:
            r.fail(f"took {r.seconds:.1f}s, limit {r.time_limit:.0f}s")
        return False


def describe(P: Poset, imp=None, mul=None) -> str:
    """Compact one-line rendering of a structure for failure messages."""
    nm = P.names
    parts = [f"n={P.n}", "covers=" + ",".join(f"{nm[a]}<{nm[b]}" for a, b in P.covers())]
    for label, t in (("imp", imp), ("mul", mul)):
        if t is not None:
            parts.append(label + "=" + "/".join(" ".join(nm[v] for v in row) for row in t.rows()))
    return " ".join(parts)


def posets_with_top(size_max: int, order_class: str | None = None):
    for n in range(1, size_max + 1):
        for P in enumerate_posets(n, order_class):
            if P.top is not None:
                yield P


def _table_set(P: Poset, required) -> set:
    return {t.cells for t in enumerate_tables(P, required)}


def _compare_sets(res: CheckResult, P: Poset, left, right, label: str) -> None:
    a, b = _table_set(P, left), _table_set(P, right)
    res.checked += len(a | b)
    for cells in sorted(a ^ b):
        side = "left only" if cells in a else "right only"
        res.fail(f"{label}: {side}: {describe(P, OpTable(P.n, cells))}")


# 1 ---------------------------------------------------------------------------

def check_poset_counts(count_max: int = 6, oracle_max: int = 5,
                       time_limit: float = 60.0) -> CheckResult:
    res = CheckResult(1, "poset enumeration counts", time_limit=time_limit)
    with _Timer(res):
        _posets_of_size.cache_clear()
        for n in range(1, count_max + 1):
            posets = list(enumerate_posets(n))
            res.expect(len(posets) == POSET_COUNTS[n - 1],
                       f"n={n}: {len(posets)} posets, expected {POSET_COUNTS[n - 1]}")
            codes = {P.canonical_code() for P in posets}
            res.expect(len(codes) == len(posets), f"n={n}: duplicate isomorphism classes")
            lattices = sum(P.flags.is_lattice for P in posets)
            res.expect(lattices == LATTICE_COUNTS[n - 1],
                       f"n={n}: {lattices} lattices, expected {LATTICE_COUNTS[n - 1]}")
            if n <= oracle_max:
                ref = naive.poset_class_count(n)
                res.expect(ref == len(posets), f"n={n}: naive oracle found {ref} classes")
                ref_lat = naive.poset_class_count(n, lattices_only=True)
                res.expect(ref_lat == lattices, f"n={n}: naive oracle found {ref_lat} lattices")
        res.notes.append(f"counts 1..{count_max} with naive cross-check to n={oracle_max}")
    return res


# 2 ---------------------------------------------------------------------------

def check_join_extension(enum_max: int = 4, derived_max: int = 6) -> CheckResult:
    """Join-formula implication on sectionally pc join-semilattices, and its converse."""
    res = CheckResult(2, "join extension of sectional pseudocomplements")
    with _Timer(res):
        found = 0
        for P in posets_with_top(derived_max, "joinsl"):
            if not is_sectionally_pseudocomplemented(P).holds:
                continue
            found += 1
            imp = j_implication_by_join(P)
            alg = OrderedAlgebra(P, imp=imp)
            for ax in (A.LE_TO,) + J_AXIOMS:
                rep = check_axiom(alg, ax)
                res.expect(rep.holds, lambda: f"{ax}: {rep.render(P.names)} on {describe(P, imp)}")
            rep = check_L1(P, imp)
            res.expect(rep.holds, lambda: f"L1: {rep.render(P.names)} on {describe(P, imp)}")
            derived, _ = derive_j_implication(P)
            res.expect(derived == imp, lambda: f"max-formula disagrees on {describe(P, imp)}")
            if P.n <= enum_max:
                tables = list(enumerate_tables(P, J_AXIOMS))
                res.expect(imp in tables, lambda: f"join table missing from enumeration: {describe(P)}")
                for t in tables:
                    bad = restriction_matches_star(P, t)
                    res.expect(bad is None,
                               lambda: f"restriction differs at {bad}: {describe(P, t)}")
        res.notes.append(f"{found} sectionally pseudocomplemented join-semilattices")
    return res


# 3 ---------------------------------------------------------------------------

def _derived_wbck(derived_max: int, order_class: str | None = None):
    """Sectionally pc posets whose derived implication is total, as (P, imp, is_wbck)."""
    for P in posets_with_top(derived_max, order_class):
        if not is_sectionally_pseudocomplemented(P).holds:
            continue
        imp, _ = derive_j_implication(P)
        if imp is None:
            continue
        alg = OrderedAlgebra(P, imp=imp)
        yield P, imp, all(holds(alg, ax) for ax in WBCK)


def _check_consequences(res: CheckResult, P: Poset, imp) -> None:
    alg = OrderedAlgebra(P, imp=imp)
    rep = check_derived_laws(alg)
    res.expect(rep.holds, lambda: f"{rep.render(P.names)} on {describe(P, imp)}")
    rep2 = check_max_form(alg)
    res.expect(rep2.holds, lambda: f"{rep2.render(P.names)} on {describe(P, imp)}")


def check_wbck_consequences(enum_max: int = 4, derived_max: int = 6,
                            time_limit: float = 120.0) -> CheckResult:
    res = CheckResult(3, "wBCK* consequences and sectional determination", time_limit=time_limit)
    with _Timer(res):
        tables = 0
        for P in posets_with_top(enum_max):
            for imp in enumerate_tables(P, WBCK):
                tables += 1
                _check_consequences(res, P, imp)
        derived = skipped = 0
        for P, imp, wbck in _derived_wbck(derived_max):
            if wbck:
                derived += 1
                _check_consequences(res, P, imp)
            else:
                skipped += 1
        res.notes.append(f"{tables} enumerated tables, {derived} derived tables "
                         f"({skipped} derived tables outside the class not examined)")
    return res


# 4 ---------------------------------------------------------------------------

RPC_LEFT = (A.RPC_8, A.RPC_9)
RPC_RIGHT = (A.W_EXCH, A.REG, A.RPC_9)
SJP_ISOT = J_AXIOMS + (A.ISOT,)


def check_rpc_theorems(enum_max: int = 4, derived_max: int = 6) -> CheckResult:
    res = CheckResult(4, "relative pseudocomplement characterisations")
    with _Timer(res):
        for P in posets_with_top(enum_max):
            _compare_sets(res, P, RPC_LEFT, RPC_RIGHT, "RPC-8+9 vs W-EXCH+REG+RPC-9")
            if P.flags.is_meet_semilattice:
                _compare_sets(res, P, SJP_ISOT, RPC_LEFT, "sjp+ISOT vs RPC-8+9")
        derived = 0
        for P, imp, _ in _derived_wbck(derived_max):
            derived += 1
            alg = OrderedAlgebra(P, imp=imp)
            left = all(holds(alg, ax) for ax in RPC_LEFT)
            right = all(holds(alg, ax) for ax in RPC_RIGHT)
            res.expect(left == right, lambda: f"derived: RPC-8+9={left} vs "
                                              f"W-EXCH+REG+RPC-9={right} on {describe(P, imp)}")
            if P.flags.is_meet_semilattice:
                sjp = all(holds(alg, ax) for ax in SJP_ISOT)
                res.expect(sjp == left, lambda: f"derived: sjp+ISOT={sjp} vs "
                                                f"RPC-8+9={left} on {describe(P, imp)}")
        res.notes.append(f"{derived} derived tables")

        n5 = pentagon()
        imp, _ = derive_j_implication(n5)
        rep = check_axiom(OrderedAlgebra(n5, imp=imp), A.ISOT)
        w = rep[A.ISOT.value].witness
        got = None if w is None else tuple(n5.names[i] for i in w)
        res.expect(got == ("a", "0", "b"), f"N5 ISOT witness (z,x,y) = {got}, expected (a,0,b)")
    return res


# 5 ---------------------------------------------------------------------------

def _product_algebras(enum_max: int):
    """Every wBCK* table at size <= enum_max whose condition-S product is total."""
    for P in posets_with_top(enum_max):
        for imp in enumerate_tables(P, WBCK):
            alg = OrderedAlgebra(P, imp=imp)
            mul = condition_s_product(alg)
            if mul is not None:
                yield alg.with_mul(mul)


def check_condition_s(enum_max: int = 4) -> CheckResult:
    res = CheckResult(5, "condition S products")
    with _Timer(res):
        total = adjoint = 0
        for alg in _product_algebras(enum_max):
            total += 1
            P, d = alg.poset, describe(alg.poset, alg.imp, alg.mul)
            adj = check_adjunction(alg)
            adjoint += adj.holds
            for v in adj.verdicts:
                res.expect(v.holds, lambda: f"{v.describe(P.names)} on {d}")
            prof = classify_groupoid(alg)
            res.expect(prof.commutative and prof.has_neutral_unit,
                       lambda: f"product commutative={prof.commutative} "
                               f"neutral-top={prof.has_neutral_unit} on {d}")
            reg = holds(alg, A.REG)
            res.expect(reg == prof.idempotent,
                       lambda: f"REG={reg} but idempotent={prof.idempotent} on {d}")
            if prof.idempotent:
                meet_ok = all(alg.mul(x, y) == P.meet(x, y) for x in range(P.n) for y in range(P.n))
                rpc = holds(alg, A.RPC_8) and holds(alg, A.RPC_9)
                res.expect(meet_ok and rpc,
                           lambda: f"idempotent: product=meet {meet_ok}, imp rel-pc {rpc} on {d}")
            if P.flags.is_join_semilattice:
                dist = check_mult_semilattice(alg)
                res.expect(dist.holds, lambda: f"{dist.render(P.names)} on {d}")
        res.notes.append(f"{total} algebras with a total product, {adjoint} of them adjoint")
        res.notes.append(_adjoint_diagnostic(enum_max))
    return res


def _adjoint_diagnostic(enum_max: int) -> str:
    """The same consequences restricted to products that do form an adjunction."""
    bad = count = 0
    for alg in _product_algebras(enum_max):
        if not is_adjunction(alg):
            continue
        count += 1
        prof = classify_groupoid(alg)
        ok = prof.commutative and prof.has_neutral_unit and holds(alg, A.REG) == prof.idempotent
        if ok and prof.idempotent:
            ok = check_idempotent_pocrig(alg).holds
        if ok and alg.poset.flags.is_join_semilattice:
            ok = check_mult_semilattice(alg).holds
        bad += not ok
    return (f"restricted to adjoint products: {count} algebras, {bad} exceptions")


# 6 ---------------------------------------------------------------------------

def _pocrigs(enum_max: int, order_class: str):
    for P in posets_with_top(enum_max, order_class):
        yield from enumerate_pocrigs(P)


def check_varieties(enum_max: int = 4, time_limit: float = 600.0) -> CheckResult:
    res = CheckResult(6, "equational classes and arithmetical terms", time_limit=time_limit)
    with _Timer(res):
        for P in posets_with_top(enum_max, "joinsl"):
            _compare_sets(res, P, WBCK, UPPER_LAWS, "wBCK* vs join laws")
            for imp in enumerate_tables(P, UPPER_LAWS):
                rep = check_uppvar(OrderedAlgebra(P, imp=imp))
                res.expect(rep.holds, lambda: f"{rep.render(P.names)} on {describe(P, imp)}")
        lower = 0
        for P in posets_with_top(enum_max, "meetsl"):
            _compare_sets(res, P, WBCK, LOWER_LAWS, "wBCK* vs meet laws")
            for imp in enumerate_tables(P, WBCK):
                lower += 1
                alg = OrderedAlgebra(P, imp=imp)
                reg, regg = holds(alg, A.REG), check_law(alg, REGG_LAW) is None
                res.expect(reg == regg, lambda: f"REG={reg} REGG={regg} on {describe(P, imp)}")
                rep = check_lowvar(alg)
                res.expect(rep.holds, lambda: f"{rep.render(P.names)} on {describe(P, imp)}")
                for law in LOWER_IDENTITIES:
                    w = check_law(alg, law)
                    res.expect(w is None, lambda: f"{law.name} fails at {w} on {describe(P, imp)}")
        upper = 0
        for alg in _pocrigs(enum_max, "joinsl"):
            upper += 1
            for law in UPPER_IDENTITIES:
                w = check_law(alg, law)
                res.expect(w is None, lambda: f"{law.name} fails at {w} on "
                                              f"{describe(alg.poset, alg.imp, alg.mul)}")
        res.notes.append(f"{lower} lower wBCK*-semilattices, {upper} join-semilattice pocrigs")
    return res


# 7 ---------------------------------------------------------------------------

HUNT_ASSUME = ("wbck",)
HUNT_REFUTE = "bck1"


def check_hunter(size_max: int = 4, jobs: int = 2) -> CheckResult:
    res = CheckResult(7, "countermodel hunter regression")
    with _Timer(res):
        runs = [hunt(size_max, HUNT_ASSUME, HUNT_REFUTE, jobs=1),
                hunt(size_max, HUNT_ASSUME, HUNT_REFUTE, jobs=1),
                hunt(size_max, HUNT_ASSUME, HUNT_REFUTE, jobs=max(2, jobs))]
        first = runs[0].to_dict()
        for r in runs[1:]:
            res.expect(r.to_dict() == first, f"verdicts differ: {first} vs {r.to_dict()}")
        if not runs[0].exhausted:
            alg = runs[0].algebra
            for ax in WBCK:
                res.expect(check_axiom(alg, ax).holds, f"countermodel violates assumption {ax}")
            rep = check_axiom(alg, A.BCK1)
            res.expect(not rep.holds, "countermodel satisfies BCK1 on re-check")
            res.expect(rep[A.BCK1.value].witness == runs[0].witness,
                       f"re-check witness {rep[A.BCK1.value].witness} differs from {runs[0].witness}")
            law_w = check_law(alg, "x -> y <= (y -> z) -> (x -> z)")
            res.expect(law_w == runs[0].witness, f"law re-check witness {law_w}")
        res.notes.append(f"verdict: {first}")
    return res


# driver ----------------------------------------------------------------------

def _run(task):
    name, kwargs = task
    return CHECKS[name](**kwargs)


CHECKS = {
    "counts": check_poset_counts,
    "join-extension": check_join_extension,
    "wbck-consequences": check_wbck_consequences,
    "rpc": check_rpc_theorems,
    "condition-s": check_condition_s,
    "varieties": check_varieties,
    "hunter": check_hunter,
}


def verify_all(size_max: int = 4, derived_max: int = 6, jobs: int = 1) -> list[CheckResult]:
    """Run every check; ``size_max`` bounds the table enumerations."""
    tasks = [
        ("counts", {}),
        ("join-extension", {"enum_max": size_max, "derived_max": derived_max}),
        ("wbck-consequences", {"enum_max": size_max, "derived_max": derived_max}),
        ("rpc", {"enum_max": size_max, "derived_max": derived_max}),
        ("condition-s", {"enum_max": size_max}),
        ("varieties", {"enum_max": size_max}),
        ("hunter", {"size_max": size_max, "jobs": max(2, jobs)}),
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run, tasks))
    return [_run(s) for s in tasks]
