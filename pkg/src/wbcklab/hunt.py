"""Finite countermodel search for candidate laws.

Structures are visited by size, then by canonical poset order, then by the
deterministic order of :func:`wbcklab.search.enumerate_tables`.  The first
structure that satisfies every assumption and violates the refuted law wins,
so the verdict does not depend on how the work is split across processes.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .adjunction import condition_s_product, is_pocrig, is_pocrim
from .axioms import AXIOMS, CLASS_AXIOMS, AxiomId, OrderedAlgebra, context, find_violation
from .errors import BoundExceeded, SearchTimeout
from .poset import MAX_ENUM_SIZE, ORDER_CLASSES, Poset, enumerate_posets
from .search import enumerate_tables
from .tables import OpTable
from .terms import Law, check_law, parse_law

PRODUCT_CLASSES = ("condition-s", "pocrig", "pocrim")


@dataclass
class Assumptions:
    order_classes: list[str] = field(default_factory=list)
    search: list = field(default_factory=list)
    product_laws: list[Law] = field(default_factory=list)
    product_classes: list[str] = field(default_factory=list)

    @property
    def needs_product(self) -> bool:
        return bool(self.product_laws or self.product_classes)


def parse_assumptions(items: Sequence) -> Assumptions:
    """Sort class names, axiom ids and law strings into search-time and leaf-time filters."""
    out = Assumptions()
    for item in items:
        if isinstance(item, Law):
            (out.product_laws if item.uses_mul else out.search).append(item)
            continue
        if isinstance(item, AxiomId):
            out.search.append(item)
            continue
        key = item.strip().lower()
        if key in ORDER_CLASSES:
            out.order_classes.append(key)
        elif key == "heyting":
            out.order_classes.append("lattice")
            out.search.extend(CLASS_AXIOMS["relpc"])
        elif key in CLASS_AXIOMS:
            out.search.extend(CLASS_AXIOMS[key])
        elif key in PRODUCT_CLASSES:
            out.product_classes.append(key)
        else:
            try:
                out.search.append(AxiomId.parse(item))
            except ValueError:
                law = parse_law(item)
                (out.product_laws if law.uses_mul else out.search).append(law)
    return out


def parse_refutation(item) -> list:
    """A law, an axiom id, or a class name (refuted when any of its axioms fails)."""
    if isinstance(item, (Law, AxiomId)):
        return [item]
    key = item.strip().lower()
    if key in CLASS_AXIOMS:
        return list(CLASS_AXIOMS[key])
    try:
        return [AxiomId.parse(item)]
    except ValueError:
        return [parse_law(item)]


def _violation(A: OrderedAlgebra, target) -> tuple[tuple, tuple[str, ...]] | None:
    if isinstance(target, AxiomId):
        ax = AXIOMS[target]
        w = find_violation(ax, context(A.poset), A.imp)
        return None if w is None else (w, ax.variables)
    if target.uses_mul and A.mul is None:
        return None
    w = check_law(A, target)
    return None if w is None else (w, target.var_names)


def _label(target) -> str:
    return target.value if isinstance(target, AxiomId) else (target.name or str(target))


@dataclass
class HuntResult:
    exhausted: bool
    size_max: int
    size: int | None = None
    poset_index: int | None = None
    table_index: int | None = None
    poset: Poset | None = None
    imp: OpTable | None = None
    mul: OpTable | None = None
    refuted: str = ""
    witness: tuple | None = None
    variables: tuple[str, ...] = ()

    @property
    def algebra(self) -> OrderedAlgebra | None:
        if self.exhausted:
            return None
        return OrderedAlgebra(self.poset, imp=self.imp, mul=self.mul)

    def key(self):
        return (self.size, self.poset_index, self.table_index)

    def to_dict(self) -> dict:
        if self.exhausted:
            return {"verdict": "exhausted", "size_max": self.size_max}
        names = self.poset.names
        return {
            "verdict": "countermodel",
            "size": self.size,
            "poset_index": self.poset_index,
            "table_index": self.table_index,
            "covers": [[names[a], names[b]] for a, b in self.poset.covers()],
            "imp": [[names[v] for v in row] for row in self.imp.rows()],
            "mul": None if self.mul is None else [[names[v] for v in row] for row in self.mul.rows()],
            "refuted": self.refuted,
            "witness": {k: names[v] for k, v in zip(self.variables, self.witness)},
        }


def _search_poset(P: Poset, assume: Assumptions, refute: list, deadline: float | None):
    for j, imp in enumerate(enumerate_tables(P, assume.search)):
        if deadline is not None and time.time() > deadline:
            raise SearchTimeout("hunt exceeded its time budget")
        A = OrderedAlgebra(P, imp=imp)
        if assume.needs_product or any(isinstance(t, Law) and t.uses_mul for t in refute):
            mul = condition_s_product(A)
            if mul is not None:
                A = A.with_mul(mul)
        if assume.needs_product:
            if A.mul is None:
                continue
            if "pocrig" in assume.product_classes and not is_pocrig(A):
                continue
            if "pocrim" in assume.product_classes and not is_pocrim(A):
                continue
            if any(check_law(A, law) is not None for law in assume.product_laws):
                continue
        for target in refute:
            found = _violation(A, target)
            if found is not None:
                return j, imp, A.mul, _label(target), found[0], found[1]
    return None


def _candidates(n: int, assume: Assumptions) -> list[tuple[int, Poset]]:
    out = []
    for i, P in enumerate(enumerate_posets(n)):
        if P.top is None:
            continue
        if all(P.flags.matches(c) for c in assume.order_classes):
            out.append((i, P))
    return out


def _worker(args):
    n, index, assume_items, refute_item, deadline = args
    assume = parse_assumptions(assume_items)
    refute = parse_refutation(refute_item)
    P = list(enumerate_posets(n))[index]
    found = _search_poset(P, assume, refute, deadline)
    if found is None:
        return None
    j, imp, mul, label, witness, variables = found
    return (j, imp.cells, None if mul is None else mul.cells, label, witness, variables)


def hunt(size_max: int, assume: Sequence = (), refute="", order_class: str | None = None,
         jobs: int = 1, timeout: float | None = None) -> HuntResult:
    """First structure of size <= size_max satisfying ``assume`` and violating ``refute``."""
    if size_max > MAX_ENUM_SIZE:
        raise BoundExceeded(f"hunt supports sizes up to {MAX_ENUM_SIZE}")
    assume_items = list(assume) + ([order_class] if order_class else [])
    parsed = parse_assumptions(assume_items)
    refute_targets = parse_refutation(refute)
    deadline = None if timeout is None else time.time() + timeout
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for n in range(1, size_max + 1):
            cands = _candidates(n, parsed)
            if pool is None:
                for i, P in cands:
                    found = _search_poset(P, parsed, refute_targets, deadline)
                    if found is not None:
                        j, imp, mul, label, witness, variables = found
                        return HuntResult(False, size_max, n, i, j, P, imp, mul, label,
                                          witness, variables)
            else:
                tasks = [(n, i, assume_items, refute, deadline) for i, _ in cands]
                for (i, P), res in zip(cands, pool.map(_worker, tasks)):
                    if res is not None:
                        j, imp_cells, mul_cells, label, witness, variables = res
                        mul = None if mul_cells is None else OpTable(n, mul_cells)
                        return HuntResult(False, size_max, n, i, j, P, OpTable(n, imp_cells),
                                          mul, label, witness, variables)
            if deadline is not None and time.time() > deadline:
                raise SearchTimeout("hunt exceeded its time budget")
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    return HuntResult(True, size_max)
