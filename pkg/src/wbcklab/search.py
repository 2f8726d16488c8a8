"""Backtracking enumeration of implication tables under a set of constraints.

A constraint is anything with ``instances(ctx)`` and ``holds(ctx, f, args)``:
the axioms of :mod:`wbcklab.axioms` and the laws of :mod:`wbcklab.terms` both
qualify.  Cells are filled in row-major order with ascending candidate values.
Each constraint instance is evaluated against the partial table; reading an
empty cell suspends the instance on that cell, and it is resumed only when
that cell receives a value.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from .axioms import AXIOMS, CLASS_AXIOMS, AxiomId, context
from .errors import MissingOperation
from .poset import Poset
from .tables import OpTable


class _Blocked(Exception):
    def __init__(self, cell):
        self.cell = cell


def resolve_constraints(required: Iterable) -> list:
    """Expand class names and axiom ids; pass other constraint objects through."""
    out = []
    seen = set()
    for item in required:
        if isinstance(item, str) and not isinstance(item, AxiomId) and item.lower() in CLASS_AXIOMS:
            expanded = [AXIOMS[a] for a in CLASS_AXIOMS[item.lower()]]
        elif isinstance(item, (AxiomId, str)):
            expanded = [AXIOMS[AxiomId.parse(item) if not isinstance(item, AxiomId) else item]]
        else:
            if getattr(item, "uses_mul", False):
                raise MissingOperation("laws mentioning the product cannot drive table search")
            expanded = [item]
        for con in expanded:
            if id(con) not in seen:
                seen.add(id(con))
                out.append(con)
    return out


def enumerate_tables(P: Poset, required: Iterable) -> Iterator[OpTable]:
    constraints = resolve_constraints(required)
    ids = {con.id for con in constraints if hasattr(con, "id")}
    c = context(P)
    n, one = c.n, c.one
    size = n * n

    if one is None and ids & {AxiomId.LE_TO, AxiomId.SREG, AxiomId.REFL, AxiomId.UNIT}:
        return

    cells: list[int | None] = [None] * size
    domains = [list(range(n)) for _ in range(size)]

    def fix(cell, value):
        if cells[cell] is not None and cells[cell] != value:
            return False
        cells[cell] = value
        return True

    consistent = True
    if AxiomId.LE_TO in ids:
        for x in range(n):
            for y in range(n):
                if c.leq[x][y]:
                    consistent &= fix(x * n + y, one)
                else:
                    domains[x * n + y] = [v for v in range(n) if v != one]
    if AxiomId.SREG in ids:
        for x in range(n):
            consistent &= fix(one * n + x, x)
    if AxiomId.REFL in ids:
        for x in range(n):
            consistent &= fix(x * n + x, one)
    if AxiomId.UNIT in ids:
        for x in range(n):
            consistent &= fix(x * n + one, one)
    if not consistent:
        return
    for i in range(size):
        if cells[i] is not None and cells[i] not in domains[i]:
            return

    def f(x, y):
        v = cells[x * n + y]
        if v is None:
            raise _Blocked(x * n + y)
        return v

    watches: list[list] = [[] for _ in range(size)]

    def run(pending, log) -> bool:
        for con, args in pending:
            try:
                if not con.holds(c, f, args):
                    return False
            except _Blocked as b:
                watches[b.cell].append((con, args))
                log.append(b.cell)
        return True

    def undo(log):
        for cell in reversed(log):
            watches[cell].pop()

    root_log: list[int] = []
    everything = [(con, args) for con in constraints for args in con.instances(c)]
    if not run(everything, root_log):
        return

    free = [i for i in range(size) if cells[i] is None]

    def rec(d):
        if d == len(free):
            yield OpTable(n, tuple(cells))
            return
        cell = free[d]
        for v in domains[cell]:
            cells[cell] = v
            log: list[int] = []
            ok = run(watches[cell], log)
            if ok:
                yield from rec(d + 1)
            undo(log)
        cells[cell] = None

    yield from rec(0)


def count_tables(P: Poset, required: Iterable) -> int:
    return sum(1 for _ in enumerate_tables(P, required))
