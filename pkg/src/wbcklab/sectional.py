"""Sectional pseudocomplements on bare posets and their total extensions."""
from __future__ import annotations

from .axioms import AxiomId, OrderedAlgebra, check_axioms
from .errors import NotJoinSemilattice, NotMeetSemilattice, NotSectionallyPC, PreconditionViolation
from .poset import Poset, _bits
from .report import Report, Verdict
from .tables import UNDEFINED, OpTable, PartialOpTable

J_AXIOMS = (AxiomId.W_EXCH, AxiomId.REG, AxiomId.COMP)


def _greatest(P: Poset, mask: int) -> int | None:
    """Maximum of the subset ``mask``, or None when it has no maximum."""
    for m in _bits(mask):
        if mask & ~P.down[m] == 0:
            return m
    return None


def perp(P: Poset, u: int, x: int, y: int) -> bool:
    """True iff y is the only lower bound of u and x inside the filter [y)."""
    if not (P.leq(y, u) and P.leq(y, x)):
        raise PreconditionViolation("perp needs u and x in the principal filter of y")
    return P.down[u] & P.down[x] & P.up[y] == 1 << y


def perp_witness(P: Poset, u: int, x: int, y: int) -> int | None:
    """Least common lower bound of u and x strictly above y, if any."""
    extra = P.down[u] & P.down[x] & P.up[y] & ~(1 << y)
    return (extra & -extra).bit_length() - 1 if extra else None


def _perp_set(P: Poset, x: int, y: int) -> int:
    mask = 0
    for u in _bits(P.up[y]):
        if P.down[u] & P.down[x] & P.up[y] == 1 << y:
            mask |= 1 << u
    return mask


def sectional_pc(P: Poset, x: int, y: int) -> int | None:
    """Pseudocomplement of x in [y): the greatest u >= y with u perp_y x."""
    if not P.leq(y, x):
        raise PreconditionViolation(f"sectional pseudocomplement needs y <= x, got x={x}, y={y}")
    return _greatest(P, _perp_set(P, x, y))


def star_table(P: Poset) -> PartialOpTable:
    n = P.n
    cells = []
    for x in range(n):
        for y in range(n):
            if P.leq(y, x):
                z = sectional_pc(P, x, y)
                cells.append(UNDEFINED if z is None else z)
            else:
                cells.append(UNDEFINED)
    return PartialOpTable(n, tuple(cells))


def is_sectionally_pseudocomplemented(P: Poset) -> Report:
    if P.top is None:
        return Report([Verdict("SECTIONALLY-PC", False, note="no top element")])
    for y in range(P.n):
        for x in range(P.n):
            if P.leq(y, x) and sectional_pc(P, x, y) is None:
                return Report([Verdict("SECTIONALLY-PC", False, (x, y), ("x", "y"),
                                       note="pseudocomplement missing")])
    return Report([Verdict("SECTIONALLY-PC", True)])


def j_implication_by_join(P: Poset) -> OpTable:
    """x -> y := (x v y) * y, only meaningful on join-semilattices."""
    if not P.flags.is_join_semilattice:
        raise NotJoinSemilattice("the join formula needs every join to exist")
    star = star_table(P)

    def cell(x, y):
        v = star(P.join(x, y), y)
        if v is UNDEFINED:
            raise NotSectionallyPC(f"({x} v {y}) * {y} is undefined")
        return v

    return OpTable.from_function(P.n, cell)


def derive_j_implication(P: Poset) -> tuple[OpTable | None, Report]:
    """x -> y := max{z * y : x, y <= z}, validated against W-EXCH, REG and COMP.

    The table is returned whenever every maximum exists; the report says
    whether the axioms actually hold, and on join-semilattices whether the
    table agrees cell by cell with the join formula.
    """
    pc = is_sectionally_pseudocomplemented(P)
    if not pc.holds:
        raise NotSectionallyPC(pc.render(P.names))
    star = star_table(P)
    n = P.n
    cells = []
    for x in range(n):
        for y in range(n):
            candidates = 0
            for z in _bits(P.up[x] & P.up[y]):
                candidates |= 1 << star(z, y)
            best = _greatest(P, candidates)
            if best is None:
                return None, Report([Verdict("J-EXTENSION", False, (x, y), ("x", "y"),
                                             note="no greatest z*y over common upper bounds z")])
            cells.append(best)
    table = OpTable(n, tuple(cells))
    report = Report([Verdict("J-EXTENSION", True)])
    report.extend(check_axioms(OrderedAlgebra(P, imp=table), (AxiomId.LE_TO,) + J_AXIOMS))
    if P.flags.is_join_semilattice:
        by_join = j_implication_by_join(P)
        diff = next(((x, y) for x in range(n) for y in range(n) if by_join(x, y) != table(x, y)), None)
        report.add(Verdict("JOIN-FORMULA", diff is None, diff, ("x", "y") if diff else ()))
    return table, report


def derive_m_implication(P: Poset) -> OpTable | None:
    """x -> y := x * (x ^ y); None when some needed pseudocomplement is missing."""
    if not P.flags.is_meet_semilattice:
        raise NotMeetSemilattice("the meet formula needs every meet to exist")
    cells = []
    for x in range(P.n):
        for y in range(P.n):
            z = sectional_pc(P, x, P.meet(x, y))
            if z is None:
                return None
            cells.append(z)
    return OpTable(P.n, tuple(cells))


def check_L1(P: Poset, imp: OpTable) -> Report:
    """z <= x -> y  iff  (z v y) ^ (x v y) exists and equals y, for all x, y, z."""
    if not P.flags.is_join_semilattice or P.top is None:
        raise NotJoinSemilattice("the join characterisation needs a join-semilattice with top")
    n = P.n
    for x in range(n):
        for y in range(n):
            xy = P.join(x, y)
            for z in range(n):
                lhs = P.leq(z, imp(x, y))
                rhs = P.meet(P.join(z, y), xy) == y
                if lhs != rhs:
                    return Report([Verdict("L1", False, (x, y, z), ("x", "y", "z"))])
    return Report([Verdict("L1", True)])


def restriction_matches_star(P: Poset, imp: OpTable) -> tuple[int, int] | None:
    """First pair y <= x where imp(x, y) differs from the sectional pseudocomplement."""
    for x in range(P.n):
        for y in range(P.n):
            if P.leq(y, x) and sectional_pc(P, x, y) != imp(x, y):
                return (x, y)
    return None
