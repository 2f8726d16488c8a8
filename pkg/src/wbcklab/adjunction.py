"""Products obtained from implications, adjunctions and residuated groupoids."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from typing import Iterator

from .axioms import AxiomId, OrderedAlgebra, check_axioms, holds
from .errors import AdjunctionRequired, NotIdempotentPocrig, NotJoinSemilattice
from .poset import Poset, _bits
from .report import Report, Verdict
from .tables import OpTable


def _least(P: Poset, mask: int) -> int | None:
    for m in _bits(mask):
        if mask & ~P.up[m] == 0:
            return m
    return None


def _greatest(P: Poset, mask: int) -> int | None:
    for m in _bits(mask):
        if mask & ~P.down[m] == 0:
            return m
    return None


def condition_s(A: OrderedAlgebra) -> tuple[OpTable | None, tuple[int, int] | None]:
    """Product x.y = least z with x <= y -> z, plus the first pair lacking one."""
    imp = A.require_imp()
    P = A.poset
    n = A.n
    cells = []
    for x in range(n):
        for y in range(n):
            zs = 0
            for z in range(n):
                if P.leq(x, imp(y, z)):
                    zs |= 1 << z
            least = _least(P, zs)
            if least is None:
                return None, (x, y)
            cells.append(least)
    return OpTable(n, tuple(cells)), None


def condition_s_product(A: OrderedAlgebra) -> OpTable | None:
    return condition_s(A)[0]


def check_condition_s(A: OrderedAlgebra) -> Report:
    _, witness = condition_s(A)
    return Report([Verdict("CONDITION-S", witness is None, witness, ("x", "y") if witness else ())])


def check_adjunction(A: OrderedAlgebra) -> Report:
    """Eq. x <= y -> z iff xy <= z, and separately the four conditions a1..a4."""
    imp, mul = A.require_imp(), A.require_mul()
    P = A.poset
    n = A.n
    r = range(n)
    leq = P.leq

    def first(pred, arity):
        if arity == 2:
            return next(((x, y) for x in r for y in r if not pred(x, y)), None)
        return next(((x, y, z) for x in r for y in r for z in r if not pred(x, y, z)), None)

    eq11 = first(lambda x, y, z: leq(x, imp(y, z)) == leq(mul(x, y), z), 3)
    a1 = first(lambda x, y: leq(x, imp(y, mul(x, y))), 2)
    a2 = first(lambda x, y: leq(mul(imp(x, y), x), y), 2)
    a3 = first(lambda x, y, z: not leq(x, y) or leq(imp(z, x), imp(z, y)), 3)
    a4 = first(lambda x, y, z: not leq(x, y) or leq(mul(x, z), mul(y, z)), 3)
    xyz, xy = ("x", "y", "z"), ("x", "y")
    report = Report([
        Verdict("ADJUNCTION", eq11 is None, eq11, xyz if eq11 else ()),
        Verdict("A1", a1 is None, a1, xy if a1 else ()),
        Verdict("A2", a2 is None, a2, xy if a2 else ()),
        Verdict("A3", a3 is None, a3, xyz if a3 else ()),
        Verdict("A4", a4 is None, a4, xyz if a4 else ()),
    ])
    four = all(w is None for w in (a1, a2, a3, a4))
    report.add(Verdict("ADJ4-EQUIV", (eq11 is None) == four,
                       note="" if (eq11 is None) == four else "adjunction and a1-a4 disagree"))
    return report


def is_adjunction(A: OrderedAlgebra) -> bool:
    return check_adjunction(A)["ADJUNCTION"].holds


@dataclass(frozen=True)
class GroupoidProfile:
    commutative: bool
    associative: bool
    idempotent: bool
    has_neutral_unit: bool
    integral: bool
    isotone: bool
    residuated: bool
    residual: OpTable | None = None

    @property
    def is_pocrig(self) -> bool:
        return self.commutative and self.integral and self.residuated and self.isotone

    @property
    def is_pocrim(self) -> bool:
        return self.is_pocrig and self.associative


def residual_table(P: Poset, mul: OpTable) -> OpTable | None:
    """y -> z := max{x : x.y <= z}, or None if some maximum is missing."""
    n = P.n
    cells = []
    for y in range(n):
        for z in range(n):
            xs = 0
            for x in range(n):
                if P.leq(mul(x, y), z):
                    xs |= 1 << x
            best = _greatest(P, xs)
            if best is None:
                return None
            cells.append(best)
    return OpTable(n, tuple(cells))


def classify_groupoid(A: OrderedAlgebra) -> GroupoidProfile:
    mul = A.require_mul()
    P = A.poset
    n = A.n
    r = range(n)
    one = A.unit
    commutative = all(mul(x, y) == mul(y, x) for x in r for y in r)
    associative = all(mul(mul(x, y), z) == mul(x, mul(y, z)) for x in r for y in r for z in r)
    idempotent = all(mul(x, x) == x for x in r)
    neutral = one is not None and all(mul(one, x) == x == mul(x, one) for x in r)
    integral = neutral and one == P.top
    isotone = all(
        P.leq(mul(x, z), mul(y, z)) and P.leq(mul(z, x), mul(z, y))
        for x in r for y in r if P.leq(x, y) for z in r
    )
    residual = residual_table(P, mul)
    residuated = residual is not None and all(
        P.leq(mul(x, y), z) == P.leq(x, residual(y, z)) for x in r for y in r for z in r
    )
    if residuated and not commutative:
        # left residuation alone is not enough for a pocrig; demand the mirrored law too
        residuated = all(
            P.leq(mul(y, x), z) == P.leq(x, residual(y, z)) for x in r for y in r for z in r
        )
    return GroupoidProfile(commutative, associative, idempotent, neutral, integral, isotone,
                           residuated, residual if residuated else None)


def is_pocrig(A: OrderedAlgebra) -> bool:
    """(A, mul, imp, unit) is a pocrig: commutative, integral, and imp is the adjoint of mul."""
    prof = classify_groupoid(A)
    return prof.commutative and prof.integral and is_adjunction(A)


def is_pocrim(A: OrderedAlgebra) -> bool:
    return is_pocrig(A) and classify_groupoid(A).associative


def check_theorem_dual(A: OrderedAlgebra) -> Report:
    """Under an adjunction: wBCK* iff commutative with neutral top; then REG iff idempotent."""
    if not is_adjunction(A):
        raise AdjunctionRequired("the product and implication do not form an adjunction")
    prof = classify_groupoid(A)
    wbck = holds(A, AxiomId.LE_TO) and holds(A, AxiomId.W_EXCH)
    groupoid_side = prof.commutative and prof.integral
    report = Report([Verdict("DUAL-WBCK", wbck == groupoid_side,
                             note=f"wbck={wbck} commutative-integral={groupoid_side}")])
    if wbck:
        reg = holds(A, AxiomId.REG)
        report.add(Verdict("DUAL-REG", reg == prof.idempotent,
                           note=f"reg={reg} idempotent={prof.idempotent}"))
    return report


def check_idempotent_pocrig(A: OrderedAlgebra) -> Report:
    """An idempotent pocrig multiplies by meet and implies by relative pseudocomplement."""
    prof = classify_groupoid(A)
    if not (prof.commutative and prof.integral and prof.residuated and prof.isotone
            and prof.idempotent):
        raise NotIdempotentPocrig("the product is not an idempotent pocrig multiplication")
    mul = A.mul
    P = A.poset
    imp = A.imp if A.imp is not None else prof.residual
    bad = next(((x, y) for x in range(A.n) for y in range(A.n) if mul(x, y) != P.meet(x, y)), None)
    report = Report([Verdict("PRODUCT-IS-MEET", bad is None, bad, ("x", "y") if bad else ())])
    report.extend(check_axioms(A.with_imp(imp), (AxiomId.RPC_8, AxiomId.RPC_9)))
    return report


def check_mult_semilattice(A: OrderedAlgebra) -> Report:
    """Both distributive laws of the product over joins."""
    mul = A.require_mul()
    P = A.poset
    if not P.flags.is_join_semilattice:
        raise NotJoinSemilattice("distributivity over joins needs a join-semilattice")
    r = range(A.n)
    right = next(((x, y, z) for x in r for y in r for z in r
                  if mul(P.join(x, y), z) != P.join(mul(x, z), mul(y, z))), None)
    left = next(((x, y, z) for x in r for y in r for z in r
                 if mul(z, P.join(x, y)) != P.join(mul(z, x), mul(z, y))), None)
    xyz = ("x", "y", "z")
    return Report([
        Verdict("DIST-RIGHT", right is None, right, xyz if right else ()),
        Verdict("DIST-LEFT", left is None, left, xyz if left else ()),
    ])


def with_condition_s_product(A: OrderedAlgebra) -> OrderedAlgebra | None:
    mul = condition_s_product(A)
    return None if mul is None else A.with_mul(mul)



def enumerate_pocrigs(P: Poset) -> Iterator[OrderedAlgebra]:
    """Every pocrig on ``P``, found from the product side.

    With the top as neutral element and an isotone product, x.y lies below both
    x and y, so only common lower bounds are tried for each unordered pair of
    non-top elements; the implication is the residual of each surviving product.
    """
    top = P.top
    if top is None:
        return
    others = [e for e in range(P.n) if e != top]
    pairs = list(combinations_with_replacement(others, 2))
    options = [list(_bits(P.down[x] & P.down[y])) for x, y in pairs]
    n = P.n
    for choice in product(*options):
        cells = [0] * (n * n)
        for x in range(n):
            cells[x * n + top] = cells[top * n + x] = x
        for (x, y), v in zip(pairs, choice):
            cells[x * n + y] = cells[y * n + x] = v
        mul = OpTable(n, tuple(cells))
        imp = residual_table(P, mul)
        if imp is None:
            continue
        A = OrderedAlgebra(P, imp=imp, mul=mul)
        if is_pocrig(A):
            yield A
