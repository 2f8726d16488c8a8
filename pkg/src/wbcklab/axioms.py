"""Implicative algebras on finite posets and the catalog of laws they may satisfy.

Every law is an ``Axiom``: a tuple of variable names, an instance generator
(the assignments the law quantifies over, in lexicographic order, with any
hypothesis that does not mention the implication already filtered out) and a
predicate deciding one instance.  Predicates only touch the implication
through the callable ``f``, so the search in :mod:`wbcklab.search` can run the
same predicates on partially filled tables.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Iterable, Iterator, NamedTuple

from .errors import MissingOperation, NotMeetSemilattice, PreconditionViolation
from .poset import Poset
from .report import Report, Verdict
from .tables import OpTable


class AxiomId(str, Enum):
    LE_TO = "LE-TO"
    W_EXCH = "W-EXCH"
    REG = "REG"
    COMP = "COMP"
    ISOT = "ISOT"
    REGG = "REGG"
    BCK2 = "BCK2"
    ANTITONE = "ANTITONE"
    UBOUND = "UBOUND"
    EXPAN = "EXPAN"
    REFL = "REFL"
    H1 = "H1"
    SREG = "SREG"
    UNIT = "UNIT"
    BCK1 = "BCK1"
    HILB_CONTR = "HILB-CONTR"
    POS_IMPL = "POS-IMPL"
    RPC_8 = "RPC-8"
    RPC_9 = "RPC-9"
    RPC_10 = "RPC-10"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, text: str) -> "AxiomId":
        key = text.strip().upper().replace("_", "-")
        for a in cls:
            if a.value == key:
                return a
        raise ValueError(f"unknown axiom id {text!r}")


DERIVED_LAWS = (
    AxiomId.BCK2, AxiomId.ANTITONE, AxiomId.UBOUND, AxiomId.EXPAN,
    AxiomId.REFL, AxiomId.H1, AxiomId.SREG, AxiomId.UNIT,
)

# class name -> the axioms whose conjunction defines it
CLASS_AXIOMS: dict[str, tuple[AxiomId, ...]] = {
    "wbck": (AxiomId.LE_TO, AxiomId.W_EXCH),
    "wcontractive": (AxiomId.LE_TO, AxiomId.W_EXCH, AxiomId.REG),
    "sjp": (AxiomId.LE_TO, AxiomId.W_EXCH, AxiomId.REG, AxiomId.COMP),
    "bck": (AxiomId.LE_TO, AxiomId.BCK2, AxiomId.BCK1),
    "hilbert": (AxiomId.LE_TO, AxiomId.BCK2, AxiomId.BCK1, AxiomId.POS_IMPL),
    "relpc": (AxiomId.RPC_8, AxiomId.RPC_9),
}


class Ctx(NamedTuple):
    n: int
    leq: tuple[tuple[bool, ...], ...]
    meet: tuple[tuple[int | None, ...], ...]
    join: tuple[tuple[int | None, ...], ...]
    down: tuple[int, ...]
    one: int | None


@lru_cache(maxsize=4096)
def context(poset: Poset) -> Ctx:
    return Ctx(poset.n, poset.leq_matrix, poset.meet_table, poset.join_table,
               poset.down, poset.top)


Pred = Callable[[Ctx, Callable[[int, int], int], tuple], bool]


@dataclass(frozen=True)
class Axiom:
    id: AxiomId
    variables: tuple[str, ...]
    test: Pred
    where: Callable[[Ctx, tuple], bool] | None = None
    needs_meet: bool = False

    def instances(self, c: Ctx) -> list[tuple]:
        return _instances(self, c)

    def holds(self, c: Ctx, f, args: tuple) -> bool:
        return self.test(c, f, args)


@lru_cache(maxsize=None)
def _instances(ax: Axiom, c: Ctx) -> list[tuple]:
    if ax.needs_meet and any(m is None for row in c.meet for m in row):
        raise NotMeetSemilattice(f"{ax.id} needs all meets to exist")
    tuples = product(range(c.n), repeat=len(ax.variables))
    if ax.where is None:
        return list(tuples)
    return [t for t in tuples if ax.where(c, t)]


def _le_to(c, f, a):
    x, y = a
    return c.leq[x][y] == (f(x, y) == c.one)


def _w_exch(c, f, a):
    x, y, z = a
    return not c.leq[x][f(y, z)] or c.leq[y][f(x, z)]


def _reg(c, f, a):
    x, y = a
    return not c.leq[x][f(x, y)] or c.leq[x][y]


def _comp(c, f, a):
    x, y = a
    return c.leq[x][f(y, c.meet[x][y])]


def _isot(c, f, a):
    z, x, y = a
    return c.leq[f(z, x)][f(z, y)]


def _regg(c, f, a):
    x, y = a
    return c.leq[c.meet[x][f(x, y)]][y]


def _bck2(c, f, a):
    x, y = a
    return c.leq[x][f(f(x, y), y)]


def _antitone(c, f, a):
    x, y, z = a
    return c.leq[f(y, z)][f(x, z)]


def _ubound(c, f, a):
    x, y = a
    return c.leq[y][f(f(x, y), y)]


def _expan(c, f, a):
    x, y = a
    return f(f(f(x, y), y), y) == f(x, y)


def _refl(c, f, a):
    return f(a[0], a[0]) == c.one


def _h1(c, f, a):
    x, y = a
    return c.leq[x][f(y, x)]


def _sreg(c, f, a):
    return f(c.one, a[0]) == a[0]


def _unit(c, f, a):
    return f(a[0], c.one) == c.one


def _bck1(c, f, a):
    x, y, z = a
    return c.leq[f(x, y)][f(f(y, z), f(x, z))]


def _hilb_contr(c, f, a):
    x, y = a
    return f(x, f(x, y)) == f(x, y)


def _pos_impl(c, f, a):
    x, y, z = a
    return c.leq[f(x, f(y, z))][f(f(x, y), f(x, z))]


def _rpc8(c, f, a):
    u, x, y, v = a
    return not c.leq[u][f(x, y)] or c.leq[v][y]


def _rpc9(c, f, a):
    u, x, y = a
    return c.leq[u][f(x, y)]


def _rpc10(c, f, a):
    z, x, y = a
    return not c.leq[z][f(x, y)] or c.leq[z][y]


def _first_le_second(c, a):
    return c.leq[a[0]][a[1]]


def _middle_le_last(c, a):
    return c.leq[a[1]][a[2]]


def _meet_exists(c, a):
    return c.meet[a[0]][a[1]] is not None


def _v_below_x_and_u(c, a):
    u, x, _, v = a
    return c.leq[v][x] and c.leq[v][u]


def _lower_bounds_below_y(c, a):
    u, x, y = a
    common = c.down[u] & c.down[x]
    return common & ~c.down[y] == 0


def _z_below_x(c, a):
    return c.leq[a[0]][a[1]]


AXIOMS: dict[AxiomId, Axiom] = {a.id: a for a in (
    Axiom(AxiomId.LE_TO, ("x", "y"), _le_to),
    Axiom(AxiomId.W_EXCH, ("x", "y", "z"), _w_exch),
    Axiom(AxiomId.REG, ("x", "y"), _reg),
    Axiom(AxiomId.COMP, ("x", "y"), _comp, _meet_exists),
    Axiom(AxiomId.ISOT, ("z", "x", "y"), _isot, _middle_le_last),
    Axiom(AxiomId.REGG, ("x", "y"), _regg, needs_meet=True),
    Axiom(AxiomId.BCK2, ("x", "y"), _bck2),
    Axiom(AxiomId.ANTITONE, ("x", "y", "z"), _antitone, _first_le_second),
    Axiom(AxiomId.UBOUND, ("x", "y"), _ubound),
    Axiom(AxiomId.EXPAN, ("x", "y"), _expan),
    Axiom(AxiomId.REFL, ("x",), _refl),
    Axiom(AxiomId.H1, ("x", "y"), _h1),
    Axiom(AxiomId.SREG, ("x",), _sreg),
    Axiom(AxiomId.UNIT, ("x",), _unit),
    Axiom(AxiomId.BCK1, ("x", "y", "z"), _bck1),
    Axiom(AxiomId.HILB_CONTR, ("x", "y"), _hilb_contr),
    Axiom(AxiomId.POS_IMPL, ("x", "y", "z"), _pos_impl),
    Axiom(AxiomId.RPC_8, ("u", "x", "y", "v"), _rpc8, _v_below_x_and_u),
    Axiom(AxiomId.RPC_9, ("u", "x", "y"), _rpc9, _lower_bounds_below_y),
    Axiom(AxiomId.RPC_10, ("z", "x", "y"), _rpc10, _z_below_x),
)}


@dataclass(frozen=True)
class OrderedAlgebra:
    """A poset with a designated unit and optional implication and product tables."""

    poset: Poset
    unit: int | None = None
    imp: OpTable | None = None
    mul: OpTable | None = None
    name: str = ""

    def __post_init__(self):
        if self.unit is None:
            object.__setattr__(self, "unit", self.poset.top)
        for label, table in (("imp", self.imp), ("mul", self.mul)):
            if table is not None and table.n != self.poset.n:
                raise PreconditionViolation(f"{label} table size differs from the carrier")
        if self.imp is not None and (self.poset.top is None or self.unit != self.poset.top):
            raise PreconditionViolation("with an implication present the unit must be the top element")

    @property
    def n(self) -> int:
        return self.poset.n

    @property
    def names(self) -> tuple[str, ...]:
        return self.poset.names

    def with_imp(self, imp: OpTable | None) -> "OrderedAlgebra":
        return replace(self, imp=imp)

    def with_mul(self, mul: OpTable | None) -> "OrderedAlgebra":
        return replace(self, mul=mul)

    def require_imp(self) -> OpTable:
        if self.imp is None:
            raise MissingOperation("this check needs an implication table")
        return self.imp

    def require_mul(self) -> OpTable:
        if self.mul is None:
            raise MissingOperation("this check needs a product table")
        return self.mul

    def meet(self, x, y):
        return self.poset.meet(x, y)

    def join(self, x, y):
        return self.poset.join(x, y)


def find_violation(axiom: Axiom, c: Ctx, f) -> tuple | None:
    for args in axiom.instances(c):
        if not axiom.test(c, f, args):
            return args
    return None


def check_axiom(A: OrderedAlgebra, axiom_id: AxiomId | str) -> Report:
    ax = AXIOMS[AxiomId.parse(axiom_id) if isinstance(axiom_id, str) else axiom_id]
    imp = A.require_imp()
    witness = find_violation(ax, context(A.poset), imp)
    return Report([Verdict(ax.id.value, witness is None, witness, ax.variables)])


def check_axioms(A: OrderedAlgebra, ids: Iterable[AxiomId]) -> Report:
    report = Report()
    for a in ids:
        report.extend(check_axiom(A, a))
    return report


def holds(A: OrderedAlgebra, axiom_id: AxiomId) -> bool:
    ax = AXIOMS[axiom_id]
    return find_violation(ax, context(A.poset), A.require_imp()) is None


def check_le_to(A: OrderedAlgebra) -> Report:
    return check_axiom(A, AxiomId.LE_TO)


def check_derived_laws(A: OrderedAlgebra) -> Report:
    """The eight consequences of LE-TO and W-EXCH, each reported separately."""
    return check_axioms(A, DERIVED_LAWS)


@dataclass(frozen=True)
class Classification:
    wbck: bool
    wcontractive: bool
    sjp: bool
    bck: bool
    hilbert: bool
    relpc: bool
    heyting: bool
    hilbert_by_contraction: bool
    relpc_by_rpc10: bool
    axioms: dict = field(default_factory=dict, compare=False)

    @property
    def memberships(self) -> frozenset[str]:
        names = ("wbck", "wcontractive", "sjp", "bck", "hilbert", "relpc", "heyting")
        return frozenset(k for k in names if getattr(self, k))

    def cross_checks_agree(self) -> bool:
        # POS-IMPL and HILB-CONTR are interchangeable inside BCK*; RPC-10 can replace RPC-8
        return self.hilbert == self.hilbert_by_contraction and self.relpc == self.relpc_by_rpc10

    def containments_hold(self) -> bool:
        return ((not self.hilbert or self.wcontractive)
                and (not self.relpc or self.sjp)
                and (not self.bck or self.wbck)
                and (not self.heyting or self.relpc))


def classify(A: OrderedAlgebra) -> Classification:
    imp = A.require_imp()
    c = context(A.poset)
    ids = [a for a in AxiomId if a is not AxiomId.REGG]
    ok = {a: find_violation(AXIOMS[a], c, imp) is None for a in ids}

    def all_of(*xs):
        return all(ok[x] for x in xs)

    bck = all_of(AxiomId.LE_TO, AxiomId.BCK2, AxiomId.BCK1)
    relpc = all_of(AxiomId.RPC_8, AxiomId.RPC_9)
    return Classification(
        wbck=all_of(*CLASS_AXIOMS["wbck"]),
        wcontractive=all_of(*CLASS_AXIOMS["wcontractive"]),
        sjp=all_of(*CLASS_AXIOMS["sjp"]),
        bck=bck,
        hilbert=bck and ok[AxiomId.POS_IMPL],
        relpc=relpc,
        heyting=relpc and A.poset.flags.is_lattice,
        hilbert_by_contraction=bck and ok[AxiomId.HILB_CONTR],
        relpc_by_rpc10=all_of(AxiomId.RPC_10, AxiomId.RPC_9),
        axioms=ok,
    )


def enumerate_imp_tables(P: Poset, required: Iterable) -> Iterator[OpTable]:
    """All implication tables on ``P`` satisfying ``required`` (axiom ids and/or laws)."""
    from .search import enumerate_tables
    return enumerate_tables(P, required)


def subalgebras(A: OrderedAlgebra) -> Iterator[OrderedAlgebra]:
    """Every subset containing the unit and closed under imp (and mul), as an algebra.

    Carriers are emitted by increasing size, then lexicographically; the induced
    order is inherited and elements keep their names.
    """
    imp = A.require_imp()
    mul = A.mul
    n = A.n
    others = [e for e in range(n) if e != A.unit]
    for k in range(n):
        for chosen in combinations(others, k):
            carrier = sorted(chosen + (A.unit,))
            members = set(carrier)
            if any(imp(x, y) not in members for x in carrier for y in carrier):
                continue
            if mul is not None and any(mul(x, y) not in members for x in carrier for y in carrier):
                continue
            yield induced_subalgebra(A, carrier)


def induced_subalgebra(A: OrderedAlgebra, carrier: list[int]) -> OrderedAlgebra:
    pos = {e: i for i, e in enumerate(carrier)}
    pairs = [(pos[x], pos[y]) for x in carrier for y in carrier if A.poset.leq(x, y)]
    sub = Poset.from_generators(len(carrier), pairs, [A.names[e] for e in carrier])
    return OrderedAlgebra(
        sub,
        pos[A.unit],
        A.imp.restrict(carrier) if A.imp is not None else None,
        A.mul.restrict(carrier) if A.mul is not None else None,
    )


def check_max_form(A: OrderedAlgebra) -> Report:
    """x -> y is the greatest of z -> y over common upper bounds z of x and y.

    Only the restriction of the implication to pairs y <= z is consulted, so
    this checks that the table is determined by its sectional part.
    """
    imp = A.require_imp()
    P = A.poset
    for x in range(A.n):
        for y in range(A.n):
            values = {imp(z, y) for z in range(A.n) if P.leq(x, z) and P.leq(y, z)}
            best = [m for m in values if all(P.leq(v, m) for v in values)]
            if best != [imp(x, y)]:
                return Report([Verdict("MAX-FORM", False, (x, y), ("x", "y"))])
    return Report([Verdict("MAX-FORM", True)])
