"""Terms over {variables, 1, ->, /\\, \\/, *} and (quasi-)identities built from them.

Law text grammar::

    term := var | "1" | "(" term op term ")"       op := "->" | "/\\" | "\\/" | "*"
    atom := term "<=" term | term "=" term
    law  := [atom {"&" atom} "=>"] atom

Parentheses may be dropped: ``*`` binds tightest, then ``/\\``, then ``\\/``,
and ``->`` is loosest and right associative, so ``x -> y -> z`` is
``x -> (y -> z)``.  Variables are single letters numbered by first appearance.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, NamedTuple, Sequence

from .axioms import Ctx, OrderedAlgebra
from .errors import LawSyntaxError, MissingOperation, PartialOperationUndefined


@dataclass(frozen=True)
class Var:
    index: int
    name: str = ""

    def __str__(self):
        return self.name or f"v{self.index}"


@dataclass(frozen=True)
class Unit:
    def __str__(self):
        return "1"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of "->", "/\\", "\\/", "*"
    left: "Term"
    right: "Term"

    def __str__(self):
        return f"({self.left} {self.op} {self.right})"


Term = Var | Unit | BinOp

IMP, MEET, JOIN, MUL = "->", "/\\", "\\/", "*"


def Imp(a, b):
    return BinOp(IMP, a, b)


def Meet(a, b):
    return BinOp(MEET, a, b)


def Join(a, b):
    return BinOp(JOIN, a, b)


def Mul(a, b):
    return BinOp(MUL, a, b)


def ops_used(t: Term) -> frozenset[str]:
    if isinstance(t, BinOp):
        return ops_used(t.left) | ops_used(t.right) | {t.op}
    return frozenset()


def variables(t: Term) -> frozenset[int]:
    if isinstance(t, Var):
        return frozenset({t.index})
    if isinstance(t, BinOp):
        return variables(t.left) | variables(t.right)
    return frozenset()


class Ops(NamedTuple):
    """Operation bundle a term is evaluated against."""

    leq: Callable[[int, int], bool]
    imp: Callable[[int, int], int] | None
    mul: Callable[[int, int], int] | None
    meet: Callable[[int, int], int | None]
    join: Callable[[int, int], int | None]
    one: int | None


def algebra_ops(A: OrderedAlgebra) -> Ops:
    return Ops(A.poset.leq, A.imp, A.mul, A.poset.meet, A.poset.join, A.unit)


def _ctx_ops(c: Ctx, f) -> Ops:
    return Ops(lambda x, y: c.leq[x][y], f, None,
               lambda x, y: c.meet[x][y], lambda x, y: c.join[x][y], c.one)


def evaluate(t: Term, ops: Ops, env: Sequence[int]) -> int:
    if isinstance(t, Var):
        return env[t.index]
    if isinstance(t, Unit):
        if ops.one is None:
            raise MissingOperation("constant 1 needs a top element")
        return ops.one
    a = evaluate(t.left, ops, env)
    b = evaluate(t.right, ops, env)
    if t.op == IMP:
        if ops.imp is None:
            raise MissingOperation("term uses -> but no implication is present")
        return ops.imp(a, b)
    if t.op == MUL:
        if ops.mul is None:
            raise MissingOperation("term uses * but no product is present")
        return ops.mul(a, b)
    v = ops.meet(a, b) if t.op == MEET else ops.join(a, b)
    if v is None:
        raise PartialOperationUndefined(f"{t.op} undefined at ({a}, {b})")
    return v


def eval_term(t: Term, A: OrderedAlgebra, assignment: Sequence[int]) -> int:
    return evaluate(t, algebra_ops(A), assignment)


@dataclass(frozen=True)
class Atom:
    relation: str  # "<=" or "="
    lhs: Term
    rhs: Term

    def decide(self, ops: Ops, env) -> bool:
        a = evaluate(self.lhs, ops, env)
        b = evaluate(self.rhs, ops, env)
        return a == b if self.relation == "=" else ops.leq(a, b)

    def __str__(self):
        return f"{_strip(self.lhs)} {self.relation} {_strip(self.rhs)}"


def _strip(t: Term) -> str:
    s = str(t)
    return s[1:-1] if isinstance(t, BinOp) else s


@dataclass(frozen=True)
class Law:
    hypotheses: tuple[Atom, ...]
    conclusion: Atom
    var_names: tuple[str, ...] = ()
    name: str = field(default="", compare=False)

    @property
    def arity(self) -> int:
        return len(self.var_names)

    @property
    def variables(self) -> tuple[str, ...]:
        return self.var_names

    @property
    def is_identity(self) -> bool:
        return not self.hypotheses

    @property
    def uses_mul(self) -> bool:
        return any(MUL in ops_used(t) for a in self.atoms for t in (a.lhs, a.rhs))

    @property
    def atoms(self) -> tuple[Atom, ...]:
        return self.hypotheses + (self.conclusion,)

    def holds_at(self, ops: Ops, env) -> bool:
        for h in self.hypotheses:
            if not h.decide(ops, env):
                return True
        return self.conclusion.decide(ops, env)

    # constraint protocol used by the table search
    def instances(self, c: Ctx):
        return list(product(range(c.n), repeat=self.arity))

    def holds(self, c: Ctx, f, args) -> bool:
        return self.holds_at(_ctx_ops(c, f), args)

    def __str__(self):
        head = " & ".join(str(h) for h in self.hypotheses)
        return f"{head} => {self.conclusion}" if head else str(self.conclusion)


def check_law(A: OrderedAlgebra, law: Law | str) -> tuple[int, ...] | None:
    """Lexicographically least assignment violating ``law``, or None if it holds."""
    if isinstance(law, str):
        law = parse_law(law)
    ops = algebra_ops(A)
    for env in product(range(A.n), repeat=law.arity):
        if not law.holds_at(ops, env):
            return env
    return None


# parsing ------------------------------------------------------------------

_SYMBOLS = ("->", "/\\", "\\/", "<=", "=>", "*", "=", "&", "(", ")")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        for sym in _SYMBOLS:
            if text.startswith(sym, i):
                tokens.append((sym, i + 1))
                i += len(sym)
                break
        else:
            if "a" <= ch <= "z" or ch == "1":
                tokens.append((ch, i + 1))
                i += 1
            else:
                raise LawSyntaxError(f"unexpected character {ch!r}", i + 1)
    tokens.append(("", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.names: list[str] = []

    def peek(self) -> str:
        return self.tokens[self.pos][0]

    def column(self) -> int:
        return self.tokens[self.pos][1]

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if expected is not None and tok != expected:
            shown = repr(tok) if tok else "end of input"
            raise LawSyntaxError(f"expected {expected!r}, found {shown}", self.column())
        self.pos += 1
        return tok

    def law(self) -> Law:
        atoms = [self.atom()]
        while self.peek() == "&":
            self.take()
            atoms.append(self.atom())
        if self.peek() == "=>":
            self.take()
            law = Law(tuple(atoms), self.atom(), tuple(self.names))
        elif len(atoms) == 1:
            law = Law((), atoms[0], tuple(self.names))
        else:
            raise LawSyntaxError("expected '=>' after hypotheses", self.column())
        if self.peek() != "":
            raise LawSyntaxError(f"unexpected {self.peek()!r}", self.column())
        return law

    def atom(self) -> Atom:
        lhs = self.term()
        rel = self.peek()
        if rel not in ("<=", "="):
            raise LawSyntaxError("expected '<=' or '='", self.column())
        self.take()
        return Atom(rel, lhs, self.term())

    def term(self) -> Term:
        left = self.binary(0)
        if self.peek() == IMP:
            self.take()
            return Imp(left, self.term())
        return left

    _LEVELS = (JOIN, MEET, MUL)

    def binary(self, level: int) -> Term:
        if level == len(self._LEVELS):
            return self.primary()
        op = self._LEVELS[level]
        left = self.binary(level + 1)
        while self.peek() == op:
            self.take()
            left = BinOp(op, left, self.binary(level + 1))
        return left

    def primary(self) -> Term:
        tok = self.peek()
        if tok == "(":
            self.take()
            inner = self.term()
            self.take(")")
            return inner
        if tok == "1":
            self.take()
            return Unit()
        if len(tok) == 1 and "a" <= tok <= "z":
            self.take()
            if tok not in self.names:
                self.names.append(tok)
            return Var(self.names.index(tok), tok)
        shown = repr(tok) if tok else "end of input"
        raise LawSyntaxError(f"expected a term, found {shown}", self.column())


def parse_law(text: str, name: str = "") -> Law:
    law = _Parser(text).law()
    return Law(law.hypotheses, law.conclusion, law.var_names, name or text.strip())


def parse_term(text: str) -> tuple[Term, tuple[str, ...]]:
    p = _Parser(text)
    t = p.term()
    if p.peek() != "":
        raise LawSyntaxError(f"unexpected {p.peek()!r}", p.column())
    return t, tuple(p.names)


# the four arithmetical terms ------------------------------------------------

def _dot(a: Term, b: Term) -> Term:
    # "a -> b. -> b" means (a -> b) -> b
    return Imp(Imp(a, b), b)


def majority_lower(x: Term, y: Term, z: Term) -> Term:
    return Meet(Meet(_dot(x, y), _dot(y, z)), _dot(z, x))


def malcev_lower(x: Term, y: Term, z: Term) -> Term:
    return Meet(Imp(Imp(x, y), z), Imp(Imp(z, y), x))


def majority_upper(x: Term, y: Term, z: Term) -> Term:
    return Join(Join(Mul(x, Imp(x, y)), Mul(y, Imp(y, z))), Mul(z, Imp(z, x)))


def malcev_upper(x: Term, y: Term, z: Term) -> Term:
    return Join(Mul(x, Imp(y, z)), Mul(z, Imp(y, x)))


def arithmetical_identities(majority, malcev) -> list[Law]:
    x, y = Var(0, "x"), Var(1, "y")
    names = ("x", "y")
    return [
        Law((), Atom("=", majority(x, x, y), x), names, "MAJ-XXY"),
        Law((), Atom("=", majority(x, y, x), x), names, "MAJ-XYX"),
        Law((), Atom("=", majority(y, x, x), x), names, "MAJ-YXX"),
        Law((), Atom("=", malcev(x, y, y), x), names, "MALCEV-XYY"),
        Law((), Atom("=", malcev(y, y, x), x), names, "MALCEV-YYX"),
    ]
