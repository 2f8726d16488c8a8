"""Plain-text structure files.

::

    algebra m2
    elements 4 0 a b 1
    top 1
    leq 0 a
    op imp
    1 1 1 1
    ...
    end

``leq`` lines are generators (the order is their reflexive-transitive
closure).  ``op`` is followed by n rows of n element names; row i, column j is
op(i, j).  ``#`` starts a comment.  Serialization writes the Hasse diagram as
the ``leq`` lines and the tables in the order imp, mul, join, meet, so a
serialized file parses back to an equal structure and reserializes
byte-identically.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .axioms import OrderedAlgebra
from .errors import BadTableShape, InconsistentTable, StructureSyntaxError, UnknownName
from .poset import Poset
from .tables import OpTable

OP_NAMES = ("imp", "mul", "join", "meet")
KEYWORDS = ("algebra", "elements", "top", "leq", "op", "end")


@dataclass(frozen=True)
class StructureFile:
    name: str
    poset: Poset
    ops: dict = field(default_factory=dict)
    unit: int | None = None

    def op(self, key: str) -> OpTable | None:
        return self.ops.get(key)

    def with_op(self, key: str, table: OpTable) -> "StructureFile":
        ops = dict(self.ops)
        ops[key] = table
        return StructureFile(self.name, self.poset, ops, self.unit)

    def to_algebra(self) -> OrderedAlgebra:
        return OrderedAlgebra(self.poset, self.unit, self.ops.get("imp"), self.ops.get("mul"),
                              self.name)

    @classmethod
    def from_algebra(cls, A: OrderedAlgebra, name: str = "") -> "StructureFile":
        ops = {}
        if A.imp is not None:
            ops["imp"] = A.imp
        if A.mul is not None:
            ops["mul"] = A.mul
        unit = A.unit if (A.imp is not None or A.unit is not None) else None
        return cls(name or A.name or "unnamed", A.poset, ops, unit)


def _tokens(line: str) -> list[tuple[str, int]]:
    body = line.split("#", 1)[0]
    out = []
    i = 0
    while i < len(body):
        if body[i].isspace():
            i += 1
            continue
        j = i
        while j < len(body) and not body[j].isspace():
            j += 1
        out.append((body[i:j], i + 1))
        i = j
    return out


def _lines(text: str):
    for number, line in enumerate(text.split("\n"), start=1):
        toks = _tokens(line)
        if toks:
            yield number, toks


def parse_many(text: str) -> list[StructureFile]:
    lines = list(_lines(text))
    out = []
    pos = 0
    while pos < len(lines):
        s, pos = _parse_block(lines, pos)
        out.append(s)
    return out


def parse(text: str) -> StructureFile:
    blocks = parse_many(text)
    if len(blocks) != 1:
        raise StructureSyntaxError(f"expected exactly one algebra, found {len(blocks)}", 1)
    return blocks[0]


def _parse_block(lines, pos):
    number, toks = lines[pos]
    if toks[0][0] != "algebra" or len(toks) != 2:
        raise StructureSyntaxError("expected 'algebra <name>'", number, toks[0][1])
    name = toks[1][0]
    pos += 1
    names: list[str] | None = None
    index: dict[str, int] = {}
    top_name = None
    pairs = []
    raw_ops: dict[str, tuple[int, list]] = {}

    def lookup(tok, col, line_no):
        if names is None:
            raise StructureSyntaxError("'elements' must come first", line_no, col)
        if tok not in index:
            raise UnknownName(f"line {line_no}, column {col}: unknown element {tok!r}")
        return index[tok]

    while True:
        if pos >= len(lines):
            raise StructureSyntaxError("missing 'end'", lines[-1][0] + 1)
        number, toks = lines[pos]
        key, col = toks[0]
        pos += 1
        if key == "end":
            if len(toks) != 1:
                raise StructureSyntaxError("'end' takes no arguments", number, toks[1][1])
            break
        if key == "elements":
            if names is not None:
                raise StructureSyntaxError("duplicate 'elements'", number, col)
            if len(toks) < 2 or not toks[1][0].isdigit():
                raise StructureSyntaxError("expected 'elements <n> <names>'", number, col)
            n = int(toks[1][0])
            if n < 1 or len(toks) != n + 2:
                raise StructureSyntaxError(f"expected {n} element names", number, toks[1][1])
            names = [t for t, _ in toks[2:]]
            for t, c in toks[2:]:
                if t in KEYWORDS:
                    raise StructureSyntaxError(f"element name {t!r} is a keyword", number, c)
            if len(set(names)) != n:
                raise StructureSyntaxError("element names must be distinct", number, toks[2][1])
            index = {nm: i for i, nm in enumerate(names)}
        elif key == "top":
            if len(toks) != 2:
                raise StructureSyntaxError("expected 'top <name>'", number, col)
            top_name = lookup(toks[1][0], toks[1][1], number)
        elif key == "leq":
            if len(toks) != 3:
                raise StructureSyntaxError("expected 'leq <a> <b>'", number, col)
            pairs.append((lookup(*toks[1], number), lookup(*toks[2], number)))
        elif key == "op":
            if len(toks) != 2 or toks[1][0] not in OP_NAMES:
                raise StructureSyntaxError(f"expected 'op' followed by one of {OP_NAMES}", number, col)
            if names is None:
                raise StructureSyntaxError("'elements' must come first", number, col)
            which = toks[1][0]
            if which in raw_ops:
                raise StructureSyntaxError(f"duplicate table {which!r}", number, toks[1][1])
            rows = []
            while pos < len(lines) and lines[pos][1][0][0] not in KEYWORDS:
                row_no, row_toks = lines[pos]
                rows.append([lookup(t, c, row_no) for t, c in row_toks])
                pos += 1
            n = len(names)
            if len(rows) != n or any(len(r) != n for r in rows):
                shape = f"{len(rows)}x{max((len(r) for r in rows), default=0)}"
                raise BadTableShape(f"line {number}: table {which!r} is {shape}, expected {n}x{n}")
            raw_ops[which] = (number, rows)
        else:
            raise StructureSyntaxError(f"unknown directive {key!r}", number, col)

    if names is None:
        raise StructureSyntaxError("missing 'elements'", number)
    poset = Poset.from_generators(len(names), pairs, names)
    if top_name is not None and poset.top != top_name:
        raise InconsistentTable(f"declared top {names[top_name]!r} is not the greatest element")
    ops = {}
    for which in OP_NAMES:
        if which not in raw_ops:
            continue
        line_no, rows = raw_ops[which]
        table = OpTable.from_rows(rows)
        if which in ("join", "meet"):
            actual = poset.join if which == "join" else poset.meet
            for x in range(poset.n):
                for y in range(poset.n):
                    if actual(x, y) != table(x, y):
                        raise InconsistentTable(
                            f"line {line_no}: {which}({names[x]}, {names[y]}) disagrees with the order")
        ops[which] = table
    if "imp" in ops and poset.top is None:
        raise InconsistentTable("an implication table needs a top element")
    return StructureFile(name, poset, ops, top_name), pos


def serialize(s: StructureFile) -> str:
    P = s.poset
    nm = P.names
    out = [f"algebra {s.name}", f"elements {P.n} " + " ".join(nm)]
    if s.unit is not None:
        out.append(f"top {nm[s.unit]}")
    out.extend(f"leq {nm[a]} {nm[b]}" for a, b in P.covers())
    for which in OP_NAMES:
        table = s.ops.get(which)
        if table is None:
            continue
        out.append(f"op {which}")
        out.extend(" ".join(nm[v] for v in row) for row in table.rows())
    out.append("end")
    return "\n".join(out) + "\n"


def load(path) -> StructureFile:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())
