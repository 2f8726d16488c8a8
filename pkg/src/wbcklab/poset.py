"""Finite posets stored as bit-matrix rows, plus canonical enumeration.

Elements are the integers ``0 .. n-1``.  Row ``down[y]`` is a bitmask whose
bit ``x`` is set iff ``x <= y``.  Names are display metadata only.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations, product
from typing import Iterable, Iterator, Sequence

from .errors import AntisymmetryViolation, BoundExceeded, IndexOutOfRange, NotAPoset

MAX_ENUM_SIZE = 8

ORDER_CLASSES = ("poset", "top", "meetsl", "joinsl", "lattice")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _default_names(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Total-order key; equal codes iff the posets are order-isomorphic."""

    key: tuple


@dataclass(frozen=True)
class OrderFlags:
    has_top: bool
    is_meet_semilattice: bool
    is_join_semilattice: bool
    is_lattice: bool

    def matches(self, order_class: str | None) -> bool:
        if order_class in (None, "poset"):
            return True
        if order_class == "top":
            return self.has_top
        if order_class == "meetsl":
            return self.is_meet_semilattice
        if order_class == "joinsl":
            return self.is_join_semilattice
        if order_class == "lattice":
            return self.is_lattice
        raise ValueError(f"unknown order class {order_class!r}")


@dataclass(frozen=True)
class Poset:
    n: int
    down: tuple[int, ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise NotAPoset("a poset needs at least one element")
        if len(self.down) != self.n:
            raise NotAPoset("one down-set row per element required")
        if not self.names:
            object.__setattr__(self, "names", _default_names(self.n))
        if len(self.names) != self.n or len(set(self.names)) != self.n:
            raise NotAPoset("names must be n distinct strings")
        full = (1 << self.n) - 1
        for y, row in enumerate(self.down):
            if row & ~full:
                raise IndexOutOfRange(f"row {y} mentions elements outside the carrier")
            if not row >> y & 1:
                raise NotAPoset(f"not reflexive at {y}")
            for x in _bits(row):
                if x != y and self.down[x] >> y & 1:
                    raise AntisymmetryViolation(min(x, y), max(x, y))
                if self.down[x] & ~row:
                    raise NotAPoset(f"not transitive below {y}")

    # construction -------------------------------------------------------

    @classmethod
    def from_generators(cls, n: int, pairs: Iterable[tuple[int, int]],
                        names: Sequence[str] | None = None) -> "Poset":
        """Reflexive-transitive closure of ``pairs`` (each ``(a, b)`` meaning a <= b)."""
        if n < 1:
            raise IndexOutOfRange("n must be at least 1")
        down = [1 << i for i in range(n)]
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise IndexOutOfRange(f"pair {(a, b)} outside 0..{n - 1}")
            down[b] |= 1 << a
        # Warshall closure on rows
        for k in range(n):
            for y in range(n):
                if down[y] >> k & 1:
                    down[y] |= down[k]
        for y in range(n):
            for x in _bits(down[y]):
                if x != y and down[x] >> y & 1:
                    raise AntisymmetryViolation(min(x, y), max(x, y))
        return cls(n, tuple(down), tuple(names) if names else ())

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls.from_generators(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls.from_generators(n, [])

    def relabel(self, order: Sequence[int]) -> "Poset":
        """New poset whose element ``i`` is this poset's element ``order[i]``."""
        pos = [0] * self.n
        for i, old in enumerate(order):
            pos[old] = i
        down = []
        for old in order:
            mask = 0
            for x in _bits(self.down[old]):
                mask |= 1 << pos[x]
            down.append(mask)
        return Poset(self.n, tuple(down), tuple(self.names[o] for o in order))

    # queries --------------------------------------------------------------

    def leq(self, x: int, y: int) -> bool:
        return bool(self.down[y] >> x & 1)

    @cached_property
    def up(self) -> tuple[int, ...]:
        up = [0] * self.n
        for y, row in enumerate(self.down):
            for x in _bits(row):
                up[x] |= 1 << y
        return tuple(up)

    @cached_property
    def leq_matrix(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(self.leq(x, y) for y in range(self.n)) for x in range(self.n))

    @cached_property
    def _by_down(self) -> dict[int, int]:
        return {row: y for y, row in enumerate(self.down)}

    @cached_property
    def _by_up(self) -> dict[int, int]:
        return {row: y for y, row in enumerate(self.up)}

    def meet(self, x: int, y: int) -> int | None:
        # the glb is the lower bound whose own down-set is the set of all lower bounds
        return self._by_down.get(self.down[x] & self.down[y])

    def join(self, x: int, y: int) -> int | None:
        return self._by_up.get(self.up[x] & self.up[y])

    @cached_property
    def meet_table(self) -> tuple[tuple[int | None, ...], ...]:
        return tuple(tuple(self.meet(x, y) for y in range(self.n)) for x in range(self.n))

    @cached_property
    def join_table(self) -> tuple[tuple[int | None, ...], ...]:
        return tuple(tuple(self.join(x, y) for y in range(self.n)) for x in range(self.n))

    @cached_property
    def top(self) -> int | None:
        return self._by_down.get((1 << self.n) - 1)

    @cached_property
    def bottom(self) -> int | None:
        return self._by_up.get((1 << self.n) - 1)

    def principal_filter(self, y: int) -> frozenset[int]:
        return frozenset(_bits(self.up[y]))

    def principal_ideal(self, y: int) -> frozenset[int]:
        return frozenset(_bits(self.down[y]))

    @cached_property
    def flags(self) -> OrderFlags:
        pairs = [(x, y) for x in range(self.n) for y in range(x + 1, self.n)]
        meet_ok = all(self.meet(x, y) is not None for x, y in pairs)
        join_ok = all(self.join(x, y) is not None for x, y in pairs)
        return OrderFlags(self.top is not None, meet_ok, join_ok, meet_ok and join_ok)

    def classify_order(self) -> OrderFlags:
        return self.flags

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(x, y)`` with y covering x, in lexicographic order."""
        out = []
        for x in range(self.n):
            above = self.up[x] & ~(1 << x)
            for y in _bits(above):
                between = above & self.down[y] & ~(1 << y)
                if not between:
                    out.append((x, y))
        return sorted(out)

    def downsets(self) -> list[int]:
        """All down-closed subsets, as bitmasks in increasing numeric order."""
        out = []
        for mask in range(1 << self.n):
            if all(self.down[x] & ~mask == 0 for x in _bits(mask)):
                out.append(mask)
        return out

    def element(self, name: str) -> int:
        return self.names.index(name)

    # canonical form -------------------------------------------------------

    @cached_property
    def _colors(self) -> list[int]:
        n = self.n
        start = [(bin(self.down[i]).count("1"), bin(self.up[i]).count("1")) for i in range(n)]
        ranks = {s: r for r, s in enumerate(sorted(set(start)))}
        col = [ranks[s] for s in start]
        while True:
            sigs = []
            for i in range(n):
                below = tuple(sorted(col[j] for j in _bits(self.down[i]) if j != i))
                above = tuple(sorted(col[j] for j in _bits(self.up[i]) if j != i))
                sigs.append((col[i], below, above))
            ranks = {s: r for r, s in enumerate(sorted(set(sigs)))}
            new = [ranks[s] for s in sigs]
            if len(ranks) == len(set(col)):
                return new
            col = new

    @cached_property
    def _canonical(self) -> tuple[CanonicalCode, tuple[int, ...]]:
        col = self._colors
        classes: dict[int, list[int]] = {}
        for i in range(self.n):
            classes.setdefault(col[i], []).append(i)
        groups = [classes[c] for c in sorted(classes)]
        colors = tuple(sorted(col))
        best = None
        best_order: tuple[int, ...] = ()
        pos = [0] * self.n
        for parts in product(*(permutations(g) for g in groups)):
            order = tuple(x for part in parts for x in part)
            for i, old in enumerate(order):
                pos[old] = i
            rows = []
            for old in order:
                mask = 0
                for x in _bits(self.down[old]):
                    mask |= 1 << pos[x]
                rows.append(mask)
            rows = tuple(rows)
            if best is None or rows < best:
                best, best_order = rows, order
        return CanonicalCode((self.n, colors, best)), best_order

    def canonical_code(self) -> CanonicalCode:
        return self._canonical[0]

    def canonical_form(self) -> "Poset":
        """Isomorphic copy in canonical labeling (a linear extension: bottom-most first)."""
        return self.relabel(self._canonical[1])

    def is_isomorphic(self, other: "Poset") -> bool:
        return self.canonical_code() == other.canonical_code()

    def __repr__(self):
        edges = " ".join(f"{self.names[a]}<{self.names[b]}" for a, b in self.covers())
        return f"Poset(n={self.n}, covers=[{edges}])"


def canonical_code(poset: Poset) -> CanonicalCode:
    return poset.canonical_code()


@lru_cache(maxsize=None)
def _posets_of_size(n: int) -> tuple[Poset, ...]:
    if n == 1:
        return (Poset(1, (1,)),)
    found: dict[CanonicalCode, Poset] = {}
    # every poset arises from a smaller one by adding a maximal element above a down-set
    for smaller in _posets_of_size(n - 1):
        for mask in smaller.downsets():
            cand = Poset(n, smaller.down + (mask | 1 << (n - 1),))
            code = cand.canonical_code()
            if code not in found:
                found[code] = cand
    return tuple(
        Poset(n, found[code].canonical_form().down) for code in sorted(found)
    )


def enumerate_posets(n: int, order_class: str | None = None) -> Iterator[Poset]:
    """One poset per isomorphism class of size ``n``, ascending canonical code."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_ENUM_SIZE:
        raise BoundExceeded(f"enumeration supports n <= {MAX_ENUM_SIZE}, got {n}")
    for p in _posets_of_size(n):
        if p.flags.matches(order_class):
            yield p


def count_posets(n: int, order_class: str | None = None) -> int:
    return sum(1 for _ in enumerate_posets(n, order_class))
