"""Total and partial binary operation tables over ``0 .. n-1``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import BadTableShape


class _Undefined:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNDEFINED"

    def __bool__(self):
        return False


UNDEFINED = _Undefined()


@dataclass(frozen=True)
class OpTable:
    """Total table; ``cells[x * n + y]`` is ``op(x, y)``."""

    n: int
    cells: tuple[int, ...]

    def __post_init__(self):
        if len(self.cells) != self.n * self.n:
            raise BadTableShape(f"expected {self.n * self.n} cells, got {len(self.cells)}")
        for v in self.cells:
            if not (isinstance(v, int) and 0 <= v < self.n):
                raise BadTableShape(f"cell value {v!r} outside the carrier")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "OpTable":
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise BadTableShape("table must be square")
        return cls(n, tuple(v for r in rows for v in r))

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int, int], int]) -> "OpTable":
        return cls(n, tuple(fn(x, y) for x in range(n) for y in range(n)))

    def __call__(self, x: int, y: int) -> int:
        return self.cells[x * self.n + y]

    def rows(self) -> list[list[int]]:
        n = self.n
        return [list(self.cells[i * n:(i + 1) * n]) for i in range(n)]

    def restrict(self, elements: Sequence[int]) -> "OpTable":
        """Table induced on ``elements`` (must be closed), relabeled by position."""
        pos = {e: i for i, e in enumerate(elements)}
        return OpTable.from_function(len(elements), lambda i, j: pos[self(elements[i], elements[j])])

    def __repr__(self):
        return f"OpTable({self.rows()})"


@dataclass(frozen=True)
class PartialOpTable:
    """Table whose cells are elements or ``UNDEFINED``; never totalized implicitly."""

    n: int
    cells: tuple

    def __post_init__(self):
        if len(self.cells) != self.n * self.n:
            raise BadTableShape(f"expected {self.n * self.n} cells, got {len(self.cells)}")
        for v in self.cells:
            if v is not UNDEFINED and not (isinstance(v, int) and 0 <= v < self.n):
                raise BadTableShape(f"cell value {v!r} outside the carrier")

    def __call__(self, x: int, y: int):
        return self.cells[x * self.n + y]

    def defined(self, x: int, y: int) -> bool:
        return self(x, y) is not UNDEFINED

    def is_total(self) -> bool:
        return all(v is not UNDEFINED for v in self.cells)
