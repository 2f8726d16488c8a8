"""Small named structures used as worked examples and regression anchors."""
from __future__ import annotations

from .axioms import OrderedAlgebra
from .poset import Poset
from .tables import OpTable


def pentagon() -> Poset:
    """N5 with elements 0 < a < 1 and 0 < b < c < 1."""
    return Poset.from_generators(5, [(0, 1), (1, 4), (0, 2), (2, 3), (3, 4)],
                                 ("0", "a", "b", "c", "1"))


def diamond() -> Poset:
    """M2 (the four-element Boolean lattice) with elements 0, a, b, 1."""
    return Poset.from_generators(4, [(0, 1), (0, 2), (1, 3), (2, 3)], ("0", "a", "b", "1"))


def heyting_diamond() -> OrderedAlgebra:
    imp = OpTable.from_rows([[3, 3, 3, 3], [2, 3, 2, 3], [1, 1, 3, 3], [0, 1, 2, 3]])
    return OrderedAlgebra(diamond(), imp=imp, name="m2")


def chain(n: int) -> Poset:
    return Poset.chain(n)


def goedel_chain(n: int) -> OrderedAlgebra:
    """The n-chain with x -> y = 1 if x <= y else y."""
    top = n - 1
    imp = OpTable.from_function(n, lambda x, y: top if x <= y else y)
    return OrderedAlgebra(Poset.chain(n), imp=imp, name=f"chain{n}")


def lukasiewicz_chain(n: int) -> OrderedAlgebra:
    """The n-chain with x -> y = min(1, 1 - x + y) and x * y = max(0, x + y - 1), scaled to integers."""
    top = n - 1
    imp = OpTable.from_function(n, lambda x, y: min(top, top - x + y))
    mul = OpTable.from_function(n, lambda x, y: max(0, x + y - top))
    return OrderedAlgebra(Poset.chain(n), imp=imp, mul=mul, name=f"luk{n}")
