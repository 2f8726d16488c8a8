"""Brute-force reference computations.

Nothing here shares code with the fast paths it is used to cross-check: posets
are plain nested lists, isomorphism classes come from minimizing over every
permutation, and operation tables are enumerated without pruning.
"""
from __future__ import annotations

from itertools import permutations, product


def labeled_posets(n: int):
    """Every partial order on range(n) as a tuple-of-tuples boolean matrix."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for choice in product((0, 1, 2), repeat=len(pairs)):
        rel = [[i == j for j in range(n)] for i in range(n)]
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                rel[i][j] = True
            elif c == 2:
                rel[j][i] = True
        if all(not (rel[a][b] and rel[b][c]) or rel[a][c]
               for a in range(n) for b in range(n) for c in range(n)):
            yield tuple(tuple(r) for r in rel)


def naive_code(rel) -> tuple:
    n = len(rel)
    return min(
        tuple(rel[p[i]][p[j]] for i in range(n) for j in range(n))
        for p in permutations(range(n))
    )


def poset_class_count(n: int, lattices_only: bool = False) -> int:
    codes = set()
    for rel in labeled_posets(n):
        if lattices_only and not is_lattice(rel):
            continue
        codes.add(naive_code(rel))
    return len(codes)


def _bounds(rel, x, y, upper):
    n = len(rel)
    if upper:
        return [z for z in range(n) if rel[x][z] and rel[y][z]]
    return [z for z in range(n) if rel[z][x] and rel[z][y]]


def is_lattice(rel) -> bool:
    n = len(rel)
    for x in range(n):
        for y in range(n):
            ub = _bounds(rel, x, y, True)
            if not any(all(rel[u][v] for v in ub) for u in ub):
                return False
            lb = _bounds(rel, x, y, False)
            if not any(all(rel[v][u] for v in lb) for u in lb):
                return False
    return True


def all_tables(n: int):
    """Every binary operation on range(n), as flat cell tuples (n ** (n * n) of them)."""
    return product(range(n), repeat=n * n)
