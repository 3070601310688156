"""Exhaustive enumeration of small semigroups (labelled, not up to isomorphism)."""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator

from .semigroup import CayleyTable

MAX_ORDER = 4


def _partial_ok(t, k, i, j) -> bool:
    # only triples whose four lookups touch the freshly filled cell (i, j) can newly fail
    cell = (i, j)
    rng = range(k)
    for a, b, c in product(rng, rng, rng):
        ab = t[a][b]
        bc = t[b][c]
        if ab < 0 or bc < 0:
            continue
        if cell not in ((a, b), (b, c), (ab, c), (a, bc)):
            continue
        left = t[ab][c]
        right = t[a][bc]
        if left >= 0 and right >= 0 and left != right:
            return False
    return True


@lru_cache(maxsize=None)
def _tables(k: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    t = [[-1] * k for _ in range(k)]
    cells = [(i, j) for i in range(k) for j in range(k)]
    found = []

    def fill(n):
        if n == len(cells):
            found.append(tuple(tuple(r) for r in t))
            return
        i, j = cells[n]
        for v in range(k):
            t[i][j] = v
            if _partial_ok(t, k, i, j):
                fill(n + 1)
        t[i][j] = -1

    fill(0)
    return tuple(found)


def enumerate_semigroups(order: int) -> Iterator[CayleyTable]:
    """Every associative table on {0, ..., order-1}, in lexicographic order."""
    if not 1 <= order <= MAX_ORDER:
        raise ValueError(f"order must be between 1 and {MAX_ORDER}")
    for t in _tables(order):
        yield CayleyTable(t, check=False)


def count_semigroups(order: int) -> int:
    if not 1 <= order <= MAX_ORDER:
        raise ValueError(f"order must be between 1 and {MAX_ORDER}")
    return len(_tables(order))
