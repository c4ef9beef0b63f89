"""Linear extensions of finite posets given by a relation on 0..n-1."""

from __future__ import annotations

from typing import Iterable, Iterator


class CyclicOrderError(ValueError):
    """The relation contains a directed cycle, so it is not a partial order."""


def _predecessor_masks(n: int, relations: Iterable[tuple[int, int]]) -> list[int]:
    preds = [0] * n
    for a, b in relations:
        if a == b:
            raise CyclicOrderError(f"self-relation at {a}")
        preds[b] |= 1 << a
    # Kahn's algorithm for cycle detection
    indeg = [bin(p).count("1") for p in preds]
    succs: list[list[int]] = [[] for _ in range(n)]
    for b in range(n):
        for a in range(n):
            if preds[b] >> a & 1:
                succs[a].append(b)
    stack = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in succs[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    if seen != n:
        raise CyclicOrderError("relation has a directed cycle")
    return preds


def count_linear_extensions(n: int, relations: Iterable[tuple[int, int]]) -> int:
    """Number of total orders of 0..n-1 extending ``a < b`` for each relation.

    Bitmask DP over down-closed subsets; fine up to ~20 elements.
    """
    preds = _predecessor_masks(n, relations)
    full = (1 << n) - 1
    ways = {0: 1}
    for _ in range(n):
        nxt: dict[int, int] = {}
        for mask, c in ways.items():
            for v in range(n):
                if not mask >> v & 1 and preds[v] & ~mask == 0:
                    m2 = mask | 1 << v
                    nxt[m2] = nxt.get(m2, 0) + c
        ways = nxt
    return ways.get(full, 0) if n else 1


def linear_extensions(n: int, relations: Iterable[tuple[int, int]]) -> Iterator[tuple[int, ...]]:
    """Yield every linear extension explicitly (small posets only)."""
    preds = _predecessor_masks(n, relations)
    order: list[int] = []

    def rec(mask: int):
        if len(order) == n:
            yield tuple(order)
            return
        for v in range(n):
            if not mask >> v & 1 and preds[v] & ~mask == 0:
                order.append(v)
                yield from rec(mask | 1 << v)
                order.pop()

    yield from rec(0)
