"""Canonical certificates for small vertex-labelled directed multigraphs.

Colour refinement followed by individualisation: the certificate is the
lexicographically least relabelled edge list over all leaves of the search
tree.  Refinement and cell selection depend only on the isomorphism class, so
equal certificates mean isomorphic graphs and vice versa.
"""

from __future__ import annotations

from typing import Hashable, Sequence

Certificate = tuple


def _refine(colors: list[int], ins, outs) -> list[int]:
    n = len(colors)
    ncolors = len(set(colors))
    while True:
        sigs = [
            (
                colors[v],
                tuple(sorted((colors[u], w) for u, w in ins[v])),
                tuple(sorted((colors[x], w) for x, w in outs[v])),
            )
            for v in range(n)
        ]
        ranking = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [ranking[sig] for sig in sigs]
        k = len(ranking)
        if k == ncolors:
            return new
        colors, ncolors = new, k


def canonical_form(
    n: int,
    edges: Sequence[tuple[int, int, int]],
    labels: Sequence[Hashable],
) -> tuple[Certificate, tuple[int, ...]]:
    """Return (certificate, order) where ``order[i]`` is the vertex placed at position i.

    ``edges`` are directed (tail, head, weight) triples; ``labels`` must be
    mutually comparable.
    """
    if n == 0:
        return (0, (), tuple(sorted(edges))), ()
    ins: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    outs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for t, h, w in edges:
        outs[t].append((h, w))
        ins[h].append((t, w))
    distinct = {lab: i for i, lab in enumerate(sorted(set(labels)))}
    start = [distinct[lab] for lab in labels]

    best: list = [None, None]

    def leaf(colors: list[int]) -> None:
        order = sorted(range(n), key=lambda v: colors[v])
        pos = {v: i for i, v in enumerate(order)}
        cert = (
            n,
            tuple(labels[v] for v in order),
            tuple(sorted((pos[t], pos[h], w) for t, h, w in edges)),
        )
        if best[0] is None or cert < best[0]:
            best[0], best[1] = cert, tuple(order)

    def search(colors: list[int]) -> None:
        colors = _refine(colors, ins, outs)
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        cells = [c for c, m in counts.items() if m > 1]
        if not cells:
            leaf(colors)
            return
        target = min(cells, key=lambda c: (counts[c], c))
        for v in range(n):
            if colors[v] != target:
                continue
            c2 = [2 * c + 1 for c in colors]
            c2[v] -= 1
            search(c2)

    search(start)
    return best[0], best[1]
