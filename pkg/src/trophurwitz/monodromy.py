"""Monodromy graphs: leveled weighted graphs tracking cut/join evolution.

A graph projects to [0, s+1]: k strands start over 0 with the parts of eta,
over each level 1..s one strand is cut or two are joined, and the survivors
over s+1 carry the parts of nu.  Inner vertices are pinned to distinct levels,
so an isomorphism of leveled graphs is the identity on inner vertices and can
only permute end points over 0 or s+1.  The sorted multiset of
(from_level, to_level, weight) edges is therefore a complete invariant, and
partial graphs are deduplicated on that key level by level.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial, prod
from typing import Iterator, NamedTuple

from .exactmath import HurwitzInput, Partition, aut_count, cycle_type_count


class Edge(NamedTuple):
    from_level: int
    to_level: int
    weight: int


@dataclass(frozen=True)
class LevelEvent:
    level: int
    kind: str  # "join" or "cut"
    inputs: tuple[int, ...]
    outputs: tuple[int, ...]


@dataclass(frozen=True)
class MonodromyGraph:
    inp: HurwitzInput
    edges: tuple[Edge, ...]

    @property
    def s(self) -> int:
        return self.inp.s

    @cached_property
    def key(self) -> str:
        return ";".join(f"{e.from_level}-{e.to_level}:{e.weight}" for e in self.edges)

    @cached_property
    def events(self) -> tuple[LevelEvent, ...]:
        out = []
        for level in range(1, self.s + 1):
            ins = tuple(sorted((e.weight for e in self.edges if e.to_level == level), reverse=True))
            outs = tuple(
                sorted((e.weight for e in self.edges if e.from_level == level), reverse=True)
            )
            out.append(LevelEvent(level, "join" if len(ins) == 2 else "cut", ins, outs))
        return tuple(out)

    @property
    def interior_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.from_level >= 1 and e.to_level <= self.s)

    @cached_property
    def genus(self) -> int:
        nverts = self.s + self.inp.k + self.inp.l
        return len(self.edges) - nverts + 1

    def _end_pairs(self, left: bool) -> int:
        """Vertices whose two in-ends (left) or two out-ends (right) have equal weight."""
        end = self.s + 1
        seen: dict[int, list[int]] = {}
        for e in self.edges:
            if left and e.from_level == 0 and e.to_level <= self.s:
                seen.setdefault(e.to_level, []).append(e.weight)
            elif not left and e.to_level == end and e.from_level >= 1:
                seen.setdefault(e.from_level, []).append(e.weight)
        return sum(1 for ws in seen.values() if len(ws) == 2 and ws[0] == ws[1])

    @cached_property
    def left_forks(self) -> int:
        return self._end_pairs(left=True)

    @cached_property
    def right_forks(self) -> int:
        return self._end_pairs(left=False)

    @property
    def forks(self) -> int:
        return self.left_forks + self.right_forks

    @cached_property
    def wieners(self) -> int:
        counts = Counter(self.interior_edges)
        return sum(1 for e, c in counts.items() if c >= 2)

    @property
    def aut_order(self) -> int:
        return 2 ** (self.forks + self.wieners)

    def is_connected(self) -> bool:
        return _components(self.edges, self.s + 1) == 1

    # weights ----------------------------------------------------------------
    def lemma42_factors(self) -> dict[str, Fraction]:
        """The five factors (i)-(v) of the per-graph weight."""
        eta = self.inp.eta
        incoming = prod(e.weight for e in self.edges if e.to_level <= self.s)
        return {
            "i": Fraction(cycle_type_count(eta)),
            "ii": Fraction(aut_count(eta)),
            "iii": Fraction(incoming),
            "iv": Fraction(1, self.aut_order),
            "v": Fraction(1, factorial(self.inp.d)),
        }

    def to_json(self, with_weights: bool = False) -> dict:
        data = {
            "levels": self.s,
            "eta": list(self.inp.eta),
            "nu": list(self.inp.nu),
            "events": [
                {"level": ev.level, "kind": ev.kind, "inputs": list(ev.inputs),
                 "outputs": list(ev.outputs)}
                for ev in self.events
            ],
            "edges": [
                {"from_level": e.from_level, "to_level": e.to_level, "weight": e.weight}
                for e in self.edges
            ],
            "genus": self.genus,
            "forks": self.forks,
            "wieners": self.wieners,
        }
        if with_weights:
            from .exactmath import rational_text

            f = self.lemma42_factors()
            data["lemma42"] = {k: rational_text(v) for k, v in f.items()}
            data["interior_product"] = prod(e.weight for e in self.interior_edges)
            data["aut"] = self.aut_order
            data["total"] = rational_text(weight_cor44(self))
        return data

    @classmethod
    def from_json(cls, data: dict, g: int | None = None) -> "MonodromyGraph":
        eta, nu = Partition(data["eta"]), Partition(data["nu"])
        edges = tuple(
            sorted(Edge(e["from_level"], e["to_level"], e["weight"]) for e in data["edges"])
        )
        if g is None:
            g = data["genus"]
        return cls(HurwitzInput(g, eta, nu), edges)


def _components(edges, final_level: int) -> int:
    """Connected components of a closed graph (end points are separate nodes)."""
    parent: dict = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for idx, (f, t, _) in enumerate(edges):
        a = find(("v", f) if f > 0 else ("in", idx))
        b = find(("v", t) if t < final_level else ("out", idx))
        if a != b:
            parent[a] = b
    return len({find(x) for x in list(parent)})


# A partial graph is (closed edges, components); each component is the sorted
# tuple of its open strands (birth level, weight).  Every component of a
# partial graph still has an open strand, and the grouping is determined by
# the graph, so keeping it in the key does not split isomorphism classes.
_State = tuple[tuple[tuple[int, int, int], ...], tuple[tuple[tuple[int, int], ...], ...]]


def _successors(state: _State, level: int) -> Iterator[_State]:
    closed, groups = state
    flat = [(gi, st) for gi, grp in enumerate(groups) for st in grp]
    n = len(flat)
    for a in range(n):
        ga, sa = flat[a]
        for b in range(a + 1, n):
            gb, sb = flat[b]
            merged = list(groups[ga])
            merged.remove(sa)
            if gb != ga:
                merged.extend(groups[gb])
            merged.remove(sb)
            merged.append((level, sa[1] + sb[1]))
            others = [grp for gi, grp in enumerate(groups) if gi != ga and gi != gb]
            others.append(tuple(sorted(merged)))
            new_closed = tuple(sorted(closed + ((sa[0], level, sa[1]), (sb[0], level, sb[1]))))
            yield new_closed, tuple(sorted(others))
    for a in range(n):
        ga, st = flat[a]
        w = st[1]
        if w < 2:
            continue
        rest = list(groups[ga])
        rest.remove(st)
        others = [grp for gi, grp in enumerate(groups) if gi != ga]
        new_closed = tuple(sorted(closed + ((st[0], level, w),)))
        for small in range(1, w // 2 + 1):
            grp = tuple(sorted(rest + [(level, w - small), (level, small)]))
            yield new_closed, tuple(sorted(others + [grp]))


def enumerate_monodromy_graphs(inp: HurwitzInput) -> list[MonodromyGraph]:
    """One representative per isomorphism class of monodromy graphs, sorted by key."""
    s, l = inp.s, inp.l
    start: _State = ((), tuple(sorted(((0, n),) for n in inp.eta)))
    states: dict[_State, None] = {start: None}
    for level in range(1, s + 1):
        remaining = s - level
        nxt: dict[_State, None] = {}
        for state in states:
            for cand in _successors(state, level):
                if cand in nxt:
                    continue
                groups = cand[1]
                nstrands = sum(len(grp) for grp in groups)
                gap = nstrands - l
                if abs(gap) > remaining or (remaining - gap) % 2:
                    continue
                # each remaining join merges at most two components
                if len(groups) - 1 > (remaining + gap) // 2:
                    continue
                nxt[cand] = None
        states = nxt
    graphs = []
    target = tuple(sorted(inp.nu.parts))
    for closed, groups in states:
        if len(groups) != 1:
            continue
        strands = groups[0]
        if tuple(sorted(w for _, w in strands)) != target:
            continue
        edges = tuple(sorted(Edge(*e) for e in closed + tuple((b, s + 1, w) for b, w in strands)))
        graphs.append(MonodromyGraph(inp, edges))
    graphs.sort(key=lambda gr: gr.key)
    return graphs


def weight_lemma42(graph: MonodromyGraph) -> Fraction:
    return prod(graph.lemma42_factors().values(), start=Fraction(1))


def weight_cor44(graph: MonodromyGraph) -> Fraction:
    """Product of interior edge weights over |Aut|.

    With s = 0 the graph is a bare strand of weight d that meets no vertex;
    it is weighted 1/d, matching the tuple count for eta = nu = (d).
    """
    if graph.s == 0:
        return Fraction(1, graph.inp.d)
    return Fraction(prod(e.weight for e in graph.interior_edges), graph.aut_order)


def hurwitz_graphsum(inp: HurwitzInput, method: str = "cor44") -> Fraction:
    if method not in ("lemma42", "cor44"):
        raise ValueError(f"unknown method {method!r}")
    weigh = weight_lemma42 if method == "lemma42" else weight_cor44
    return sum((weigh(gr) for gr in enumerate_monodromy_graphs(inp)), Fraction(0))
