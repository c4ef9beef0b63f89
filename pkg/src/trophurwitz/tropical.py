"""Tropical covers of P^1, their cells, and the degree of the branch map.

A combinatorial type is a connected graph with weighted, directed bounded
edges and ends.  A bounded edge ``(tail, head, w)`` is oriented so that the
tail maps below the head; its flag at the tail has direction +w and at the
head -w.  An end carries its entry of the degree multiset: negative for ends
coming from -infinity, positive for ends going to +infinity.

Inner vertices are indexed 0..n-1; index i is the vertex with label i+1, so
vertex 0 is the root whose position is the first cell coordinate.  Cell
coordinates are ordered (root position, length of bounded edge 0, 1, ...).
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import prod
from typing import Iterable, Sequence

from .canon import canonical_form
from .exactmath import (
    CyclicOrderError,
    HurwitzInput,
    Partition,
    count_linear_extensions,
    determinant,
    integer_kernel_basis,
    lattice_index,
    rank,
)
from .exactmath.intlinalg import RankDeficientError, mat_mul


class InvalidTypeError(ValueError):
    """The data do not describe a tropical cover type."""


class NonRegularTypeError(ValueError):
    """The cell of this type does not have the expected dimension."""


class InvalidCurveError(ValueError):
    """Edge lengths violate positivity or a loop equation."""


class GeneralPositionError(ValueError):
    """A point in the target has repeated coordinates."""


@dataclass(frozen=True, order=True)
class BoundedEdge:
    tail: int
    head: int
    weight: int


@dataclass(frozen=True, order=True)
class End:
    vertex: int
    direction: int


@dataclass(frozen=True)
class CombinatorialType:
    n_vertices: int
    edges: tuple[BoundedEdge, ...]
    ends: tuple[End, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(BoundedEdge(*e) if not isinstance(e, BoundedEdge) else e for e in self.edges))
        object.__setattr__(self, "ends", tuple(End(*e) if not isinstance(e, End) else e for e in self.ends))
        self.validate()

    # structure ---------------------------------------------------------------
    def validate(self) -> None:
        n = self.n_vertices
        if n < 1:
            raise InvalidTypeError("a type needs at least one inner vertex")
        for e in self.edges:
            if not (0 <= e.tail < n and 0 <= e.head < n) or e.tail == e.head:
                raise InvalidTypeError(f"bad bounded edge {e}")
            if e.weight < 0:
                raise InvalidTypeError(f"negative weight on {e}")
        for end in self.ends:
            if not 0 <= end.vertex < n:
                raise InvalidTypeError(f"end {end} attached to a missing vertex")
            if end.direction == 0:
                raise InvalidTypeError("ends must have nonzero direction")
        if sum(end.direction for end in self.ends) != 0:
            raise InvalidTypeError("directions of ends do not sum to 0")
        balance = [0] * n
        for e in self.edges:
            balance[e.tail] += e.weight
            balance[e.head] -= e.weight
        for end in self.ends:
            balance[end.vertex] += end.direction
        bad = [v for v in range(n) if balance[v]]
        if bad:
            raise InvalidTypeError(f"balancing fails at vertices {bad}")
        if len(self._tree_edges()) != n - 1:
            raise InvalidTypeError("graph is not connected")
        if any(self.valence(v) < 3 for v in range(n)):
            raise InvalidTypeError("inner vertices must have valence at least 3")

    def valence(self, v: int) -> int:
        return sum((e.tail == v) + (e.head == v) for e in self.edges) + sum(
            end.vertex == v for end in self.ends
        )

    @property
    def degree(self) -> tuple[int, ...]:
        return tuple(sorted(end.direction for end in self.ends))

    @property
    def genus(self) -> int:
        return len(self.edges) - self.n_vertices + 1

    @property
    def is_trivalent(self) -> bool:
        return all(self.valence(v) == 3 for v in range(self.n_vertices))

    @property
    def eta(self) -> Partition:
        return Partition(-e.direction for e in self.ends if e.direction < 0)

    @property
    def nu(self) -> Partition:
        return Partition(e.direction for e in self.ends if e.direction > 0)

    def _tree_edges(self) -> list[int]:
        """Indices of a BFS spanning tree from vertex 0."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n_vertices)]
        for idx, e in enumerate(self.edges):
            adj[e.tail].append((e.head, idx))
            adj[e.head].append((e.tail, idx))
        seen = {0}
        queue = [0]
        tree = []
        for v in queue:
            for w, idx in adj[v]:
                if w not in seen:
                    seen.add(w)
                    tree.append(idx)
                    queue.append(w)
        return tree

    def flag_direction(self, vertex: int, edge_index: int) -> int:
        e = self.edges[edge_index]
        if vertex == e.tail:
            return e.weight
        if vertex == e.head:
            return -e.weight
        raise ValueError(f"vertex {vertex} is not on edge {edge_index}")

    def chain_row(self, chain: Sequence[tuple[int, int]], with_root: int = 0) -> list[int]:
        """Coefficient row of sum v(V, e) l(e) over a chain of flags (vertex, edge)."""
        row = [with_root] + [0] * len(self.edges)
        for v, idx in chain:
            row[1 + idx] += self.flag_direction(v, idx)
        return row

    @cached_property
    def tree_paths(self) -> list[list[tuple[int, int]]]:
        """For each vertex, the chain of flags from the root along the spanning tree."""
        tree = self._tree_edges()
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n_vertices)]
        for idx in tree:
            e = self.edges[idx]
            adj[e.tail].append((e.head, idx))
            adj[e.head].append((e.tail, idx))
        paths: list[list[tuple[int, int]] | None] = [None] * self.n_vertices
        paths[0] = []
        queue = [0]
        for v in queue:
            for w, idx in adj[v]:
                if paths[w] is None:
                    paths[w] = paths[v] + [(v, idx)]
                    queue.append(w)
        return paths  # type: ignore[return-value]

    @cached_property
    def cycle_chains(self) -> list[list[tuple[int, int]]]:
        """Fundamental cycles of the spanning tree, each as a closed chain of flags."""
        tree = set(self._tree_edges())
        chains = []
        for idx, e in enumerate(self.edges):
            if idx in tree:
                continue
            # root -> tail, tail -> head along e, head -> root
            down = self.tree_paths[e.tail]
            up = self.tree_paths[e.head]
            back = [(self._other(v, i), i) for v, i in reversed(up)]
            chains.append(down + [(e.tail, idx)] + back)
        return chains

    def _other(self, v: int, idx: int) -> int:
        e = self.edges[idx]
        return e.head if v == e.tail else e.tail

    # serialisation -------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "vertices": self.n_vertices,
            "edges": [
                {"u": e.tail, "v": e.head, "weight": e.weight, "direction": e.weight}
                for e in self.edges
            ],
            "ends": [{"vertex": end.vertex, "direction": end.direction} for end in self.ends],
            "genus": self.genus,
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "CombinatorialType":
        if isinstance(data, str):
            data = json.loads(data)
        edges = []
        for e in data["edges"]:
            u, v, w = e["u"], e["v"], e["weight"]
            if e.get("direction", w) < 0:
                u, v = v, u
            edges.append(BoundedEdge(u, v, w))
        ends = tuple(End(x["vertex"], x["direction"]) for x in data["ends"])
        t = cls(data["vertices"], tuple(edges), ends)
        if "genus" in data and data["genus"] != t.genus:
            raise InvalidTypeError("genus field disagrees with the graph")
        return t

    # canonical forms -------------------------------------------------------------
    def _vertex_labels(self) -> list[tuple]:
        ends: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for end in self.ends:
            ends[end.vertex].append(end.direction)
        return [tuple(sorted(x)) for x in ends]

    @cached_property
    def _canon(self):
        return canonical_form(
            self.n_vertices,
            [(e.tail, e.head, e.weight) for e in self.edges],
            self._vertex_labels(),
        )

    @property
    def class_certificate(self) -> tuple:
        """Invariant of the type up to relabelling of inner vertices."""
        return self._canon[0]

    def relabelled(self, order: Sequence[int]) -> "CombinatorialType":
        """The same type with vertex ``order[i]`` renamed to i."""
        pos = {v: i for i, v in enumerate(order)}
        return CombinatorialType(
            self.n_vertices,
            tuple(sorted(BoundedEdge(pos[e.tail], pos[e.head], e.weight) for e in self.edges)),
            tuple(sorted(End(pos[x.vertex], x.direction) for x in self.ends)),
        )

    def canonical(self) -> "CombinatorialType":
        return self.relabelled(self._canon[1])


# ----------------------------------------------------------------------------
# matrices and indices


def build_cycle_matrix(t: CombinatorialType) -> list[list[int]]:
    """Loop equations over the fundamental cycles: g rows, 1 + #bounded columns.

    Rows are sign-normalised (first nonzero entry positive).
    """
    rows = []
    for chain in t.cycle_chains:
        row = t.chain_row(chain)
        lead = next((x for x in row if x), 0)
        if lead < 0:
            row = [-x for x in row]
        rows.append(row)
    return rows


def vertex_rows(t: CombinatorialType) -> list[list[int]]:
    """Position of each vertex: h(V_1) + sum of flag directions along its tree chain."""
    return [t.chain_row(path, with_root=1) for path in t.tree_paths]


def falpha_matrix(t: CombinatorialType) -> list[list[int]]:
    return vertex_rows(t) + build_cycle_matrix(t)


def falpha_determinant(t: CombinatorialType) -> int:
    return int(abs(determinant(falpha_matrix(t))))


def cell_dimension(t: CombinatorialType) -> int:
    return 1 + len(t.edges) - rank(build_cycle_matrix(t))


def expected_dimension(t: CombinatorialType) -> int:
    excess = sum(t.valence(v) - 3 for v in range(t.n_vertices))
    return len(t.ends) - 2 + 2 * t.genus - excess


def regularity_check(t: CombinatorialType) -> tuple[int, bool]:
    dim = cell_dimension(t)
    return dim, dim == expected_dimension(t)


def is_top_dimensional(t: CombinatorialType) -> bool:
    dim, regular = regularity_check(t)
    return regular and t.is_trivalent and dim == len(t.ends) - 2 + 2 * t.genus


def cycle_lattice_index(t: CombinatorialType) -> int:
    try:
        return lattice_index(build_cycle_matrix(t))
    except RankDeficientError as exc:
        raise NonRegularTypeError(str(exc)) from None


def branch_determinant(t: CombinatorialType) -> int:
    """|det| of the branch map restricted to the lattice of the cell."""
    matrix = build_cycle_matrix(t)
    ncols = 1 + len(t.edges)
    basis = integer_kernel_basis(matrix, ncols) if matrix else [
        [int(i == j) for i in range(ncols)] for j in range(ncols)
    ]
    if len(basis) != t.n_vertices:
        raise NonRegularTypeError("cell dimension differs from the number of vertices")
    kernel = [list(col) for col in zip(*basis)]  # ncols x n
    restricted = mat_mul(vertex_rows(t), kernel)
    return int(abs(determinant(restricted)))


# ----------------------------------------------------------------------------
# symmetry factors


def wiener_count(t: CombinatorialType) -> int:
    counts = Counter(t.edges)
    return sum(1 for e, c in counts.items() if c >= 2 and e.weight > 0)


def _branch_component(t: CombinatorialType, v: int, edge_index: int) -> frozenset[int]:
    """Vertices reachable from the far end of an edge at v without passing v."""
    e = t.edges[edge_index]
    start = e.head if e.tail == v else e.tail
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for f in t.edges:
            for a, b in ((f.tail, f.head), (f.head, f.tail)):
                if a == x and b != v and b not in seen:
                    seen.add(b)
                    stack.append(b)
    return frozenset(seen)


def _rooted_certificate(t: CombinatorialType, comp: frozenset[int], root: int):
    verts = sorted(comp)
    idx = {x: i for i, x in enumerate(verts)}
    edges = [(idx[e.tail], idx[e.head], e.weight) for e in t.edges if e.tail in comp and e.head in comp]
    ends: list[list[int]] = [[] for _ in verts]
    for end in t.ends:
        if end.vertex in comp:
            ends[idx[end.vertex]].append(end.direction)
    labels = [(int(x == root), tuple(sorted(ends[idx[x]]))) for x in verts]
    return canonical_form(len(verts), edges, labels)[0]


def symmetric_vertex_count(t: CombinatorialType) -> int:
    """Vertices V such that removing V leaves two identical connected components.

    An end counts as a component of its own; a component attached to V by
    more than one flag never matches another.
    """
    r = 0
    for v in range(t.n_vertices):
        keyed = [(end.direction, "end") for end in t.ends if end.vertex == v]
        by_comp: dict[frozenset, list[int]] = {}
        for idx, e in enumerate(t.edges):
            if v in (e.tail, e.head):
                by_comp.setdefault(_branch_component(t, v, idx), []).append(idx)
        for comp, flags in by_comp.items():
            if len(flags) != 1:
                continue
            e = t.edges[flags[0]]
            root = e.head if e.tail == v else e.tail
            keyed.append((t.flag_direction(v, flags[0]), _rooted_certificate(t, comp, root)))
        if len(keyed) != len(set(keyed)):
            r += 1
    return r


def type_weight(t: CombinatorialType) -> Fraction:
    """Weight of a top-dimensional cell: (1/2)^r * I * (1/2)^wieners."""
    if not is_top_dimensional(t):
        raise NonRegularTypeError("weights are defined for top-dimensional regular types")
    halves = symmetric_vertex_count(t) + wiener_count(t)
    return Fraction(cycle_lattice_index(t), 2**halves)


# ----------------------------------------------------------------------------
# curves and the branch map


@dataclass(frozen=True)
class TropicalCurveInstance:
    type: CombinatorialType
    root_position: Fraction
    lengths: tuple[Fraction, ...]

    def __post_init__(self):
        lengths = tuple(Fraction(x) for x in self.lengths)
        object.__setattr__(self, "lengths", lengths)
        object.__setattr__(self, "root_position", Fraction(self.root_position))
        if len(lengths) != len(self.type.edges):
            raise InvalidCurveError("one length per bounded edge is required")
        if any(x <= 0 for x in lengths):
            raise InvalidCurveError("bounded edge lengths must be positive")
        coords = (self.root_position,) + lengths
        for row in build_cycle_matrix(self.type):
            if sum(a * x for a, x in zip(row, coords)):
                raise InvalidCurveError(f"loop equation {row} violated")

    @property
    def coordinates(self) -> tuple[Fraction, ...]:
        return (self.root_position,) + self.lengths

    def position_along(self, chain: Sequence[tuple[int, int]]) -> Fraction:
        row = self.type.chain_row(chain, with_root=1)
        return sum((a * x for a, x in zip(row, self.coordinates)), Fraction(0))


def branch_image(curve: TropicalCurveInstance) -> tuple[Fraction, ...]:
    """(h(V_1), ..., h(V_n)) of a curve."""
    return tuple(curve.position_along(path) for path in curve.type.tree_paths)


# ----------------------------------------------------------------------------
# classes of types


@dataclass
class TypeClass:
    """A combinatorial type up to relabelling of its inner vertices."""

    representative: CombinatorialType
    source_graphs: list = field(default_factory=list)

    def __post_init__(self):
        self.representative = self.representative.canonical()

    @property
    def certificate(self) -> tuple:
        return self.representative.class_certificate

    def order_relations(self) -> list[tuple[int, int]]:
        return [(e.tail, e.head) for e in self.representative.edges if e.weight > 0]

    def edge_product(self) -> int:
        return prod(e.weight for e in self.representative.edges)


def linear_extension_count(cls: TypeClass) -> int:
    """Number of total orders of the vertices refining the edge directions."""
    return count_linear_extensions(cls.representative.n_vertices, cls.order_relations())


def fork_count(t: CombinatorialType) -> int:
    """Vertices carrying two ends of the same direction."""
    count = 0
    for v in range(t.n_vertices):
        dirs = [end.direction for end in t.ends if end.vertex == v]
        if len(dirs) != len(set(dirs)):
            count += 1
    return count


def vertex_automorphism_count(t: CombinatorialType) -> int:
    """Permutations of the inner vertices preserving edges, weights, directions and ends."""
    n = t.n_vertices
    labels = t._vertex_labels()
    collect: dict[tuple[int, int], list[int]] = {}
    for e in t.edges:
        collect.setdefault((e.tail, e.head), []).append(e.weight)
    between = {k: tuple(sorted(w)) for k, w in collect.items()}
    adj: list[set[int]] = [set() for _ in range(n)]
    for e in t.edges:
        adj[e.tail].add(e.head)
        adj[e.head].add(e.tail)
    # visit vertices in BFS order so each new vertex has an already mapped neighbour
    order = [0]
    for v in order:
        for w in sorted(adj[v]):
            if w not in order:
                order.append(w)
    image = [-1] * n
    used = [False] * n
    total = 0

    def consistent(v: int, x: int) -> bool:
        for u in order:
            iu = image[u]
            if u == v:
                iu = x
            elif iu < 0:
                continue
            if between.get((v, u), ()) != between.get((x, iu), ()):
                return False
            if between.get((u, v), ()) != between.get((iu, x), ()):
                return False
        return True

    def rec(i: int) -> None:
        nonlocal total
        if i == n:
            total += 1
            return
        v = order[i]
        for x in range(n):
            if not used[x] and labels[x] == labels[v] and consistent(v, x):
                image[v], used[x] = x, True
                rec(i + 1)
                image[v], used[x] = -1, False

    rec(0)
    return total


def class_contribution(cls: TypeClass) -> Fraction:
    """Contribution of a class to the degree of the branch map.

    n([alpha]) orders of the vertices, divided by the vertex automorphisms
    that identify them, times (1/2)^(forks + wieners) prod of bounded weights.
    When every vertex symmetry is a swap of two twin components at one vertex
    this is n (1/2)^(r+s) prod w, see ``class_contribution_symmetric_vertices``.
    """
    t = cls.representative
    halves = fork_count(t) + wiener_count(t)
    return Fraction(
        linear_extension_count(cls) * cls.edge_product(),
        vertex_automorphism_count(t) * 2**halves,
    )


def class_contribution_symmetric_vertices(cls: TypeClass) -> Fraction:
    """n([alpha]) (1/2)^(r+s) prod of bounded edge weights, r the symmetric vertices."""
    t = cls.representative
    halves = symmetric_vertex_count(t) + wiener_count(t)
    return Fraction(linear_extension_count(cls) * cls.edge_product(), 2**halves)


def class_contribution_via_multiplicity(cls: TypeClass) -> Fraction:
    """n([alpha]) w(alpha) |det br| computed from the lattice data."""
    t = cls.representative
    return linear_extension_count(cls) * type_weight(t) * branch_determinant(t)


def fiber_over_point(cls: TypeClass, point: Sequence) -> int:
    """Number of vertex labellings for which ``point`` has a preimage in the class.

    Each assignment of the coordinates to the vertices is tried; edge lengths
    follow from the images of their endpoints and must be positive and satisfy
    every loop equation.
    """
    p = [Fraction(x) for x in point]
    t = cls.representative
    n = t.n_vertices
    if len(p) != n:
        raise ValueError(f"point must have {n} coordinates")
    if len(set(p)) != n:
        raise GeneralPositionError("point has repeated coordinates")
    # make sure the order really is a partial order
    count_linear_extensions(n, cls.order_relations())
    cycles = build_cycle_matrix(t)
    incident: list[list[BoundedEdge]] = [[] for _ in range(n)]
    for e in t.edges:
        incident[max(e.tail, e.head)].append(e)
    h: list[Fraction | None] = [None] * n
    used = [False] * n
    found = 0

    def rec(v: int) -> None:
        nonlocal found
        if v == n:
            lengths = [(h[e.head] - h[e.tail]) / e.weight for e in t.edges]
            coords = [h[0]] + lengths
            if all(sum(a * x for a, x in zip(row, coords)) == 0 for row in cycles):
                curve = TropicalCurveInstance(t, h[0], lengths)
                assert list(branch_image(curve)) == h
                found += 1
            return
        for i in range(n):
            if used[i]:
                continue
            h[v] = p[i]
            if all(h[e.head] > h[e.tail] for e in incident[v]):
                used[i] = True
                rec(v + 1)
                used[i] = False
        h[v] = None

    rec(0)
    return found


# ----------------------------------------------------------------------------
# enumeration of classes


def type_from_monodromy_graph(graph) -> CombinatorialType:
    """Forget the levels of a monodromy graph, keeping weights and directions."""
    s = graph.s
    edges = []
    ends = []
    for e in graph.edges:
        if e.from_level == 0:
            ends.append(End(e.to_level - 1, -e.weight))
        elif e.to_level == s + 1:
            ends.append(End(e.from_level - 1, e.weight))
        else:
            edges.append(BoundedEdge(e.from_level - 1, e.to_level - 1, e.weight))
    return CombinatorialType(s, tuple(sorted(edges)), tuple(sorted(ends)))


def classes_from_monodromy_graphs(graphs: Iterable) -> list[TypeClass]:
    """Group monodromy graphs by the class of their underlying type."""
    buckets: dict[tuple, TypeClass] = {}
    for gr in graphs:
        t = type_from_monodromy_graph(gr)
        cert = t.class_certificate
        if cert not in buckets:
            buckets[cert] = TypeClass(t)
        buckets[cert].source_graphs.append(gr)
    return [buckets[c] for c in sorted(buckets)]


# Partial types during direct generation: vertices 0..n-1, bounded edges,
# in-ends per vertex, open strands per vertex (heading up), and loose strands
# still hanging from -infinity.
@dataclass(frozen=True)
class _Partial:
    n: int
    edges: tuple[tuple[int, int, int], ...]
    in_ends: tuple[tuple[int, ...], ...]
    open: tuple[tuple[int, ...], ...]
    loose: tuple[int, ...]

    def key(self):
        cert, order = canonical_form(
            self.n, self.edges, [(a, b) for a, b in zip(self.in_ends, self.open)]
        )
        return (cert, self.loose), order

    def relabel(self, order: Sequence[int]) -> "_Partial":
        pos = {v: i for i, v in enumerate(order)}
        return _Partial(
            self.n,
            tuple(sorted((pos[a], pos[b], w) for a, b, w in self.edges)),
            tuple(self.in_ends[v] for v in order),
            tuple(self.open[v] for v in order),
            self.loose,
        )

    def strand_count(self) -> int:
        return len(self.loose) + sum(len(x) for x in self.open)

    def components(self) -> int:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b, _ in self.edges:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        return len({find(v) for v in range(self.n)}) + len(self.loose)

    def successors(self):
        strands = [(None, w) for w in sorted(set(self.loose))]
        for v in range(self.n):
            for w in sorted(set(self.open[v])):
                strands.append((v, w))
        new = self.n

        def attach(src, w, in_ends, edges):
            if src is None:
                in_ends.append(w)
            else:
                edges.append((src, new, w))

        def remove(src, w, loose, opens):
            if src is None:
                loose.remove(w)
            else:
                opens[src].remove(w)

        for i, (sa, wa) in enumerate(strands):
            for sb, wb in strands[i:]:
                loose = list(self.loose)
                opens = [list(x) for x in self.open]
                remove(sa, wa, loose, opens)
                try:
                    remove(sb, wb, loose, opens)
                except ValueError:
                    continue  # the same strand cannot be joined to itself
                ins: list[int] = []
                edges = list(self.edges)
                attach(sa, wa, ins, edges)
                attach(sb, wb, ins, edges)
                yield _Partial(
                    new + 1,
                    tuple(edges),
                    tuple(tuple(x) for x in self.in_ends) + (tuple(sorted(ins)),),
                    tuple(tuple(sorted(x)) for x in opens) + ((wa + wb,),),
                    tuple(sorted(loose)),
                )
        for sa, wa in strands:
            if wa < 2:
                continue
            loose = list(self.loose)
            opens = [list(x) for x in self.open]
            remove(sa, wa, loose, opens)
            ins = []
            edges = list(self.edges)
            attach(sa, wa, ins, edges)
            for small in range(1, wa // 2 + 1):
                yield _Partial(
                    new + 1,
                    tuple(edges),
                    tuple(self.in_ends) + (tuple(ins),),
                    tuple(tuple(sorted(x)) for x in opens) + ((small, wa - small),),
                    tuple(sorted(loose)),
                )

    def to_type(self) -> CombinatorialType:
        ends = []
        for v in range(self.n):
            ends += [End(v, -w) for w in self.in_ends[v]]
            ends += [End(v, w) for w in self.open[v]]
        return CombinatorialType(
            self.n,
            tuple(sorted(BoundedEdge(*e) for e in self.edges)),
            tuple(sorted(ends)),
        )


def enumerate_type_classes(inp: HurwitzInput) -> list[TypeClass]:
    """Classes of top-dimensional types of genus g with ends eta (in) and nu (out).

    Vertices are added one at a time on top of open strands, so every class
    arises from any of its vertex orders; partial graphs are merged by
    canonical certificate after each step.
    """
    s, l = inp.s, inp.l
    if s == 0:
        return []
    states = {(): _Partial(0, (), (), (), tuple(sorted(inp.eta)))}
    for step in range(1, s + 1):
        remaining = s - step
        nxt: dict = {}
        for state in states.values():
            for cand in state.successors():
                gap = cand.strand_count() - l
                if abs(gap) > remaining or (remaining - gap) % 2:
                    continue
                if cand.components() - 1 > (remaining + gap) // 2:
                    continue
                key, order = cand.key()
                if key not in nxt:
                    nxt[key] = cand.relabel(order)
        states = nxt
    target = tuple(sorted(inp.nu))
    out = []
    for st in states.values():
        if st.loose or st.components() != 1:
            continue
        if tuple(sorted(w for x in st.open for w in x)) != target:
            continue
        out.append(TypeClass(st.to_type()))
    out.sort(key=lambda c: c.certificate)
    return out


def degree_to_input(g: int, delta: Sequence[int]) -> HurwitzInput:
    delta = list(delta)
    if any(z == 0 for z in delta) or sum(delta) != 0:
        raise ValueError("degree entries must be nonzero and sum to 0")
    eta = [-z for z in delta if z < 0]
    nu = [z for z in delta if z > 0]
    return HurwitzInput(g, Partition(eta), Partition(nu))


def tropical_degree(g: int, delta: Sequence[int]) -> Fraction:
    """Degree of the tropical branch map: sum of class contributions.

    With only two ends there are no inner vertices and the moduli space is a
    single edge of weight d; it is counted with weight 1/d.
    """
    inp = degree_to_input(g, delta)
    if inp.s == 0:
        return Fraction(1, inp.d)
    return sum((class_contribution(c) for c in enumerate_type_classes(inp)), Fraction(0))


def hurwitz_tropical(inp: HurwitzInput) -> Fraction:
    return tropical_degree(inp.g, [-x for x in inp.eta] + list(inp.nu))
