"""Genus-0 double Hurwitz numbers as piecewise polynomials.

With marked preimages over 0 and infinity, H^0(mu, nu) is a sum over
3-valent directed trees whose k in-ends carry mu_i and l out-ends carry nu_j.
Every internal edge weight is a linear form; inside a chamber of the
arrangement of walls sum_I mu - sum_J nu = 0 the set of trees with positive
weights is fixed, so H^0 is a polynomial there.

All polynomials live on the hyperplane sum(mu) = sum(nu); they are stored in
reduced form with the last nu eliminated.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, lcm, prod
from typing import Sequence

import numpy as np
from scipy.optimize import linprog

from .exactmath import LinearForm, Polynomial, count_linear_extensions, hurwitz_names


class OnWallError(ValueError):
    """A point lies on a wall, where no chamber polynomial applies."""


class NotAdjacentError(ValueError):
    """Two chambers do not share a facet along the given wall."""


Leaf = tuple[str, int]  # ("m", i) or ("n", j), 1-based


def _check_kl(k: int, l: int) -> None:
    if k < 1 or l < 1 or k + l < 3:
        raise ValueError(f"need k, l >= 1 and k + l >= 3, got ({k}, {l})")


def reduce_on_hyperplane(p: Polynomial, k: int, l: int) -> Polynomial:
    """Eliminate nu_l using sum(mu) = sum(nu)."""
    last = LinearForm([(i, 1) for i in range(k)] + [(k + j, -1) for j in range(l - 1)])
    return p.substitute({k + l - 1: last})


def _reduced_form(f: LinearForm, k: int, l: int) -> LinearForm:
    c = f.coeffs.get(k + l - 1, 0)
    if not c:
        return f
    rest = LinearForm({v: x for v, x in f.coeffs.items() if v != k + l - 1})
    last = LinearForm([(i, c) for i in range(k)] + [(k + j, -c) for j in range(l - 1)])
    return rest + last


# ----------------------------------------------------------------------------
# trees


@dataclass(frozen=True)
class DirectedTree:
    """A 3-valent tree with directed internal edges and labelled ends.

    ``in_ends[i-1]`` is the vertex carrying mu_i, ``out_ends[j-1]`` the vertex
    carrying nu_j.  Internal edges are (tail, head) pairs.
    """

    k: int
    l: int
    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    in_ends: tuple[int, ...]
    out_ends: tuple[int, ...]

    def __post_init__(self):
        if len(self.in_ends) != self.k or len(self.out_ends) != self.l:
            raise ValueError("end lists do not match (k, l)")
        if len(self.edges) != self.n_vertices - 1:
            raise ValueError("a tree on r vertices has r - 1 internal edges")
        ins = [0] * self.n_vertices
        outs = [0] * self.n_vertices
        for t, h in self.edges:
            outs[t] += 1
            ins[h] += 1
        for v in self.in_ends:
            ins[v] += 1
        for v in self.out_ends:
            outs[v] += 1
        for v in range(self.n_vertices):
            if ins[v] + outs[v] != 3:
                raise ValueError(f"vertex {v} is not 3-valent")
            if not ins[v] or not outs[v]:
                raise ValueError(f"vertex {v} is a source or a sink")

    def side(self, edge_index: int) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
        """(vertices, in labels, out labels) on the tail side of an edge."""
        tail, head = self.edges[edge_index]
        seen = {tail}
        stack = [tail]
        while stack:
            x = stack.pop()
            for i, (a, b) in enumerate(self.edges):
                if i == edge_index:
                    continue
                for p, q in ((a, b), (b, a)):
                    if p == x and q not in seen:
                        seen.add(q)
                        stack.append(q)
        I = frozenset(i + 1 for i, v in enumerate(self.in_ends) if v in seen)
        J = frozenset(j + 1 for j, v in enumerate(self.out_ends) if v in seen)
        return frozenset(seen), I, J

    @property
    def key(self) -> tuple:
        """Directed splits; equal keys mean equal labelled directed trees."""
        splits = []
        for e in range(len(self.edges)):
            _, I, J = self.side(e)
            splits.append((tuple(sorted(I)), tuple(sorted(J))))
        return (self.k, self.l, tuple(sorted(splits)))

    @property
    def order_count(self) -> int:
        return count_linear_extensions(self.n_vertices, self.edges)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "l": self.l,
            "vertices": self.n_vertices,
            "edges": [list(e) for e in self.edges],
            "in_ends": list(self.in_ends),
            "out_ends": list(self.out_ends),
        }


def internal_weights(tree: DirectedTree) -> list[LinearForm]:
    """Weight of each internal edge: sum_I mu - sum_J nu over its tail side."""
    out = []
    for e in range(len(tree.edges)):
        _, I, J = tree.side(e)
        out.append(LinearForm.from_subsets(tree.k, I, J))
    return out


def _undirected_trees(leaves: Sequence[Leaf]):
    """All labelled 3-valent trees on the given leaves, by inserting leaves one at a time.

    Edges are pairs of nodes; internal nodes are ints, leaves are tuples.
    """
    start = [(0, leaves[0]), (0, leaves[1]), (0, leaves[2])]
    trees = [(1, start)]
    for leaf in leaves[3:]:
        nxt = []
        for n, edges in trees:
            for idx, (a, b) in enumerate(edges):
                rest = edges[:idx] + edges[idx + 1:]
                nxt.append((n + 1, rest + [(a, n), (n, b), (n, leaf)]))
        trees = nxt
    return trees


@lru_cache(maxsize=None)
def enumerate_trees(k: int, l: int) -> tuple[DirectedTree, ...]:
    """Labelled directed 3-valent trees with no sources or sinks, sorted by key."""
    _check_kl(k, l)
    leaves: list[Leaf] = [("m", i) for i in range(1, k + 1)] + [("n", j) for j in range(1, l + 1)]
    found: dict[tuple, DirectedTree] = {}
    for n, edges in _undirected_trees(leaves):
        inner = [(a, b) for a, b in edges if isinstance(a, int) and isinstance(b, int)]
        in_ends = [0] * k
        out_ends = [0] * l
        for a, b in edges:
            for v, leaf in ((a, b), (b, a)):
                if isinstance(v, int) and isinstance(leaf, tuple):
                    if leaf[0] == "m":
                        in_ends[leaf[1] - 1] = v
                    else:
                        out_ends[leaf[1] - 1] = v
        for mask in range(1 << len(inner)):
            directed = tuple(
                (b, a) if mask >> i & 1 else (a, b) for i, (a, b) in enumerate(inner)
            )
            try:
                tree = DirectedTree(k, l, n, directed, tuple(in_ends), tuple(out_ends))
            except ValueError:
                continue
            found.setdefault(tree.key, tree)
    return tuple(found[key] for key in sorted(found))


# ----------------------------------------------------------------------------
# walls and chambers


@dataclass(frozen=True, order=True)
class Wall:
    I: tuple[int, ...]
    J: tuple[int, ...]
    k: int
    l: int

    @classmethod
    def make(cls, k: int, l: int, I, J) -> "Wall":
        """Canonical wall through (I, J): the representative with 1 in I."""
        I, J = frozenset(I), frozenset(J)
        if not I or not J or len(I) == k or len(J) == l:
            raise ValueError("walls need nonempty proper subsets I and J")
        if not I <= set(range(1, k + 1)) or not J <= set(range(1, l + 1)):
            raise ValueError("wall subsets out of range")
        if 1 not in I:
            I = frozenset(range(1, k + 1)) - I
            J = frozenset(range(1, l + 1)) - J
        return cls(tuple(sorted(I)), tuple(sorted(J)), k, l)

    @classmethod
    def parse(cls, k: int, l: int, text: str) -> "Wall":
        """Parse ``"I=1;J=1"`` or ``"I=1,2;J=3"``."""
        parts = {}
        for chunk in text.replace(" ", "").split(";"):
            if "=" not in chunk:
                raise ValueError(f"cannot parse wall {text!r}")
            name, vals = chunk.split("=", 1)
            parts[name.upper()] = [int(x) for x in vals.split(",") if x]
        if set(parts) != {"I", "J"}:
            raise ValueError(f"cannot parse wall {text!r}")
        return cls.make(k, l, parts["I"], parts["J"])

    @property
    def Ic(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.k + 1) if i not in self.I)

    @property
    def Jc(self) -> tuple[int, ...]:
        return tuple(j for j in range(1, self.l + 1) if j not in self.J)

    @property
    def delta(self) -> LinearForm:
        return LinearForm.from_subsets(self.k, self.I, self.J)

    def text(self) -> str:
        return self.delta.text(hurwitz_names(self.k, self.l))

    def spec(self) -> str:
        return "I=" + ",".join(map(str, self.I)) + ";J=" + ",".join(map(str, self.J))

    def to_json(self) -> dict:
        return {"I": list(self.I), "J": list(self.J)}


@lru_cache(maxsize=None)
def walls(k: int, l: int) -> tuple[Wall, ...]:
    _check_kl(k, l)
    out = set()
    for a in range(1, k):
        for I in combinations(range(1, k + 1), a):
            for b in range(1, l):
                for J in combinations(range(1, l + 1), b):
                    out.add(Wall.make(k, l, I, J))
    return tuple(sorted(out))


def _point(mu: Sequence, nu: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in mu) + tuple(Fraction(x) for x in nu)


def _strict_point(
    k: int, l: int, strict: Sequence[tuple[LinearForm, int]], zero: LinearForm | None = None
) -> tuple[int, ...] | None:
    """An integer point with sum(mu) = sum(nu), all coordinates positive,
    sign * f > 0 for each (f, sign) in ``strict`` and ``zero`` = 0 if given.

    A linear program maximises the margin; its solution is rounded to
    rationals and the constraints are then checked exactly.
    """
    n = k + l
    # variables x_0..x_{n-1}, margin t
    A_ub, b_ub = [], []
    for f, sign in strict:
        row = [0.0] * (n + 1)
        for v, c in f.coeffs.items():
            row[v] = -sign * c
        row[n] = 1.0
        A_ub.append(row)
        b_ub.append(0.0)
    for v in range(n):
        row = [0.0] * (n + 1)
        row[v] = -1.0
        row[n] = 1.0
        A_ub.append(row)
        b_ub.append(0.0)
    A_eq = [[1.0] * k + [-1.0] * l + [0.0], [1.0] * k + [0.0] * l + [0.0]]
    b_eq = [0.0, 1.0]
    if zero is not None:
        row = [0.0] * (n + 1)
        for v, c in zero.coeffs.items():
            row[v] = float(c)
        A_eq.append(row)
        b_eq.append(0.0)
    c = [0.0] * n + [-1.0]
    bounds = [(None, None)] * n + [(None, 1.0)]
    res = linprog(c, A_ub=np.array(A_ub), b_ub=b_ub, A_eq=np.array(A_eq), b_eq=b_eq,
                  bounds=bounds, method="highs")
    if res.status != 0 or res.x[n] <= 1e-9:
        return None
    solve_for = None
    if zero is not None:
        reduced = _reduced_form(zero, k, l)
        if not reduced:
            return None
        solve_for = max(reduced.coeffs)
    for denom in (10**3, 10**6, 10**9):
        x = [Fraction(float(v)).limit_denominator(denom) for v in res.x[:n]]
        if solve_for is not None:
            # make the wall vanish exactly, then the hyperplane
            c0 = reduced.coeffs[solve_for]
            x[k + l - 1] = Fraction(0)
            rest = sum((c * x[v] for v, c in reduced.coeffs.items() if v != solve_for), Fraction(0))
            x[solve_for] = -rest / c0
        x[k + l - 1] = sum(x[:k]) - sum(x[k:k + l - 1])
        ok = all(v > 0 for v in x) and all(sign * f.evaluate(x) > 0 for f, sign in strict)
        if zero is not None:
            ok = ok and zero.evaluate(x) == 0
        if ok:
            scale = lcm(*(v.denominator for v in x))
            return tuple(int(v * scale) for v in x)
    return None


@dataclass(frozen=True)
class Chamber:
    k: int
    l: int
    signs: tuple[int, ...]
    witness: tuple[int, ...] = field(compare=False)

    @property
    def walls(self) -> tuple[Wall, ...]:
        return walls(self.k, self.l)

    def sign_of(self, wall: Wall) -> int:
        return self.signs[self.walls.index(wall)]

    def contains(self, point: Sequence) -> bool:
        p = [Fraction(x) for x in point]
        return all(s * w.delta.evaluate(p) > 0 for w, s in zip(self.walls, self.signs))

    def sign_text(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def to_json(self) -> dict:
        return {
            "signs": self.sign_text(),
            "witness_point": list(self.witness),
            "polynomial_text": chamber_polynomial(self).to_text(),
        }


def chamber_of(mu: Sequence, nu: Sequence) -> Chamber:
    k, l = len(mu), len(nu)
    _check_kl(k, l)
    p = _point(mu, nu)
    if any(x <= 0 for x in p):
        raise ValueError("entries must be positive")
    if sum(p[:k]) != sum(p[k:]):
        raise ValueError("sum(mu) must equal sum(nu)")
    signs = []
    for w in walls(k, l):
        val = w.delta.evaluate(p)
        if val == 0:
            raise OnWallError(f"point lies on the wall {w.text()} = 0 ({w.spec()})")
        signs.append(1 if val > 0 else -1)
    scale = lcm(*(x.denominator for x in p))
    return Chamber(k, l, tuple(signs), tuple(int(x * scale) for x in p))


@lru_cache(maxsize=None)
def enumerate_chambers(k: int, l: int) -> tuple[Chamber, ...]:
    """All realisable sign vectors, found by adding one wall at a time."""
    _check_kl(k, l)
    ws = walls(k, l)
    regions: list[tuple[tuple[int, ...], tuple[int, ...]]] = [((), ())]
    for idx, w in enumerate(ws):
        nxt = []
        for signs, _ in regions:
            for s in (1, -1):
                cand = signs + (s,)
                pt = _strict_point(k, l, [(ws[i].delta, cand[i]) for i in range(idx + 1)])
                if pt is not None:
                    nxt.append((cand, pt))
        regions = nxt
    if not ws:
        pt = _strict_point(k, l, [])
        regions = [((), pt)]
    return tuple(Chamber(k, l, s, p) for s, p in sorted(regions, reverse=True))


def positive_trees(chamber: Chamber) -> list[DirectedTree]:
    """Trees all of whose internal weights are positive in the chamber."""
    p = chamber.witness
    return [
        t for t in enumerate_trees(chamber.k, chamber.l)
        if all(f.evaluate(p) > 0 for f in internal_weights(t))
    ]


def _tree_term(tree: DirectedTree, names, skip: int | None = None) -> Polynomial:
    term = Polynomial.constant(names, tree.order_count)
    for i, f in enumerate(internal_weights(tree)):
        if i != skip:
            term = term * f.to_polynomial(names)
    return term


@lru_cache(maxsize=None)
def _chamber_polynomial(k: int, l: int, signs: tuple[int, ...], witness: tuple[int, ...]) -> Polynomial:
    names = hurwitz_names(k, l)
    total = Polynomial.zero(names)
    for tree in positive_trees(Chamber(k, l, signs, witness)):
        total = total + _tree_term(tree, names)
    return reduce_on_hyperplane(total, k, l)


def chamber_polynomial(chamber: Chamber) -> Polynomial:
    """Sum over positive trees of (number of vertex orders) * prod of internal weights."""
    canon = next(c for c in enumerate_chambers(chamber.k, chamber.l) if c.signs == chamber.signs)
    return _chamber_polynomial(chamber.k, chamber.l, canon.signs, canon.witness)


def marked_H0(mu: Sequence, nu: Sequence) -> Fraction:
    """Genus-0 double Hurwitz number with marked preimages of 0 and infinity."""
    chamber = chamber_of(mu, nu)
    return chamber_polynomial(chamber).evaluate(_point(mu, nu))


# ----------------------------------------------------------------------------
# wall crossing


def multinomial(r: int, parts: Sequence[int]) -> int:
    if sum(parts) != r:
        raise ValueError("parts must sum to r")
    return factorial(r) // prod(factorial(x) for x in parts)


def _check_adjacent(wall: Wall, c1: Chamber, c2: Chamber) -> None:
    if (c1.k, c1.l) != (wall.k, wall.l) or (c2.k, c2.l) != (wall.k, wall.l):
        raise NotAdjacentError("chambers and wall live in different arrangements")
    ws = walls(wall.k, wall.l)
    idx = ws.index(wall)
    differ = [i for i in range(len(ws)) if c1.signs[i] != c2.signs[i]]
    if differ != [idx]:
        raise NotAdjacentError("chambers must differ exactly in the sign of the wall")
    strict = [(w.delta, s) for i, (w, s) in enumerate(zip(ws, c1.signs)) if i != idx]
    if _strict_point(wall.k, wall.l, strict, zero=wall.delta) is None:
        raise NotAdjacentError(f"chambers do not share a facet on {wall.text()} = 0")


def _delta_edge(tree: DirectedTree, wall: Wall) -> int | None:
    """Index of the unique internal edge with weight +-delta, None if absent."""
    target = _reduced_form(wall.delta, wall.k, wall.l)
    hits = [
        i for i, f in enumerate(internal_weights(tree))
        if _reduced_form(f, wall.k, wall.l) in (target, -target)
    ]
    if len(hits) > 1:
        raise AssertionError("more than one edge of weight +-delta")
    return hits[0] if hits else None


def induced_chambers(wall: Wall, c1: Chamber) -> tuple[Chamber, Chamber]:
    """Chambers of (mu_I; nu_J, delta) and (mu_Ic, delta; nu_Jc) containing c1's witness."""
    p = c1.witness
    k = wall.k
    d = wall.delta.evaluate(p)
    if d <= 0:
        raise ValueError("delta must be positive in the chamber")
    mu1 = [p[i - 1] for i in wall.I]
    nu1 = [p[k + j - 1] for j in wall.J] + [d]
    mu2 = [p[i - 1] for i in wall.Ic] + [d]
    nu2 = [p[k + j - 1] for j in wall.Jc]
    return chamber_of(mu1, nu1), chamber_of(mu2, nu2)


def _sub_substitutions(wall: Wall):
    k, l = wall.k, wall.l
    big = hurwitz_names(k, l)
    delta = wall.delta
    first = {a: LinearForm({i - 1: 1}) for a, i in enumerate(wall.I)}
    first.update({len(wall.I) + b: LinearForm({k + j - 1: 1}) for b, j in enumerate(wall.J)})
    first[len(wall.I) + len(wall.J)] = delta
    second = {a: LinearForm({i - 1: 1}) for a, i in enumerate(wall.Ic)}
    second[len(wall.Ic)] = delta
    second.update({len(wall.Ic) + 1 + b: LinearForm({k + j - 1: 1}) for b, j in enumerate(wall.Jc)})
    return big, first, second


@dataclass
class WallCrossingResult:
    wall: Wall
    c1: Chamber
    c2: Chamber
    p1: Polynomial
    p2: Polynomial
    difference: Polynomial
    graph_sum: Polynomial
    closed_form: Polynomial
    r: int
    r1: int
    r2: int

    @property
    def wc(self) -> Polynomial:
        return self.difference

    @property
    def consistent(self) -> bool:
        return self.difference == self.graph_sum == self.closed_form

    def to_json(self, c1_index: int | None = None, c2_index: int | None = None) -> dict:
        return {
            "wall": self.wall.to_json(),
            "c1": self.c1.sign_text() if c1_index is None else c1_index,
            "c2": self.c2.sign_text() if c2_index is None else c2_index,
            "polynomial_text": self.difference.to_text(),
            "graph_sum_text": self.graph_sum.to_text(),
            "closed_form_text": self.closed_form.to_text(),
            "consistent": self.consistent,
        }


def wall_crossing(wall: Wall, c1: Chamber, c2: Chamber) -> WallCrossingResult:
    """P(c1) - P(c2) computed three independent ways."""
    _check_adjacent(wall, c1, c2)
    k, l = wall.k, wall.l
    sigma = c1.sign_of(wall)
    names = hurwitz_names(k, l)
    p1, p2 = chamber_polynomial(c1), chamber_polynomial(c2)
    difference = p1 - p2

    # sum over the symmetric difference of the positive tree sets
    t1 = {t.key: t for t in positive_trees(c1)}
    t2 = {t.key: t for t in positive_trees(c2)}
    sym = [t1[x] for x in t1.keys() - t2.keys()] + [t2[x] for x in t2.keys() - t1.keys()]
    graph_sum = Polynomial.zero(names)
    for tree in sym:
        e = _delta_edge(tree, wall)
        if e is None:
            raise AssertionError("tree in the symmetric difference without a delta edge")
        graph_sum = graph_sum + _tree_term(tree, names, skip=e)
    graph_sum = reduce_on_hyperplane(graph_sum * wall.delta.to_polynomial(names) * sigma, k, l)

    # closed form from the two smaller Hurwitz functions
    pos = c1 if sigma > 0 else c2
    s1, s2 = induced_chambers(wall, pos)
    r = k + l - 2
    r1 = len(wall.I) + len(wall.J) - 1
    r2 = r - r1
    big, first, second = _sub_substitutions(wall)
    q1 = chamber_polynomial(s1).substitute(first, big)
    q2 = chamber_polynomial(s2).substitute(second, big)
    closed = q1 * q2 * wall.delta.to_polynomial(names) * (sigma * multinomial(r, (r1, r2)))
    closed_form = reduce_on_hyperplane(closed, k, l)

    return WallCrossingResult(wall, c1, c2, p1, p2, difference, graph_sum, closed_form, r, r1, r2)


def adjacent_pairs(k: int, l: int) -> list[tuple[Wall, Chamber, Chamber]]:
    """(wall, c1, c2) for each facet, with delta > 0 in c1."""
    ws = walls(k, l)
    chambers = enumerate_chambers(k, l)
    by_signs = {c.signs: c for c in chambers}
    out = []
    for c1 in chambers:
        for idx, w in enumerate(ws):
            if c1.signs[idx] < 0:
                continue
            flipped = c1.signs[:idx] + (-1,) + c1.signs[idx + 1:]
            c2 = by_signs.get(flipped)
            if c2 is None:
                continue
            try:
                _check_adjacent(w, c1, c2)
            except NotAdjacentError:
                continue
            out.append((w, c1, c2))
    return out


# ----------------------------------------------------------------------------
# cutting and gluing trees along the delta edge


def cut_tree(tree: DirectedTree, wall: Wall) -> tuple[DirectedTree, DirectedTree, bool]:
    """Split along the delta edge.

    Returns the tree on (mu_I; nu_J, delta), the tree on (mu_Ic, delta; nu_Jc)
    and whether the cut edge pointed away from the I side.
    """
    e = _delta_edge(tree, wall)
    if e is None:
        raise ValueError("tree has no edge of weight +-delta")
    verts, I, _ = tree.side(e)
    tail, head = tree.edges[e]
    forward = set(I) == set(wall.I)
    side1 = verts if forward else frozenset(range(tree.n_vertices)) - verts
    anchor1, anchor2 = (tail, head) if forward else (head, tail)

    def build(side, ins, outs, extra_in, extra_out):
        order = sorted(side)
        pos = {v: i for i, v in enumerate(order)}
        edges = tuple(
            (pos[a], pos[b]) for i, (a, b) in enumerate(tree.edges) if i != e and a in side
        )
        in_ends = tuple(pos[tree.in_ends[i - 1]] for i in ins) + extra_in(pos)
        out_ends = tuple(pos[tree.out_ends[j - 1]] for j in outs) + extra_out(pos)
        return DirectedTree(len(in_ends), len(out_ends), len(order), edges, in_ends, out_ends)

    t1 = build(side1, wall.I, wall.J, lambda pos: (), lambda pos: (pos[anchor1],))
    side2 = frozenset(range(tree.n_vertices)) - side1
    t2 = build(side2, wall.Ic, wall.Jc, lambda pos: (pos[anchor2],), lambda pos: ())
    return t1, t2, forward


def glue_trees(t1: DirectedTree, t2: DirectedTree, wall: Wall, forward: bool) -> DirectedTree:
    """Inverse of ``cut_tree``."""
    k, l = wall.k, wall.l
    n1 = t1.n_vertices
    a1 = t1.out_ends[-1]
    a2 = t2.in_ends[-1] + n1
    edges = list(t1.edges) + [(a + n1, b + n1) for a, b in t2.edges]
    edges.append((a1, a2) if forward else (a2, a1))
    in_ends = [0] * k
    out_ends = [0] * l
    for pos, i in enumerate(wall.I):
        in_ends[i - 1] = t1.in_ends[pos]
    for pos, j in enumerate(wall.J):
        out_ends[j - 1] = t1.out_ends[pos]
    for pos, i in enumerate(wall.Ic):
        in_ends[i - 1] = t2.in_ends[pos] + n1
    for pos, j in enumerate(wall.Jc):
        out_ends[j - 1] = t2.out_ends[pos] + n1
    return DirectedTree(k, l, n1 + t2.n_vertices, tuple(edges), tuple(in_ends), tuple(out_ends))


@dataclass
class CutGlueReport:
    ordered_delta_trees: int
    multinomial: int
    ordered_first: int
    ordered_second: int
    round_trips: int
    failures: list[str]

    @property
    def counts_match(self) -> bool:
        return self.ordered_delta_trees == self.multinomial * self.ordered_first * self.ordered_second

    @property
    def ok(self) -> bool:
        return self.counts_match and not self.failures


def cut_glue_check(wall: Wall, c1: Chamber, c2: Chamber) -> CutGlueReport:
    _check_adjacent(wall, c1, c2)
    pos = c1 if c1.sign_of(wall) > 0 else c2
    s1, s2 = induced_chambers(wall, pos)
    t1 = {t.key: t for t in positive_trees(c1)}
    t2 = {t.key: t for t in positive_trees(c2)}
    sym = [t1[x] for x in t1.keys() - t2.keys()] + [t2[x] for x in t2.keys() - t1.keys()]
    first = {t.key for t in positive_trees(s1)}
    second = {t.key for t in positive_trees(s2)}
    failures = []
    trips = 0
    for tree in sym:
        try:
            a, b, forward = cut_tree(tree, wall)
        except ValueError as exc:
            failures.append(f"{tree.key}: {exc}")
            continue
        if a.key not in first or b.key not in second:
            failures.append(f"{tree.key}: pieces not positive in the induced chambers")
        if glue_trees(a, b, wall, forward).key != tree.key:
            failures.append(f"{tree.key}: glue(cut) differs")
        else:
            trips += 1
    r = wall.k + wall.l - 2
    r1 = len(wall.I) + len(wall.J) - 1
    return CutGlueReport(
        ordered_delta_trees=sum(t.order_count for t in sym),
        multinomial=multinomial(r, (r1, r - r1)),
        ordered_first=sum(t.order_count for t in positive_trees(s1)),
        ordered_second=sum(t.order_count for t in positive_trees(s2)),
        round_trips=trips,
        failures=failures,
    )


# ----------------------------------------------------------------------------
# atlas


def atlas(k: int, l: int) -> dict:
    """Walls, chambers with polynomials, and all wall crossings of one arrangement."""
    chambers = enumerate_chambers(k, l)
    index = {c.signs: i for i, c in enumerate(chambers)}
    crossings = [
        wall_crossing(w, c1, c2).to_json(index[c1.signs], index[c2.signs])
        for w, c1, c2 in adjacent_pairs(k, l)
    ]
    return {
        "k": k,
        "l": l,
        "walls": [w.to_json() for w in walls(k, l)],
        "chambers": [c.to_json() for c in chambers],
        "wall_crossings": crossings,
    }


def atlas_json(k: int, l: int) -> str:
    return json.dumps(atlas(k, l), indent=2)
