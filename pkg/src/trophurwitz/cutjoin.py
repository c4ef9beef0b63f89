"""Hurwitz numbers from the cut-and-join action on cycle types.

Composing a permutation of cycle type eta with every transposition splits one
cycle or joins two.  Iterating that on a weighted distribution of cycle types
counts tuples without any transitivity condition; the connected number is
then recovered by inclusion-exclusion over orbit decompositions.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Mapping

from .exactmath import HurwitzInput, Partition, aut_count, cycle_type_count

CycleTypeDistribution = dict[Partition, Fraction]


def _without(parts: tuple[int, ...], *positions: int) -> list[int]:
    drop = set(positions)
    return [p for i, p in enumerate(parts) if i not in drop]


def cutjoin_step(state: Mapping[Partition, Fraction]) -> CycleTypeDistribution:
    """Push a cycle-type distribution through composition with all transpositions."""
    degrees = {p.degree for p in state}
    if len(degrees) > 1:
        raise ValueError(f"mixed degrees in distribution: {sorted(degrees)}")
    out: CycleTypeDistribution = {}

    def add(parts, w):
        key = Partition(parts)
        out[key] = out.get(key, Fraction(0)) + w

    for eta, w in state.items():
        if not w:
            continue
        parts = eta.parts
        # join: any two cycles
        for a, b in combinations(range(len(parts)), 2):
            add(_without(parts, a, b) + [parts[a] + parts[b]], w * parts[a] * parts[b])
        # cut: n -> (m1, m2), n ways if m1 != m2, n/2 ways if m1 == m2
        done = set()
        for a, n in enumerate(parts):
            if n < 2 or n in done:
                continue
            done.add(n)
            mult = parts.count(n)
            rest = _without(parts, a)
            for m2 in range(1, n // 2 + 1):
                m1 = n - m2
                ways = Fraction(n, 2) if m1 == m2 else Fraction(n)
                add(rest + [m1, m2], w * ways * mult)
    return {k: v for k, v in out.items() if v}


def evolve(eta: Partition, steps: int) -> list[CycleTypeDistribution]:
    """Distributions after 0..steps transpositions, starting from eps(eta)/d! at eta."""
    state = {eta: Fraction(cycle_type_count(eta), factorial(eta.degree))}
    history = [state]
    for _ in range(steps):
        state = cutjoin_step(state)
        history.append(state)
    return history


@lru_cache(maxsize=None)
def _disconnected(eta: Partition, nu: Partition, s: int) -> Fraction:
    if eta.degree != nu.degree or s < 0:
        return Fraction(0)
    return evolve(eta, s)[s].get(nu, Fraction(0))


def hurwitz_disconnected(inp: HurwitzInput) -> Fraction:
    """Tuple count without the transitivity condition, divided by d!."""
    return _disconnected(inp.eta, inp.nu, inp.s)


def disconnected_count(eta: Partition, nu: Partition, s: int) -> Fraction:
    """Same as :func:`hurwitz_disconnected` but indexed by s instead of genus."""
    return _disconnected(eta, nu, s)


def _marked_disconnected(a: tuple[int, ...], b: tuple[int, ...], s: int) -> Fraction:
    if not a and not b:
        return Fraction(int(s == 0))
    if not a or not b or sum(a) != sum(b):
        return Fraction(0)
    eta, nu = Partition(a), Partition(b)
    return aut_count(eta) * aut_count(nu) * _disconnected(eta, nu, s)


@lru_cache(maxsize=None)
def _marked_connected(a: tuple[int, ...], b: tuple[int, ...], s: int) -> Fraction:
    """Connected count with labelled parts, via the first-block recursion.

    The block of an orbit decomposition that contains the first part of ``a``
    is peeled off; every other block is a product of connected pieces, which
    the disconnected count already sums over.
    """
    total = _marked_disconnected(a, b, s)
    rest_a = range(1, len(a))
    for ka in range(len(a)):
        for extra_a in combinations(rest_a, ka):
            block_a = (0,) + extra_a
            sub_a = tuple(a[i] for i in block_a)
            mass = sum(sub_a)
            comp_a = tuple(a[i] for i in range(len(a)) if i not in block_a)
            for kb in range(1, len(b) + 1):
                for block_b in combinations(range(len(b)), kb):
                    sub_b = tuple(b[j] for j in block_b)
                    if sum(sub_b) != mass:
                        continue
                    comp_b = tuple(b[j] for j in range(len(b)) if j not in block_b)
                    for s1 in range(s + 1):
                        if not comp_a and not comp_b and s1 == s:
                            continue  # the whole configuration itself
                        # a connected block needs s1 = 2g1 - 2 + |A1| + |B1|, g1 >= 0
                        excess = s1 - (len(sub_a) + len(sub_b) - 2)
                        if excess < 0 or excess % 2:
                            continue
                        rest = _marked_disconnected(comp_a, comp_b, s - s1)
                        if not rest:
                            continue
                        total -= comb(s, s1) * _marked_connected(sub_a, sub_b, s1) * rest
    return total


def hurwitz_connected_from_disconnected(inp: HurwitzInput) -> Fraction:
    """Connected double Hurwitz number from the cut-and-join counts."""
    marked = _marked_connected(inp.eta.parts, inp.nu.parts, inp.s)
    return marked / (aut_count(inp.eta) * aut_count(inp.nu))


hurwitz_cutjoin = hurwitz_connected_from_disconnected
