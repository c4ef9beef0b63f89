"""Hurwitz numbers by direct enumeration of monodromy tuples in S_d.

A tuple (sigma_1, ..., sigma_r, tau_1, ..., tau_s) with sigma_i of cycle type
eta_i, tau_j transpositions, product equal to the identity and generating a
transitive subgroup is one monodromy representation.  The Hurwitz number is
the number of such tuples divided by d!.

The search fixes sigma_1..sigma_{r-1}, walks over transpositions depth first
and reads the last profile off the inverse of the running product.  Completion
counts are memoised on (running product, orbit partition, step), which keeps
d <= 7 interactive without changing what is counted.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial
from typing import Sequence

from .exactmath import HurwitzInput, Partition, cycle_type_count

DEFAULT_MAX_DEGREE = int(os.environ.get("TROPHURWITZ_MAX_DEGREE", "7"))

Perm = tuple[int, ...]


class DegreeGuardError(ValueError):
    """Requested degree exceeds the configured enumeration guard."""


def cycle_type(perm: Perm) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        n = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            n += 1
        lengths.append(n)
    return Partition(lengths)


def count_cycles(perm: Perm) -> int:
    seen = 0
    cycles = 0
    for start in range(len(perm)):
        if seen >> start & 1:
            continue
        cycles += 1
        x = start
        while not seen >> x & 1:
            seen |= 1 << x
            x = perm[x]
    return cycles


def compose(a: Perm, b: Perm) -> Perm:
    """(a o b)(x) = a(b(x))."""
    return tuple(a[x] for x in b)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def transpositions(d: int) -> list[tuple[int, int]]:
    return list(combinations(range(d), 2))


def class_members(p: Partition) -> list[Perm]:
    """All permutations of {0..d-1} with cycle type ``p``."""
    d = p.degree
    out = []
    for perm in permutations(range(d)):
        if cycle_type(perm) == p:
            out.append(perm)
    return out


def class_representative(p: Partition) -> Perm:
    perm = list(range(p.degree))
    start = 0
    for n in p:
        for i in range(n):
            perm[start + i] = start + (i + 1) % n
        start += n
    return tuple(perm)


def _orbit_labels(perm: Perm) -> tuple[int, ...]:
    """Label each point by the minimum of its cycle."""
    d = len(perm)
    labels = [0] * d
    seen = [False] * d
    for start in range(d):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        m = min(cyc)
        for x in cyc:
            labels[x] = m
    return tuple(labels)


def _merge_labels(labels: tuple[int, ...], perm: Perm) -> tuple[int, ...]:
    """Join the orbit partition ``labels`` with the cycles of ``perm``."""
    lab = list(labels)
    changed = True
    while changed:
        changed = False
        for x, y in enumerate(perm):
            a, b = lab[x], lab[y]
            if a != b:
                m = min(a, b)
                for i, v in enumerate(lab):
                    if v == a or v == b:
                        lab[i] = m
                changed = True
    return tuple(lab)


def _join_labels(labels: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    la, lb = labels[a], labels[b]
    if la == lb:
        return labels
    m, other = min(la, lb), max(la, lb)
    return tuple(m if v == other else v for v in labels)


class _Search:
    """Counts completions of a partial tuple; one instance per problem."""

    def __init__(self, d: int, middle: Sequence[Partition], s: int, last: Partition | None,
                 connected: bool, order: Sequence[tuple[int, int]] | None):
        self.d = d
        self.middle = list(middle)
        self.s = s
        self.last = last
        self.connected = connected
        self.trans = list(order) if order is not None else transpositions(d)
        self.target_cycles = len(last) if last is not None else d
        self.middle_members = [class_members(p) for p in self.middle]
        self.count = lru_cache(maxsize=None)(self._count)

    def _count(self, perm: Perm, labels: tuple[int, ...], step: int) -> int:
        nmid = len(self.middle)
        if step < nmid:
            total = 0
            for sigma in self.middle_members[step]:
                nxt = compose(sigma, perm)
                lab = _merge_labels(labels, sigma) if self.connected else labels
                total += self.count(nxt, lab, step + 1)
            return total
        remaining = self.s - (step - nmid)
        if remaining == 0:
            if self.connected and len(set(labels)) != 1:
                return 0
            if self.last is None:
                return int(all(i == x for i, x in enumerate(perm)))
            return int(cycle_type(perm) == self.last)
        c = count_cycles(perm)
        gap = abs(c - self.target_cycles)
        if gap > remaining or (remaining - gap) % 2:
            return 0
        if self.connected and len(set(labels)) - 1 > remaining:
            return 0
        total = 0
        for a, b in self.trans:
            nxt = list(perm)
            # tau o perm: swap the values a and b
            for i, x in enumerate(nxt):
                if x == a:
                    nxt[i] = b
                elif x == b:
                    nxt[i] = a
            lab = _join_labels(labels, a, b) if self.connected else labels
            total += self.count(tuple(nxt), lab, step + 1)
        return total


def _run_branch(args) -> int:
    d, middle, s, last, connected, order, starts = args
    search = _Search(d, middle, s, last, connected, order)
    total = 0
    for sigma in starts:
        labels = _orbit_labels(sigma) if connected else tuple(range(d))
        total += search.count(sigma, labels, 0)
    return total


def count_tuples(
    d: int,
    profiles: Sequence[Partition],
    s: int,
    *,
    connected: bool = True,
    fix_first: bool | None = None,
    transposition_order: Sequence[tuple[int, int]] | None = None,
    workers: int = 1,
) -> int:
    """Number of monodromy tuples (not divided by d!).

    ``fix_first`` replaces the enumeration of the first profile's conjugacy
    class by one representative times the class size; the default uses it
    only above degree 7.
    """
    profiles = list(profiles)
    if s < 0:
        raise ValueError(f"s = {s} < 0: no such cover configuration")
    if not profiles:
        search = _Search(d, [], s, None, connected, transposition_order)
        ident = tuple(range(d))
        return search.count(ident, ident, 0)
    first, middle, last = profiles[0], profiles[1:-1], profiles[-1] if len(profiles) > 1 else None
    if fix_first is None:
        fix_first = d > 7
    if fix_first:
        rep = class_representative(first)
        return cycle_type_count(first) * _run_branch(
            (d, middle, s, last, connected, transposition_order, [rep])
        )
    starts = class_members(first)
    if workers <= 1 or len(starts) < 2:
        return _run_branch((d, middle, s, last, connected, transposition_order, starts))
    chunks = [starts[i::workers] for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(
            _run_branch,
            [(d, middle, s, last, connected, transposition_order, c) for c in chunks if c],
        )
        return sum(parts)


def simple_branch_count(d: int, profiles: Sequence[Partition], g: int) -> int:
    """s from 2 - 2g = 2d - d r - s + sum(len(eta_i))."""
    r = len(profiles)
    return 2 * d - d * r + sum(len(p) for p in profiles) - 2 + 2 * g


def _check_guard(d: int, max_degree: int | None) -> None:
    limit = DEFAULT_MAX_DEGREE if max_degree is None else max_degree
    if limit < 1:
        raise ValueError("degree guard must be positive")
    if d > limit:
        raise DegreeGuardError(f"degree {d} exceeds the enumeration guard {limit}")


def hurwitz_general(
    d: int,
    profiles: Sequence[Partition],
    g: int,
    *,
    max_degree: int | None = None,
    **kwargs,
) -> Fraction:
    """Connected genus-g Hurwitz number with arbitrary profiles plus simple points."""
    profiles = [p if isinstance(p, Partition) else Partition(p) for p in profiles]
    if g < 0:
        raise ValueError("genus must be nonnegative")
    for p in profiles:
        if p.degree != d:
            raise ValueError(f"profile {p} is not a partition of {d}")
    s = simple_branch_count(d, profiles, g)
    if s < 0:
        raise ValueError(f"s = {s} < 0: no such cover configuration")
    _check_guard(d, max_degree)
    return Fraction(count_tuples(d, profiles, s, **kwargs), factorial(d))


def hurwitz_bruteforce(
    inp: HurwitzInput,
    *,
    max_degree: int | None = None,
    connected: bool = True,
    **kwargs,
) -> Fraction:
    """Double Hurwitz number H^g_d(eta, nu) by tuple enumeration."""
    _check_guard(inp.d, max_degree)
    n = count_tuples(inp.d, [inp.eta, inp.nu], inp.s, connected=connected, **kwargs)
    return Fraction(n, factorial(inp.d))
