import itertools
import random
from fractions import Fraction

import pytest

from trophurwitz.exactmath import HurwitzInput, Partition, all_inputs
from trophurwitz.symoracle import (
    DegreeGuardError,
    class_members,
    class_representative,
    compose,
    count_cycles,
    count_tuples,
    cycle_type,
    hurwitz_bruteforce,
    hurwitz_general,
    inverse,
    transpositions,
)


def H(g, eta, nu, **kw):
    return hurwitz_bruteforce(HurwitzInput(g, Partition.parse(eta), Partition.parse(nu)), **kw)


def naive_count(d, eta, nu, s, connected=True):
    """Loop over every tuple; only for tiny d and s."""
    ident = tuple(range(d))
    total = 0
    for sig in itertools.permutations(range(d)):
        if cycle_type(sig) != eta:
            continue
        for taus in itertools.product(transpositions(d), repeat=s):
            perms = [sig]
            cur = sig
            for a, b in taus:
                t = list(ident)
                t[a], t[b] = b, a
                perms.append(tuple(t))
                cur = compose(tuple(t), cur)
            if cycle_type(inverse(cur)) != nu:
                continue
            if connected:
                orbit = {0}
                frontier = [0]
                while frontier:
                    x = frontier.pop()
                    for p in perms:
                        if p[x] not in orbit:
                            orbit.add(p[x])
                            frontier.append(p[x])
                if len(orbit) != d:
                    continue
            total += 1
    return total


def test_worked_example():
    assert H(1, "4", "2,2") == 14


@pytest.mark.parametrize(
    "g,eta,nu,value",
    [(0, "1,1", "1,1", Fraction(1, 2)), (0, "1,1", "2", Fraction(1, 2)), (0, "2", "1,1", Fraction(1, 2)),
     (0, "3", "3", Fraction(1, 3)), (0, "1", "1", 1)],
)
def test_small_values(g, eta, nu, value):
    assert H(g, eta, nu) == value


def test_general_profiles():
    assert hurwitz_general(2, [], 0) == Fraction(1, 2)
    assert hurwitz_general(4, [Partition([4]), Partition([2, 2])], 1) == 14
    assert hurwitz_general(3, [Partition([3]), Partition([3])], 0) == Fraction(1, 3)


def test_negative_s_rejected():
    with pytest.raises(ValueError, match="s ="):
        hurwitz_general(3, [Partition([3])] * 3, 0)
    with pytest.raises(ValueError):
        HurwitzInput(-1, Partition([1]), Partition([1]))


def test_degree_guard():
    with pytest.raises(DegreeGuardError):
        H(0, "8", "8", max_degree=7)
    assert H(0, "8", "8", max_degree=8) == Fraction(1, 8)


@pytest.mark.parametrize("d,s", [(2, 2), (3, 1), (3, 2), (3, 3), (4, 2)])
def test_matches_naive_loop(d, s):
    for eta in map(Partition, _partitions(d)):
        for nu in map(Partition, _partitions(d)):
            for connected in (True, False):
                assert count_tuples(d, [eta, nu], s, connected=connected) == naive_count(
                    d, eta, nu, s, connected
                )


def _partitions(d):
    from trophurwitz.exactmath import partitions_of

    return [p.parts for p in partitions_of(d)]


def test_disconnected_at_least_connected():
    for inp in all_inputs(4, 1):
        assert hurwitz_bruteforce(inp, connected=False) >= hurwitz_bruteforce(inp)


@pytest.mark.parametrize("inp", all_inputs(5, 1), ids=str)
def test_eta_nu_symmetry(inp):
    assert hurwitz_bruteforce(inp) == hurwitz_bruteforce(inp.swapped())


def test_transposition_order_does_not_matter():
    inp = HurwitzInput(1, Partition([3, 1]), Partition([2, 1, 1]))
    base = count_tuples(4, [inp.eta, inp.nu], inp.s)
    rng = random.Random(5)
    for _ in range(3):
        order = transpositions(4)
        rng.shuffle(order)
        assert count_tuples(4, [inp.eta, inp.nu], inp.s, transposition_order=order) == base


def test_representative_shortcut_and_workers_agree():
    eta, nu = Partition([2, 1, 1]), Partition([3, 1])
    s = 4
    full = count_tuples(4, [eta, nu], s, fix_first=False)
    assert count_tuples(4, [eta, nu], s, fix_first=True) == full
    assert count_tuples(4, [eta, nu], s, fix_first=False, workers=2) == full


def test_permutation_helpers():
    p = (1, 2, 0, 4, 3)
    assert cycle_type(p) == Partition([3, 2])
    assert count_cycles(p) == 2
    assert compose(p, inverse(p)) == tuple(range(5))
    assert cycle_type(class_representative(Partition([2, 2, 1]))) == Partition([2, 2, 1])
    assert len(class_members(Partition([2, 2]))) == 3
