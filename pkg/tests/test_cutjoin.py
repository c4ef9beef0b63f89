from fractions import Fraction

import pytest

from trophurwitz.cutjoin import (
    cutjoin_step,
    evolve,
    hurwitz_connected_from_disconnected,
    hurwitz_cutjoin,
    hurwitz_disconnected,
)
from trophurwitz.exactmath import HurwitzInput, Partition, all_inputs, partitions_of
from trophurwitz.symoracle import class_representative, compose, cycle_type, hurwitz_bruteforce, transpositions


def step(parts):
    return cutjoin_step({Partition(parts): Fraction(1)})


def test_step_from_two_two():
    assert step([2, 2]) == {Partition([4]): 4, Partition([2, 1, 1]): 2}


def test_step_from_four_cycle():
    assert step([4]) == {Partition([3, 1]): 4, Partition([2, 2]): 2}


@pytest.mark.parametrize("d", range(2, 9))
def test_step_from_identity(d):
    assert step([1] * d) == {Partition([2] + [1] * (d - 2)): d * (d - 1) // 2}


@pytest.mark.parametrize("d", range(1, 9))
def test_mass_conservation(d):
    for p in partitions_of(d):
        assert sum(step(p.parts).values()) == d * (d - 1) // 2


@pytest.mark.parametrize("d", range(2, 7))
def test_step_matches_multiplication(d):
    ident = list(range(d))
    for p in partitions_of(d):
        rep = class_representative(p)
        counts = {}
        for a, b in transpositions(d):
            t = ident[:]
            t[a], t[b] = b, a
            key = cycle_type(compose(tuple(t), rep))
            counts[key] = counts.get(key, 0) + 1
        assert step(p.parts) == counts


def test_evolve_keeps_total_mass():
    # starts at eps(eta)/d! = 6/24 and gains a factor C(4, 2) per step
    hist = evolve(Partition([2, 1, 1]), 3)
    assert [sum(h.values()) for h in hist] == [Fraction(1, 4) * 6**i for i in range(4)]


def test_disconnected_examples():
    assert hurwitz_disconnected(HurwitzInput(1, Partition([4]), Partition([2, 2]))) == 14
    # s = 0: only the identity tuple, which is not transitive
    assert hurwitz_disconnected(HurwitzInput(0, Partition([1]), Partition([1]))) == 1
    two = HurwitzInput(0, Partition([1, 1]), Partition([1, 1]))
    assert hurwitz_disconnected(two) == Fraction(1, 2)
    # the identity with zero transpositions, counted without transitivity
    from trophurwitz.cutjoin import disconnected_count

    assert disconnected_count(Partition([1, 1]), Partition([1, 1]), 0) == Fraction(1, 2)


def test_connected_examples():
    def H(g, eta, nu):
        return hurwitz_connected_from_disconnected(HurwitzInput(g, Partition.parse(eta), Partition.parse(nu)))

    assert H(1, "4", "2,2") == 14
    assert H(0, "1,1", "1,1") == Fraction(1, 2)
    assert H(0, "1,1", "2") == Fraction(1, 2)


@pytest.mark.parametrize("inp", all_inputs(4, 2), ids=str)
def test_matches_bruteforce(inp):
    assert hurwitz_cutjoin(inp) == hurwitz_bruteforce(inp)
    assert hurwitz_disconnected(inp) == hurwitz_bruteforce(inp, connected=False)


@pytest.mark.parametrize("inp", all_inputs(6, 2, dmin=5), ids=str)
def test_eta_nu_symmetry(inp):
    assert hurwitz_cutjoin(inp) == hurwitz_cutjoin(inp.swapped())
