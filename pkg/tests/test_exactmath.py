import itertools
from fractions import Fraction
from math import factorial, gcd, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trophurwitz.exactmath import (
    CyclicOrderError,
    HurwitzInput,
    LinearForm,
    Partition,
    Polynomial,
    RankDeficientError,
    all_inputs,
    aut_count,
    count_linear_extensions,
    cycle_type_count,
    determinant,
    elementary_divisors,
    hurwitz_names,
    integer_kernel_basis,
    lattice_index,
    linear_extensions,
    partitions_of,
    rank,
    rational_text,
    riemann_hurwitz_s,
)
from trophurwitz.exactmath.intlinalg import mat_mul
from trophurwitz.symoracle import cycle_type

NAMES = hurwitz_names(2, 2)


def P(text, names=NAMES):
    return Polynomial.from_text(text, names)


# partitions ------------------------------------------------------------------

def test_partition_sorted_and_parsed():
    assert Partition([1, 3, 2]).parts == (3, 2, 1)
    assert Partition.parse(" 2, 2 ,1") == Partition([1, 2, 2])
    assert str(Partition([2, 2])) == "2,2"
    assert Partition([2, 2]).degree == 4 and len(Partition([2, 2])) == 2


@pytest.mark.parametrize("bad", ["", "2,,1", "0,2", "a"])
def test_partition_rejects(bad):
    with pytest.raises(ValueError):
        Partition.parse(bad)


@pytest.mark.parametrize("parts,expected", [((4,), 1), ((2, 2), 2), ((3, 1, 1, 1), 6)])
def test_aut_count(parts, expected):
    assert aut_count(Partition(parts)) == expected


def test_cycle_type_count_against_s4():
    counts = {}
    for perm in itertools.permutations(range(4)):
        key = cycle_type(perm)
        counts[key] = counts.get(key, 0) + 1
    assert counts[Partition([2, 2])] == 3
    assert cycle_type_count(Partition([4])) == 6
    assert cycle_type_count(Partition([1] * 6)) == 1
    for p in partitions_of(4):
        assert cycle_type_count(p) == counts[p]


@pytest.mark.parametrize("d", range(1, 10))
def test_class_sizes(d):
    parts = partitions_of(d)
    for p in parts:
        assert cycle_type_count(p) * aut_count(p) * prod(p) == factorial(d)
    assert sum(cycle_type_count(p) for p in parts) == factorial(d)


def test_partition_counts():
    assert [len(partitions_of(d)) for d in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


def test_riemann_hurwitz():
    assert riemann_hurwitz_s(1, Partition([4]), Partition([2, 2])) == 3
    assert riemann_hurwitz_s(0, Partition([1, 1]), Partition([1, 1])) == 2
    assert riemann_hurwitz_s(0, Partition([5]), Partition([5])) == 0
    with pytest.raises(ValueError):
        riemann_hurwitz_s(0, Partition([3]), Partition([2, 2]))
    with pytest.raises(ValueError):
        riemann_hurwitz_s(-1, Partition([3]), Partition([3]))


def test_hurwitz_input():
    inp = HurwitzInput(1, Partition([4]), Partition([2, 2]))
    assert (inp.d, inp.s, inp.k, inp.l) == (4, 3, 1, 2)
    assert inp.swapped().eta == Partition([2, 2])
    with pytest.raises(ValueError):
        HurwitzInput(-1, Partition([2]), Partition([2]))
    assert len(all_inputs(3, 0)) == 1 + 4 + 9


# polynomials -----------------------------------------------------------------

def test_evaluate():
    assert P("2*m1 - 2*n1").evaluate([3, 1, 2, 2]) == 2


def test_product_is_homogeneous():
    prod_ = P("m1 + m2") * P("n1")
    assert prod_.homogeneous_degree() == 2
    assert (prod_ + P("m1")).homogeneous_degree() is None


def test_substitute_square():
    names = ("m1", "n1", "d")
    delta_sq = Polynomial.variable(names, 2) ** 2
    out = delta_sq.substitute({2: LinearForm({0: 1, 1: -1})})
    assert out == Polynomial.from_text("m1^2 - 2*m1*n1 + n1^2", names)


def test_substitute_rejects_mismatched_rings():
    p = P("m1*n2")
    other = Polynomial.variable(("x", "y"), 0)
    with pytest.raises(ValueError):
        p.substitute({0: other})
    with pytest.raises(ValueError):
        p.substitute({0: Polynomial.variable(("x",), 0)}, target_names=("x",))


@pytest.mark.parametrize(
    "text", ["2*m1 - 2*n1", "0", "3/2*m1^2 - m2*n1 + 5", "-m1", "m1^3*n2^2 - 1/7*n1"]
)
def test_text_round_trip(text):
    assert P(text).to_text() == text


def test_text_order_is_graded_lex():
    assert (P("n1") + P("m1^2") + P("m1")).to_text() == "m1^2 + m1 + n1"


def test_linear_form():
    f = LinearForm.from_subsets(2, [1], [1, 2])
    assert f.text(NAMES) == "m1 - n1 - n2"
    assert not (f - f)
    assert f.evaluate([5, 1, 2, 1]) == 2


def test_rational_text():
    assert rational_text(Fraction(1, 2)) == "1/2"
    assert rational_text(Fraction(14)) == "14"
    assert rational_text(Fraction(-3, 6)) == "-1/2"


small = st.integers(-4, 4)
exps = st.tuples(*[st.integers(0, 2)] * 4)
polys = st.dictionaries(exps, st.fractions(min_value=-5, max_value=5, max_denominator=4), max_size=4)


@settings(max_examples=60, deadline=None)
@given(polys, st.tuples(*[small] * 4), st.tuples(*[small] * 4))
def test_evaluation_commutes_with_substitution(terms, coeffs, point):
    p = Polynomial(NAMES, terms)
    form = LinearForm(dict(enumerate(coeffs)))
    q = p.substitute({3: form})
    moved = list(point)
    moved[3] = form.evaluate(point)
    assert q.evaluate(point) == p.evaluate(moved)


@settings(max_examples=40, deadline=None)
@given(polys, polys, st.tuples(*[small] * 4))
def test_ring_operations_match_evaluation(a, b, point):
    pa, pb = Polynomial(NAMES, a), Polynomial(NAMES, b)
    assert (pa * pb).evaluate(point) == pa.evaluate(point) * pb.evaluate(point)
    assert (pa - pb).evaluate(point) == pa.evaluate(point) - pb.evaluate(point)


# integer linear algebra ------------------------------------------------------

def test_lattice_index_examples():
    assert lattice_index([[0, 2, -2, 0, 0, 0]]) == 2
    assert lattice_index([]) == 1
    assert lattice_index([[0, 1, -1, 0]]) == 1
    with pytest.raises(RankDeficientError):
        lattice_index([[0, 0, 0]])
    with pytest.raises(RankDeficientError):
        lattice_index([[1, 2], [2, 4]])


def _minor_gcd(rows):
    g = len(rows)
    out = 0
    for cols in itertools.combinations(range(len(rows[0])), g):
        sub = [[row[c] for c in cols] for row in rows]
        out = gcd(out, int(determinant(sub)))
    return out


matrices = st.integers(1, 3).flatmap(
    lambda g: st.integers(g, 5).flatmap(
        lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=g, max_size=g)
    )
)


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_lattice_index_is_gcd_of_maximal_minors(rows):
    m = _minor_gcd(rows)
    if m == 0:
        with pytest.raises(RankDeficientError):
            lattice_index(rows)
    else:
        assert lattice_index(rows) == m
        assert prod(elementary_divisors(rows)) == m


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_kernel_basis_is_saturated(rows):
    n = len(rows[0])
    basis = integer_kernel_basis(rows, n)
    assert len(basis) == n - rank(rows)
    for v in basis:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in rows)
    if basis:
        # saturated: the b x n matrix of basis vectors has maximal minors with gcd 1
        assert lattice_index([list(v) for v in basis]) == 1


def test_determinant_and_mat_mul():
    assert determinant([[2, 1], [1, 1]]) == 1
    assert determinant([[1, 2], [2, 4]]) == 0
    assert mat_mul([[1, 2]], [[3], [4]]) == [[11]]


# posets ----------------------------------------------------------------------

def test_linear_extension_examples():
    assert count_linear_extensions(4, [(0, 1), (1, 2), (2, 3)]) == 1
    assert count_linear_extensions(2, []) == 2
    assert count_linear_extensions(4, [(0, 2), (0, 1), (1, 3)]) == 3
    assert count_linear_extensions(0, []) == 1
    with pytest.raises(CyclicOrderError):
        count_linear_extensions(3, [(0, 1), (1, 2), (2, 0)])


relations = st.integers(1, 6).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=8),
    )
)


@settings(max_examples=80, deadline=None)
@given(relations)
def test_linear_extensions_match_permutations(data):
    n, rels = data
    rels = [(a, b) for a, b in rels if a < b]  # acyclic by construction
    brute = sum(
        all(perm.index(a) < perm.index(b) for a, b in rels)
        for perm in itertools.permutations(range(n))
    )
    assert count_linear_extensions(n, rels) == brute
    assert len(list(linear_extensions(n, rels))) == brute
