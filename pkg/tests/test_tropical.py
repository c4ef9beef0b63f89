import json
import random
from fractions import Fraction
from math import prod

import pytest

from sample_types import (
    contracted_loop_type,
    crossed_class,
    heavy_wiener_type,
    join_split_type,
    loop_type,
    three_order_class,
    triangle_type,
)
from trophurwitz.exactmath import CyclicOrderError, HurwitzInput, Partition, all_inputs
from trophurwitz.monodromy import enumerate_monodromy_graphs, weight_cor44
from trophurwitz.tropical import (
    CombinatorialType,
    GeneralPositionError,
    InvalidCurveError,
    InvalidTypeError,
    NonRegularTypeError,
    TropicalCurveInstance,
    TypeClass,
    branch_determinant,
    branch_image,
    build_cycle_matrix,
    class_contribution,
    class_contribution_symmetric_vertices,
    class_contribution_via_multiplicity,
    classes_from_monodromy_graphs,
    cycle_lattice_index,
    enumerate_type_classes,
    expected_dimension,
    falpha_determinant,
    fiber_over_point,
    fork_count,
    linear_extension_count,
    regularity_check,
    symmetric_vertex_count,
    tropical_degree,
    type_weight,
    vertex_automorphism_count,
    wiener_count,
)

F = Fraction


def test_loop_type_matrix_and_weight():
    t = loop_type()
    assert t.genus == 1 and t.degree == (-2, -1, -1, 1, 3)
    assert build_cycle_matrix(t) == [[0, 2, -2, 0, 0, 0]]
    assert cycle_lattice_index(t) == 2
    assert symmetric_vertex_count(t) == 1
    assert wiener_count(t) == 1
    assert type_weight(t) == F(1, 2) * F(1, 2) * 2
    assert regularity_check(t) == (5, True)


def test_triangle_determinant():
    t = triangle_type()
    assert falpha_determinant(t) == 2
    assert cycle_lattice_index(t) * branch_determinant(t) == 2


def test_three_orders():
    cls = three_order_class()
    assert linear_extension_count(cls) == 3
    rng = random.Random(11)
    for _ in range(3):
        point = rng.sample(range(-50, 50), 4)
        assert fiber_over_point(cls, [F(p, 7) for p in point]) == 3


def test_branch_image_of_join_split():
    t = join_split_type()
    assert branch_image(TropicalCurveInstance(t, 0, [1])) == (0, 2)
    # scaling lengths scales the image about the root
    assert branch_image(TropicalCurveInstance(t, 5, [3])) == (5, 11)


def test_single_vertex_image():
    t = CombinatorialType(1, (), ((0, -2), (0, 1), (0, 1)))
    assert branch_image(TropicalCurveInstance(t, F(3, 2), [])) == (F(3, 2),)
    assert build_cycle_matrix(t) == []
    assert cycle_lattice_index(t) == 1


def test_heavy_wiener_weight():
    t = heavy_wiener_type()
    assert build_cycle_matrix(t) == [[0, 2, -2]]
    assert type_weight(t) == 1


def test_branch_image_independent_of_loop_path():
    t = loop_type()
    # loop equation forces equal lengths on the two parallel edges
    curve = TropicalCurveInstance(t, 1, [F(1, 2), F(1, 2), 1, 2, 3])
    h = branch_image(curve)
    # V4 reached through the other parallel edge
    other = [(0, 2), (1, 3), (2, 0)]
    assert curve.position_along(other) == h[3]
    with pytest.raises(InvalidCurveError):
        TropicalCurveInstance(t, 1, [1, 2, 1, 2, 3])
    with pytest.raises(InvalidCurveError):
        TropicalCurveInstance(t, 1, [1, 1, 0, 2, 3])


def test_contracted_loop_is_not_regular():
    t = contracted_loop_type()
    assert expected_dimension(t) == 2
    assert regularity_check(t) == (3, False)
    with pytest.raises(NonRegularTypeError):
        type_weight(t)
    with pytest.raises(NonRegularTypeError):
        cycle_lattice_index(t)


def test_invalid_types():
    with pytest.raises(InvalidTypeError, match="balancing"):
        CombinatorialType(2, ((0, 1, 2),), ((0, -2), (0, 1), (1, -1), (1, 2)))
    with pytest.raises(InvalidTypeError, match="sum"):
        CombinatorialType(1, (), ((0, -2), (0, 1), (0, 2)))
    with pytest.raises(InvalidTypeError, match="nonzero"):
        CombinatorialType(1, (), ((0, -2), (0, 2), (0, 0)))
    with pytest.raises(InvalidTypeError, match="connected"):
        CombinatorialType(2, (), ((0, -2), (0, 1), (0, 1), (1, -2), (1, 1), (1, 1)))


def test_directed_cycle_rejected():
    ends = tuple((v, d) for v in range(3) for d in (-1, 1))
    t = CombinatorialType(3, ((0, 1, 1), (1, 2, 1), (2, 0, 1)), ends)
    cls = TypeClass(t)
    with pytest.raises(CyclicOrderError):
        linear_extension_count(cls)
    with pytest.raises(CyclicOrderError):
        fiber_over_point(cls, [0, 1, 2])


def test_general_position_required():
    with pytest.raises(GeneralPositionError):
        fiber_over_point(three_order_class(), [0, 1, 1, 2])


def test_vertex_symmetry_without_twin_components():
    cls = crossed_class()
    t = cls.representative
    assert linear_extension_count(cls) == 4
    assert vertex_automorphism_count(t) == 4
    assert symmetric_vertex_count(t) == 0
    # one leveled graph carries this class, with weight 1
    assert class_contribution(cls) == 1
    assert class_contribution_symmetric_vertices(cls) == 4


@pytest.mark.parametrize(
    "g,delta,value",
    [(1, [-4, 2, 2], 14), (0, [-1, -1, 1, 1], F(1, 2)), (0, [-2, 1, 1], F(1, 2)), (0, [-3, 3], F(1, 3))],
)
def test_degree_examples(g, delta, value):
    assert tropical_degree(g, delta) == value


def test_degree_rejects_bad_delta():
    with pytest.raises(ValueError):
        tropical_degree(0, [-2, 1])
    with pytest.raises(ValueError):
        tropical_degree(0, [-2, 0, 2])


def test_worked_example_wiener_chain_class():
    i = HurwitzInput(1, Partition([4]), Partition([2, 2]))
    classes = classes_from_monodromy_graphs(enumerate_monodromy_graphs(i))
    totals = sorted(class_contribution(c) for c in classes)
    assert totals == [1, 3, 4, 6]


SMALL = [i for i in all_inputs(4, 2) if i.s > 0]


@pytest.mark.parametrize("inp", SMALL, ids=str)
def test_classes_match_grouped_graphs(inp):
    grouped = {c.certificate: c for c in classes_from_monodromy_graphs(enumerate_monodromy_graphs(inp))}
    direct = {c.certificate: c for c in enumerate_type_classes(inp)}
    assert grouped.keys() == direct.keys()
    for cert, cls in grouped.items():
        t = cls.representative
        n = linear_extension_count(cls)
        # leveled graphs in a class are the vertex orders up to vertex symmetry
        assert len(cls.source_graphs) * vertex_automorphism_count(t) == n
        assert all(g.forks == fork_count(t) for g in cls.source_graphs)
        assert class_contribution(cls) == sum(weight_cor44(g) for g in cls.source_graphs)


@pytest.mark.parametrize("inp", SMALL, ids=str)
def test_lattice_identities(inp):
    for cls in enumerate_type_classes(inp):
        t = cls.representative
        assert t.genus == inp.g and t.is_trivalent
        assert regularity_check(t)[1]
        f = falpha_determinant(t)
        assert f == prod(e.weight for e in t.edges)
        assert cycle_lattice_index(t) * branch_determinant(t) == f
        assert class_contribution_via_multiplicity(cls) == class_contribution_symmetric_vertices(cls)


@pytest.mark.parametrize("inp", [i for i in all_inputs(5, 0) if i.s > 0], ids=str)
def test_symmetric_vertices_suffice_in_genus_zero(inp):
    for cls in enumerate_type_classes(inp):
        assert class_contribution(cls) == class_contribution_symmetric_vertices(cls)


@pytest.mark.parametrize("inp", [i for i in all_inputs(4, 1) if i.s > 0], ids=str)
def test_fibers_do_not_depend_on_point(inp):
    rng = random.Random(str(inp))
    for cls in enumerate_type_classes(inp):
        n = cls.representative.n_vertices
        expected = linear_extension_count(cls)
        for _ in range(3):
            point = [F(x, rng.randint(1, 9)) for x in rng.sample(range(-200, 200), n)]
            if len(set(point)) < n:
                continue
            assert fiber_over_point(cls, point) == expected


def test_json_round_trip():
    for t in (loop_type(), triangle_type(), contracted_loop_type()):
        data = json.loads(json.dumps(t.to_json()))
        assert CombinatorialType.from_json(data) == t
    data = loop_type().to_json()
    data["genus"] = 3
    with pytest.raises(InvalidTypeError):
        CombinatorialType.from_json(data)


def test_class_certificate_ignores_labels():
    t = loop_type()
    shuffled = t.relabelled([4, 2, 0, 3, 1])
    assert shuffled.class_certificate == t.class_certificate
    assert TypeClass(shuffled).representative == TypeClass(t).representative
