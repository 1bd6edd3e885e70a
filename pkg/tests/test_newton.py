from fractions import Fraction
from math import factorial

import pytest

from flowtope.genperm import genperm_lattice_points, minkowski_to_z
from flowtope.graph import MultiGraph, is_forest, tilde_minus_s0
from flowtope.arrays import b_vector
from flowtope.newton import (
    ClosedFormMismatch, dilation_count, ehrhart, ehrhart_dimension, evaluate_univariate,
    full_dimensional_leaves, ld_F_counts, ld_polynomial, reduced_rd, verify_corollaries, volume,
    y_parameters, z_parameters, z_parameters_level,
)
from flowtope.scans import simple_graphs

from conftest import brute_force_flows


def test_path_ld_polynomial(path2):
    assert ld_polynomial(path2).format("t") == "t1*t2 + t2^2 - t2"


def test_single_edge_volume_and_ehrhart():
    G = MultiGraph.from_pairs(1, [(0, 1)])
    assert volume(G) == 1
    # (t+1)(t+2)/2
    assert ehrhart(G) == [Fraction(1), Fraction(3, 2), Fraction(1, 2)]
    assert [dilation_count(G, t) for t in (1, 2, 3)] == [3, 6, 10]


def test_volume_brute_force():
    G = MultiGraph.from_pairs(2, [(0, 1), (0, 2), (1, 2)])
    flows = brute_force_flows(tilde_minus_s0(G), b_vector(G))
    assert volume(G) == len(flows) == full_dimensional_leaves(G) == 2


@pytest.mark.parametrize("edges", [[(0, 1), (1, 2)], [(0, 1), (0, 2), (1, 2)], [(0, 1), (1, 2), (1, 3), (2, 3)]])
def test_ehrhart_consistency(edges):
    G = MultiGraph.from_pairs(max(h for _, h in edges), edges)
    E = ehrhart(G)
    assert evaluate_univariate(E, 0) == 1
    for t in (1, 2, 3):
        assert evaluate_univariate(E, t) == dilation_count(G, t)
    d = ehrhart_dimension(G)
    assert E[d] * factorial(d) == volume(G)


def test_path_z_and_y(path2):
    z = z_parameters(path2)
    assert (z[{1}], z[{2}], z[{1, 2}]) == (0, 1, 2)
    y = y_parameters(path2)
    assert y.spec.y == {frozenset({2}): 1, frozenset({1, 2}): 1}
    assert minkowski_to_z(y.spec) == z


def test_pitman_stanley_shape():
    # transitive closure of G minus 0 is complete on {1,2,3}
    G = MultiGraph.from_pairs(3, [(0, 1), (0, 2), (1, 2), (2, 3), (0, 3)])
    b = b_vector(G)
    y = y_parameters(G).spec.y
    assert y == {frozenset(range(k, 4)): b[k - 1] for k in range(1, 4) if b[k - 1]}


def test_genperm_theorem_example(example_graph):
    z = z_parameters(example_graph, [(2, 3, 0)])
    assert genperm_lattice_points(z) == set(ld_F_counts(example_graph, [(2, 3, 0)]))


def test_level_parameters(example_graph):
    ld = ld_polynomial(example_graph)
    for k in range(3):
        comp = ld.homogeneous_component(example_graph.num_edges - k)
        assert genperm_lattice_points(z_parameters_level(example_graph, k)) == set(comp.support())


@pytest.mark.parametrize("edges", [
    [(0, 1), (1, 2)],
    [(0, 1), (0, 2), (1, 2)],
    [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)],
])
def test_corollaries(edges):
    G = MultiGraph.from_pairs(max(h for _, h in edges), edges)
    rep = verify_corollaries(G)
    assert rep.ok, rep.counterexample


def test_negative_b_counterexample_is_reported():
    # b_2 = indeg(2) - outdeg_F(2) = -1 routes flow through vertex 2
    G = MultiGraph.from_pairs(4, [(0, 1), (1, 2), (2, 3), (2, 4)])
    F = [(2, 3, 0), (2, 4, 0)]
    with pytest.raises(ClosedFormMismatch):
        z_parameters(G, F)
    z = z_parameters(G, F, check_closed_form=False)
    assert genperm_lattice_points(z) == set(ld_F_counts(G, F)) == {(0, 0, 1, 1)}
    assert minkowski_to_z(y_parameters(G, F).spec) != z
    rep = verify_corollaries(G)
    assert not rep.ok and rep.counterexample["check"] == "closed_form"
    assert rep.checks["typey"] is False and rep.checks["genperm_F"] is True


def test_reduced_rd_forest_top_component():
    for G in simple_graphs(4):
        if G.num_edges == 0 or not is_forest(G):
            continue
        top = reduced_rd(G).homogeneous_component(G.num_edges)
        assert set(top.coefficients()) == {1}, G.to_json()
