from collections import Counter
import pytest

from flowtope.arrays import (
    F_pair_classes, all_F, aug_image, b_vector, f_numbers, first_column, gr_graph, gr_netflow,
    level_image, psi_image, sol_enumerate, tri_array, verify_encoding_chain,
)
from flowtope.cli import parse_edges
from flowtope.flows import kostant
from flowtope.graph import GraphError
from flowtope.reduction import aggregated_ld, ld_multiset

import printed_arrays as P
from conftest import normalize_latex


def rendered(G, F_text=""):
    return tri_array(G, parse_edges(G, F_text)).render().splitlines()


def test_simple_array(example_graph):
    assert rendered(example_graph) == [normalize_latex(r) for r in P.SIMPLE_EMPTY]


def test_simple_array_with_F(example_graph):
    assert rendered(example_graph, P.SIMPLE_F_EDGES) == [normalize_latex(r) for r in P.SIMPLE_F]


def test_multigraph_array(multi_graph):
    assert rendered(multi_graph) == [normalize_latex(r) for r in P.MULTI_EMPTY]


def test_multigraph_array_with_F(multi_graph):
    assert rendered(multi_graph, P.MULTI_F_EDGES) == [normalize_latex(r) for r in P.MULTI_F]


def test_rendered_row_literal(example_graph):
    assert rendered(example_graph)[0] == "0≤a_{4,1}=a_{3,1}=a_{2,1}≤a_{1,1}=1"


def test_f_numbers():
    f = f_numbers(4, [(2, 3, 0), (2, 4, 0), (3, 4, 0)])
    assert f[2, 2] == 0 and f[3, 2] == 1 and f[4, 2] == 2 and f[4, 3] == 1


def test_b_vector(example_graph):
    assert b_vector(example_graph) == (1, 2, 1, 2, -6)
    assert b_vector(example_graph, [(2, 3, 0), (2, 4, 0)]) == (1, 0, 1, 2, -4)


def test_F_validation(example_graph):
    with pytest.raises(GraphError):
        tri_array(example_graph, [(0, 1, 0)])
    with pytest.raises(GraphError):
        tri_array(example_graph, [(1, 3, 0)])


def test_sol_path_by_hand(path2):
    A = tri_array(path2)
    got = Counter(first_column(s, 2) for s in sol_enumerate(A))
    assert got == Counter({(0, 2): 1, (1, 1): 1})


def test_sol_total_equals_leaf_count(example_graph):
    total = sum(len(sol_enumerate(tri_array(example_graph, F))) for F in all_F(example_graph))
    assert total == ld_multiset(example_graph).total()


def test_F_pair_classes_weights(multi_graph):
    total = sum(w for _, w in F_pair_classes(multi_graph))
    non_source = sum(1 for e in multi_graph.edges if e[0] != 0)
    assert total == 2 ** non_source


def test_gr_counts(example_graph, multi_graph):
    for G in (example_graph, multi_graph):
        lg = gr_graph(G)
        for F in list(all_F(G))[:6]:
            assert kostant(lg.graph, gr_netflow(G, F)) == len(sol_enumerate(tri_array(G, F)))


def test_encoding_chain(example_graph):
    for F in all_F(example_graph):
        rep = verify_encoding_chain(example_graph, F)
        assert rep.ok, rep.counterexample


def test_encoding_chain_multigraph(multi_graph):
    for F, _ in F_pair_classes(multi_graph):
        rep = verify_encoding_chain(multi_graph, F)
        assert rep.ok, rep.counterexample


def test_psi_image_matches_ld(example_graph):
    F = ((2, 3, 0),)
    assert psi_image(example_graph, F) == Counter(first_column(s, 4) for s in sol_enumerate(tri_array(example_graph, F)))


def test_aug_image_is_aggregated_ld(example_graph, multi_graph):
    for G in (example_graph, multi_graph):
        assert aug_image(G) == aggregated_ld(G)


def test_level_images_partition_ld(example_graph):
    ld = aggregated_ld(example_graph)
    m = example_graph.num_edges
    for k in range(m + 1):
        want = Counter({s: c for s, c in ld.items() if m - sum(s) == k})
        assert level_image(example_graph, k) == want
