from collections import Counter
from fractions import Fraction
from itertools import product

from hypothesis import given, settings, strategies as st

from flowtope.flows import enumerate_flows, feasible, kostant
from flowtope.genperm import MinkowskiSpec, all_subsets, genperm_lattice_points, minkowski_to_z
from flowtope.graph import MultiGraph, mirror
from flowtope.hull import hull_membership
from flowtope.polynomial import SparsePolynomial
from flowtope.reduction import aggregated_ld, iter_leaves
from flowtope.schubert import grothendieck, inversions, pipe_dreams, reduced_pipe_dreams

SETTINGS = settings(max_examples=60, deadline=None, derandomize=True)


@st.composite
def multigraphs(draw, max_n=4, max_edges=6):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=max_edges))
    return MultiGraph.from_pairs(n, chosen)


@st.composite
def graph_and_netflow(draw):
    G = draw(multigraphs(max_n=3, max_edges=5))
    a = draw(st.lists(st.integers(-3, 3), min_size=G.n, max_size=G.n))
    return G, tuple(a) + (-sum(a),)


@SETTINGS
@given(graph_and_netflow())
def test_enumeration_count_matches_kostant(case):
    G, a = case
    flows = list(enumerate_flows(G, a))
    assert len(flows) == len(set(flows)) == kostant(G, a)
    for f in flows:
        net = [0] * (G.n + 1)
        for (t, h, _), x in zip(G.edges, f):
            net[t] += x
            net[h] -= x
        assert tuple(net) == a and min(f, default=0) >= 0


@SETTINGS
@given(graph_and_netflow())
def test_feasible_iff_positive_count(case):
    G, a = case
    assert feasible(G, a) == (kostant(G, a) > 0)


@SETTINGS
@given(multigraphs(), st.integers(0, 10**6))
def test_codim_equals_label_size(G, seed):
    for leaf, label in iter_leaves(G, f"random:{seed}"):
        assert G.num_edges - sum(leaf.indegrees()[1:]) == len(label)


@SETTINGS
@given(multigraphs(max_n=3, max_edges=5), st.integers(0, 10**6))
def test_ld_independent_of_strategy(G, seed):
    assert aggregated_ld(G, f"random:{seed}") == aggregated_ld(G, "special")


@SETTINGS
@given(multigraphs())
def test_mirror_involution(G):
    assert mirror(mirror(G)) == G


@SETTINGS
@given(st.permutations(range(1, 6)))
def test_reduced_crosses_equal_length(p):
    p = tuple(p)
    dreams = list(reduced_pipe_dreams(p))
    assert dreams and all(len(d.crosses) == inversions(p) for d in dreams)


@SETTINGS
@given(st.permutations(range(1, 6)))
def test_grothendieck_at_ones(p):
    p = tuple(p)
    assert grothendieck(p).evaluate([1] * 4) == sum(1 for _ in pipe_dreams(p))


polys = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), st.integers(-3, 3), max_size=4).map(
    lambda d: SparsePolynomial(2, d))


@SETTINGS
@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p
    assert SparsePolynomial.from_json(p.to_json()) == p


@SETTINGS
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=5),
       st.lists(st.integers(0, 4), min_size=5, max_size=5))
def test_convex_combinations_are_members(points, weights):
    weights = weights[:len(points)]
    if sum(weights) == 0:
        weights = [1] + [0] * (len(points) - 1)
    total = sum(weights)
    combo = [sum(Fraction(w) * p[i] for w, p in zip(weights, points)) / total for i in range(3)]
    if all(c.denominator == 1 for c in combo):
        assert hull_membership(tuple(int(c) for c in combo), points)
    # a point beyond the largest first coordinate is never a member
    far = (max(p[0] for p in points) + 1, 0, 0)
    assert not hull_membership(far, points)


@SETTINGS
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.just(n), st.dictionaries(st.sampled_from([I for I in all_subsets(n) if I]), st.integers(0, 2), max_size=4))))
def test_minkowski_lattice_points_by_brute_force(case):
    n, y = case
    spec = minkowski_to_z(MinkowskiSpec(n, y))
    total = spec.total
    brute = {t for t in product(range(total + 1), repeat=n) if spec.contains(t)}
    assert genperm_lattice_points(spec) == brute
