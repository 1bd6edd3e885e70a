"""Left/right-degree polynomials, their Newton polytopes, volume and Ehrhart data."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .arrays import (
    F_pair_classes, _validate_F, all_F, aug_image, b_vector, first_column, level_graph,
    level_netflow, sol_enumerate, tri_array,
)
from .flows import FlowError, feasible, kostant, min_functional
from .genperm import (
    GenPermSpec, MinkowskiSpec, all_subsets, genperm_lattice_points, minkowski_to_z,
)
from .graph import MultiGraph, increasing_reach, is_forest, mirror, sink_edge, tilde, tilde_minus_s0
from .hull import hull_membership
from .polynomial import SparsePolynomial
from .reduction import aggregated_ld
from .snp import box_candidates


def _signed_poly(n: int, counts: Counter, num_edges: int) -> SparsePolynomial:
    return SparsePolynomial(n, {seq: m * (-1) ** (num_edges - sum(seq)) for seq, m in counts.items()})


def ld_counts(G: MultiGraph) -> Counter:
    return aggregated_ld(G, "special")


def ld_polynomial(G: MultiGraph) -> SparsePolynomial:
    return _signed_poly(G.n, ld_counts(G), G.num_edges)


def ld_component(G: MultiGraph, k: int) -> SparsePolynomial:
    return ld_polynomial(G).homogeneous_component(G.num_edges - k)


def ld_F_counts(G: MultiGraph, F) -> Counter:
    """The multiset ``LD(G, F)`` as first columns of the array solutions."""
    F = _validate_F(G, F)
    return Counter(first_column(s, G.n) for s in sol_enumerate(tri_array(G, F)))


def ld_F_polynomial(G: MultiGraph, F) -> SparsePolynomial:
    return _signed_poly(G.n, ld_F_counts(G, F), G.num_edges)


def rd_polynomial(G: MultiGraph) -> SparsePolynomial:
    """``R_G(t_1..t_n) = L_{G*}(t_n..t_1)`` for ``G`` on ``[n+1]`` stored shifted by one."""
    return ld_polynomial(mirror(G)).reversed_variables()


def active_variables(G: MultiGraph) -> list[int]:
    """1-based variables of ``R_G``: vertices with positive outdegree."""
    out = G.outdegrees()
    return [v + 1 for v in range(G.n) if out[v] > 0]


def reduced_rd(G: MultiGraph) -> SparsePolynomial:
    keep = active_variables(G)
    R = rd_polynomial(G)
    for e in R.terms:
        for i, x in enumerate(e, start=1):
            if x and i not in keep:
                raise AssertionError(f"variable t{i} of a zero-outdegree vertex occurs in R_G")
    return R.remap({i: keep.index(i) + 1 for i in keep}, len(keep))


class ClosedFormMismatch(AssertionError):
    def __init__(self, I, by_flow, closed):
        super().__init__(f"z_{sorted(I)}: min-flow value {by_flow} differs from closed form {closed}")
        self.I, self.by_flow, self.closed = I, by_flow, closed


def closed_set_part(G: MultiGraph, I: frozenset) -> frozenset:
    """The largest subset of ``I`` with no edge leaving it."""
    return frozenset(i for i in I if increasing_reach(G, i) <= I)


def z_closed_form(G: MultiGraph, F=()) -> dict[frozenset, int]:
    b = b_vector(G, tuple(F))
    return {I: sum(b[i - 1] for i in closed_set_part(G, I)) for I in all_subsets(G.n)}


def flow_feasible_F(G: MultiGraph, F=()) -> bool:
    return feasible(tilde_minus_s0(G), b_vector(G, tuple(F)))


def z_parameters(G: MultiGraph, F=(), check_closed_form: bool = True) -> GenPermSpec:
    """``z_I = min sum_{i in I} f(i,t)`` over flows on ``G~ minus {s,0}`` with netflow ``b^F``."""
    F = _validate_F(G, F)
    H = tilde_minus_s0(G)
    b = b_vector(G, F)
    if not feasible(H, b):
        raise FlowError(f"no flow on the sink graph with netflow {list(b)}")
    z = {}
    for I in all_subsets(G.n):
        z[I] = min_functional(H, b, [sink_edge(G, i) for i in I]) if I else 0
    if check_closed_form:
        closed = z_closed_form(G, F)
        for I in all_subsets(G.n):
            if closed[I] != z[I]:
                raise ClosedFormMismatch(I, z[I], closed[I])
    return GenPermSpec(G.n, z)


def z_parameters_level(G: MultiGraph, k: int) -> GenPermSpec:
    lg = level_graph(G, k)
    a = level_netflow(G, k)
    if kostant(lg.graph, a, lg.caps) == 0:
        raise FlowError(f"no capacitated flow at level k={k}")
    z = {}
    for I in all_subsets(G.n):
        weights = [e for e in lg.graph.edges if lg.labels[e][0] == "a" and lg.labels[e][1] in I]
        z[I] = min_functional(lg.graph, a, weights, lg.caps) if I else 0
    return GenPermSpec(G.n, z)


def closure_lattice(G: MultiGraph) -> list[frozenset]:
    return [J for J in all_subsets(G.n) if closed_set_part(G, J) == J]


@dataclass
class YParameters:
    spec: MinkowskiSpec
    violations: list = field(default_factory=list)


def y_parameters(G: MultiGraph, F=()) -> YParameters:
    """Minkowski coefficients read off the join-irreducibles of the closed-set lattice."""
    F = _validate_F(G, F)
    b = b_vector(G, F)
    L = closure_lattice(G)
    y = {}
    violations = []
    for J in L:
        if not J:
            continue
        below = [K for K in L if K < J]
        covers = [K for K in below if not any(K < M for M in below)]
        if len(covers) != 1:
            continue
        diff = J - covers[0]
        if len(diff) != 1:
            violations.append({"J": sorted(J), "covers": sorted(covers[0])})
            continue
        (k,) = diff
        y[J] = b[k - 1]
    return YParameters(MinkowskiSpec(G.n, y), violations)


def volume(G: MultiGraph) -> int:
    """Normalized volume of the flow polytope of ``G~``."""
    return kostant(tilde_minus_s0(G), b_vector(G))


def face_counts(G: MultiGraph) -> dict[int, int]:
    """``#F -> sum of K(b^F)`` over all ``F`` of that size."""
    out: Counter = Counter()
    H = tilde_minus_s0(G)
    for F, weight in F_pair_classes(G):
        out[len(F)] += weight * kostant(H, b_vector(G, F))
    return dict(out)


def _binomial_poly(i: int) -> list[Fraction]:
    """Coefficients of ``C(t+i, i)`` in ``t``, lowest degree first."""
    poly = [Fraction(1)]
    for r in range(1, i + 1):
        # multiply by (t + r) / r
        nxt = [Fraction(0)] * (len(poly) + 1)
        for d, c in enumerate(poly):
            nxt[d] += c
            nxt[d + 1] += c / r
        poly = nxt
    return poly


def ehrhart_dimension(G: MultiGraph) -> int:
    return G.num_edges + G.n


def ehrhart(G: MultiGraph) -> list[Fraction]:
    """Ehrhart polynomial of the flow polytope of ``G~``, lowest degree first."""
    d = ehrhart_dimension(G)
    counts = face_counts(G)
    coeffs = [Fraction(0)] * (d + 1)
    for i in range(d + 1):
        fi = counts.get(d - i, 0)
        if not fi:
            continue
        sign = (-1) ** (d + i)
        for deg, c in enumerate(_binomial_poly(i)):
            coeffs[deg] += sign * fi * c
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def evaluate_univariate(coeffs: list[Fraction], t) -> Fraction:
    return sum((c * Fraction(t) ** k for k, c in enumerate(coeffs)), Fraction(0))


def dilation_count(G: MultiGraph, t: int) -> int:
    """Integer points of the ``t``-th dilate of the flow polytope of ``G~``."""
    Gt = tilde(G).graph
    a = [0] * (Gt.n + 1)
    a[0], a[-1] = t, -t
    return kostant(Gt, a)


def full_dimensional_leaves(G: MultiGraph) -> int:
    return sum(m for seq, m in ld_counts(G).items() if sum(seq) == G.num_edges)


@dataclass
class CorollaryReport:
    ok: bool
    checks: dict = field(default_factory=dict)
    counterexample: dict | None = None

    def fail(self, name: str, detail: dict):
        self.checks[name] = False
        if self.ok:
            self.ok = False
            self.counterexample = {"check": name, **detail}

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": self.checks, "counterexample": self.counterexample}


def slice_points(support: list[tuple[int, ...]], level: int) -> set[tuple[int, ...]]:
    """Integer points of ``conv(support)`` whose coordinates sum to ``level``."""
    pts = sorted(set(support))
    out = set()
    for q in box_candidates(pts):
        if sum(q) == level and (q in set(pts) or hull_membership(q, pts)):
            out.add(q)
    return out


def verify_corollaries(G: MultiGraph) -> CorollaryReport:
    """Run the generalized-permutahedron statements for ``G`` and every ``F`` and level."""
    rep = CorollaryReport(True)
    base = {"graph": G.to_json()}
    ld = ld_counts(G)
    m = G.num_edges
    for name in ("supermodular", "genperm_F", "closed_form", "typey", "levels", "hyperpl",
                 "cap", "latticeptenum", "volume_leaves"):
        rep.checks[name] = True

    # per-F statements
    for F in all_F(G):
        Fl = [list(e) for e in F]
        if not flow_feasible_F(G, F):
            if ld_F_counts(G, F):
                rep.fail("genperm_F", {**base, "F": Fl, "reason": "LD(G,F) nonempty but infeasible"})
            continue
        try:
            spec = z_parameters(G, F, check_closed_form=False)
        except FlowError as exc:
            rep.fail("genperm_F", {**base, "F": Fl, "reason": str(exc)})
            continue
        bad = spec.supermodular_violation()
        if bad is not None:
            rep.fail("supermodular", {**base, "F": Fl, "I": sorted(bad[0]), "J": sorted(bad[1])})
            continue
        closed = z_closed_form(G, F)
        diff = [I for I in all_subsets(G.n) if closed[I] != spec[I]]
        if diff:
            rep.fail("closed_form", {**base, "F": Fl, "I": sorted(diff[0]),
                                     "min_flow": spec[diff[0]], "closed": closed[diff[0]]})
        pts = genperm_lattice_points(spec)
        seqs = set(ld_F_counts(G, F))
        if pts != seqs:
            q = sorted(pts ^ seqs)[0]
            rep.fail("genperm_F", {**base, "F": Fl, "point": list(q), "in_polytope": q in pts})
        ys = y_parameters(G, F)
        if ys.violations:
            rep.fail("typey", {**base, "F": Fl, "violations": ys.violations})
        else:
            zy = minkowski_to_z(ys.spec)
            diff = [I for I in all_subsets(G.n) if zy[I] != spec[I]]
            if diff:
                rep.fail("typey", {**base, "F": Fl, "I": sorted(diff[0]), "from_y": zy[diff[0]], "z": spec[diff[0]]})

    # homogeneous components and hyperplane slices
    support = sorted(ld)
    by_level: dict[int, set] = {}
    for seq in ld:
        by_level.setdefault(m - sum(seq), set()).add(seq)
    nonsource = sum(1 for e in G.edges if e[0] != 0)
    level0 = None
    for k in range(nonsource + 1):
        lg = level_graph(G, k)
        has_flow = kostant(lg.graph, level_netflow(G, k), lg.caps) > 0
        want = by_level.get(k, set())
        if not has_flow:
            if want:
                rep.fail("levels", {**base, "k": k, "reason": "support present but no level flow"})
            continue
        spec = z_parameters_level(G, k)
        bad = spec.supermodular_violation()
        if bad is not None:
            rep.fail("supermodular", {**base, "k": k, "I": sorted(bad[0]), "J": sorted(bad[1])})
            continue
        pts = genperm_lattice_points(spec)
        if k == 0:
            level0 = pts
        if pts != want:
            q = sorted(pts ^ want)[0]
            rep.fail("levels", {**base, "k": k, "point": list(q)})
        if support and slice_points(support, m - k) != pts:
            rep.fail("hyperpl", {**base, "k": k})

    if aug_image(G) != ld:
        rep.fail("cap", {**base, "reason": "capacitated flow projections differ from LD(G)"})

    vol = volume(G)
    if vol != full_dimensional_leaves(G):
        rep.fail("volume_leaves", {**base, "volume": vol, "leaves": full_dimensional_leaves(G)})

    if is_forest(G):
        top = {seq: c for seq, c in ld.items() if sum(seq) == m}
        if any(c != 1 for c in top.values()):
            rep.fail("latticeptenum", {**base, "reason": "top component has a coefficient other than 1"})
        if level0 is not None and vol != len(level0):
            rep.fail("latticeptenum", {**base, "volume": vol, "lattice_points": len(level0)})
    return rep
