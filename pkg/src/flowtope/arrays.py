"""Triangular constraint arrays and the flow graphs that encode them.

Row ``j`` of an array is a chain of variables read right to left from the
diagonal ``a_{j,j}`` down to ``a_{n,j}``.  A parallel class of ``k`` edges
``(j,i)`` gives ``k`` chained variables ``a^{(1)}_{i,j} <= ... <= a^{(k)}_{i,j}``
at position ``i``; an absent edge forces equality with the previous position.
Subsets ``F`` of non-source edges shift every variable ``a_{i,j}`` by
``f_{i,j} = #{(j,k) in F : k <= i}``.

Variables are keyed ``(i, j, m)`` with ``m`` the chain index (1-based).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Iterable, Iterator

from .flows import enumerate_flows, kostant
from .graph import Edge, GraphError, MultiGraph, restrict, sink_edge, tilde_minus_s0

Var = tuple[int, int, int]


def _validate_F(G: MultiGraph, F: Iterable[Edge]) -> tuple[Edge, ...]:
    F = tuple(sorted(tuple(e) for e in F))
    edges = set(G.edges)
    if len(set(F)) != len(F):
        raise GraphError("F lists an edge twice")
    for e in F:
        if e not in edges:
            raise GraphError(f"F member {e} is not an edge of the graph")
        if e[0] == 0:
            raise GraphError(f"F member {e} leaves the source vertex 0")
    return F


def f_numbers(n: int, F: Iterable[Edge]) -> dict[tuple[int, int], int]:
    """``f[i, j]`` for ``1 <= j <= i <= n``."""
    f = {(i, j): 0 for j in range(1, n + 1) for i in range(j, n + 1)}
    for j, k, _ in F:
        for i in range(k, n + 1):
            f[i, j] += 1
    return f


def outdeg_F(n: int, F: Iterable[Edge]) -> list[int]:
    out = [0] * (n + 1)
    for j, _, _ in F:
        out[j] += 1
    return out


def b_vector(G: MultiGraph, F: Iterable[Edge] = ()) -> tuple[int, ...]:
    """``(indeg(j) - outdeg_F(j))`` for ``j`` in ``1..n``, then ``-#E(G minus F)``."""
    F = tuple(F)
    ind = G.indegrees()
    od = outdeg_F(G.n, F)
    return tuple(ind[j] - od[j] for j in range(1, G.n + 1)) + (-(G.num_edges - len(F)),)


@dataclass(frozen=True)
class ConstraintArray:
    n: int
    simple: bool
    mult: dict  # (j, i) -> multiplicity of edge (j, i), 1 <= j < i <= n
    f: dict  # (i, j) -> f_{i,j}
    diag_const: dict  # i -> #E(G[0,i]) - sum_k f_{i,k}
    F: tuple = field(default=())

    def chain(self, i: int, j: int) -> int:
        """Number of variables at position ``i`` of row ``j``."""
        return 1 if i == j else max(1, self.mult.get((j, i), 0))

    def link(self, i: int, j: int) -> str:
        """Relation between position ``i`` and position ``i - 1`` of row ``j``."""
        return "≤" if self.mult.get((j, i), 0) else "="

    def variables(self) -> list[Var]:
        return [(i, j, m) for j in range(1, self.n + 1) for i in range(j, self.n + 1)
                for m in range(1, self.chain(i, j) + 1)]

    def row_constant(self, j: int) -> int:
        return self.f[self.n, j]

    def _name(self, i: int, j: int, m: int) -> str:
        return f"a_{{{i},{j}}}" if self.simple else f"a^{{({m})}}_{{{i},{j}}}"

    def _term(self, i: int, j: int, m: int) -> str:
        shift = self.f[i, j]
        return self._name(i, j, m) + (f"+{shift}" if shift else "")

    def render_row(self, j: int) -> str:
        parts = [str(self.row_constant(j)), "≤"]
        for i in range(self.n, j, -1):
            for m in range(1, self.chain(i, j) + 1):
                parts.append(self._term(i, j, m))
                parts.append("≤" if m < self.chain(i, j) else self.link(i, j))
        diag = self._name(j, j, 1) + f"={self.diag_const[j]}"
        diag += "".join(f"-{self._name(j, k, 1)}" for k in range(1, j))
        parts.append(diag)
        return "".join(parts)

    def render(self) -> str:
        return "\n".join(self.render_row(j) for j in range(1, self.n + 1))

    def to_json(self) -> dict:
        rows = []
        for j in range(1, self.n + 1):
            chain = []
            for i in range(self.n, j - 1, -1):
                for m in range(1, self.chain(i, j) + 1):
                    chain.append({"var": [i, j, m], "offset": self.f[i, j]})
            links = [self.link(i, j) for i in range(self.n, j, -1)]
            rows.append({"row": j, "left": self.row_constant(j), "chain": chain, "links": links,
                         "diagonal": self.diag_const[j]})
        return {"n": self.n, "F": [list(e) for e in self.F], "rows": rows}


def tri_array(G: MultiGraph, F: Iterable[Edge] = ()) -> ConstraintArray:
    F = _validate_F(G, F)
    n = G.n
    mult = {(j, i): m for (j, i), m in G.multiplicities().items() if j >= 1}
    f = f_numbers(n, F)
    diag = {i: restrict(G, i).num_edges - sum(f[i, k] for k in range(1, i)) for i in range(1, n + 1)}
    return ConstraintArray(n, G.is_simple(), mult, f, diag, F)


def _weak_chains(length: int, upper: int) -> Iterator[tuple[int, ...]]:
    """Weakly increasing tuples of nonnegative integers bounded by ``upper``."""
    if length == 0:
        yield ()
        return

    def rec(prefix: tuple[int, ...], lo: int):
        if len(prefix) == length:
            yield prefix
            return
        for x in range(lo, upper + 1):
            yield from rec(prefix + (x,), x)

    yield from rec((), 0)


def sol_enumerate(A: ConstraintArray) -> list[dict[Var, int]]:
    """All nonnegative integer solutions, sorted by their values in variable order."""
    n = A.n
    if n == 0:
        return [{}]
    sols: list[dict[Var, int]] = []

    def stage(i: int, tops: dict[int, int], acc: dict[Var, int]):
        if i > n:
            sols.append(dict(acc))
            return
        options = []
        for j in range(1, i):
            bound = tops[j] - A.f[i, j]
            k = A.mult.get((j, i), 0)
            if k == 0:
                options.append([(bound,)] if bound >= 0 else [])
            else:
                options.append(list(_weak_chains(k, bound)) if bound >= 0 else [])
        for choice in product(*options):
            used = sum(c[0] + A.f[i, j] for j, c in zip(range(1, i), choice))
            diag = A.diag_const[i] + sum(A.f[i, k] for k in range(1, i)) - used
            if diag < 0:
                continue
            new_acc = dict(acc)
            new_tops = {}
            for j, c in zip(range(1, i), choice):
                for m, x in enumerate(c, start=1):
                    new_acc[i, j, m] = x
                new_tops[j] = c[0] + A.f[i, j]
            new_acc[i, i, 1] = diag
            new_tops[i] = diag
            stage(i + 1, new_tops, new_acc)

    stage(1, {}, {})
    order = A.variables()
    sols.sort(key=lambda s: tuple(s[v] for v in order))
    return sols


def first_column(sol: dict[Var, int], n: int | None = None) -> tuple[int, ...]:
    if n is None:
        n = max((i for i, _, _ in sol), default=0)
    return tuple(sol[n, j, 1] for j in range(1, n + 1))


def F_pair_classes(G: MultiGraph) -> Iterator[tuple[tuple[Edge, ...], int]]:
    """One representative ``F`` per multiset of endpoint pairs, with its copy count."""
    classes = sorted((p, m) for p, m in G.multiplicities().items() if p[0] != 0)
    for counts in product(*[range(m + 1) for _, m in classes]):
        F = []
        weight = 1
        for ((j, i), m), r in zip(classes, counts):
            copies = sorted(c for t, h, c in G.edges if (t, h) == (j, i))
            F.extend((j, i, c) for c in copies[:r])
            weight *= comb(m, r)
        yield tuple(sorted(F)), weight


def all_F(G: MultiGraph) -> Iterator[tuple[Edge, ...]]:
    """Every subset of non-source edges (copies distinguished)."""
    pool = [e for e in G.edges if e[0] != 0]
    for mask in range(1 << len(pool)):
        yield tuple(e for b, e in enumerate(pool) if mask >> b & 1)


def sol_first_columns_by_F(G: MultiGraph) -> dict[tuple[tuple[int, int], ...], Counter]:
    """``rho(Sol(F))`` summed over all ``F`` sharing the same endpoint pairs."""
    out = {}
    for F, weight in F_pair_classes(G):
        cols: Counter = Counter()
        for sol in sol_enumerate(tri_array(G, F)):
            cols[first_column(sol, G.n)] += weight
        if cols:
            out[tuple((t, h) for t, h, _ in F)] = cols
    return out


@dataclass(frozen=True)
class LabeledGraph:
    """A flow graph whose edges carry names, plus optional unit-capacity edges."""

    graph: MultiGraph
    labels: dict  # edge triple -> label tuple
    vertex_names: tuple = ()
    caps: frozenset = frozenset()

    def edges_labeled(self, kind: str) -> list[Edge]:
        return [e for e in self.graph.edges if self.labels[e][0] == kind]


def gr_graph(G: MultiGraph) -> LabeledGraph:
    """The graph whose flows encode the solutions of the constraint arrays.

    Vertices ``v_{i,j}`` come in column-major order followed by ``v_{n+1,n+1}``.
    Position ``i`` of column ``j`` holds a chain of vertices ``v^{(k)}, ..., v^{(1)}``
    when ``(j,i)`` has multiplicity ``k``; the a-edges walk down that chain
    and each ``v^{(m)}`` sends a z-edge to ``v_{i,i}``.
    """
    n = G.n
    mult = {(j, i): m for (j, i), m in G.multiplicities().items() if j >= 1}
    names: list[tuple[int, int, int]] = []
    for j in range(1, n + 1):
        for i in range(j, n + 1):
            k = 1 if i == j else max(1, mult.get((j, i), 0))
            names.extend((i, j, m) for m in range(k, 0, -1))
    names.append((n + 1, n + 1, 1))
    index = {v: p for p, v in enumerate(names)}
    last = len(names) - 1

    def top(i: int, j: int) -> int:
        if i > n:
            return last
        k = 1 if i == j else max(1, mult.get((j, i), 0))
        return index[i, j, k]

    labels = {}
    edges = []

    def add(u: int, v: int, label):
        copy = sum(1 for e in edges if e[0] == u and e[1] == v)
        edges.append((u, v, copy))
        labels[u, v, copy] = label

    for j in range(1, n + 1):
        for i in range(j, n + 1):
            k = 1 if i == j else max(1, mult.get((j, i), 0))
            for m in range(k, 1, -1):
                add(index[i, j, m], index[i, j, m - 1], ("a", i, j, m))
            add(index[i, j, 1], top(i + 1, j), ("a", i, j, 1))
            if i > j:
                for m in range(1, mult.get((j, i), 0) + 1):
                    add(index[i, j, m], index[i, i, 1], ("z", i, j, m))
    return LabeledGraph(MultiGraph(last, tuple(edges)), labels, tuple(names))


def gr_netflow(G: MultiGraph, F: Iterable[Edge] = ()) -> tuple[int, ...]:
    """Netflow on :func:`gr_graph`, aligned with its vertex order."""
    F = _validate_F(G, F)
    n = G.n
    f = f_numbers(n, F)
    ind = G.indegrees()
    names = gr_graph(G).vertex_names
    out = []
    seen_top = set()
    for i, j, m in names:
        if i == n + 1:
            out.append(-(G.num_edges - len(F)))
        elif i == j:
            out.append(ind[j])
        elif (i, j) not in seen_top:
            seen_top.add((i, j))
            out.append(f[i - 1, j] - f[i, j])
        else:
            out.append(0)
    return tuple(out)


def gr_projection(lg: LabeledGraph, flow: tuple[int, ...]) -> dict[Var, int]:
    return {lg.labels[e][1:]: x for e, x in zip(lg.graph.edges, flow) if lg.labels[e][0] == "a"}


def psi(G: MultiGraph, flow: tuple[int, ...]) -> tuple[int, ...]:
    """Values on the edges ``(j, t)`` of ``tilde_minus_s0(G)``."""
    H = tilde_minus_s0(G)
    pos = {e: p for p, e in enumerate(H.edges)}
    return tuple(flow[pos[sink_edge(G, j)]] for j in range(1, G.n + 1))


def psi_image(G: MultiGraph, F: Iterable[Edge] = ()) -> Counter:
    H = tilde_minus_s0(G)
    return Counter(psi(G, fl) for fl in enumerate_flows(H, b_vector(G, tuple(F))))


@dataclass
class EncodingReport:
    ok: bool
    sol_count: int
    gr_count: int
    tilde_count: int
    counterexample: dict | None = None

    def to_json(self) -> dict:
        return {"ok": self.ok, "sol": self.sol_count, "gr": self.gr_count,
                "tilde": self.tilde_count, "counterexample": self.counterexample}


def verify_encoding_chain(G: MultiGraph, F: Iterable[Edge] = ()) -> EncodingReport:
    F = _validate_F(G, F)
    sols = sol_enumerate(tri_array(G, F))
    lg = gr_graph(G)
    a = gr_netflow(G, F)
    gr_count = kostant(lg.graph, a)
    tilde_count = kostant(tilde_minus_s0(G), b_vector(G, F))
    report = EncodingReport(True, len(sols), gr_count, tilde_count)
    base = {"graph": G.to_json(), "F": [list(e) for e in F]}
    if not len(sols) == gr_count == tilde_count:
        report.ok = False
        report.counterexample = {**base, "reason": "counts differ"}
        return report
    as_rows = Counter(tuple(sorted(s.items())) for s in sols)
    from_flows = Counter(tuple(sorted(gr_projection(lg, fl).items())) for fl in enumerate_flows(lg.graph, a))
    if as_rows != from_flows:
        report.ok = False
        report.counterexample = {**base, "reason": "solutions differ from Gr flow projections"}
        return report
    rho = Counter(first_column(s, G.n) for s in sols)
    image = psi_image(G, F)
    if rho != image:
        seq = sorted(set(rho) ^ set(image) or set(rho))[0]
        report.ok = False
        report.counterexample = {**base, "reason": "first columns differ from psi image",
                                 "sequence": list(seq), "rho": rho.get(seq, 0), "psi": image.get(seq, 0)}
    return report


def aug_graph(G: MultiGraph) -> LabeledGraph:
    """Vertices ``1..n`` at positions ``0..n-1`` and ``t`` at position ``n``."""
    n = G.n
    labels, edges = {}, []
    for j in range(1, n + 1):
        labels[j - 1, n, 0] = ("a", j)
        edges.append((j - 1, n, 0))
    ycopy = Counter()
    for t, h, c in G.edges:
        if t == 0:
            continue
        labels[t - 1, h - 1, c] = ("z", t, h, c)
        edges.append((t - 1, h - 1, c))
        ycopy[t] += 1
        y = (t - 1, n, ycopy[t])
        labels[y] = ("y", t, h, c)
        edges.append(y)
    caps = frozenset(e for e in edges if labels[e][0] == "y")
    names = tuple(range(1, n + 1)) + ("t",)
    return LabeledGraph(MultiGraph(n, tuple(edges)), labels, names, caps)


def level_graph(G: MultiGraph, k: int) -> LabeledGraph:
    """Vertices ``1..n+1`` at positions ``0..n`` and ``t`` at position ``n+1``."""
    if k < 0:
        raise ValueError(f"level k must be nonnegative, got {k}")
    n = G.n
    labels, edges = {}, []
    for j in range(1, n + 1):
        labels[j - 1, n + 1, 0] = ("a", j)
        edges.append((j - 1, n + 1, 0))
    ycopy = Counter()
    for t, h, c in G.edges:
        if t == 0:
            continue
        labels[t - 1, h - 1, c] = ("z", t, h, c)
        edges.append((t - 1, h - 1, c))
        y = (t - 1, n, ycopy[t])
        ycopy[t] += 1
        labels[y] = ("y", t, h, c)
        edges.append(y)
    caps = frozenset(e for e in edges if labels[e][0] == "y")
    names = tuple(range(1, n + 2)) + ("t",)
    return LabeledGraph(MultiGraph(n + 1, tuple(edges)), labels, names, caps)


def aug_netflow(G: MultiGraph) -> tuple[int, ...]:
    return b_vector(G)


def level_netflow(G: MultiGraph, k: int) -> tuple[int, ...]:
    if k < 0:
        raise ValueError(f"level k must be nonnegative, got {k}")
    ind = G.indegrees()
    return tuple(ind[1:]) + (-k, k - G.num_edges)


def a_projection(lg: LabeledGraph, flow: tuple[int, ...], n: int) -> tuple[int, ...]:
    vals = {lg.labels[e][1]: x for e, x in zip(lg.graph.edges, flow) if lg.labels[e][0] == "a"}
    return tuple(vals[j] for j in range(1, n + 1))


def aug_image(G: MultiGraph) -> Counter:
    lg = aug_graph(G)
    return Counter(a_projection(lg, fl, G.n) for fl in enumerate_flows(lg.graph, aug_netflow(G), lg.caps))


def level_image(G: MultiGraph, k: int) -> Counter:
    lg = level_graph(G, k)
    return Counter(a_projection(lg, fl, G.n) for fl in enumerate_flows(lg.graph, level_netflow(G, k), lg.caps))
