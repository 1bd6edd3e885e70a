"""Integer flows on upward-directed multigraphs.

Netflow convention: at every vertex ``v``, outflow minus inflow equals
``a[v]``.  All routines process vertices in increasing order; the pending
inflow into later vertices is the dynamic-programming state.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .graph import Edge, MultiGraph, outdeg_set

SUBSET_LIMIT = 22


class FlowError(ValueError):
    pass


def _check_netflow(G: MultiGraph, a: Sequence[int]) -> tuple[int, ...]:
    a = tuple(int(x) for x in a)
    if len(a) != G.n + 1:
        raise FlowError(f"netflow has {len(a)} entries, graph has {G.n + 1} vertices")
    return a


def _out_edges(G: MultiGraph) -> list[list[int]]:
    out: list[list[int]] = [[] for _ in G.vertices]
    for idx, (t, _, _) in enumerate(G.edges):
        out[t].append(idx)
    return out


def compositions(total: int, caps: Sequence[int | None]) -> Iterator[tuple[int, ...]]:
    """All ways to split ``total`` over slots with optional upper bounds, lexicographically."""
    if not caps:
        if total == 0:
            yield ()
        return
    if len(caps) == 1:
        if caps[0] is None or total <= caps[0]:
            yield (total,)
        return
    room = sum(c for c in caps[1:] if c is not None) if all(c is not None for c in caps[1:]) else None
    hi = total if caps[0] is None else min(total, caps[0])
    lo = 0 if room is None else max(0, total - room)
    for x in range(lo, hi + 1):
        for rest in compositions(total - x, caps[1:]):
            yield (x,) + rest


class _FlowProblem:
    """Shared state-space machinery for counting, enumerating and minimizing."""

    def __init__(self, G: MultiGraph, a: Sequence[int], caps: Iterable[Edge] = ()):
        self.G = G
        self.a = _check_netflow(G, a)
        capset = {tuple(e) for e in caps}
        self.cap = [1 if e in capset else None for e in G.edges]
        self.out = _out_edges(G)
        self.heads = [h for _, h, _ in G.edges]

    def start(self) -> tuple[int, ...]:
        return (0,) * (self.G.n + 1)

    def moves(self, v: int, state: tuple[int, ...]):
        """Yield ``(edge values, next state)`` for the out-edges of ``v``."""
        need = self.a[v] + state[v]
        if need < 0:
            return
        edges = self.out[v]
        if not edges:
            if need == 0:
                yield (), state
            return
        for vals in compositions(need, [self.cap[i] for i in edges]):
            nxt = list(state)
            for i, x in zip(edges, vals):
                nxt[self.heads[i]] += x
            yield vals, tuple(nxt)


def kostant(G: MultiGraph, a: Sequence[int], caps: Iterable[Edge] = ()) -> int:
    """Number of integer flows with netflow ``a`` (capped edges limited to 0/1)."""
    prob = _FlowProblem(G, a, caps)
    if sum(prob.a) != 0:
        return 0
    last = G.n

    @lru_cache(maxsize=None)
    def count(v: int, state: tuple[int, ...]) -> int:
        if v > last:
            return 1
        return sum(count(v + 1, nxt) for _, nxt in prob.moves(v, state))

    return count(0, prob.start())


def enumerate_flows(G: MultiGraph, a: Sequence[int], caps: Iterable[Edge] = ()) -> Iterator[tuple[int, ...]]:
    """Every integer flow as a tuple aligned with ``G.edges``, lexicographically."""
    prob = _FlowProblem(G, a, caps)
    if sum(prob.a) != 0:
        return
    last = G.n

    @lru_cache(maxsize=None)
    def alive(v: int, state: tuple[int, ...]) -> bool:
        if v > last:
            return True
        return any(alive(v + 1, nxt) for _, nxt in prob.moves(v, state))

    values = [0] * G.num_edges

    def walk(v: int, state: tuple[int, ...]):
        if v > last:
            yield tuple(values)
            return
        for vals, nxt in prob.moves(v, state):
            if not alive(v + 1, nxt):
                continue
            for i, x in zip(prob.out[v], vals):
                values[i] = x
            yield from walk(v + 1, nxt)

    yield from walk(0, prob.start())


def min_functional(G: MultiGraph, a: Sequence[int], weights: Iterable[Edge], caps: Iterable[Edge] = ()) -> int:
    """Minimum of the summed flow over ``weights`` across all integer flows.

    Flow polytopes with integral data have integral vertices, so this is also
    the minimum over real flows.
    """
    prob = _FlowProblem(G, a, caps)
    wanted = {tuple(e) for e in weights}
    w = [1 if e in wanted else 0 for e in G.edges]
    last = G.n
    inf = float("inf")

    @lru_cache(maxsize=None)
    def best(v: int, state: tuple[int, ...]):
        if v > last:
            return 0
        out = inf
        for vals, nxt in prob.moves(v, state):
            rest = best(v + 1, nxt)
            if rest == inf:
                continue
            cost = rest + sum(w[i] * x for i, x in zip(prob.out[v], vals))
            out = min(out, cost)
        return out

    result = best(0, prob.start()) if sum(prob.a) == 0 else inf
    if result == inf:
        raise FlowError("no flow with this netflow (infeasible instance)")
    return int(result)


def closed_sets(G: MultiGraph) -> Iterator[frozenset[int]]:
    """Vertex sets with no edge leaving them."""
    if G.n + 1 > SUBSET_LIMIT:
        raise FlowError(f"subset enumeration limited to {SUBSET_LIMIT} vertices, got {G.n + 1}")
    verts = list(G.vertices)
    for r in range(len(verts) + 1):
        for S in combinations(verts, r):
            if outdeg_set(G, S) == 0:
                yield frozenset(S)


def feasible_by_cuts(G: MultiGraph, a: Sequence[int]) -> tuple[bool, frozenset | None]:
    """Subset test; returns a violating closed set when infeasible."""
    a = _check_netflow(G, a)
    if sum(a) != 0:
        return False, None
    for S in closed_sets(G):
        if sum(a[i] for i in S) > 0:
            return False, S
    return True, None


def max_flow(num_nodes: int, arcs: list[tuple[int, int, int]], s: int, t: int) -> int:
    """Edmonds-Karp maximum flow on arcs ``(u, v, capacity)``."""
    graph: list[list[int]] = [[] for _ in range(num_nodes)]
    to, cap = [], []
    for u, v, c in arcs:
        graph[u].append(len(to))
        to.append(v)
        cap.append(c)
        graph[v].append(len(to))
        to.append(u)
        cap.append(0)
    total = 0
    while True:
        parent = [-1] * num_nodes
        parent[s] = -2
        queue = deque([s])
        while queue and parent[t] == -1:
            u = queue.popleft()
            for arc in graph[u]:
                if cap[arc] > 0 and parent[to[arc]] == -1:
                    parent[to[arc]] = arc
                    queue.append(to[arc])
        if parent[t] == -1:
            return total
        push, v = None, t
        while v != s:
            arc = parent[v]
            push = cap[arc] if push is None else min(push, cap[arc])
            v = to[arc ^ 1]
        v = t
        while v != s:
            arc = parent[v]
            cap[arc] -= push
            cap[arc ^ 1] += push
            v = to[arc ^ 1]
        total += push


def feasible_by_maxflow(G: MultiGraph, a: Sequence[int]) -> bool:
    """Feasibility through the auxiliary source/sink max-flow construction."""
    a = _check_netflow(G, a)
    if sum(a) != 0:
        return False
    supply = sum(x for x in a if x > 0)
    s, t = G.n + 1, G.n + 2
    arcs = [(u, v, supply) for u, v, _ in G.edges]
    arcs += [(s, i, x) for i, x in enumerate(a) if x > 0]
    arcs += [(i, t, -x) for i, x in enumerate(a) if x < 0]
    return max_flow(G.n + 3, arcs, s, t) == supply


def feasible(G: MultiGraph, a: Sequence[int]) -> bool:
    """Nonemptiness of the flow polytope, checked by both methods."""
    by_flow = feasible_by_maxflow(G, a)
    if G.n + 1 <= SUBSET_LIMIT:
        by_cut, _ = feasible_by_cuts(G, a)
        if by_cut != by_flow:
            raise AssertionError(f"cut test ({by_cut}) and max-flow ({by_flow}) disagree")
    return by_flow
