"""Directed multigraphs on the vertex set 0..n with edges pointing upward.

Parallel edges are distinguished by a copy-id, so an edge is the triple
``(tail, head, copy)``.  Graphs are immutable; every operation returns a
new graph.
"""

from __future__ import annotations

import hashlib
import json
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Edge = tuple[int, int, int]


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class MultiGraph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"n must be nonnegative, got {self.n}")
        edges = tuple(sorted(tuple(e) for e in self.edges))
        seen = set()
        for e in edges:
            t, h, c = e
            if not 0 <= t < h <= self.n:
                raise GraphError(f"edge {e} violates 0 <= tail < head <= {self.n}")
            if e in seen:
                raise GraphError(f"duplicate edge triple {e}")
            seen.add(e)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Sequence[int]]) -> MultiGraph:
        """Build from ``(tail, head)`` or ``(tail, head, multiplicity)`` items.

        Copy-ids are handed out per endpoint pair in input order.
        """
        counts: Counter = Counter()
        edges = []
        for p in pairs:
            t, h = int(p[0]), int(p[1])
            mult = int(p[2]) if len(p) > 2 else 1
            if mult < 0:
                raise GraphError(f"negative multiplicity in {tuple(p)}")
            for _ in range(mult):
                edges.append((t, h, counts[t, h]))
                counts[t, h] += 1
        return cls(n, tuple(edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n + 1)

    def pairs(self) -> list[tuple[int, int]]:
        return [(t, h) for t, h, _ in self.edges]

    def multiplicities(self) -> Counter:
        return Counter(self.pairs())

    def edge_pair_multiset(self) -> Counter:
        return self.multiplicities()

    def is_simple(self) -> bool:
        return all(m == 1 for m in self.multiplicities().values())

    def indegrees(self) -> list[int]:
        deg = [0] * (self.n + 1)
        for _, h, _ in self.edges:
            deg[h] += 1
        return deg

    def outdegrees(self) -> list[int]:
        deg = [0] * (self.n + 1)
        for t, _, _ in self.edges:
            deg[t] += 1
        return deg

    def has_edge(self, e: Edge) -> bool:
        return tuple(e) in set(self.edges)

    def fresh_copy(self, tail: int, head: int) -> int:
        used = [c for t, h, c in self.edges if t == tail and h == head]
        return max(used) + 1 if used else 0

    def with_edges(self, remove: Iterable[Edge] = (), add: Iterable[Edge] = ()) -> MultiGraph:
        remove = list(remove)
        edges = list(self.edges)
        for e in remove:
            try:
                edges.remove(tuple(e))
            except ValueError:
                raise GraphError(f"edge {e} not in graph") from None
        edges.extend(tuple(e) for e in add)
        return MultiGraph(self.n, tuple(edges))

    def key(self) -> str:
        """Stable short hash of the edge multiset (copy-ids ignored)."""
        payload = json.dumps([self.n, sorted(self.pairs())])
        return hashlib.sha1(payload.encode()).hexdigest()[:16]

    def to_json(self) -> dict:
        mult = self.multiplicities()
        return {"n": self.n, "edges": [[t, h, m] for (t, h), m in sorted(mult.items())]}

    def to_text(self) -> str:
        mult = self.multiplicities()
        lines = [str(self.n)]
        for (t, h), m in sorted(mult.items()):
            lines.append(f"{t} {h}" if m == 1 else f"{t} {h} {m}")
        return "\n".join(lines) + "\n"

    def __str__(self):
        body = ", ".join(f"({t},{h})" for t, h in self.pairs())
        return f"G[0,{self.n}]{{{body}}}"


def graph_from_json(data: dict) -> MultiGraph:
    return MultiGraph.from_pairs(int(data["n"]), data.get("edges", []))


def parse_graph_text(text: str) -> MultiGraph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty graph text")
    try:
        n = int(lines[0])
        pairs = [[int(x) for x in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed graph text: {exc}") from None
    for p in pairs:
        if len(p) not in (2, 3):
            raise GraphError(f"edge line needs 2 or 3 integers, got {p}")
    return MultiGraph.from_pairs(n, pairs)


def parse_graph(text: str) -> MultiGraph:
    """Accept the JSON form, the line form, or an inline ``0-1,1-2`` list."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return graph_from_json(json.loads(stripped))
    if "\n" not in stripped and "-" in stripped:
        pairs = []
        for tok in stripped.replace(" ", "").split(","):
            if not tok:
                continue
            ends = tok.split("-")
            if len(ends) != 2:
                raise GraphError(f"bad inline edge {tok!r}")
            pairs.append((int(ends[0]), int(ends[1])))
        n = max((h for _, h in pairs), default=0)
        return MultiGraph.from_pairs(n, pairs)
    return parse_graph_text(text)


def indeg(G: MultiGraph, v: int) -> int:
    _check_vertex(G, v)
    return sum(1 for _, h, _ in G.edges if h == v)


def outdeg(G: MultiGraph, v: int) -> int:
    _check_vertex(G, v)
    return sum(1 for t, _, _ in G.edges if t == v)


def outdeg_set(G: MultiGraph, S: Iterable[int]) -> int:
    """Number of edges leaving the vertex set ``S``."""
    S = set(S)
    return sum(1 for t, h, _ in G.edges if t in S and h not in S)


def _check_vertex(G: MultiGraph, v: int):
    if not 0 <= v <= G.n:
        raise GraphError(f"vertex {v} outside [0,{G.n}]")


@dataclass(frozen=True)
class Relabeled:
    """A graph together with the map from original labels to its vertices."""

    graph: MultiGraph
    labels: dict = field(default_factory=dict)


def tilde(G: MultiGraph) -> Relabeled:
    """Add a global source ``s`` (vertex 0) and sink ``t`` (vertex n+2).

    Original vertex ``i`` becomes ``i + 1``.
    """
    n = G.n
    s, t = 0, n + 2
    edges = [(a + 1, b + 1, c) for a, b, c in G.edges]
    edges += [(s, i + 1, 0) for i in range(n + 1)]
    edges += [(i + 1, t, 0) for i in range(n + 1)]
    labels = {"s": s, "t": t, **{i: i + 1 for i in range(n + 1)}}
    return Relabeled(MultiGraph(n + 2, tuple(edges)), labels)


def _renumber(n: int, pairs: Iterable[tuple[int, int]]) -> MultiGraph:
    return MultiGraph.from_pairs(n, sorted(pairs))


def delete_vertices(G: MultiGraph, V: Iterable[int]) -> Relabeled:
    V = set(V)
    for v in V:
        _check_vertex(G, v)
    keep = [v for v in G.vertices if v not in V]
    if not keep:
        raise GraphError("cannot delete every vertex")
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[t], pos[h], c) for t, h, c in G.edges if t in pos and h in pos]
    return Relabeled(MultiGraph(len(keep) - 1, tuple(edges)), pos)


def delete_edges(G: MultiGraph, S: Iterable[Edge]) -> MultiGraph:
    return G.with_edges(remove=S)


def contract_edge(G: MultiGraph, e: Edge) -> Relabeled:
    """Contract ``e`` and drop the loops this creates.

    The merged vertex sits at the tail's position when that keeps every edge
    pointing upward, otherwise at the head's position.
    """
    e = tuple(e)
    if e not in set(G.edges):
        raise GraphError(f"edge {e} not in graph")
    i, j, _ = e
    for merged_at, gone in ((i, j), (j, i)):
        rest = [v for v in G.vertices if v != gone]
        pos = {v: k for k, v in enumerate(rest)}
        pos[gone] = pos[merged_at]
        pairs = []
        ok = True
        for t, h, _ in G.edges:
            a, b = pos[t], pos[h]
            if a == b:
                continue
            if a > b:
                ok = False
                break
            pairs.append((a, b))
        if ok:
            return Relabeled(_renumber(len(rest) - 1, pairs), pos)
    raise GraphError(f"contracting {e} would reverse an edge (directed path through a middle vertex)")


def restrict(G: MultiGraph, i: int) -> MultiGraph:
    """The induced subgraph on ``0..i`` (written ``G[0,i]``)."""
    _check_vertex(G, i)
    return MultiGraph(i, tuple(e for e in G.edges if e[1] <= i))


def mirror(G: MultiGraph) -> MultiGraph:
    """Reflect ``(i, j) -> (n - j, n - i)``.

    A graph on ``[n+1] = {1, ..., n+1}`` is stored with every label shifted down by
    one, so this is exactly the mirror image onto ``[0, n]``.  It is an
    involution up to copy-ids, which are kept.
    """
    n = G.n
    return MultiGraph(n, tuple((n - h, n - t, c) for t, h, c in G.edges))


def increasing_reach(G: MultiGraph, i: int) -> frozenset[int]:
    """Vertices reachable from ``i`` along edges, ``i`` included."""
    _check_vertex(G, i)
    succ: dict[int, list[int]] = {}
    for t, h, _ in G.edges:
        succ.setdefault(t, []).append(h)
    seen = {i}
    queue = deque([i])
    while queue:
        v = queue.popleft()
        for w in succ.get(v, ()):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def is_forest(G: MultiGraph, vertices: Iterable[int] | None = None) -> bool:
    """True when the underlying undirected multigraph has no cycle.

    Parallel edges count as a cycle.  ``vertices`` restricts to an induced
    subgraph.
    """
    keep = set(G.vertices if vertices is None else vertices)
    parent = {v: v for v in keep}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for t, h, _ in G.edges:
        if t not in keep or h not in keep:
            continue
        a, b = find(t), find(h)
        if a == b:
            return False
        parent[a] = b
    return True


def without_source(G: MultiGraph) -> MultiGraph:
    """``G \\ 0`` kept on the same vertex set (vertex 0 becomes isolated)."""
    return MultiGraph(G.n, tuple(e for e in G.edges if e[0] != 0))


def tilde_minus_s0(G: MultiGraph) -> MultiGraph:
    """The graph ``G~ \\ {s, 0}``.

    Vertex ``p`` (0-based) stands for the original vertex ``p + 1`` for
    ``p < n`` and vertex ``n`` is the sink ``t``.  Edge ``(j, t)`` is therefore
    ``(j - 1, n, 0)``.
    """
    n = G.n
    edges = [(t - 1, h - 1, c) for t, h, c in G.edges if t != 0]
    edges += [(j - 1, n, 0) for j in range(1, n + 1)]
    return MultiGraph(n, tuple(edges))


def sink_edge(G: MultiGraph, j: int) -> Edge:
    """The edge ``(j, t)`` of :func:`tilde_minus_s0` for original vertex ``j``."""
    return (j - 1, G.n, 0)
