"""Reduction trees and left-degree sequence multisets.

A reduction at the path ``(i,j), (j,k)`` replaces a graph by three graphs:

* ``G1``: drop ``(j,k)``, add ``(i,k)``
* ``G2``: drop ``(i,j)``, add ``(i,k)``
* ``G3``: drop both, add ``(i,k)``

Repeating until no vertex has both incoming and outgoing edges gives a
reduction tree.  The leaves' in-degree vectors on ``1..n`` form the
left-degree multiset, which does not depend on the order of reductions.
"""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from .graph import Edge, GraphError, MultiGraph

Strategy = Callable[[MultiGraph], tuple[Edge, Edge]]


def potential(G: MultiGraph) -> int:
    return sum(h - t for t, h, _ in G.edges)


def is_leaf(G: MultiGraph) -> bool:
    ind, outd = G.indegrees(), G.outdegrees()
    return not any(ind[v] and outd[v] for v in G.vertices)


def reducible_pairs(G: MultiGraph) -> list[tuple[Edge, Edge]]:
    """Every ``(e1, e2)`` with ``e1 = (i,j,_)`` and ``e2 = (j,k,_)``."""
    into: dict[int, list[Edge]] = {}
    for e in G.edges:
        into.setdefault(e[1], []).append(e)
    return [(e1, e2) for e2 in G.edges for e1 in into.get(e2[0], ())]


def _path_triples(G: MultiGraph) -> list[tuple[int, int, int]]:
    """Distinct ``(i, j, k)`` endpoint patterns of reducible pairs."""
    return sorted({(e1[0], e1[1], e2[1]) for e1, e2 in reducible_pairs(G)})


def _lowest_copies(G: MultiGraph, i: int, j: int, k: int) -> tuple[Edge, Edge]:
    e1 = min(e for e in G.edges if e[0] == i and e[1] == j)
    e2 = min(e for e in G.edges if e[0] == j and e[1] == k)
    return e1, e2


def special_strategy(G: MultiGraph) -> tuple[Edge, Edge]:
    """Reduce into the lowest possible head first, longest edges first.

    This reproduces the vertex-by-vertex construction of the special tree:
    every edge with a larger head is untouched while the current head is
    being processed.
    """
    i, j, k = min(_path_triples(G), key=lambda p: (p[2], p[1], p[0]))
    return _lowest_copies(G, i, j, k)


def lex_strategy(G: MultiGraph) -> tuple[Edge, Edge]:
    return _lowest_copies(G, *min(_path_triples(G)))


def rightmost_strategy(G: MultiGraph) -> tuple[Edge, Edge]:
    return _lowest_copies(G, *max(_path_triples(G)))


def random_strategy(seed: int) -> Strategy:
    """A seeded choice that depends only on ``seed`` and the graph's edge pairs."""

    def choose(G: MultiGraph) -> tuple[Edge, Edge]:
        triples = _path_triples(G)
        digest = hashlib.sha256(f"{seed}:{sorted(G.pairs())}".encode()).digest()
        return _lowest_copies(G, *triples[int.from_bytes(digest[:8], "big") % len(triples)])

    choose.__name__ = f"random_{seed}"
    return choose


STRATEGIES: dict[str, Strategy] = {
    "special": special_strategy,
    "lex": lex_strategy,
    "rightmost": rightmost_strategy,
}


def get_strategy(name: str) -> Strategy:
    if name in STRATEGIES:
        return STRATEGIES[name]
    if name.startswith("random"):
        _, _, seed = name.partition(":")
        return random_strategy(int(seed or 0))
    raise ValueError(f"unknown strategy {name!r}; use special, lex, rightmost or random:SEED")


def reduce(G: MultiGraph, e1: Edge, e2: Edge, copy_floor: int = 0) -> tuple[MultiGraph, MultiGraph, MultiGraph]:
    """Apply one reduction; the new edge ``(i,k)`` gets a copy-id unused in ``G``.

    ``copy_floor`` keeps new copy-ids above a bound, which lets a tree tell
    created edges apart from edges of its root.
    """
    e1, e2 = tuple(e1), tuple(e2)
    edges = set(G.edges)
    if e1 not in edges or e2 not in edges:
        raise GraphError(f"reduction edges {e1}, {e2} must both be in the graph")
    i, j = e1[0], e1[1]
    if e2[0] != j:
        raise GraphError(f"edges {e1} and {e2} do not form a path i -> j -> k")
    k = e2[1]
    new = (i, k, max(G.fresh_copy(i, k), copy_floor))
    g1 = G.with_edges(remove=[e2], add=[new])
    g2 = G.with_edges(remove=[e1], add=[new])
    g3 = G.with_edges(remove=[e1, e2], add=[new])
    p = potential(G)
    assert potential(g1) > p and potential(g2) > p and g3.num_edges == G.num_edges - 1
    return g1, g2, g3


def left_degree(G: MultiGraph) -> tuple[int, ...]:
    return tuple(G.indegrees()[1:])


@dataclass
class TreeNode:
    graph: MultiGraph
    parent: int | None = None
    reduction: tuple[Edge, Edge] | None = None
    children: tuple[int, ...] = ()
    label: Edge | None = None  # set on a G3 child: the reduced edge (j,k)


@dataclass
class ReductionTree:
    root: MultiGraph
    nodes: list[TreeNode] = field(default_factory=list)

    def leaves(self) -> list[int]:
        return [idx for idx, node in enumerate(self.nodes) if not node.children]

    def path_labels(self, idx: int) -> tuple[Edge, ...]:
        labels = []
        while idx is not None:
            node = self.nodes[idx]
            if node.label is not None:
                labels.append(node.label)
            idx = node.parent
        return tuple(sorted(labels))

    def to_json(self) -> dict:
        out = []
        for node in self.nodes:
            out.append({
                "graph": node.graph.key(),
                "edges": [list(e) for e in node.graph.edges],
                "reduction": [list(e) for e in node.reduction] if node.reduction else None,
                "children": list(node.children),
                "label": list(node.label) if node.label else None,
            })
        return {"root": self.root.to_json(), "nodes": out}


def _copy_floor(G: MultiGraph) -> int:
    return 1 + max((c for _, _, c in G.edges), default=-1)


def build_tree(G: MultiGraph, strategy: Strategy | str = "special", max_nodes: int = 10**6) -> ReductionTree:
    """Materialize a full reduction tree."""
    if isinstance(strategy, str):
        strategy = get_strategy(strategy)
    floor = _copy_floor(G)
    tree = ReductionTree(G, [TreeNode(G)])
    stack = [0]
    while stack:
        idx = stack.pop()
        node = tree.nodes[idx]
        if is_leaf(node.graph):
            continue
        e1, e2 = strategy(node.graph)
        kids = reduce(node.graph, e1, e2, floor)
        node.reduction = (e1, e2)
        first = len(tree.nodes)
        for pos, child in enumerate(kids):
            tree.nodes.append(TreeNode(child, idx, label=e2 if pos == 2 else None))
        node.children = (first, first + 1, first + 2)
        if len(tree.nodes) > max_nodes:
            raise RuntimeError(f"reduction tree exceeds {max_nodes} nodes")
        stack.extend(reversed(node.children))
    return tree


def iter_leaves(G: MultiGraph, strategy: Strategy | str = "special") -> Iterator[tuple[MultiGraph, tuple[Edge, ...]]]:
    """Stream ``(leaf, F-label)`` pairs without keeping the tree."""
    if isinstance(strategy, str):
        strategy = get_strategy(strategy)
    floor = _copy_floor(G)
    stack: list[tuple[MultiGraph, tuple[Edge, ...]]] = [(G, ())]
    while stack:
        H, labels = stack.pop()
        if is_leaf(H):
            yield H, tuple(sorted(labels))
            continue
        e1, e2 = strategy(H)
        g1, g2, g3 = reduce(H, e1, e2, floor)
        stack.append((g3, labels + (e2,)))
        stack.append((g2, labels))
        stack.append((g1, labels))


def special_tree(G: MultiGraph) -> ReductionTree:
    return build_tree(G, special_strategy)


class LDMultiset:
    """Multiset of ``(sequence, F-label)`` pairs from the leaves of a tree."""

    def __init__(self, n: int, num_edges: int, entries: Counter | None = None):
        self.n = n
        self.num_edges = num_edges
        self.entries: Counter = Counter(entries or {})

    def add(self, seq: tuple[int, ...], label: tuple[Edge, ...], mult: int = 1):
        if sum(seq) != self.num_edges - len(label):
            raise AssertionError(f"codimension of {seq} differs from #F = {len(label)}")
        self.entries[seq, tuple(label)] += mult

    def aggregated(self) -> Counter:
        out: Counter = Counter()
        for (seq, _), m in self.entries.items():
            out[seq] += m
        return out

    def by_F(self) -> dict[tuple[Edge, ...], Counter]:
        out: dict = {}
        for (seq, label), m in self.entries.items():
            out.setdefault(label, Counter())[seq] += m
        return out

    def by_F_pairs(self) -> dict[tuple[tuple[int, int], ...], Counter]:
        """Group by the endpoint pairs of F, forgetting copy-ids."""
        out: dict = {}
        for (seq, label), m in self.entries.items():
            key = tuple(sorted((t, h) for t, h, _ in label))
            out.setdefault(key, Counter())[seq] += m
        return out

    def total(self) -> int:
        return sum(self.entries.values())

    def to_json(self) -> list[dict]:
        rows = []
        for (seq, label), m in sorted(self.entries.items()):
            rows.append({
                "sequence": list(seq),
                "F": [list(e) for e in label],
                "codim": len(label),
                "multiplicity": m,
            })
        return rows


def ld_multiset(source: ReductionTree | MultiGraph, strategy: Strategy | str = "special") -> LDMultiset:
    """LD multiset of a materialized tree, or of a graph under a strategy."""
    if isinstance(source, ReductionTree):
        G = source.root
        out = LDMultiset(G.n, G.num_edges)
        for idx in source.leaves():
            out.add(left_degree(source.nodes[idx].graph), source.path_labels(idx))
        return out
    out = LDMultiset(source.n, source.num_edges)
    for leaf, labels in iter_leaves(source, strategy):
        out.add(left_degree(leaf), labels)
    return out


def _pairs_key(G: MultiGraph) -> tuple:
    return (G.n, tuple(G.pairs()))


def aggregated_ld(G: MultiGraph, strategy: Strategy | str = "special") -> Counter:
    """Aggregated LD multiset, memoized on the edge multiset of each node.

    Valid for strategies whose choice depends only on endpoint pairs, which
    holds for every built-in strategy.
    """
    if isinstance(strategy, str):
        strategy = get_strategy(strategy)

    @lru_cache(maxsize=None)
    def count(key: tuple) -> tuple:
        H = MultiGraph.from_pairs(key[0], key[1])
        if is_leaf(H):
            return ((left_degree(H), 1),)
        e1, e2 = strategy(H)
        total: Counter = Counter()
        for child in reduce(H, e1, e2):
            for seq, m in count(_pairs_key(child)):
                total[seq] += m
        return tuple(sorted(total.items()))

    return Counter(dict(count(_pairs_key(G))))


def leaf_edge_counts(ld: Counter, num_edges: int) -> Counter:
    """Number of leaves by edge count, from an aggregated LD multiset."""
    out: Counter = Counter()
    for seq, m in ld.items():
        out[sum(seq)] += m
    return out


@dataclass
class TheoremAReport:
    ok: bool
    counts: dict
    mismatch: dict | None = None

    def to_json(self) -> dict:
        return {"ok": self.ok, "counts": self.counts, "counterexample": self.mismatch}


def first_difference(a: Counter, b: Counter):
    for seq in sorted(set(a) | set(b)):
        if a.get(seq, 0) != b.get(seq, 0):
            return seq, a.get(seq, 0), b.get(seq, 0)
    return None


def verify_theorem_A(G: MultiGraph, strategies: list[str] | None = None, check_arrays: bool = True) -> TheoremAReport:
    """Compare aggregated LD multisets across strategies, the special tree and the arrays."""
    from .arrays import sol_first_columns_by_F

    strategies = strategies or ["lex", "rightmost", "random:1"]
    if len(strategies) < 2:
        raise ValueError("need at least two strategies")
    special = ld_multiset(G, special_strategy)
    reference = special.aggregated()
    results = {"special": reference}
    for name in strategies:
        results[name] = aggregated_ld(G, name)
    if check_arrays:
        by_pairs = sol_first_columns_by_F(G)
        arrays_total: Counter = Counter()
        for counter in by_pairs.values():
            arrays_total.update(counter)
        results["arrays"] = arrays_total
    counts = {name: sum(c.values()) for name, c in results.items()}
    for name, c in results.items():
        diff = first_difference(reference, c)
        if diff is not None:
            seq, want, got = diff
            return TheoremAReport(False, counts, {
                "graph": G.to_json(), "against": name, "sequence": list(seq),
                "special_multiplicity": want, "other_multiplicity": got,
            })
    if check_arrays:
        tree_by_F = special.by_F_pairs()
        for key in sorted(set(tree_by_F) | set(by_pairs)):
            diff = first_difference(tree_by_F.get(key, Counter()), by_pairs.get(key, Counter()))
            if diff is not None:
                seq, want, got = diff
                return TheoremAReport(False, counts, {
                    "graph": G.to_json(), "against": "arrays", "F": [list(p) for p in key],
                    "sequence": list(seq), "special_multiplicity": want, "other_multiplicity": got,
                })
    return TheoremAReport(True, counts)


def ld_dump(ld: LDMultiset) -> str:
    return json.dumps(ld.to_json(), sort_keys=True)
