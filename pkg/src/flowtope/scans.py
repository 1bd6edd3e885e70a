"""Graph families for exhaustive and seeded scans, and a per-graph verifier."""

from __future__ import annotations

import csv
import math
import json
import os
import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterator

from .arrays import all_F, verify_encoding_chain
from .graph import MultiGraph
from .newton import dilation_count, ehrhart, ehrhart_dimension, evaluate_univariate, full_dimensional_leaves, verify_corollaries, volume
from .reduction import verify_theorem_A


def all_pairs(num_vertices: int) -> list[tuple[int, int]]:
    return list(combinations(range(num_vertices), 2))


def simple_graphs(max_vertices: int, max_edges: int | None = None) -> Iterator[MultiGraph]:
    """Every simple graph on ``[0, n]`` with ``n + 1 <= max_vertices``."""
    for nv in range(1, max_vertices + 1):
        pairs = all_pairs(nv)
        top = len(pairs) if max_edges is None else min(max_edges, len(pairs))
        for m in range(top + 1):
            for chosen in combinations(pairs, m):
                yield MultiGraph.from_pairs(nv - 1, chosen)


def multigraphs(max_vertices: int, max_edges: int) -> Iterator[MultiGraph]:
    """Every multigraph on ``[0, n]`` with ``n + 1 <= max_vertices`` and at most ``max_edges`` edges."""
    for nv in range(1, max_vertices + 1):
        pairs = all_pairs(nv)
        if not pairs:
            yield MultiGraph.from_pairs(nv - 1, [])
            continue
        for m in range(max_edges + 1):
            for chosen in combinations_with_replacement(pairs, m):
                yield MultiGraph.from_pairs(nv - 1, chosen)


def random_multigraphs(count: int, num_vertices: int, max_edges: int, seed: int) -> list[MultiGraph]:
    rng = random.Random(seed)
    pairs = all_pairs(num_vertices)
    out = []
    for _ in range(count):
        m = rng.randint(1, max_edges)
        out.append(MultiGraph.from_pairs(num_vertices - 1, sorted(rng.choice(pairs) for _ in range(m))))
    return out


def theorem_A_family(seed: int = 2024) -> list[MultiGraph]:
    """Exhaustive small multigraphs plus seeded random ones."""
    return list(multigraphs(4, 6)) + random_multigraphs(200, 5, 7, seed)


@dataclass
class GraphVerdict:
    key: str
    graph: str
    theorem_a: bool
    encoding: bool
    volume_ehrhart: bool
    corollaries: bool
    counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return self.theorem_a and self.encoding and self.volume_ehrhart and self.corollaries

    def row(self) -> dict:
        return {"hash": self.key, "graph": self.graph, "theorem_a": int(self.theorem_a),
                "encoding": int(self.encoding), "volume_ehrhart": int(self.volume_ehrhart),
                "corollaries": int(self.corollaries),
                "counterexample": json.dumps(self.counterexample, sort_keys=True) if self.counterexample else ""}


def check_volume_ehrhart(G: MultiGraph) -> dict | None:
    """``None`` when volume and Ehrhart data agree with independent counts, else a counterexample."""
    vol = volume(G)
    leaves = full_dimensional_leaves(G)
    if vol != leaves:
        return {"check": "volume", "volume": vol, "leaves": leaves}
    E = ehrhart(G)
    if evaluate_univariate(E, 0) != 1:
        return {"check": "ehrhart(0)", "value": str(evaluate_univariate(E, 0))}
    for t in (1, 2, 3):
        got, want = evaluate_univariate(E, t), dilation_count(G, t)
        if got != want:
            return {"check": "ehrhart", "t": t, "ehrhart": str(got), "direct": want}
    d = ehrhart_dimension(G)
    lead = E[d] if len(E) > d else 0
    if lead * math.factorial(d) != vol:
        return {"check": "leading_coefficient", "leading": str(lead), "dimension": d, "volume": vol}
    return None


def verify_graph(G: MultiGraph) -> GraphVerdict:
    counter = None
    ta = verify_theorem_A(G)
    if not ta.ok:
        counter = {"check": "theorem_a", **(ta.mismatch or {})}
    enc = True
    if G.is_simple():
        for F in all_F(G):
            rep = verify_encoding_chain(G, F)
            if not rep.ok:
                enc = False
                counter = counter or {"check": "encoding", **(rep.counterexample or {})}
                break
    ve = check_volume_ehrhart(G)
    if ve is not None:
        counter = counter or {"graph": G.to_json(), **ve}
    cor = verify_corollaries(G)
    if not cor.ok:
        counter = counter or cor.counterexample
    return GraphVerdict(G.key(), json.dumps(G.to_json(), separators=(",", ":")), ta.ok, enc, ve is None, cor.ok, counter)


CSV_FIELDS = ["hash", "graph", "theorem_a", "encoding", "volume_ehrhart", "corollaries", "counterexample"]


def read_done(path: str) -> dict[str, dict]:
    """Rows already written to a scan CSV, keyed by graph hash."""
    if not path or not os.path.exists(path):
        return {}
    with open(path, newline="") as fh:
        return {row["hash"]: row for row in csv.DictReader(fh)}


def _verify_to_row(G: MultiGraph) -> dict:
    return verify_graph(G).row()


def scan_graphs(graphs: list[MultiGraph], csv_path: str | None = None, jobs: int = 1) -> list[dict]:
    """Verify every graph, resuming from ``csv_path`` and appending new rows to it."""
    from .schubert import _map

    done = read_done(csv_path) if csv_path else {}
    todo, seen = [], set(done)
    for G in graphs:
        k = G.key()
        if k not in seen:
            seen.add(k)
            todo.append(G)
    new_rows = _map(_verify_to_row, todo, jobs)
    if csv_path:
        fresh = not os.path.exists(csv_path) or os.path.getsize(csv_path) == 0
        with open(csv_path, "a", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
            if fresh:
                w.writeheader()
            for row in new_rows:
                w.writerow(row)
    rows = {**done, **{r["hash"]: r for r in new_rows}}
    order = []
    for G in graphs:
        k = G.key()
        if k in rows:
            order.append(rows.pop(k))
    return order
