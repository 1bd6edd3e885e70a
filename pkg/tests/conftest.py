import re
from itertools import product

import pytest

from flowtope.graph import MultiGraph

# Simple graph used by the printed array examples.
EXAMPLE_EDGES = [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]
# Its multigraph variant.
MULTI_EDGES = [(0, 1), (0, 1), (0, 2), (1, 2), (1, 2), (2, 3), (2, 4), (3, 4), (3, 4)]


@pytest.fixture
def example_graph():
    return MultiGraph.from_pairs(4, EXAMPLE_EDGES)


@pytest.fixture
def multi_graph():
    return MultiGraph.from_pairs(4, MULTI_EDGES)


@pytest.fixture
def path2():
    return MultiGraph.from_pairs(2, [(0, 1), (1, 2)])


def normalize_latex(line: str) -> str:
    """Turn a printed LaTeX constraint row into the pretty-printer's alphabet."""
    s = line.replace("$", "").replace("\\,", "").replace("&", "").replace("\\\\", "")
    s = s.replace("\\leq", "≤").replace(" ", "")
    # a_{x}^{(m)} -> a^{(m)}_{x}
    s = re.sub(r"a_\{([0-9,]+)\}\^\{\((\d+)\)\}", r"a^{(\2)}_{\1}", s)
    return s


def brute_force_flows(G: MultiGraph, a, bound=None):
    """Every integer flow, by trying all edge values up to ``bound``."""
    bound = sum(x for x in a if x > 0) if bound is None else bound
    out = []
    for values in product(range(bound + 1), repeat=G.num_edges):
        net = [0] * (G.n + 1)
        for (t, h, _), x in zip(G.edges, values):
            net[t] += x
            net[h] -= x
        if net == list(a):
            out.append(values)
    return out
