"""Independent oracles shared by the test modules.

Nothing here calls the package's own clique, chordality or near-clique code.
"""
import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import settings

from chordpow.graph import Graph

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def brute_near_clique(g: Graph) -> int:
    """Largest k such that some k vertices span at least C(k,2) - 1 edges."""
    best = 2 if g.n >= 2 else g.n
    for k in range(3, g.n + 1):
        need = k * (k - 1) // 2 - 1
        if any(sum(g.has_edge(a, b) for a, b in itertools.combinations(s, 2)) >= need
               for s in itertools.combinations(g.vertices, k)):
            best = k
    return best


def brute_clique_number(g: Graph) -> int:
    return max(len(c) for c in nx.find_cliques(to_nx(g)))


def all_graphs(n: int):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


def det3_path3(a: float, alpha: float) -> float:
    """Determinant of the powered 3x3 path witness, written out by cofactor expansion."""
    b2 = 1 - a * a
    return 1 - (a * a) ** alpha - b2 ** alpha


def brute_min_eig(m) -> float:
    """Smallest Rayleigh quotient over a dense set of unit vectors; for 2x2 only."""
    th = np.linspace(0, np.pi, 20001)
    v = np.stack([np.cos(th), np.sin(th)])
    return float(np.min(np.einsum("in,ij,jn->n", v, np.asarray(m, float), v)))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
