import itertools
import os

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ilgraphs.graphcore import Graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.simple().edges)
    return h


def from_nx(h) -> Graph:
    nodes = sorted(h.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), [(pos[u], pos[v]) for u, v in h.edges()])


@st.composite
def simple_graphs(draw, min_n=0, max_n=7, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    if p is None:
        keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        keep = [draw(st.floats(0, 1)) < p for _ in pairs]
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def multigraphs(draw, max_n=5, max_m=9):
    n = draw(st.integers(1, max_n))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_m))
    return Graph(n, edges)


@st.composite
def permutations(draw, n):
    return draw(st.permutations(list(range(n))))


def brute_cycle_vertex_sets(g: Graph) -> int:
    """Number of elementary cycles of a simple graph, by trying every vertex
    sequence (start at the minimum, second < last)."""
    adj = [set() for _ in range(g.vertex_count)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    count = 0
    for k in range(3, g.vertex_count + 1):
        for sub in itertools.combinations(range(g.vertex_count), k):
            s, rest = sub[0], sub[1:]
            for perm in itertools.permutations(rest):
                if perm[0] > perm[-1]:
                    continue
                seq = (s,) + perm
                if all(seq[(i + 1) % k] in adj[seq[i]] for i in range(k)):
                    count += 1
    return count


@pytest.fixture
def rng():
    import numpy as np
    return np.random.default_rng(12345)
