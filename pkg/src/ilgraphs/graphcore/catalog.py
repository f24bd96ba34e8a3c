"""Named graphs with fixed vertex labelings.

Labelings:

``K<n>``
    vertices 0..n-1, all pairs adjacent.
``K<a>,<b>,...``
    complete multipartite; part ``i`` occupies the next consecutive block of
    labels (``K3,3,1``: parts {0,1,2}, {3,4,5}, {6}).
``C<n>``
    cycle 0-1-...-(n-1)-0.
``Path<n>``
    path 0-1-...-(n-1) on n vertices.
``PetersenGraph``
    outer 5-cycle 0..4, inner pentagram 5..9 (``5+i ~ 5+(i+2)%5``),
    spokes ``i ~ 5+i``.
``D4``
    vertices w1..w4 = 0..3; each edge of the 4-cycle 0-1-2-3-0 doubled. The
    digon between ``i`` and ``i+1`` (mod 4) is the cycle C_{i+1}, so
    (C1, C3) and (C2, C4) are the vertex-disjoint pairs.
``PF1`` .. ``PF7``
    the Petersen family, by ascending vertex count:

    * PF1 = K6.
    * PF2 = K6 after a triangle-to-star move on {3,4,5} (new vertex 6).
    * PF3 = K3,3,1 (labeled as above).
    * PF4 = PF2 after the move on {0,1,3} (new vertex 7).
    * PF5 = PF2 after the move on {0,1,2}; this is K4,4 minus an edge, with
      parts {0,1,2,6} and {3,4,5,7} and the missing edge 6-7.
    * PF6 = PF4 after the move on {0,2,4} (new vertex 8).
    * PF7 = PetersenGraph.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations

from .graph import Graph
from .ops import delta_y

NAMES_HELP = "K<n>, K<a>,<b>,... (complete multipartite), PetersenGraph, PF1..PF7, D4, C<n>, Path<n>"


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_multipartite(*parts: int) -> Graph:
    blocks = []
    start = 0
    for p in parts:
        blocks.append(range(start, start + p))
        start += p
    edges = [(u, v) for a, b in combinations(blocks, 2) for u in a for v in b]
    return Graph(start, edges)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("C<n> needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def d4_graph() -> Graph:
    edges = []
    for i in range(4):
        e = (i, (i + 1) % 4)
        edges += [e, e]
    return Graph(4, edges)


@lru_cache(maxsize=None)
def petersen_family() -> tuple[Graph, ...]:
    k6 = complete_graph(6)
    pf2 = delta_y(k6, (3, 4, 5))
    pf4 = delta_y(pf2, (0, 1, 3))
    pf5 = delta_y(pf2, (0, 1, 2))
    pf6 = delta_y(pf4, (0, 2, 4))
    return (k6, pf2, complete_multipartite(3, 3, 1), pf4, pf5, pf6, petersen_graph())


def catalog(name: str) -> Graph:
    """Look up a named graph; see the module docstring for labelings."""
    key = name.strip().replace(" ", "")
    if key == "PetersenGraph":
        return petersen_graph()
    if key == "D4":
        return d4_graph()
    m = re.fullmatch(r"PF([1-7])", key)
    if m:
        return petersen_family()[int(m.group(1)) - 1]
    m = re.fullmatch(r"K_?\{?(\d+(?:,\d+)*)\}?", key)
    if m:
        parts = [int(x) for x in m.group(1).split(",")]
        if len(parts) == 1:
            return complete_graph(parts[0])
        return complete_multipartite(*parts)
    m = re.fullmatch(r"C(\d+)", key)
    if m:
        return cycle_graph(int(m.group(1)))
    m = re.fullmatch(r"Path(\d+)", key)
    if m:
        return path_graph(int(m.group(1)))
    raise KeyError(f"unknown catalog graph {name!r}; valid names: {NAMES_HELP}")
