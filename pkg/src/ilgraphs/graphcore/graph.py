"""Labeled multigraph on vertices 0..n-1."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


class Graph:
    """Immutable multigraph; loops and parallel edges allowed.

    Edges are stored as a sorted tuple of ``(u, v)`` pairs with ``u <= v``;
    parallel copies sit next to each other. The position of an edge in
    :attr:`edges` is its *edge id*, used by cycles and edge pairs.
    """

    __slots__ = ("_n", "_edges", "_hash")

    def __init__(self, vertex_count: int, edges: Iterable[Edge] = ()):
        n = int(vertex_count)
        if n < 0:
            raise ValueError("vertex_count must be non-negative")
        es = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
            es.append(_norm(u, v))
        es.sort()
        self._n = n
        self._edges = tuple(es)
        self._hash = None

    # -- basic accessors ---------------------------------------------------
    @property
    def vertex_count(self) -> int:
        return self._n

    n = vertex_count

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self._n)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, self._edges))
        return self._hash

    def __repr__(self):
        return f"Graph({self._n}, {list(self._edges)!r})"

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._edges)

    # -- structure ------------------------------------------------------------
    def has_loops(self) -> bool:
        return any(u == v for u, v in self._edges)

    def has_parallel_edges(self) -> bool:
        return any(a == b for a, b in zip(self._edges, self._edges[1:]))

    def is_simple(self) -> bool:
        return not self.has_loops() and not self.has_parallel_edges()

    def simple(self) -> "Graph":
        """Simple view: loops dropped, parallel edges collapsed."""
        if self.is_simple():
            return self
        return Graph(self._n, sorted({e for e in self._edges if e[0] != e[1]}))

    def multiplicity(self, u: int, v: int) -> int:
        e = _norm(u, v)
        return sum(1 for f in self._edges if f == e)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in set(self._edges)

    def edge_ids(self, u: int, v: int) -> list[int]:
        e = _norm(u, v)
        return [i for i, f in enumerate(self._edges) if f == e]

    def degrees(self) -> list[int]:
        deg = [0] * self._n
        for u, v in self._edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def degree(self, v: int) -> int:
        return self.degrees()[v]

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for a, b in self._edges:
            if a == v and b != v:
                out.add(b)
            elif b == v and a != v:
                out.add(a)
        return out

    def adjacency_masks(self) -> list[int]:
        """Bitmask adjacency of the simple view (bit ``u`` of entry ``v``)."""
        adj = [0] * self._n
        for u, v in self._edges:
            if u != v:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return adj

    def incidence(self) -> list[list[tuple[int, int]]]:
        """Per vertex, the list of ``(edge_id, other_endpoint)``; loops skipped."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self._n)]
        for i, (u, v) in enumerate(self._edges):
            if u != v:
                inc[u].append((i, v))
                inc[v].append((i, u))
        return inc

    def edge_multiset(self) -> Counter:
        return Counter(self._edges)

    def is_connected(self) -> bool:
        if self._n == 0:
            return True
        adj = self.adjacency_masks()
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self._n) - 1

    def induced_subgraph(self, keep: Iterable[int]) -> "Graph":
        """Subgraph induced on ``keep``, relabeled in increasing order."""
        keep = sorted(set(keep))
        pos = {v: i for i, v in enumerate(keep)}
        return Graph(len(keep), [(pos[u], pos[v]) for u, v in self._edges if u in pos and v in pos])

    def remove_vertices(self, drop: Iterable[int]) -> "Graph":
        drop = set(drop)
        return self.induced_subgraph(v for v in range(self._n) if v not in drop)

    def relabel(self, perm) -> "Graph":
        """Apply ``v -> perm[v]``; ``perm`` must be a permutation of 0..n-1."""
        return Graph(self._n, [(perm[u], perm[v]) for u, v in self._edges])

    def require_simple(self, what: str = "this operation") -> None:
        if not self.is_simple():
            raise ValueError(f"{what} requires a simple graph (no loops or parallel edges)")
