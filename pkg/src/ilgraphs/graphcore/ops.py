"""Elementary constructions: complement, cone, deletion/contraction, and
triangle-star (delta-wye) moves."""

from __future__ import annotations

from itertools import combinations

from .graph import Edge, Graph, _norm


def complement(g: Graph) -> Graph:
    g.require_simple("complement")
    present = set(g.edges)
    n = g.vertex_count
    return Graph(n, [e for e in combinations(range(n), 2) if e not in present])


def cone(g: Graph, h: Graph) -> Graph:
    """Join of ``g`` and ``h``: ``h`` is shifted to labels ``|g|..``, and every
    vertex of ``g`` is joined to every vertex of ``h``."""
    a, b = g.vertex_count, h.vertex_count
    edges = list(g.edges)
    edges += [(u + a, v + a) for u, v in h.edges]
    edges += [(u, a + w) for u in range(a) for w in range(b)]
    return Graph(a + b, edges)


def _remove_one(edges: tuple[Edge, ...], e: Edge) -> list[Edge]:
    out = list(edges)
    try:
        out.remove(e)
    except ValueError:
        raise ValueError(f"edge {e} not present") from None
    return out


def delete_edge(g: Graph, e: Edge) -> Graph:
    """Remove one instance of edge ``e``."""
    return Graph(g.vertex_count, _remove_one(g.edges, _norm(*e)))


def delete_vertex(g: Graph, v: int) -> Graph:
    return g.remove_vertices([v])


def contract_edge(g: Graph, e: Edge, simplify: bool = True) -> Graph:
    """Contract one instance of ``e = (u, v)``.

    The endpoints merge into ``min(u, v)``; labels above the removed one shift
    down by one. With ``simplify`` the result is a simple graph; otherwise the
    remaining multiplicities (including new loops) are kept.
    """
    u, v = _norm(*e)
    if u == v:
        raise ValueError("cannot contract a loop")
    rest = _remove_one(g.edges, (u, v))

    def lab(x):
        if x == v:
            x = u
        return x - 1 if x > v else x

    out = Graph(g.vertex_count - 1, [(lab(a), lab(b)) for a, b in rest])
    return out.simple() if simplify else out


def delta_y(g: Graph, triangle) -> Graph:
    """Replace the triangle ``(a, b, c)`` by a star on a new vertex ``n``."""
    a, b, c = triangle
    if len({a, b, c}) != 3:
        raise ValueError("delta_y needs three distinct vertices")
    edges = g.edges
    for x, y in ((a, b), (b, c), (a, c)):
        if _norm(x, y) not in edges:
            raise ValueError(f"vertices {triangle} do not form a triangle: missing edge {(x, y)}")
    rest = list(edges)
    for x, y in ((a, b), (b, c), (a, c)):
        rest.remove(_norm(x, y))
    n = g.vertex_count
    rest += [(a, n), (b, n), (c, n)]
    return Graph(n + 1, rest)


def y_delta(g: Graph, vertex: int) -> Graph:
    """Replace the degree-3 vertex ``vertex`` by a triangle on its neighbours.

    Triangle edges whose endpoints are already adjacent are not doubled, so a
    simple input stays simple.
    """
    v = vertex
    if not 0 <= v < g.vertex_count:
        raise ValueError(f"vertex {v} not in graph")
    inc = [e for e in g.edges if v in e]
    if any(x == y for x, y in inc):
        raise ValueError(f"vertex {v} carries a loop")
    if len(inc) != 3:
        raise ValueError(f"y_delta needs a vertex of degree exactly 3; vertex {v} has degree {len(inc)}")
    nbrs = sorted(x if y == v else y for x, y in inc)
    if len(set(nbrs)) != 3:
        raise ValueError(f"vertex {v} has parallel edges; its neighbours are not three distinct vertices")
    rest = [e for e in g.edges if v not in e]
    present = set(rest)
    for x, y in combinations(nbrs, 2):
        if (x, y) not in present:
            rest.append((x, y))

    def lab(x):
        return x - 1 if x > v else x

    return Graph(g.vertex_count - 1, [(lab(x), lab(y)) for x, y in rest])


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """Vertex triples spanning a triangle in the simple view, sorted."""
    adj = g.adjacency_masks()
    out = []
    for a in range(g.vertex_count):
        for b in range(a + 1, g.vertex_count):
            if adj[a] >> b & 1:
                common = adj[a] & adj[b] & ~((1 << (b + 1)) - 1)
                while common:
                    low = common & -common
                    out.append((a, b, low.bit_length() - 1))
                    common ^= low
    return out


def degree_three_vertices(g: Graph) -> list[int]:
    """Vertices on which :func:`y_delta` is legal."""
    out = []
    for v in range(g.vertex_count):
        inc = [e for e in g.edges if v in e]
        if len(inc) == 3 and all(x != y for x, y in inc):
            if len({x if y == v else y for x, y in inc}) == 3:
                out.append(v)
    return out
