"""Canonical labeling of small simple graphs.

Individualization-refinement: colour refinement to an equitable ordered
partition, then branch on the first non-singleton cell. Every leaf gives a
discrete ordering and an adjacency certificate; the maximum certificate is
canonical. Automorphisms discovered at equal leaves prune sibling branches
lying in the same orbit of the pointwise stabiliser of the current prefix.

Intended for desk-scale graphs (up to roughly 16 vertices); larger inputs
work but highly symmetric ones can be slow.
"""

from __future__ import annotations

from .graph import Graph


def _refine(adj: list[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in c:
                a = adj[v]
                sig = tuple((a & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                changed = True
                for sig in sorted(groups):
                    out.append(groups[sig])
        cells = out
        if not changed:
            return cells


class _Canon:
    def __init__(self, adj: list[int]):
        self.adj = adj
        self.n = len(adj)
        self.best = None
        self.best_order = None
        self.autos: list[list[int]] = []

    def leaf(self, cells):
        order = [c[0] for c in cells]
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        adj = self.adj
        cert = []
        for v in order:
            a = adj[v]
            row = 0
            while a:
                low = a & -a
                row |= 1 << pos[low.bit_length() - 1]
                a ^= low
            cert.append(row)
        cert = tuple(cert)
        if self.best is None or cert > self.best:
            self.best, self.best_order = cert, order
        elif cert == self.best:
            # order[i] and best_order[i] play the same role
            gamma = [0] * self.n
            for a, b in zip(self.best_order, order):
                gamma[a] = b
            self.autos.append(gamma)

    def orbits_fixing(self, prefix):
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.autos:
            if all(g[p] == p for p in prefix):
                for x in range(self.n):
                    rx, ry = find(x), find(g[x])
                    if rx != ry:
                        parent[rx] = ry
        return find

    def search(self, cells, prefix):
        cells = _refine(self.adj, cells)
        k = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if k is None:
            self.leaf(cells)
            return
        target = sorted(cells[k])
        done: list[int] = []
        for v in target:
            if done:
                find = self.orbits_fixing(prefix)
                rv = find(v)
                if any(find(u) == rv for u in done):
                    continue
            done.append(v)
            rest = [u for u in target if u != v]
            self.search(cells[:k] + [[v], rest] + cells[k + 1:], prefix + [v])


def canonical_form(g: Graph) -> tuple[list[int], str]:
    """Return ``(perm, certificate)``.

    ``perm[v]`` is the canonical label of vertex ``v``; the certificate is a
    string that is equal for two graphs exactly when they are isomorphic.
    """
    g.require_simple("canonical_form")
    n = g.vertex_count
    if n == 0:
        return [], "0:"
    c = _Canon(g.adjacency_masks())
    c.search([list(range(n))], [])
    perm = [0] * n
    for i, v in enumerate(c.best_order):
        perm[v] = i
    cert = f"{n}:" + ".".join(format(r, "x") for r in c.best)
    return perm, cert


def certificate(g: Graph) -> str:
    return canonical_form(g)[1]


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return certificate(g) == certificate(h)


def certificate_from_masks(adj: list[int]) -> tuple:
    """Canonical certificate of a simple graph given as adjacency bitmasks."""
    if not adj:
        return ()
    c = _Canon(list(adj))
    c.search([list(range(len(adj)))], [])
    return (len(adj),) + c.best
