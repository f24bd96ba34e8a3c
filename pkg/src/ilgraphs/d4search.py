"""Search for a double-linked D4 minor in a given embedding.

D4 is the 4-cycle w1 w2 w3 w4 with every edge doubled; C_i is the digon
between w_i and w_{i+1}. A D4 minor of an embedded graph is given by four
disjoint connected branch sets B1..B4, two distinct edges between each
cyclically consecutive pair, and a spanning tree in each branch set.
Contracting the trees turns the cycle Z_i -- through B_i and B_{i+1} along
both connecting edges and the tree paths -- into C_i, without changing any
linking number. The minor is *double linked* (mod 2) when lk(Z1, Z3) and
lk(Z2, Z4) are both odd.

The search is exact: branch-set 4-tuples are enumerated by increasing total
size, structural conditions are checked first, then every choice of
connecting edges and in-set paths is tried. ``None`` means the space was
exhausted; running out of nodes raises :class:`BudgetExceeded`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .embedding import EmbeddingSpec, linking_number, random_embedding
from .errors import BudgetExceeded
from .graphcore import Cycle, Graph, canonicalize, d4_graph
from .z2linkage import is_cycle_of

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class D4Witness:
    branch_sets: tuple[frozenset, ...]          # B1..B4
    connecting_edges: tuple[tuple[int, int], ...]  # edge ids between B_i and B_{i+1}
    trees: tuple[tuple[int, ...], ...]           # spanning-tree edge ids inside B_i
    cycles: tuple[Cycle, ...]                    # Z1..Z4
    parities: tuple[int, int]                    # lk(Z1,Z3), lk(Z2,Z4) mod 2

    def to_json(self):
        return {
            "branch_sets": [sorted(b) for b in self.branch_sets],
            "connecting_edges": [list(p) for p in self.connecting_edges],
            "trees": [list(t) for t in self.trees],
            "cycles": [c.to_json() for c in self.cycles],
            "parities": list(self.parities),
        }

    @classmethod
    def from_json(cls, obj) -> "D4Witness":
        return cls(
            tuple(frozenset(b) for b in obj["branch_sets"]),
            tuple(tuple(p) for p in obj["connecting_edges"]),
            tuple(tuple(t) for t in obj["trees"]),
            tuple(Cycle.from_json(c) for c in obj["cycles"]),
            tuple(obj["parities"]),
        )


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _connected_sets(adj: list[int], cap: int) -> list[int]:
    """All vertex sets of size <= cap inducing a connected subgraph."""
    found = set()
    frontier = {1 << v for v in range(len(adj))}
    size = 1
    while frontier and size <= cap:
        found |= frontier
        nxt = set()
        for s in frontier:
            nb = 0
            for v in _bits(s):
                nb |= adj[v]
            nb &= ~s
            for v in _bits(nb):
                nxt.add(s | (1 << v))
        frontier = nxt
        size += 1
    return sorted(found, key=lambda s: (s.bit_count(), s))


def _acyclic(edge_ids, edges) -> bool:
    parent: dict[int, int] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edge_ids:
        u, v = edges[e]
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


class _D4Search:
    def __init__(self, emb: EmbeddingSpec, budget: int | None, max_total: int | None):
        self.emb = emb
        g = emb.graph
        self.g = g
        self.edges = g.edges
        self.n = g.vertex_count
        self.adj = g.adjacency_masks()
        self.inc = g.incidence()
        self.M = emb.mod2_masks()
        self.budget = budget
        self.nodes = 0
        self.max_total = self.n if max_total is None else min(max_total, self.n)
        self.path_cache: dict = {}

    def tick(self, k=1):
        self.nodes += k
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded(f"D4 search exceeded {self.budget} nodes", used=self.nodes)

    def cross(self, a: int, b: int) -> list[int]:
        out = []
        for v in _bits(a):
            for e, w in self.inc[v]:
                if b >> w & 1:
                    out.append(e)
        return sorted(out)

    def paths(self, s: int, x: int, y: int):
        """Simple paths x -> y inside set ``s``: (edge mask, vertices, edge ids)."""
        key = (s, x, y)
        if key in self.path_cache:
            return self.path_cache[key]
        out = []
        if x == y:
            out.append((0, (x,), ()))
        else:
            vs, es = [x], []

            def rec(v, used):
                for e, w in self.inc[v]:
                    if not s >> w & 1 or used >> w & 1:
                        continue
                    vs.append(w)
                    es.append(e)
                    if w == y:
                        m = 0
                        for f in es:
                            m |= 1 << f
                        out.append((m, tuple(vs), tuple(es)))
                    else:
                        rec(w, used | (1 << w))
                    vs.pop()
                    es.pop()

            rec(x, 1 << x)
        self.path_cache[key] = out
        return out

    def side(self, e: int, s: int) -> tuple[int, int]:
        """Endpoints of crossing edge ``e`` as (in s, outside s)."""
        u, v = self.edges[e]
        return (u, v) if s >> u & 1 else (v, u)

    def half_cycles(self, bi: int, bj: int, pairs):
        """All cycles through B_i and B_j on two connecting edges."""
        out = []
        for e1, e2 in pairs:
            b1, c1 = self.side(e1, bi)
            b2, c2 = self.side(e2, bi)
            for qm, qv, qe in self.paths(bi, b1, b2):
                for pm, pv, pe in self.paths(bj, c2, c1):
                    mask = qm | pm | (1 << e1) | (1 << e2)
                    out.append((mask, (e1, e2), (qm, qv, qe), (pm, pv, pe)))
        return out

    def lk2(self, ma: int, mb: int) -> int:
        t = 0
        for e in _bits(ma):
            t += (self.M[e] & mb).bit_count()
        return t & 1

    def run(self):
        sets = _connected_sets(self.adj, self.max_total - 3)
        by_size: dict[int, list[int]] = {}
        for s in sets:
            by_size.setdefault(s.bit_count(), []).append(s)
        cross_cache: dict = {}

        def cross(a, b):
            k = (a, b) if a < b else (b, a)
            if k not in cross_cache:
                cross_cache[k] = self.cross(*k)
            return cross_cache[k]

        for total in range(4, self.max_total + 1):
            for s1 in range(1, total - 2):
                for s2 in range(1, total - s1 - 1):
                    for s3 in range(1, total - s1 - s2):
                        s4 = total - s1 - s2 - s3
                        res = self.sized(by_size, cross, s1, s2, s3, s4)
                        if res is not None:
                            return res
        return None

    def sized(self, by_size, cross, s1, s2, s3, s4):
        for B1 in by_size.get(s1, ()):
            m1 = B1 & -B1
            for B2 in by_size.get(s2, ()):
                if B2 & B1 or (B2 & -B2) < m1:
                    continue
                self.tick()
                if len(cross(B1, B2)) < 2:
                    continue
                for B3 in by_size.get(s3, ()):
                    if B3 & (B1 | B2) or (B3 & -B3) < m1:
                        continue
                    self.tick()
                    if len(cross(B2, B3)) < 2:
                        continue
                    for B4 in by_size.get(s4, ()):
                        if B4 & (B1 | B2 | B3) or (B4 & -B4) < m1 or (B4 & -B4) < (B2 & -B2):
                            continue
                        self.tick()
                        if len(cross(B3, B4)) < 2 or len(cross(B4, B1)) < 2:
                            continue
                        res = self.inner((B1, B2, B3, B4), cross)
                        if res is not None:
                            return res
        return None

    def inner(self, B, cross):
        pairs = [list(combinations(cross(B[i], B[(i + 1) % 4]), 2)) for i in range(4)]
        Z = [self.half_cycles(B[i], B[(i + 1) % 4], pairs[i]) for i in range(4)]
        self.tick(sum(len(z) for z in Z))
        odd13 = []
        for a in Z[0]:
            for c in Z[2]:
                self.tick()
                if self.lk2(a[0], c[0]):
                    odd13.append((a, c))
        if not odd13:
            return None
        odd24 = []
        for b in Z[1]:
            for d in Z[3]:
                self.tick()
                if self.lk2(b[0], d[0]):
                    odd24.append((b, d))
        for z1, z3 in odd13:
            for z2, z4 in odd24:
                self.tick()
                # inside B_i: path of Z_i (first half) and of Z_{i-1} (second half)
                inside = [
                    z1[2][2] + z4[3][2],
                    z2[2][2] + z1[3][2],
                    z3[2][2] + z2[3][2],
                    z4[2][2] + z3[3][2],
                ]
                if all(_acyclic(ids, self.edges) for ids in inside):
                    return self.build(B, (z1, z2, z3, z4), inside)
        return None

    def build(self, B, zs, inside):
        trees = []
        for b, ids in zip(B, inside):
            tree = list(dict.fromkeys(ids))
            # extend to a spanning tree of the induced subgraph
            for e, (u, v) in enumerate(self.edges):
                if u != v and b >> u & 1 and b >> v & 1 and e not in tree and _acyclic(tree + [e], self.edges):
                    tree.append(e)
            trees.append(tuple(sorted(tree)))
        cycles = []
        for z in zs:
            _, (e1, e2), (_, qv, qe), (_, pv, pe) = z
            # q: b1..b2 in B_i, e2 to c2, p: c2..c1 in B_j, e1 back to b1
            cycles.append(canonicalize(qv + pv, qe + (e2,) + pe + (e1,)))
        bs = tuple(frozenset(_bits(b)) for b in B)
        conn = tuple(z[1] for z in zs)
        return D4Witness(bs, conn, tuple(trees), tuple(cycles), (1, 1))


def find_double_linked_d4(emb: EmbeddingSpec, budget: int | None = DEFAULT_BUDGET,
                          max_total: int | None = None) -> D4Witness | None:
    """A verified double-linked D4 minor of ``emb``, or ``None`` after an
    exhaustive search. ``max_total`` caps the combined branch-set size."""
    w = _D4Search(emb, budget, max_total).run()
    if w is not None and not verify_d4_witness(emb, w):
        raise RuntimeError("internal error: D4 witness failed verification")
    return w


def verify_d4_witness(emb: EmbeddingSpec, w: D4Witness) -> bool:
    g = emb.graph
    B = w.branch_sets
    if len(B) != 4 or len(w.connecting_edges) != 4 or len(w.trees) != 4 or len(w.cycles) != 4:
        return False
    where = {}
    for i, b in enumerate(B):
        if not b:
            return False
        for v in b:
            if not 0 <= v < g.vertex_count or v in where:
                return False
            where[v] = i
    edges = g.edges

    def lab(e):
        u, v = edges[e]
        return where.get(u), where.get(v)

    # trees: spanning trees of each branch set (so each set is connected)
    for i, (b, t) in enumerate(zip(B, w.trees)):
        if any(not 0 <= e < len(edges) for e in t) or len(set(t)) != len(t):
            return False
        if any(lab(e) != (i, i) for e in t):
            return False
        if len(t) != len(b) - 1 or not _acyclic(list(t), edges):
            return False
    # connecting edges
    for i, pair in enumerate(w.connecting_edges):
        if len(pair) != 2 or pair[0] == pair[1]:
            return False
        want = {i, (i + 1) % 4}
        for e in pair:
            if not 0 <= e < len(edges) or set(lab(e)) != want:
                return False
    # contracting the trees leaves exactly the connecting edges: D4
    quotient = Graph(4, [lab(e) for pair in w.connecting_edges for e in pair])
    if quotient != d4_graph():
        return False
    # cycles run inside the tree/connector subgraph and through both connectors
    for i, z in enumerate(w.cycles):
        if not is_cycle_of(g, z):
            return False
        j = (i + 1) % 4
        allowed = set(w.trees[i]) | set(w.trees[j]) | set(w.connecting_edges[i])
        if not set(z.edges) <= allowed or not set(w.connecting_edges[i]) <= set(z.edges):
            return False
    z1, z2, z3, z4 = w.cycles
    if z1.vertex_mask & z3.vertex_mask or z2.vertex_mask & z4.vertex_mask:
        return False
    p13 = linking_number(emb, z1, z3) % 2
    p24 = linking_number(emb, z2, z4) % 2
    return tuple(w.parities) == (p13, p24) == (1, 1)


@dataclass
class D4Census:
    samples: int
    found: int
    none: int
    budget_exceeded: int
    nodes: list[int]

    @property
    def completed(self) -> int:
        return self.found + self.none

    @property
    def fraction(self) -> float | None:
        return self.found / self.completed if self.completed else None

    def to_json(self):
        return {"samples": self.samples, "found": self.found, "none": self.none,
                "budget_exceeded": self.budget_exceeded, "fraction": self.fraction,
                "mean_nodes": float(np.mean(self.nodes)) if self.nodes else None}


def d4_census(graph: Graph, sample_embeddings=25, seed: int = 0, twist_bound: int = 3,
              budget: int | None = DEFAULT_BUDGET) -> D4Census:
    """How often do embeddings of ``graph`` contain a double-linked D4 minor?

    ``sample_embeddings`` is a count of seeded random embeddings or an
    iterable of :class:`EmbeddingSpec`.
    """
    if isinstance(sample_embeddings, int):
        rng = np.random.default_rng(seed)
        seeds = rng.integers(0, 2**63 - 1, size=sample_embeddings)
        embs = [random_embedding(graph, int(s), twist_bound) for s in seeds]
    else:
        embs = list(sample_embeddings)
    found = none = over = 0
    nodes = []
    for emb in embs:
        search = _D4Search(emb, budget, None)
        try:
            w = search.run()
        except BudgetExceeded:
            over += 1
            continue
        finally:
            nodes.append(search.nodes)
        if w is None:
            none += 1
        else:
            if not verify_d4_witness(emb, w):
                raise RuntimeError("internal error: D4 witness failed verification")
            found += 1
    return D4Census(len(embs), found, none, over, nodes)
