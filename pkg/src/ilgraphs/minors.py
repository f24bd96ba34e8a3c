"""Exact minor containment and the decisions built on it.

``has_minor`` searches the minors of ``G`` by vertex deletion and edge
contraction, depth first, memoised on canonical certificates: an
isomorphism class that has been explored once is never explored again. A
node is tested for a subgraph copy of ``H`` by backtracking. Edge deletions
never need to be branched on: they commute with contractions and are
absorbed by the subgraph test.

Safe reductions keep the search small. When every target is connected, a
disconnected node is split into components. Vertices of degree <= 1 are
dropped when every target has minimum degree >= 2, and degree-2 vertices
are suppressed when every target has minimum degree >= 3. A node is also
pruned when it has fewer edges than every target, and optionally when it is
apex while no target is (apex graphs are closed under minors).

Each current vertex remembers the set of original vertices contracted into
it, so a successful search yields a :class:`MinorWitness` that can be
checked against ``G`` directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import BudgetExceeded
from .graphcore import Graph, complement, complete_graph, complete_multipartite, petersen_family, to_graph6
from .graphcore.canon import certificate_from_masks
from .planarity import is_planar_dmp, is_planar_masks

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class MinorWitness:
    """``branch_sets[h]`` is the vertex set of ``G`` standing for vertex ``h``
    of ``H``; ``edge_assignment[(a, b)]`` is an edge of ``G`` joining the
    branch sets of ``a`` and ``b``."""

    branch_sets: tuple[frozenset, ...]
    edge_assignment: dict

    def to_json(self):
        return {
            "branch_sets": [sorted(b) for b in self.branch_sets],
            "edges": [[a, b, x, y] for (a, b), (x, y) in sorted(self.edge_assignment.items())],
        }

    @classmethod
    def from_json(cls, obj) -> "MinorWitness":
        return cls(tuple(frozenset(b) for b in obj["branch_sets"]),
                   {(a, b): (x, y) for a, b, x, y in obj["edges"]})


def verify_minor_witness(g: Graph, h: Graph, w: MinorWitness) -> bool:
    h = h.simple()
    if len(w.branch_sets) != h.vertex_count:
        return False
    used = set()
    adj = g.adjacency_masks()
    for b in w.branch_sets:
        if not b or any(not 0 <= v < g.vertex_count for v in b) or used & b:
            return False
        used |= b
        mask = sum(1 << v for v in b)
        start = min(b)
        seen = frontier = 1 << start
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & mask & ~seen
            seen |= frontier
        if seen != mask:
            return False
    if set(w.edge_assignment) != set(h.edges):
        return False
    gedges = g.edge_multiset()
    taken: dict = {}
    for (a, b), (x, y) in w.edge_assignment.items():
        e = (min(x, y), max(x, y))
        if gedges.get(e, 0) <= taken.get(e, 0):
            return False
        taken[e] = taken.get(e, 0) + 1
        ba, bb = w.branch_sets[a], w.branch_sets[b]
        if not ((x in ba and y in bb) or (y in ba and x in bb)):
            return False
    return True


# -- search engine -----------------------------------------------------------

def _drop_bit(x: int, v: int) -> int:
    return (x & ((1 << v) - 1)) | ((x >> (v + 1)) << v)


def _delete(adj, bsets, v):
    return ([_drop_bit(a, v) for i, a in enumerate(adj) if i != v],
            [b for i, b in enumerate(bsets) if i != v])


def _contract(adj, bsets, u, v):
    """Merge ``v`` into ``u``."""
    adj = list(adj)
    bsets = list(bsets)
    adj[u] = (adj[u] | adj[v]) & ~((1 << u) | (1 << v))
    m = adj[v]
    while m:
        low = m & -m
        w = low.bit_length() - 1
        if w != u:
            adj[w] |= 1 << u
        m ^= low
    bsets[u] |= bsets[v]
    return _delete(adj, bsets, v)


def _edge_count(adj) -> int:
    return sum(a.bit_count() for a in adj) // 2


def _components(adj) -> list[int]:
    n = len(adj)
    left = (1 << n) - 1
    out = []
    while left:
        start = left & -left
        seen = frontier = start
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~seen
            seen |= frontier
        out.append(seen)
        left &= ~seen
    return out


def _restrict(adj, bsets, keep: int):
    drop = [i for i in range(len(adj)) if not keep >> i & 1]
    for v in reversed(drop):
        adj, bsets = _delete(adj, bsets, v)
    return adj, bsets


class _Target:
    def __init__(self, h: Graph):
        self.graph = h
        self.k = h.vertex_count
        self.e = h.edge_count
        self.adj = h.adjacency_masks()
        deg = [a.bit_count() for a in self.adj]
        self.mindeg = min(deg) if deg else 0
        self.connected = h.is_connected()
        # mapping order: BFS from the max-degree vertex, then by degree
        order = []
        left = set(range(self.k))
        while left:
            s = max(left, key=lambda v: (deg[v], -v))
            queue = [s]
            left.discard(s)
            for v in queue:
                order.append(v)
                nb = sorted((w for w in left if self.adj[v] >> w & 1), key=lambda w: (-deg[w], w))
                for w in nb:
                    left.discard(w)
                    queue.append(w)
        self.order = order
        self.deg = deg


def _subgraph_copy(t: _Target, adj: list[int]) -> list[int] | None:
    """Injective edge-preserving map ``H -> G`` (a subgraph copy of ``H``)."""
    n = len(adj)
    gdeg = [a.bit_count() for a in adj]
    phi = [-1] * t.k
    used = 0
    order = t.order

    def rec(i):
        nonlocal used
        if i == len(order):
            return True
        h = order[i]
        cand = ((1 << n) - 1) & ~used
        for j in range(i):
            hp = order[j]
            if t.adj[h] >> hp & 1:
                cand &= adj[phi[hp]]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if gdeg[v] < t.deg[h]:
                continue
            phi[h] = v
            used |= low
            if rec(i + 1):
                return True
            used &= ~low
            phi[h] = -1
        return False

    return phi if rec(0) else None


class _Search:
    def __init__(self, targets: Sequence[Graph], budget: int | None, apex_prune: bool):
        self.targets = [_Target(h.simple()) for h in targets]
        self.budget = budget
        self.apex_prune = apex_prune
        self.kmin = min(t.k for t in self.targets)
        self.emin = min(t.e for t in self.targets)
        self.connected = all(t.connected for t in self.targets) and self.kmin > 0
        md = min(t.mindeg for t in self.targets)
        self.level = md if self.connected else 0
        self.seen: set = set()
        self.nodes = 0

    def reduce(self, adj, bsets):
        changed = True
        while changed and adj:
            changed = False
            for v in range(len(adj)):
                d = adj[v].bit_count()
                if d == 0 and self.level >= 1 or d == 1 and self.level >= 2:
                    adj, bsets = _delete(adj, bsets, v)
                    changed = True
                    break
                if d == 2 and self.level >= 3:
                    u = (adj[v] & -adj[v]).bit_length() - 1
                    adj, bsets = _contract(adj, bsets, min(u, v), max(u, v))
                    changed = True
                    break
        return adj, bsets

    def node(self, adj, bsets):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded(f"minor search exceeded {self.budget} nodes", used=self.nodes)
        adj, bsets = self.reduce(adj, bsets)
        m = len(adj)
        e = _edge_count(adj)
        if m < self.kmin or e < self.emin:
            return None
        if self.connected:
            comps = _components(adj)
            if len(comps) > 1:
                for c in sorted(comps, key=lambda c: (-c.bit_count(), c)):
                    if c.bit_count() >= self.kmin:
                        res = self.node(*_restrict(adj, bsets, c))
                        if res is not None:
                            return res
                return None
        key = certificate_from_masks(adj)
        if key in self.seen:
            return None
        self.seen.add(key)

        for ti, t in enumerate(self.targets):
            if t.k <= m and t.e <= e:
                phi = _subgraph_copy(t, adj)
                if phi is not None:
                    return ti, [bsets[phi[h]] for h in range(t.k)]
        active = [t for t in self.targets if t.k < m]
        if not active:
            return None
        if self.apex_prune and m > self.kmin and _is_apex_masks(adj):
            return None
        emin = min(t.e for t in active)

        # contractions, fewest lost edges first
        moves = []
        for u in range(m):
            a = adj[u]
            nb = a >> (u + 1)
            while nb:
                low = nb & -nb
                v = u + low.bit_length()
                nb ^= low
                lost = 1 + (a & adj[v]).bit_count()
                if e - lost >= emin:
                    moves.append((lost, a.bit_count() + adj[v].bit_count(), u, v))
        moves.sort()
        for _, _, u, v in moves:
            res = self.node(*_contract(adj, bsets, u, v))
            if res is not None:
                return res
        dels = sorted(range(m), key=lambda v: (adj[v].bit_count(), v))
        for v in dels:
            if e - adj[v].bit_count() >= emin:
                res = self.node(*_delete(adj, bsets, v))
                if res is not None:
                    return res
        return None


def _is_apex_masks(adj) -> bool:
    for v in range(len(adj)):
        rest = [_drop_bit(a, v) for i, a in enumerate(adj) if i != v]
        if is_planar_masks(rest):
            return True
    return False


def _witness(g: Graph, h: Graph, sets: list[int]) -> MinorWitness:
    bs = [frozenset(v for v in range(g.vertex_count) if s >> v & 1) for s in sets]
    where = {}
    for i, b in enumerate(bs):
        for v in b:
            where[v] = i
    assign = {}
    for x, y in g.simple().edges:
        a, b = where.get(x), where.get(y)
        if a is None or b is None or a == b:
            continue
        key = (min(a, b), max(a, b))
        if key not in assign:
            assign[key] = (x, y)
    h = h.simple()
    return MinorWitness(tuple(bs), {e: assign[e] for e in h.edges})


def find_any_minor(g: Graph, targets: Sequence[Graph], budget: int | None = DEFAULT_BUDGET,
                   apex_prune: bool = False):
    """First target found as a minor of ``g``: ``(index, witness)`` or ``None``.

    With ``apex_prune`` the caller asserts that no target is apex; apex
    nodes are then cut off.
    """
    s = g.simple()
    live = [i for i, h in enumerate(targets)
            if h.vertex_count <= s.vertex_count and h.simple().edge_count <= s.edge_count]
    for i in live:
        if targets[i].vertex_count == 0:
            return i, MinorWitness((), {})
    if not live:
        return None
    sub = [targets[i] for i in live]
    search = _Search(sub, budget, apex_prune)
    adj = s.adjacency_masks()
    bsets = [1 << v for v in range(s.vertex_count)]
    res = search.node(adj, bsets)
    if res is None:
        return None
    ti, sets = res
    w = _witness(s, sub[ti], sets)
    if not verify_minor_witness(g, sub[ti], w):
        raise RuntimeError("internal error: minor witness failed verification")
    return live[ti], w


def has_minor(g: Graph, h: Graph, budget: int | None = DEFAULT_BUDGET) -> MinorWitness | None:
    """Witness that ``h`` is a minor of ``g``, or ``None`` if it is not.

    Raises :class:`BudgetExceeded` if the search runs out of nodes first.
    """
    res = find_any_minor(g, [h], budget)
    return None if res is None else res[1]


# -- planarity, IL, apex, IK --------------------------------------------------

K5 = complete_graph(5)
K33 = complete_multipartite(3, 3)
K7 = complete_graph(7)
K3311 = complete_multipartite(3, 3, 1, 1)
PF_NAMES = ("PF1", "PF2", "PF3", "PF4", "PF5", "PF6", "PF7")


def is_planar(g: Graph, method: str = "dmp", budget: int | None = DEFAULT_BUDGET) -> bool:
    """Planarity. ``method="minor"`` decides it by searching for K5 and K3,3
    minors; the default face-embedding routine gives the same answer."""
    if method == "dmp":
        return is_planar_dmp(g)
    if method == "minor":
        return find_any_minor(g, [K5, K33], budget) is None
    raise ValueError(f"unknown planarity method {method!r}")


@dataclass(frozen=True)
class IlResult:
    is_il: bool
    member: str | None = None
    witness: MinorWitness | None = None

    def __bool__(self):
        return self.is_il


def is_il(g: Graph, budget: int | None = DEFAULT_BUDGET, apex_prune: bool = True) -> IlResult:
    """IL iff some Petersen family graph is a minor.

    All seven members are searched together; at a node the members are
    tried in ascending vertex count. None of them is apex, so apex nodes are
    pruned unless ``apex_prune`` is off.
    """
    fam = petersen_family()
    res = find_any_minor(g, fam, budget, apex_prune=apex_prune)
    if res is None:
        return IlResult(False)
    i, w = res
    return IlResult(True, PF_NAMES[i], w)


def _minor_children(g: Graph):
    s = g.simple()
    for e in s.edges:
        yield ("delete", e), Graph(s.vertex_count, [f for f in s.edges if f != e])
    from .graphcore import contract_edge
    for e in s.edges:
        yield ("contract", e), contract_edge(s, e, simplify=True)
    deg = s.degrees()
    for v in range(s.vertex_count):
        if deg[v] == 0:
            yield ("delete_vertex", v), s.remove_vertices([v])


def is_minor_minimal_il(g: Graph, budget: int | None = DEFAULT_BUDGET) -> bool:
    """IL, and no single edge deletion, edge contraction or isolated-vertex
    deletion is IL. Single steps suffice because IL-ness is minor monotone."""
    if not is_il(g, budget):
        return False
    return all(not is_il(child, budget) for _, child in _minor_children(g))


@dataclass(frozen=True)
class ApexResult:
    is_apex: bool
    removed: tuple[int, ...] | None = None

    def __bool__(self):
        return self.is_apex


def is_n_apex(g: Graph, n: int) -> ApexResult:
    """Can ``n`` vertices be removed to leave a planar graph? The witness is
    the lexicographically first such set."""
    if n < 0:
        raise ValueError("n must be >= 0")
    for drop in combinations(range(g.vertex_count), min(n, g.vertex_count)):
        if is_planar(g.remove_vertices(drop)):
            return ApexResult(True, drop)
    return ApexResult(False)


@dataclass(frozen=True)
class IkResult:
    verdict: str  # "IK" | "notIK" | "unknown"
    reason: str
    witness: MinorWitness | None = None
    removed: tuple[int, ...] | None = None


def classify_ik(g: Graph, budget: int | None = DEFAULT_BUDGET) -> IkResult:
    """IK if a K7 or K3,3,1,1 minor exists, not IK if 2-apex, else unknown."""
    res = find_any_minor(g, [K7, K3311], budget, apex_prune=True)
    apex = is_n_apex(g, 2)
    if res is not None and apex:
        raise RuntimeError("inconsistent: graph has an IK minor and is 2-apex")
    if res is not None:
        name = ("K7", "K3,3,1,1")[res[0]]
        return IkResult("IK", f"contains a {name} minor", witness=res[1])
    if apex:
        return IkResult("notIK", f"2-apex: removing {list(apex.removed)} leaves a planar graph",
                        removed=apex.removed)
    return IkResult("unknown", "no K7 or K3,3,1,1 minor and not 2-apex")


# -- counting bounds and complements -------------------------------------------

def mader_threshold(n: int, v: int) -> int:
    """Edge count above which a ``v``-vertex graph has a ``K_{n+2}`` minor (n <= 5)."""
    if not 1 <= n <= 5:
        raise ValueError("the clique-minor edge bound holds only for 1 <= n <= 5")
    return n * v - math.comb(n + 1, 2)


def mader_guarantees_clique_minor(n: int, g: Graph) -> bool:
    return g.simple().edge_count > mader_threshold(n, g.vertex_count)


def random_graph(v: int, p: float, rng) -> Graph:
    edges = [e for e in combinations(range(v), 2) if rng.random() < p]
    return Graph(v, edges)


@dataclass
class ComplementSample:
    graph6: str
    edges: int
    graph_il: str          # "IL" | "notIL" | "budget"
    complement_il: str
    outcome: str           # "graph" | "complement" | "both" | "neither" | "incomplete"


@dataclass
class ComplementReport:
    vertices: int
    seed: int
    samples: list[ComplementSample]
    guaranteed: bool       # at least one of G, G^c is IL for every G on this many vertices

    @property
    def completed(self) -> list[ComplementSample]:
        return [s for s in self.samples if s.outcome != "incomplete"]

    @property
    def violations(self) -> list[ComplementSample]:
        if not self.guaranteed:
            return []
        return [s for s in self.completed if s.outcome == "neither"]

    def to_json(self):
        return {
            "vertices": self.vertices,
            "seed": self.seed,
            "guaranteed": self.guaranteed,
            "samples": [vars(s) for s in self.samples],
            "completed": len(self.completed),
            "incomplete": len(self.samples) - len(self.completed),
            "neither": sum(s.outcome == "neither" for s in self.samples),
        }


def _il_status(g: Graph, budget) -> str:
    try:
        return "IL" if is_il(g, budget) else "notIL"
    except BudgetExceeded:
        return "budget"


def complement_il_check(v: int, samples: int, seed: int, budget: int | None = DEFAULT_BUDGET,
                        p: float = 0.5) -> ComplementReport:
    """For random ``v``-vertex graphs, which of ``G`` and its complement is IL?

    Budget overruns are recorded per sample. A sample is complete when both
    verdicts are known, or when one side is IL (then at least one is IL
    whatever the other turns out to be).
    """
    if v < 1:
        raise ValueError("v must be >= 1")
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(samples):
        g = random_graph(v, p, rng)
        gc = complement(g)
        a, b = _il_status(g, budget), _il_status(gc, budget)
        if a == "IL" and b == "IL":
            outcome = "both"
        elif a == "IL" and b == "notIL":
            outcome = "graph"
        elif a == "notIL" and b == "IL":
            outcome = "complement"
        elif a == "notIL" and b == "notIL":
            outcome = "neither"
        else:
            outcome = "incomplete" if "IL" not in (a, b) else ("graph" if a == "IL" else "complement")
        out.append(ComplementSample(to_graph6(g), g.edge_count, a, b, outcome))
    return ComplementReport(v, seed, out, guaranteed=v >= 13)
