"""Elementary cycles, disjoint cycle pairs and disjoint edge pairs."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph


@dataclass(frozen=True, order=True)
class Cycle:
    """An elementary cycle in canonical orientation.

    ``vertices[0]`` is the smallest vertex. For length >= 3 the second vertex
    is the smaller of its two cycle-neighbours; for a digon the cycle leaves
    along the lower edge id. ``edges[i]`` is the id of the edge joining
    ``vertices[i]`` and ``vertices[i + 1]`` (cyclically).
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    vertex_mask: int = field(default=0, compare=False, repr=False)
    edge_mask: int = field(default=0, compare=False, repr=False)

    def __post_init__(self):
        if len(self.vertices) != len(self.edges):
            raise ValueError("cycle needs as many edges as vertices")
        vm = 0
        for v in self.vertices:
            vm |= 1 << v
        em = 0
        for e in self.edges:
            em |= 1 << e
        object.__setattr__(self, "vertex_mask", vm)
        object.__setattr__(self, "edge_mask", em)

    def __len__(self):
        return len(self.vertices)

    def sort_key(self):
        return (len(self.vertices), self.vertices, self.edges)

    def directions(self, graph: Graph) -> dict[int, int]:
        """``edge id -> +1`` if traversed from lower to higher vertex, else -1."""
        out = {}
        L = len(self.vertices)
        for i, e in enumerate(self.edges):
            a, b = self.vertices[i], self.vertices[(i + 1) % L]
            out[e] = 1 if a < b else -1
        return out

    def reversed(self) -> "Cycle":
        """Same cycle, opposite traversal (not canonical in general)."""
        vs = (self.vertices[0],) + tuple(reversed(self.vertices[1:]))
        es = tuple(reversed(self.edges))
        return Cycle(vs, es)

    def to_json(self):
        return {"vertices": list(self.vertices), "edges": list(self.edges)}

    @classmethod
    def from_json(cls, obj) -> "Cycle":
        return cls(tuple(obj["vertices"]), tuple(obj["edges"]))


def canonicalize(vertices, edges) -> Cycle:
    """Rotate/reflect a closed walk description into canonical orientation."""
    vs, es = list(vertices), list(edges)
    L = len(vs)
    i = vs.index(min(vs))
    vs = vs[i:] + vs[:i]
    es = es[i:] + es[:i]
    if L >= 3:
        flip = vs[-1] < vs[1]
    elif L == 2:
        flip = es[1] < es[0]
    else:
        flip = False
    if flip:
        vs = [vs[0]] + vs[1:][::-1]
        es = es[::-1]
    return Cycle(tuple(vs), tuple(es))


def enumerate_cycles(g: Graph) -> list[Cycle]:
    """All elementary cycles (length >= 2), each once, sorted by
    ``(length, vertices, edges)``. Loops are ignored.

    Cycles through parallel edges are distinguished by their edge ids.
    Exponential in general.
    """
    inc = g.incidence()
    out: list[Cycle] = []
    for s in range(g.vertex_count):
        # cycles whose minimum vertex is s
        path_v = [s]
        path_e: list[int] = []
        on_path = 1 << s

        def extend(v):
            nonlocal on_path
            for e, w in inc[v]:
                if w == s:
                    L = len(path_v)
                    if L >= 3 and path_v[1] < v:
                        out.append(Cycle(tuple(path_v), tuple(path_e + [e])))
                    elif L == 2 and e > path_e[0]:
                        out.append(Cycle(tuple(path_v), tuple(path_e + [e])))
                    continue
                if w < s or on_path >> w & 1:
                    continue
                path_v.append(w)
                path_e.append(e)
                on_path |= 1 << w
                extend(w)
                on_path &= ~(1 << w)
                path_v.pop()
                path_e.pop()

        extend(s)
    out.sort(key=Cycle.sort_key)
    return out


def count_cycles(g: Graph) -> int:
    return len(enumerate_cycles(g))


def disjoint_cycle_pairs(g: Graph, cycles: list[Cycle] | None = None,
                         limit: int | None = None) -> list[tuple[Cycle, Cycle]]:
    """All vertex-disjoint pairs ``(C, D)`` with ``C`` before ``D`` in cycle
    order; the list is sorted by the pair of positions.

    ``limit`` caps the number of pairs; exceeding it raises
    :class:`~ilgraphs.errors.BudgetExceeded`.
    """
    from ..errors import BudgetExceeded

    if cycles is None:
        cycles = enumerate_cycles(g)
    n = g.vertex_count
    full = (1 << n) - 1
    by_mask: dict[int, list[int]] = {}
    for i, c in enumerate(cycles):
        by_mask.setdefault(c.vertex_mask, []).append(i)
    masks = list(by_mask)
    pairs_idx: list[tuple[int, int]] = []
    for i, c in enumerate(cycles):
        comp = full & ~c.vertex_mask
        if comp.bit_count() < 2:
            continue
        if (1 << comp.bit_count()) <= len(masks):
            sub = comp
            cand = []
            while sub:
                if sub in by_mask:
                    cand.append(sub)
                sub = (sub - 1) & comp
        else:
            cand = [m for m in masks if not m & c.vertex_mask]
        for m in cand:
            for j in by_mask[m]:
                if j > i:
                    pairs_idx.append((i, j))
        if limit is not None and len(pairs_idx) > limit:
            raise BudgetExceeded(f"more than {limit} disjoint cycle pairs", used=len(pairs_idx))
    pairs_idx.sort()
    return [(cycles[i], cycles[j]) for i, j in pairs_idx]


@dataclass(frozen=True, order=True)
class EdgePair:
    """Two vertex-disjoint edges (by edge id, ``first < second``) and the
    pair's position in the lexicographic order of all such pairs."""

    first: int
    second: int
    index: int = field(compare=False)


def disjoint_edge_pairs(g: Graph) -> list[EdgePair]:
    out = []
    es = g.edges
    for i, (a, b) in enumerate(es):
        for j in range(i + 1, len(es)):
            c, d = es[j]
            if a != c and a != d and b != c and b != d:
                out.append(EdgePair(i, j, len(out)))
    return out


def edge_pair_index(g: Graph) -> dict[tuple[int, int], int]:
    """``(edge_id, edge_id) -> pair index``, both orders present."""
    idx = {}
    for p in disjoint_edge_pairs(g):
        idx[(p.first, p.second)] = p.index
        idx[(p.second, p.first)] = p.index
    return idx
