"""Combinatorial spatial embeddings and linking numbers.

The base embedding places vertex ``i`` at angle ``2*pi*i/n`` on a circle and
draws every edge as a straight chord. Two chords with four distinct
endpoints cross exactly when their endpoints interleave around the circle.
At a crossing the chord whose sorted endpoint pair is lexicographically
smaller passes over. Parallel copies of an edge are treated as
infinitesimally displaced chords: they cross the same chords and not each
other.

Any other embedding is described, as far as linking is concerned, by a twist
vector: ``twists[p]`` signed full twists between the two edges of the
``p``-th disjoint edge pair (see :func:`~ilgraphs.graphcore.disjoint_edge_pairs`).
A full twist changes the linking number of any two cycles through the pair
by one.

Crossing signs use the planar-determinant convention: with both edges
oriented low -> high, a crossing is positive when the over direction rotated
a quarter turn counterclockwise has positive dot product with the under
direction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graphcore import Cycle, Graph, disjoint_cycle_pairs, disjoint_edge_pairs, parse_edge_list, write_edge_list


@dataclass(frozen=True)
class Crossing:
    over: int
    under: int
    sign: int


def _interleave(a: int, b: int, c: int, d: int) -> bool:
    # chords {a<b} and {c<d} with four distinct endpoints
    return (a < c < b) != (a < d < b)


def _chord_sign(over: tuple[int, int], under: tuple[int, int]) -> int:
    # Points run counterclockwise with the label, so the arc a..b lies to the
    # right of the directed chord a->b. If the under chord starts inside that
    # arc it runs right-to-left across the over chord: positive.
    a, b = over
    c, _ = under
    return 1 if a < c < b else -1


@lru_cache(maxsize=256)
def base_crossings(graph: Graph) -> tuple[Crossing, ...]:
    """Crossings of the base embedding, ordered by ``(over, under)`` edge ids."""
    es = graph.edges
    out = []
    for i, (a, b) in enumerate(es):
        if a == b:
            continue
        for j in range(i + 1, len(es)):
            c, d = es[j]
            if c == d or len({a, b, c, d}) < 4 or not _interleave(a, b, c, d):
                continue
            if (a, b) < (c, d):
                out.append(Crossing(i, j, _chord_sign((a, b), (c, d))))
            else:
                out.append(Crossing(j, i, _chord_sign((c, d), (a, b))))
    out.sort(key=lambda x: (x.over, x.under))
    return tuple(out)


@lru_cache(maxsize=256)
def _pair_table(graph: Graph):
    pairs = disjoint_edge_pairs(graph)
    index = {}
    for p in pairs:
        index[(p.first, p.second)] = p.index
        index[(p.second, p.first)] = p.index
    return pairs, index


def edge_pair_count(graph: Graph) -> int:
    return len(_pair_table(graph)[0])


@lru_cache(maxsize=256)
def _base_over_masks(graph: Graph) -> tuple[int, ...]:
    masks = [0] * graph.edge_count
    for x in base_crossings(graph):
        masks[x.over] |= 1 << x.under
    return tuple(masks)


@dataclass(frozen=True)
class EmbeddingSpec:
    """A graph plus integer twists, one per disjoint edge pair (index order).

    The all-zero vector is the base embedding itself.
    """

    graph: Graph
    twists: tuple[int, ...]

    def __post_init__(self):
        tw = tuple(int(t) for t in self.twists)
        object.__setattr__(self, "twists", tw)
        d = edge_pair_count(self.graph)
        if len(tw) != d:
            raise ValueError(f"twist vector has length {len(tw)}; graph has {d} disjoint edge pairs")

    @classmethod
    def base(cls, graph: Graph) -> "EmbeddingSpec":
        return cls(graph, (0,) * edge_pair_count(graph))

    def with_twists(self, updates: dict) -> "EmbeddingSpec":
        """Copy with ``twists[p] += delta`` for each ``p, delta`` in ``updates``.

        ``p`` is a pair index or an edge-id pair ``(e, f)``.
        """
        tw = list(self.twists)
        table = _pair_table(self.graph)[1]
        for p, delta in updates.items():
            if isinstance(p, tuple):
                key = tuple(sorted(p))
                if key not in table:
                    raise ValueError(f"edges {p} are not a disjoint edge pair")
                p = table[key]
            tw[p] += delta
        return EmbeddingSpec(self.graph, tuple(tw))

    def twist(self, e: int, f: int) -> int:
        p = _pair_table(self.graph)[1].get((e, f))
        return 0 if p is None else self.twists[p]

    def mod2_masks(self) -> tuple[int, ...]:
        """Per edge ``e``: bitmask of edges ``f`` with odd over-crossing count of
        ``e`` over ``f`` plus twist count. ``lk(C, D) mod 2`` is then the parity
        of ``sum(popcount(mask[e] & D.edge_mask) for e in C)``."""
        cached = self.__dict__.get("_mod2")
        if cached is not None:
            return cached
        masks = list(_base_over_masks(self.graph))
        pairs, _ = _pair_table(self.graph)
        for p, t in zip(pairs, self.twists):
            if t & 1:
                masks[p.first] ^= 1 << p.second
                masks[p.second] ^= 1 << p.first
        masks = tuple(masks)
        object.__setattr__(self, "_mod2", masks)
        return masks

    def to_json(self) -> dict:
        return {"graph": write_edge_list(self.graph), "twists": list(self.twists)}

    @classmethod
    def from_json(cls, obj) -> "EmbeddingSpec":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(parse_edge_list(obj["graph"]), tuple(obj["twists"]))


def _check_disjoint(c: Cycle, d: Cycle) -> None:
    if c.vertex_mask & d.vertex_mask:
        raise ValueError("linking number needs vertex-disjoint cycles")


def linking_number(emb: EmbeddingSpec, c: Cycle, d: Cycle) -> int:
    """Integer linking number of two disjoint cycles in ``emb``.

    Sums the signs of base crossings where an edge of ``c`` passes over an
    edge of ``d``, each weighted by the traversal directions, plus the twists
    on every edge pair with one edge in each cycle.
    """
    _check_disjoint(c, d)
    g = emb.graph
    tc = c.directions(g)
    td = d.directions(g)
    lk = 0
    for x in base_crossings(g):
        if x.over in tc and x.under in td:
            lk += x.sign * tc[x.over] * td[x.under]
    index = _pair_table(g)[1]
    for e, se in tc.items():
        for f, sf in td.items():
            p = index.get((e, f))
            if p is not None and emb.twists[p]:
                lk += emb.twists[p] * se * sf
    return lk


def linking_number_mod2(emb: EmbeddingSpec, c: Cycle, d: Cycle) -> int:
    _check_disjoint(c, d)
    masks = emb.mod2_masks()
    dm = d.edge_mask
    total = 0
    for e in c.edges:
        total += (masks[e] & dm).bit_count()
    return total & 1


def all_links(emb: EmbeddingSpec, min_abs: int = 1, pairs=None) -> list[tuple[Cycle, Cycle, int]]:
    """Every disjoint cycle pair with ``|lk| >= min_abs``, strongest first."""
    if min_abs < 1:
        raise ValueError("min_abs must be positive")
    if pairs is None:
        pairs = disjoint_cycle_pairs(emb.graph)
    out = []
    for c, d in pairs:
        lk = linking_number(emb, c, d)
        if abs(lk) >= min_abs:
            out.append((c, d, lk))
    out.sort(key=lambda t: (-abs(t[2]), t[0].sort_key(), t[1].sort_key()))
    return out


def random_embedding(graph: Graph, seed: int, twist_bound: int) -> EmbeddingSpec:
    """Twists drawn uniformly from ``[-twist_bound, twist_bound]``."""
    if twist_bound < 0:
        raise ValueError("twist_bound must be >= 0")
    d = edge_pair_count(graph)
    rng = np.random.default_rng(seed)
    tw = rng.integers(-twist_bound, twist_bound + 1, size=d)
    return EmbeddingSpec(graph, tuple(int(t) for t in tw))
