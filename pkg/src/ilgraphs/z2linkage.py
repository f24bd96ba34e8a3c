"""Deciding mod-2 intrinsic linking with a linear system.

Fix the base embedding. Adding ``x_p`` full twists on disjoint edge pair
``p`` changes ``lk(C, D) mod 2`` by the sum of ``x_p`` over pairs with one
edge in ``C`` and the other in ``D``. An embedding with every disjoint cycle
pair evenly linked exists iff

    sum_{p in P(C, D)} x_p = lk_0(C, D)   (mod 2)   for all disjoint (C, D)

is solvable. Both outcomes come with a certificate that can be checked
without the solver: a 0/1 twist vector, or a set of cycle pairs covering
every edge pair an even number of times while their base linking numbers
have odd sum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .embedding import EmbeddingSpec, _base_over_masks, _pair_table, edge_pair_count, linking_number, linking_number_mod2
from .errors import BudgetExceeded
from .gf2 import bits_to_list, solve_gf2
from .graphcore import Cycle, Graph, disjoint_cycle_pairs

DEFAULT_MAX_PAIRS = 2_000_000


@dataclass(frozen=True)
class Gf2System:
    rows: tuple[int, ...]
    rhs: tuple[int, ...]
    pairs: tuple[tuple[Cycle, Cycle], ...]
    ncols: int

    @property
    def nrows(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class LinklessWitness:
    twists: tuple[int, ...]

    def to_json(self):
        return {"witness": list(self.twists)}


@dataclass(frozen=True)
class Obstruction:
    pairs: tuple[tuple[Cycle, Cycle], ...]

    def to_json(self):
        return {"obstruction": [[c.to_json(), d.to_json()] for c, d in self.pairs]}


Z2Certificate = LinklessWitness | Obstruction


@dataclass(frozen=True)
class Z2Decision:
    is_il: bool
    certificate: Z2Certificate


def _row_bits(c: Cycle, d: Cycle, index: dict) -> int:
    row = 0
    for e in c.edges:
        for f in d.edges:
            p = index.get((e, f))
            if p is not None:
                row |= 1 << p
    return row


def build_system(graph: Graph, max_pairs: int = DEFAULT_MAX_PAIRS) -> Gf2System:
    """One row per disjoint cycle pair, one column per disjoint edge pair."""
    pairs = disjoint_cycle_pairs(graph, limit=max_pairs)
    _, index = _pair_table(graph)
    over = _base_over_masks(graph)
    rows, rhs = [], []
    for c, d in pairs:
        rows.append(_row_bits(c, d, index))
        dm = d.edge_mask
        rhs.append(sum((over[e] & dm).bit_count() for e in c.edges) & 1)
    return Gf2System(tuple(rows), tuple(rhs), tuple(pairs), edge_pair_count(graph))


def solve(system: Gf2System) -> Z2Certificate:
    res = solve_gf2(system.rows, system.rhs, system.ncols)
    if res.consistent:
        return LinklessWitness(tuple(bits_to_list(res.solution, system.ncols)))
    combo = res.combination
    chosen = tuple(system.pairs[i] for i in range(system.nrows) if combo >> i & 1)
    return Obstruction(chosen)


def decide_z2_il(graph: Graph, max_pairs: int = DEFAULT_MAX_PAIRS) -> Z2Decision:
    """Is every embedding of ``graph`` linked mod 2? Certificate checked before return."""
    cert = solve(build_system(graph, max_pairs))
    if isinstance(cert, LinklessWitness):
        ok = verify_linkless_certificate(graph, cert, max_pairs=max_pairs)
    else:
        ok = verify_obstruction(graph, cert)
    if not ok:
        raise RuntimeError("internal error: certificate failed verification")
    return Z2Decision(isinstance(cert, Obstruction), cert)


def is_cycle_of(graph: Graph, c: Cycle) -> bool:
    vs, es = c.vertices, c.edges
    L = len(vs)
    if L < 2 or len(set(vs)) != L or len(set(es)) != L:
        return False
    for i, e in enumerate(es):
        if not 0 <= e < graph.edge_count:
            return False
        if sorted((vs[i], vs[(i + 1) % L])) != list(graph.edges[e]):
            return False
    return True


def verify_linkless_certificate(graph: Graph, witness: LinklessWitness,
                                max_pairs: int = DEFAULT_MAX_PAIRS) -> bool:
    """Every disjoint cycle pair is evenly linked once the 0/1 twists are applied."""
    if len(witness.twists) != edge_pair_count(graph):
        raise ValueError("witness length does not match the graph's edge-pair count")
    emb = EmbeddingSpec(graph, tuple(t & 1 for t in witness.twists))
    return all(linking_number_mod2(emb, c, d) == 0 for c, d in disjoint_cycle_pairs(graph, limit=max_pairs))


def verify_obstruction(graph: Graph, obstruction: Obstruction) -> bool:
    """Even cover of every edge pair, odd total of base linking numbers."""
    pairs, index = _pair_table(graph)
    cover = [0] * len(pairs)
    base = EmbeddingSpec.base(graph)
    total = 0
    seen = set()
    for c, d in obstruction.pairs:
        if not (is_cycle_of(graph, c) and is_cycle_of(graph, d)):
            raise ValueError("obstruction names a cycle that is not in the graph")
        if c.vertex_mask & d.vertex_mask:
            return False
        key = frozenset((c, d))
        if key in seen:
            return False
        seen.add(key)
        for e in c.edges:
            for f in d.edges:
                p = index.get((e, f))
                if p is not None:
                    cover[p] += 1
        total += linking_number(base, c, d)
    return bool(obstruction.pairs) and all(x % 2 == 0 for x in cover) and total % 2 == 1


def total_linking_parity(emb: EmbeddingSpec, max_pairs: int = DEFAULT_MAX_PAIRS) -> int:
    pairs = disjoint_cycle_pairs(emb.graph, limit=max_pairs)
    return sum(linking_number_mod2(emb, c, d) for c, d in pairs) & 1


__all__ = [
    "Gf2System", "LinklessWitness", "Obstruction", "Z2Certificate", "Z2Decision",
    "build_system", "solve", "decide_z2_il", "verify_linkless_certificate",
    "verify_obstruction", "total_linking_parity", "is_cycle_of", "BudgetExceeded",
]
