import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ilgraphs.embedding import (Crossing, EmbeddingSpec, all_links, base_crossings,
                                edge_pair_count, linking_number, linking_number_mod2,
                                random_embedding)
from ilgraphs.graphcore import (Graph, catalog, complete_graph, cycle_graph, d4_graph,
                                disjoint_cycle_pairs, disjoint_edge_pairs, edge_pair_index,
                                enumerate_cycles, petersen_graph)
from ilgraphs.z2linkage import total_linking_parity

SMALL = ["K4", "K5", "K6", "K3,3", "K3,3,1", "PF2", "PF4", "PetersenGraph", "D4", "C6"]


# -- geometric oracle --------------------------------------------------------------

def _points(n):
    return [np.array([math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n)]) for i in range(n)]


def _segments_cross(p1, p2, q1, q2):
    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    d1, d2 = orient(q1, q2, p1), orient(q1, q2, p2)
    d3, d4 = orient(p1, p2, q1), orient(p1, p2, q2)
    return d1 * d2 < -1e-12 and d3 * d4 < -1e-12


def geometric_crossings(g: Graph):
    """(over, under, sign) from coordinates on a circle; the lexicographically
    smaller chord passes over; sign = rot90(over) . under."""
    pts = _points(g.vertex_count)
    out = set()
    es = g.edges
    for i, j in itertools.combinations(range(len(es)), 2):
        (a, b), (c, d) = es[i], es[j]
        if len({a, b, c, d}) < 4:
            continue
        if not _segments_cross(pts[a], pts[b], pts[c], pts[d]):
            continue
        over, under = (i, j) if es[i] < es[j] else (j, i)
        (oa, ob), (ua, ub) = es[over], es[under]
        o = pts[ob] - pts[oa]
        u = pts[ub] - pts[ua]
        rot = np.array([-o[1], o[0]])
        out.add((over, under, 1 if rot @ u > 0 else -1))
    return out


def oracle_lk(emb: EmbeddingSpec, c, d) -> int:
    """Half the signed count of all crossings between the two cycles,
    oriented along the traversals; a full twist adds two crossings."""
    g = emb.graph
    es = g.edges
    pts = _points(g.vertex_count)

    def direction(cyc):
        out = {}
        L = len(cyc.vertices)
        for k, e in enumerate(cyc.edges):
            out[e] = (cyc.vertices[k], cyc.vertices[(k + 1) % L])
        return out

    dc, dd = direction(c), direction(d)
    total = 0
    for x, y in itertools.product(dc, dd):
        (a, b), (p, q) = es[x], es[y]
        if len({a, b, p, q}) == 4 and _segments_cross(pts[a], pts[b], pts[p], pts[q]):
            over, under = (x, y) if es[x] < es[y] else (y, x)
            dirs = {**dc, **dd}
            o = pts[dirs[over][1]] - pts[dirs[over][0]]
            u = pts[dirs[under][1]] - pts[dirs[under][0]]
            total += 1 if np.array([-o[1], o[0]]) @ u > 0 else -1
    index = edge_pair_index(g)
    for x, y in itertools.product(dc, dd):
        p = index.get((x, y))
        if p is None or not emb.twists[p]:
            continue
        sx = 1 if dc[x][0] < dc[x][1] else -1
        sy = 1 if dd[y][0] < dd[y][1] else -1
        total += 2 * emb.twists[p] * sx * sy
    assert total % 2 == 0
    return total // 2


# -- base crossings ----------------------------------------------------------------

@pytest.mark.parametrize("name", SMALL + ["K7", "K3,3,1,1"])
def test_base_crossings_match_geometry(name):
    g = catalog(name)
    ours = {(x.over, x.under, x.sign) for x in base_crossings(g)}
    assert ours == geometric_crossings(g)


def test_base_crossing_examples():
    k4 = complete_graph(4)
    xs = base_crossings(k4)
    assert len(xs) == 1
    x = xs[0]
    assert {k4.edges[x.over], k4.edges[x.under]} == {(0, 2), (1, 3)}
    assert k4.edges[x.over] == (0, 2)
    for n in range(3, 9):
        assert base_crossings(cycle_graph(n)) == ()
    assert len(base_crossings(complete_graph(6))) == 15
    # four points in convex position have exactly one interleaving chord pair
    for n in range(4, 9):
        assert len(base_crossings(complete_graph(n))) == math.comb(n, 4)


def test_parallel_copies_cross_the_same_chords():
    g = Graph(4, [(0, 2), (0, 2), (1, 3)])
    xs = base_crossings(g)
    assert [(x.over, x.under) for x in xs] == [(0, 2), (1, 2)]
    assert isinstance(xs[0], Crossing)


@pytest.mark.parametrize("name", SMALL)
def test_crossing_parity_between_disjoint_cycles(name):
    g = catalog(name)
    xs = base_crossings(g)
    for c, d in disjoint_cycle_pairs(g):
        ce, de = set(c.edges), set(d.edges)
        n = sum((x.over in ce and x.under in de) or (x.over in de and x.under in ce) for x in xs)
        assert n % 2 == 0


# -- EmbeddingSpec -----------------------------------------------------------------

def test_embedding_spec_validates_length():
    k6 = complete_graph(6)
    assert edge_pair_count(k6) == 45
    with pytest.raises(ValueError):
        EmbeddingSpec(k6, (0,) * 44)
    assert EmbeddingSpec.base(k6).twists == (0,) * 45


def test_with_twists_by_index_and_by_edge_pair():
    d4 = d4_graph()
    e = EmbeddingSpec.base(d4)
    a = e.with_twists({(0, 6): 1})
    idx = edge_pair_index(d4)[(0, 6)]
    b = e.with_twists({idx: 1})
    assert a == b and a.twist(6, 0) == 1
    with pytest.raises(ValueError):
        e.with_twists({(0, 1): 1})


def test_embedding_json_round_trip():
    emb = random_embedding(d4_graph(), 3, 2)
    assert EmbeddingSpec.from_json(emb.to_json()) == emb
    import json
    assert EmbeddingSpec.from_json(json.dumps(emb.to_json())) == emb


def test_random_embedding_properties():
    k6 = complete_graph(6)
    assert random_embedding(k6, 1, 0) == EmbeddingSpec.base(k6)
    assert random_embedding(k6, 5, 3) == random_embedding(k6, 5, 3)
    assert random_embedding(k6, 5, 3) != random_embedding(k6, 6, 3)
    vals = set()
    for s in range(20):
        vals |= set(random_embedding(k6, s, 2).twists)
    assert vals == {-2, -1, 0, 1, 2}
    with pytest.raises(ValueError):
        random_embedding(k6, 0, -1)


# -- linking numbers ---------------------------------------------------------------

@pytest.mark.parametrize("name", ["K6", "K3,3,1", "PF2", "PetersenGraph", "D4", "K7"])
def test_linking_number_matches_crossing_oracle(name):
    g = catalog(name)
    pairs = disjoint_cycle_pairs(g)[:400]
    for seed in range(3):
        emb = random_embedding(g, seed, 2)
        for c, d in pairs:
            lk = linking_number(emb, c, d)
            assert lk == oracle_lk(emb, c, d)
            assert linking_number_mod2(emb, c, d) == lk % 2


@given(st.sampled_from(SMALL), st.integers(0, 10**6), st.data())
def test_symmetry_and_orientation(name, seed, data):
    g = catalog(name)
    pairs = disjoint_cycle_pairs(g)
    if not pairs:
        return
    c, d = data.draw(st.sampled_from(pairs))
    emb = random_embedding(g, seed, 3)
    lk = linking_number(emb, c, d)
    assert linking_number(emb, d, c) == lk
    assert linking_number(emb, c.reversed(), d) == -lk
    assert linking_number(emb, c, d.reversed()) == -lk
    assert linking_number_mod2(emb, c.reversed(), d) == lk % 2
    assert linking_number_mod2(emb, d, c) == lk % 2


@given(st.sampled_from(["K6", "K3,3,1", "PF4", "D4"]), st.integers(0, 10**6),
       st.integers(-3, 3), st.data())
def test_twist_bilinearity(name, seed, delta, data):
    g = catalog(name)
    pairs = disjoint_cycle_pairs(g)
    c, d = data.draw(st.sampled_from(pairs))
    eps = disjoint_edge_pairs(g)
    p = data.draw(st.sampled_from(eps))
    emb = random_embedding(g, seed, 2)
    moved = emb.with_twists({p.index: delta})
    tc, td = c.directions(g), d.directions(g)
    if p.first in tc and p.second in td:
        expect = delta * tc[p.first] * td[p.second]
    elif p.second in tc and p.first in td:
        expect = delta * tc[p.second] * td[p.first]
    else:
        expect = 0
    assert linking_number(moved, c, d) - linking_number(emb, c, d) == expect


def test_single_twist_changes_lk_by_one():
    k6 = complete_graph(6)
    base = EmbeddingSpec.base(k6)
    c, d = disjoint_cycle_pairs(k6)[0]
    p = edge_pair_index(k6)[(c.edges[0], d.edges[0])]
    before = linking_number(base, c, d)
    after = linking_number(base.with_twists({p: 1}), c, d)
    assert abs(after - before) == 1


def test_non_disjoint_cycles_rejected():
    k6 = complete_graph(6)
    cycles = enumerate_cycles(k6)
    emb = EmbeddingSpec.base(k6)
    with pytest.raises(ValueError):
        linking_number(emb, cycles[0], cycles[1])
    with pytest.raises(ValueError):
        linking_number_mod2(emb, cycles[0], cycles[1])


def test_d4_digon_pair_with_one_twist():
    d4 = d4_graph()
    emb = EmbeddingSpec.base(d4)
    c1, c3 = [(c, d) for c, d in disjoint_cycle_pairs(d4) if c.vertices == (0, 1)][0]
    assert linking_number(emb, c1, c3) == 0
    twisted = emb.with_twists({(c1.edges[0], c3.edges[0]): 1})
    assert linking_number_mod2(twisted, c1, c3) == 1


def test_conway_gordon_k6():
    k6 = complete_graph(6)
    base = EmbeddingSpec.base(k6)
    lks = [linking_number(base, c, d) for c, d in disjoint_cycle_pairs(k6)]
    assert len(lks) == 10 and sum(lks) % 2 == 1
    for seed in range(50):
        assert total_linking_parity(random_embedding(k6, seed, 3)) == 1


def test_total_parity_small_graphs():
    for name in ["K4", "K5"]:
        for seed in range(5):
            assert total_linking_parity(random_embedding(catalog(name), seed, 3)) == 0
    g = catalog("K3,3,1")
    vals = {total_linking_parity(random_embedding(g, s, 3)) for s in range(20)}
    assert len(vals) == 1
    # constancy follows when every edge pair lies in an even number of cycle pairs
    index = edge_pair_index(g)
    cover = [0] * edge_pair_count(g)
    for c, d in disjoint_cycle_pairs(g):
        for e in c.edges:
            for f in d.edges:
                if (e, f) in index:
                    cover[index[(e, f)]] += 1
    assert all(x % 2 == 0 for x in cover)


# -- all_links ---------------------------------------------------------------------

def test_all_links_planar_and_k6():
    assert all_links(EmbeddingSpec.base(petersen_graph().induced_subgraph(range(5)))) == []
    oct_ = Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    assert all_links(EmbeddingSpec.base(oct_)) == []
    k6 = complete_graph(6)
    links = all_links(EmbeddingSpec.base(k6), 1)
    odd = [x for x in links if x[2] % 2]
    assert len(odd) % 2 == 1
    with pytest.raises(ValueError):
        all_links(EmbeddingSpec.base(k6), 0)


def test_all_links_strong_twist_matches_oracle():
    k6 = complete_graph(6)
    c, d = disjoint_cycle_pairs(k6)[0]
    p = edge_pair_index(k6)[(c.edges[0], d.edges[0])]
    emb = EmbeddingSpec.base(k6).with_twists({p: 2})
    links = all_links(emb, 2)
    expect = []
    for a, b in disjoint_cycle_pairs(k6):
        lk = oracle_lk(emb, a, b)
        if abs(lk) >= 2:
            expect.append((a, b, lk))
    expect.sort(key=lambda t: (-abs(t[2]), t[0].sort_key(), t[1].sort_key()))
    assert links == expect
    assert any(a == c and b == d for a, b, _ in links)
    mags = [abs(x[2]) for x in links]
    assert mags == sorted(mags, reverse=True)
