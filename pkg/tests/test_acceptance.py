"""Acceptance suite: ten end-to-end criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` (the lines are printed even
without ``-s``) or directly with ``python tests/test_acceptance.py``.
Every criterion fixture returns its measurements together with every
certificate it produced; criterion 10 replays them all.
"""

import sys
import time

import networkx as nx
import numpy as np
import pytest

from conftest import from_nx, to_nx
from ilgraphs.d4search import find_double_linked_d4, verify_d4_witness
from ilgraphs.embedding import EmbeddingSpec, random_embedding
from ilgraphs.errors import BudgetExceeded
from ilgraphs.families import closure, descendants
from ilgraphs.graphcore import (catalog, complete_graph, cone, contract_edge, d4_graph, delete_edge,
                                disjoint_cycle_pairs, disjoint_edge_pairs, parse_graph6,
                                complement, petersen_family, triangles)
from ilgraphs.minors import (classify_ik, complement_il_check, has_minor, is_il,
                             is_minor_minimal_il, is_planar, mader_guarantees_clique_minor,
                             mader_threshold, random_graph, verify_minor_witness)
from ilgraphs.z2linkage import (Obstruction, decide_z2_il, total_linking_parity,
                                verify_linkless_certificate, verify_obstruction)


def announce(request, n, title, ok, detail, seconds):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n:>2}: {title}: {detail} ({seconds:.1f}s)"
    capman = request.config.pluginmanager.getplugin("capturemanager")
    if capman is not None:
        with capman.global_and_fixture_disabled():
            print("\n" + line, flush=True)
    else:
        print(line, flush=True)


class Certs:
    """Certificates gathered by one criterion: (kind, graph, H or embedding, certificate)."""

    def __init__(self):
        self.items = []

    def z2(self, g, decision):
        self.items.append(("obstruction" if decision.is_il else "linkless", g, None, decision.certificate))

    def minor(self, g, h, w):
        self.items.append(("minor", g, h, w))

    def d4(self, emb, w):
        self.items.append(("d4", emb, None, w))


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


# -- criterion fixtures ---------------------------------------------------------------

@pytest.fixture(scope="module")
def c1():
    def go():
        k6 = complete_graph(6)
        certs = Certs()
        parities = [total_linking_parity(random_embedding(k6, s, 3)) for s in range(1000)]
        tri = [(c, d) for c, d in disjoint_cycle_pairs(k6) if len(c) == 3 and len(d) == 3]
        counts = (len(tri), len(triangles(k6)), len(disjoint_edge_pairs(k6)))
        certs.z2(k6, decide_z2_il(k6))
        return {"odd": sum(parities), "counts": counts}, certs
    return timed(go)


@pytest.fixture(scope="module")
def c2():
    def go():
        certs = Certs()
        bad = []
        for i, g in enumerate(petersen_family()):
            r = is_il(g)
            d = decide_z2_il(g)
            if not (r.is_il and d.is_il and is_minor_minimal_il(g)):
                bad.append((i, "member"))
            certs.minor(g, petersen_family()[i], r.witness)
            certs.z2(g, d)
            minors = [delete_edge(g, e) for e in g.edges] + [contract_edge(g, e) for e in g.edges]
            for h in minors:
                dh = decide_z2_il(h)
                certs.z2(h, dh)
                if dh.is_il or is_il(h).is_il:
                    bad.append((i, "minor"))
        return {"bad": bad, "children": sum(2 * g.edge_count for g in petersen_family())}, certs
    return timed(go)


@pytest.fixture(scope="module")
def c3():
    def go():
        certs = Certs()
        graphs = [from_nx(h) for h in nx.graph_atlas_g()[1:] if nx.is_connected(h)]
        rng = np.random.default_rng(2024)
        for _ in range(200):
            v = int(rng.integers(8, 10))
            graphs.append(random_graph(v, float(rng.uniform(0.3, 0.8)), rng))
        disagree, budget, il_count = [], 0, 0
        for g in graphs:
            try:
                r = is_il(g)
            except BudgetExceeded:
                budget += 1
                continue
            d = decide_z2_il(g)
            certs.z2(g, d)
            if r.is_il:
                il_count += 1
                certs.minor(g, petersen_family()[int(r.member[2:]) - 1], r.witness)
            if r.is_il != d.is_il:
                disagree.append(g)
        return {"graphs": len(graphs), "il": il_count, "disagree": len(disagree), "budget": budget}, certs
    return timed(go)


@pytest.fixture(scope="module")
def c4():
    def go():
        k7 = closure(complete_graph(7))
        return {"pf": len(closure(complete_graph(6))), "k7": len(k7),
                "yd": len(k7.ydelta_required), "desc": len(descendants(complete_graph(7)))}, Certs()
    return timed(go)


@pytest.fixture(scope="module")
def c5():
    def go():
        certs = Certs()
        k1, k2 = complete_graph(1), complete_graph(2)
        small = [from_nx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() <= 6]
        mismatch = 0
        for g in small:
            r = is_il(cone(g, k1))
            if r.is_il:
                certs.minor(cone(g, k1), petersen_family()[int(r.member[2:]) - 1], r.witness)
            if is_planar(g) == r.is_il:
                mismatch += 1
        rng = np.random.default_rng(7)
        planar = []
        while len(planar) < 50:
            g = random_graph(int(rng.integers(4, 10)), float(rng.uniform(0.2, 0.6)), rng)
            if nx.check_planarity(to_nx(g))[0]:
                planar.append(g)
        verdicts = [classify_ik(cone(g, k2)).verdict for g in planar]
        return {"graphs": len(small), "mismatch": mismatch,
                "not_ik": verdicts.count("notIK"), "planar": len(planar)}, certs
    return timed(go)


@pytest.fixture(scope="module")
def c6():
    def go():
        certs = Certs()
        k7 = complete_graph(7)
        il = 0
        for e in k7.edges:
            h = delete_edge(k7, e)
            r = is_il(h)
            if r.is_il:
                il += 1
                certs.minor(h, petersen_family()[int(r.member[2:]) - 1], r.witness)
        return {"il": il}, certs
    return timed(go)


@pytest.fixture(scope="module")
def c7():
    def go():
        certs = Certs()
        rng = np.random.default_rng(500)
        fired = found = 0
        for _ in range(500):
            n = int(rng.integers(1, 6))
            v = int(rng.integers(n + 2, 13))
            g = random_graph(v, float(rng.uniform(0.5, 1.0)), rng)
            if mader_guarantees_clique_minor(n, g):
                fired += 1
                h = complete_graph(n + 2)
                w = has_minor(g, h)
                if w is not None:
                    found += 1
                    certs.minor(g, h, w)
        return {"threshold": mader_threshold(4, 15), "fired": fired, "found": found}, certs
    return timed(go)


@pytest.fixture(scope="module")
def c8():
    def go():
        certs = Certs()
        linked = EmbeddingSpec.base(d4_graph()).with_twists({(0, 6): 1, (2, 4): 1})
        w = find_double_linked_d4(linked)
        if w is not None:
            certs.d4(linked, w)
        unlinked = find_double_linked_d4(EmbeddingSpec.base(d4_graph()))
        k3311 = catalog("K3,3,1,1")
        found = none = over = 0
        for seed in range(25):
            emb = random_embedding(k3311, seed, 3)
            try:
                wk = find_double_linked_d4(emb)
            except BudgetExceeded:
                over += 1
                continue
            if wk is None:
                none += 1
            else:
                found += 1
                certs.d4(emb, wk)
        return {"linked": w is not None, "unlinked_none": unlinked is None,
                "found": found, "none": none, "budget": over}, certs
    return timed(go)


@pytest.fixture(scope="module")
def c9():
    def go():
        certs = Certs()
        rep = complement_il_check(13, 20, seed=13)
        for s in rep.completed:
            g = parse_graph6(s.graph6)
            side = g if s.graph_il == "IL" else complement(g)
            r = is_il(side)
            if r.is_il:
                certs.minor(side, petersen_family()[int(r.member[2:]) - 1], r.witness)
        return {"completed": len(rep.completed), "incomplete": len(rep.samples) - len(rep.completed),
                "neither": len(rep.violations)}, certs
    return timed(go)


# -- criteria ---------------------------------------------------------------------------

def test_criterion_01_conway_gordon(request, c1):
    (m, _), sec = c1
    ok = m["odd"] == 1000 and m["counts"] == (10, 20, 45)
    announce(request, 1, "K6 parity over 1000 embeddings",
             ok, f"odd={m['odd']}/1000 counts={m['counts']}", sec)
    assert ok


def test_criterion_02_petersen_family(request, c2):
    (m, _), sec = c2
    ok = not m["bad"]
    announce(request, 2, "Petersen family minimal IL by both paths", ok,
             f"7 members, {m['children']} one-step minors, failures={m['bad']}", sec)
    assert ok


def test_criterion_03_decision_paths_agree(request, c3):
    (m, _), sec = c3
    ok = m["disagree"] == 0 and m["budget"] == 0
    announce(request, 3, "minor path agrees with GF(2) path", ok,
             f"{m['graphs']} graphs, {m['il']} IL, disagreements={m['disagree']}, budget={m['budget']}", sec)
    assert ok


def test_criterion_04_censuses(request, c4):
    (m, _), sec = c4
    ok = (m["pf"], m["k7"], m["yd"], m["desc"]) == (7, 20, 6, 14)
    announce(request, 4, "move-family censuses", ok,
             f"K6 closure={m['pf']} K7 closure={m['k7']} Y-delta required={m['yd']} descendants={m['desc']}",
             sec)
    assert ok


def test_criterion_05_cone_duality(request, c5):
    (m, _), sec = c5
    ok = m["mismatch"] == 0 and m["not_ik"] == m["planar"] == 50
    announce(request, 5, "cone duality", ok,
             f"{m['graphs']} graphs mismatches={m['mismatch']}, K2-cones notIK={m['not_ik']}/50", sec)
    assert ok


def test_criterion_06_k7_edges(request, c6):
    (m, _), sec = c6
    ok = m["il"] == 21
    announce(request, 6, "K7 minus any edge is IL", ok, f"{m['il']}/21", sec)
    assert ok


def test_criterion_07_mader(request, c7):
    (m, _), sec = c7
    ok = m["threshold"] == 50 and m["found"] == m["fired"] > 0
    announce(request, 7, "Mader bound", ok,
             f"threshold(4,15)={m['threshold']}, fired={m['fired']}/500, witnessed={m['found']}", sec)
    assert ok


def test_criterion_08_d4(request, c8):
    (m, _), sec = c8
    ok = (m["linked"] and m["unlinked_none"] and m["none"] == 0
          and m["budget"] <= 2 and m["found"] + m["budget"] == 25)
    announce(request, 8, "double-linked D4 checker", ok,
             f"constructed={m['linked']}/{m['unlinked_none']}, K3311 found={m['found']} "
             f"none={m['none']} budget={m['budget']}", sec)
    assert ok


def test_criterion_09_complements(request, c9):
    (m, _), sec = c9
    ok = m["neither"] == 0 and m["incomplete"] <= 5 and m["completed"] > 0
    announce(request, 9, "13-vertex complement guarantee", ok,
             f"completed={m['completed']}/20, violations={m['neither']}, incomplete={m['incomplete']}", sec)
    assert ok


def check(item) -> bool:
    kind, g, h, cert = item
    if kind == "obstruction":
        return isinstance(cert, Obstruction) and verify_obstruction(g, cert)
    if kind == "linkless":
        return verify_linkless_certificate(g, cert)
    if kind == "minor":
        return verify_minor_witness(g, h, cert) and minor_oracle(g, h, cert)
    if kind == "d4":
        return verify_d4_witness(g, cert)
    raise AssertionError(kind)


def minor_oracle(g, h, w) -> bool:
    """networkx re-check: disjoint connected branch sets, an edge for every edge of H."""
    x = to_nx(g)
    sets = [set(b) for b in w.branch_sets]
    if len(sets) != h.vertex_count or sum(map(len, sets)) != len(set().union(*sets)):
        return False
    if not all(b and nx.is_connected(x.subgraph(b)) for b in sets):
        return False
    return all(any(x.has_edge(p, q) for p in sets[a] for q in sets[b]) for a, b in h.simple().edges)


def test_criterion_10_soundness(request, c1, c2, c3, c5, c6, c7, c8, c9):
    t0 = time.perf_counter()
    items = [it for (_, certs), _ in (c1, c2, c3, c5, c6, c7, c8, c9) for it in certs.items]
    kinds = {}
    failed = 0
    for it in items:
        kinds[it[0]] = kinds.get(it[0], 0) + 1
        if not check(it):
            failed += 1
    ok = failed == 0 and set(kinds) == {"obstruction", "linkless", "minor", "d4"}
    detail = ", ".join(f"{k}={v}" for k, v in sorted(kinds.items()))
    announce(request, 10, "certificate soundness", ok, f"{detail}; failed={failed}",
             time.perf_counter() - t0)
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
