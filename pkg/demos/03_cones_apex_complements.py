"""
Cones, apex graphs and complements
==================================

A graph is planar exactly when its cone is not intrinsically linked.
Coning with an edge instead of a vertex gives a 2-apex graph, which is
never intrinsically knotted. On 13 or more vertices, a graph or its
complement is intrinsically linked.
"""

# %%
from ilgraphs import catalog, classify_ik, complete_graph, cone, is_il, is_planar
from ilgraphs.minors import complement_il_check, mader_threshold

for name in ["K4", "C5", "K5", "K3,3"]:
    g = catalog(name)
    print(f"{name:5} planar={is_planar(g)!s:5} cone IL={is_il(cone(g, complete_graph(1))).is_il}")

# %%
for name in ["C5", "K4", "K5"]:
    r = classify_ik(cone(catalog(name), complete_graph(2)))
    print(name, "+ K2:", r.verdict, r.reason)

# %%
# More than n*v - C(n+1, 2) edges force a K_{n+2} minor.
print("K6 minor forced on 15 vertices above", mader_threshold(4, 15), "edges")

# %%
rep = complement_il_check(13, 5, seed=0)
for s in rep.samples:
    print(s.graph6, s.edges, "edges:", s.outcome)
