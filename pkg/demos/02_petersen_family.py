"""
The Petersen family and the K7 family
=====================================

Triangle-to-star and star-to-triangle moves generate the seven minor
minimal intrinsically linked graphs from K6. Starting from K7 instead
gives twenty graphs, six of which need a star-to-triangle move.
"""

# %%
from ilgraphs import closure, complete_graph, descendants, is_il, is_minor_minimal_il
from ilgraphs.z2linkage import decide_z2_il

family = closure(complete_graph(6))
for i, m in enumerate(family.members):
    g = m.graph
    print(f"{i}: {g.vertex_count} vertices, {g.edge_count} edges, graph6 {m.graph6}")

# %%
# Both decision procedures agree, and every member is minor minimal.
for m in family.members:
    r = is_il(m.graph)
    print(r.member, decide_z2_il(m.graph).is_il, is_minor_minimal_il(m.graph))

# %%
# The K7 census.
k7_family = closure(complete_graph(7))
print("members:", len(k7_family))
print("need a star-to-triangle move:", len(k7_family.ydelta_required))
print("descendants:", len(descendants(complete_graph(7))))
