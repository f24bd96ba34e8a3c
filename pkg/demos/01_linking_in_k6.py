"""
Linked triangles in K6
======================

Every embedding of K6 contains a pair of disjoint cycles that cannot be
pulled apart. Here we look at that from three angles: random embeddings,
the mod-2 sum over all disjoint cycle pairs, and the linear system whose
inconsistency proves the graph is intrinsically linked.
"""

# %%
# Embeddings are the convex drawing of the graph plus integer twists
# between disjoint edge pairs.
import numpy as np

from ilgraphs import EmbeddingSpec, complete_graph, delete_edge, random_embedding
from ilgraphs.embedding import all_links
from ilgraphs.graphcore import disjoint_cycle_pairs, disjoint_edge_pairs, triangles
from ilgraphs.z2linkage import build_system, decide_z2_il, total_linking_parity

k6 = complete_graph(6)
print("triangles:", len(triangles(k6)))
print("disjoint cycle pairs:", len(disjoint_cycle_pairs(k6)))
print("disjoint edge pairs (twist slots):", len(disjoint_edge_pairs(k6)))

# %%
# In the untwisted drawing exactly one triangle pair is linked.
base = EmbeddingSpec.base(k6)
for c, d, lk in all_links(base):
    print("linked:", c.vertices, d.vertices, "lk =", lk)

# %%
# Twisting changes which pairs link, never the parity of the total.
parities = np.array([total_linking_parity(random_embedding(k6, s, 3)) for s in range(200)])
print("total parity over 200 embeddings:", np.unique(parities))

# %%
# The same fact as linear algebra: one row per disjoint cycle pair, one
# column per twist slot. Adding up all ten rows gives 0 = 1.
system = build_system(k6)
print("system shape:", (system.nrows, system.ncols))
decision = decide_z2_il(k6)
print("IL:", decision.is_il, "with an obstruction of", len(decision.certificate.pairs), "pairs")

# %%
# Removing one edge makes the system solvable; the solution is an
# embedding in which every disjoint pair has even linking number.
k6e = delete_edge(k6, (0, 1))
d = decide_z2_il(k6e)
emb = EmbeddingSpec(k6e, d.certificate.twists)
odd = [lk for _, _, lk in all_links(emb) if lk % 2]
print("K6 - e IL:", d.is_il, "| odd pairs in the witness embedding:", len(odd))
