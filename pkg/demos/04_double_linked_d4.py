"""
Double-linked D4 minors
=======================

D4 is a 4-cycle with doubled edges. An embedding is double linked when
both pairs of opposite digons have odd linking number. We search random
embeddings of K3,3,1,1 for such a minor and replay the witness.
"""

# %%
from ilgraphs import catalog, random_embedding
from ilgraphs.d4search import d4_census, find_double_linked_d4, verify_d4_witness

g = catalog("K3,3,1,1")
emb = random_embedding(g, seed=4, twist_bound=3)
w = find_double_linked_d4(emb)
print("branch sets:", [sorted(b) for b in w.branch_sets])
print("cycles:", [z.vertices for z in w.cycles])
print("verified:", verify_d4_witness(emb, w))

# %%
census = d4_census(g, 10, seed=1)
print(census.to_json())
