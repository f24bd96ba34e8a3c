"""Exact tools for intrinsically linked graphs.

Two independent decision procedures (mod-2 linking linear algebra and
Petersen family minor search), move closures, cone / apex / complement
checks, a clique-minor edge bound, and a double-linked D4 minor checker for
given embeddings. Every positive or negative answer comes with a
certificate that can be replayed by an independent verifier.
"""

__version__ = "0.1.0"

from .errors import BudgetExceeded, GraphFormatError
from .graphcore import (Cycle, Graph, canonical_form, catalog, complement, complete_graph, cone,
                        d4_graph, delete_edge, delta_y, is_isomorphic, parse_edge_list,
                        parse_graph6, petersen_family, to_graph6, write_edge_list, y_delta)
from .embedding import EmbeddingSpec, linking_number, linking_number_mod2, random_embedding
from .z2linkage import decide_z2_il, total_linking_parity, verify_linkless_certificate, verify_obstruction
from .minors import (classify_ik, complement_il_check, has_minor, is_il, is_minor_minimal_il,
                     is_n_apex, is_planar, mader_threshold, verify_minor_witness)
from .families import closure, descendants, family_report
from .d4search import d4_census, find_double_linked_d4, verify_d4_witness

__all__ = [
    "BudgetExceeded", "GraphFormatError", "Cycle", "Graph", "canonical_form", "catalog",
    "complement", "complete_graph", "cone", "d4_graph", "delete_edge",
    "petersen_family", "delta_y", "is_isomorphic", "parse_edge_list", "parse_graph6",
    "to_graph6", "write_edge_list", "y_delta", "EmbeddingSpec", "linking_number",
    "linking_number_mod2", "random_embedding", "decide_z2_il", "total_linking_parity",
    "verify_linkless_certificate", "verify_obstruction", "classify_ik", "complement_il_check",
    "has_minor", "is_il", "is_minor_minimal_il", "is_n_apex", "is_planar", "mader_threshold",
    "verify_minor_witness", "closure", "descendants", "family_report", "d4_census",
    "find_double_linked_d4", "verify_d4_witness",
]
