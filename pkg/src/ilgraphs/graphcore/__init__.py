"""Multigraphs, text formats, named graphs, isomorphism, moves and cycles."""

from .graph import Graph
from .formats import parse_graph6, to_graph6, parse_edge_list, write_edge_list
from .ops import (complement, cone, delete_edge, delete_vertex, contract_edge,
                  delta_y, y_delta, triangles, degree_three_vertices)
from .canon import canonical_form, certificate, is_isomorphic
from .cycles import (Cycle, EdgePair, canonicalize, enumerate_cycles, count_cycles,
                     disjoint_cycle_pairs, disjoint_edge_pairs, edge_pair_index)
from .catalog import (catalog, complete_graph, complete_multipartite, cycle_graph,
                      path_graph, petersen_graph, d4_graph, petersen_family, NAMES_HELP)
