"""Proper connection and proper-walk connection of arc-colored digraphs."""
from .certificate import BipartiteSpanningCertificate
from .digraph import (ChordClass, CycleOrder, Digraph, DigraphError, VertexBipartition,
                      biorient, chord_class, chords, complete_biorientation, directed_cycle,
                      find_hamiltonian_cycle, is_balanced, is_bipartite_with,
                      is_complete_biorientation, is_spanning, is_strong, make_circulant,
                      reverse, strong_components, two_color_underlying)
from .ears import EarPlan, circulant_bipartite_subdigraph, ear_plan, lemma_subcase
from .errors import PreconditionError, VerificationError
from .partition import (crossing_digraph, is_strong_partition, strong_two_partition_bruteforce,
                        strong_two_partition_construct)
from .pc_construct import (almost_bipartite_coloring, certificate_coloring,
                           circulant_pc2_coloring, even_head_subdigraph, even_tail_subdigraph,
                           tail_side_coloring)
from .verify import (ArcColoring, ConnectivityReport, NotStrongError, NumberResult,
                     PartialArcColoring, is_properly_connected, is_properly_walk_connected,
                     pc_number, pc_path_exists, pc_walk_exists, wc_number)
from .wc_construct import (CycleDecomposition, LandingError, WalkColoring,
                           balanced_hamiltonian_wc_coloring, cycle_decompose,
                           euler_alternating_coloring, short_chord_wc_coloring)

__version__ = "0.1.0"
