"""Graded Betti tables of monomial ideals via Hochster's formula.

The main entry points are :func:`hochster_betti` (the pruned Hochster
engine), :func:`taylor_betti` (an independent oracle) and :func:`invariants`.
"""
from .betti import (BettiTable, InvariantSummary, Provenance, betti_of_quotient,
                    has_linear_resolution, invariants, ndp_property, regularity,
                    projective_dimension, top_degrees)
from .complexes import (SimplicialComplex, complex_from_squarefree_ideal, faces_of_dim,
                        ideal_from_complex, induced_subcomplex, minimal_nonfaces,
                        union_of_subcomplexes)
from .errors import (BettiError, IncompleteTableError, ParseError, ResourceCapError,
                     UnitIdealError, ZeroIdealError)
from .graphs import (FrobergReport, Graph, all_graphs, clique_complex, complement,
                     edge_ideal, froberg_check, homological_index, index_via_cycles,
                     induced_cycles, is_chordal)
from .hochster import hochster_betti, prune_admissible
from .homology import (FieldSpec, GF2, Matrix, QQ, bareiss_rank, boundary_matrix, rank,
                       reduced_homology_dim)
from .ideal import (Monomial, MonomialIdeal, PolynomialContext, degree_stats, minimalize,
                    parse_monomial, polarize)
from .taylor import taylor_betti

__version__ = "0.1.0"
