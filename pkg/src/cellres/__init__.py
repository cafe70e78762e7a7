"""Cellular resolutions of edge ideals of weighted complete bipartite graphs."""
from .chains import (ChainMap, FreeChainComplex, MonomialMatrix, build_cellular, build_edge_weighted,
                     build_phi, build_taylor, build_visscher, compose_is_zero, is_minimal,
                     mapping_cone, phi_psi_isomorphism, truncate_shift)
from .criteria import betti_formula, bs_oracle, lcm_lattice, survey, theorem_predicate
from .graphs import (EdgeWeighting, VertexLabeling, VertexWeighting, delete_vertex,
                     edge_weight_labels, min_weight, vertex_weight_labels)
from .homology import HomologyProfile, is_acyclic, reduced_homology, strand
from .monomials import Monomial, MonomialSum, divides, lcm, quotient
from .visscher import Face, LabeledComplex, Simplex, enumerate_faces, label_of, simplex, visscher_complex

__version__ = "0.1.0"
