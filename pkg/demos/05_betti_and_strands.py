"""Betti numbers three ways, and one multigraded strand.

The closed formula, the ranks of F, and Tor computed from F ⊗ k agree
whenever the complex is a resolution.  The strand of F at a monomial f is
the cellular chain complex of the restriction C_{<=f}, shifted by one.
"""
from cellres import EdgeWeighting, betti_formula, build_edge_weighted, edge_weight_labels, strand
from cellres import reduced_homology, theorem_predicate, visscher_complex
from cellres.homology import tor_ranks
from cellres.monomials import Monomial

w = EdgeWeighting.from_rows([[1, 1, 1], [2, 2, 2], [2, 4, 5]])
F = build_edge_weighted(w)
print("resolution:", theorem_predicate(w)[1].describe())
print("formula:", [1] + [betti_formula(3, 3, k) for k in range(F.top)])
print("ranks:  ", F.ranks())
print("Tor:    ", tor_ranks(F))

bad = EdgeWeighting.from_rows([[2, 3], [3, 2]])
f = Monomial.parse("X1^2*X2^2*Y1^2*Y2^2", 2, 2)
s = strand(build_edge_weighted(bad), f)
print("strand dims at", f, s.dims(), "homology", s.homology().nonzero())
print("restriction H~ shifted", reduced_homology(visscher_complex(edge_weight_labels(bad)).restrict(f)).shifted(1).nonzero())
