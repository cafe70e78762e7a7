"""The unweighted square K_{2,2}: build Visscher's complex and read off the resolution.

Four generators X_iY_j sit on the corners of a square.  The cellular
complex has ranks 1 4 4 1 and its matrices are printed below.
"""
from cellres import EdgeWeighting, build_edge_weighted, compose_is_zero, is_minimal
from cellres.export import complex_text

F = build_edge_weighted(EdgeWeighting.from_rows([[1, 1], [1, 1]]))
print(complex_text(F))
print("d∘d = 0:", compose_is_zero(F)[0], " minimal:", is_minimal(F)[0])

# weights enter through the labels; the shape stays the same
W = build_edge_weighted(EdgeWeighting.from_rows([[1, 1], [2, 3]]))
print()
print(complex_text(W))
