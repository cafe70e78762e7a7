"""With a single X vertex, Visscher's complex is the Taylor simplex.

The face [1,B] corresponds to the subset B, and the matrices agree entry
for entry.
"""
from cellres import EdgeWeighting, build_edge_weighted, build_taylor, edge_weight_labels

w = EdgeWeighting.from_rows([[3, 1, 2, 2]])
F = build_edge_weighted(w)
T = build_taylor(edge_weight_labels(w).generators())
print("ranks", F.ranks(), T.ranks())
print("identical differentials:", all(F.diff(d) == T.diff(d) for d in range(1, F.top + 1)))
print("d2 =", F.diff(2).to_strings())
