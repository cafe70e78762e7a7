"""Why [[2,3],[3,2]] is not resolved by Visscher's complex.

The oracle walks the lcm lattice.  At X1^2 X2^2 Y1^2 Y2^2 only the two
weight-2 corners survive, and two isolated points have reduced H_0 of rank 1.
The vertex-deletion test sees the same thing: no vertex has all its edges
at the minimum weight.
"""
from cellres import EdgeWeighting, bs_oracle, edge_weight_labels, theorem_predicate, visscher_complex

for rows in ([[2, 3], [3, 2]], [[2, 2], [3, 2]], [[1, 2], [3, 4]]):
    w = EdgeWeighting.from_rows(rows)
    ok, trace = theorem_predicate(w)
    verdict = bs_oracle(edge_weight_labels(w))
    print(rows, "predicate:", ok, f"[{trace.describe()}]", "oracle:", verdict.is_resolution)
    if verdict.witness is not None:
        sub = visscher_complex(edge_weight_labels(w)).restrict(verdict.witness)
        cells = sorted(str(c) for c in sub.cells)
        print("   witness", verdict.witness, "cells", cells, "H~", verdict.witness_profile.nonzero())
