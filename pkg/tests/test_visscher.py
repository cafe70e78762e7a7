from collections import defaultdict
from itertools import product
from math import comb

import pytest

from cellres.graphs import EdgeWeighting, edge_weight_labels
from cellres.monomials import Monomial
from cellres.visscher import Face, Simplex, all_faces, enumerate_faces, simplex, visscher_complex

EMPTY = None


def incidence(cell):
    """Boundary with the empty cell appended below the vertices (incidence 1)."""
    if cell.dim == 0:
        return [(EMPTY, 1)]
    return [(sub, sign) for sub, sign, _ in cell.boundary()]


def axiom_c_failures(cells):
    bad = []
    for cell in cells:
        if cell.dim < 1:
            continue
        total = defaultdict(int)
        for mid, s1 in incidence(cell):
            for low, s2 in incidence(mid):
                total[low] += s1 * s2
        bad += [(cell, low) for low, v in total.items() if v]
    return bad


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 5) for n in range(1, 5)])
def test_incidence_axiom_c(m, n):
    assert axiom_c_failures(all_faces(m, n)) == []


@pytest.mark.parametrize("s", range(1, 7))
def test_incidence_axiom_c_simplex(s):
    labels = [Monomial.var("Y", j, 1, s) for j in range(1, s + 1)]
    assert axiom_c_failures(simplex(labels).cells) == []
    assert axiom_c_failures(simplex(labels, standard=True).cells) == []


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 3), (3, 4)])
def test_face_counts(m, n):
    for k in range(1, m + n):
        expected = sum(comb(m, a) * comb(n, k + 1 - a) for a in range(1, m + 1) if 1 <= k + 1 - a <= n)
        assert len(enumerate_faces(m, n, k)) == expected


def test_prism_counts():
    assert [len(enumerate_faces(2, 3, k)) for k in range(1, 5)] == [6, 9, 5, 1]


def test_face_dimension_and_degree():
    f = Face((1, 2), (1, 3))
    assert (f.dim, f.degree) == (2, 3)
    assert str(f) == "[12,13]"
    assert str(Face((1,), (10, 11))) == "[1,10,11]"


def test_boundary_signs():
    got = [(str(g), s) for g, s, _ in Face((1, 2), (1, 2)).boundary()]
    assert got == [("[2,12]", 1), ("[1,12]", -1), ("[12,2]", 1), ("[12,1]", -1)]
    assert Face((1,), (1,)).boundary() == []
    got = [(str(g), s) for g, s, _ in Face((1,), (1, 2, 3)).boundary()]
    assert got == [("[1,23]", -1), ("[1,13]", 1), ("[1,12]", -1)]


def test_face_needs_both_sides():
    with pytest.raises(ValueError):
        Face((), (1,))


def test_simplex_sign_conventions():
    ours = [s for _, s, _ in Simplex((1, 2, 3)).boundary()]
    std = [s for _, s, _ in Simplex((1, 2, 3), standard=True).boundary()]
    assert ours == [-1, 1, -1] and std == [1, -1, 1]


def test_labels_are_lcms():
    C = visscher_complex(edge_weight_labels(EdgeWeighting.from_rows([[1, 1], [2, 3]])))
    assert str(C.label(Face((1, 2), (1, 2)))) == "X1*X2^3*Y1^2*Y2^3"
    assert str(C.label(Face((2,), (1, 2)))) == "X2^3*Y1^2*Y2^3"


def test_restrict_two_isolated_vertices():
    # [[2,3],[3,2]]: at X1^2 X2^2 Y1^2 Y2^2 only the two weight-2 vertices survive
    C = visscher_complex(edge_weight_labels(EdgeWeighting.from_rows([[2, 3], [3, 2]])))
    sub = C.restrict(Monomial.parse("X1^2*X2^2*Y1^2*Y2^2", 2, 2))
    assert sorted(str(c) for c in sub.cells) == ["[1,1]", "[2,2]"]


def test_restrict_is_a_subcomplex():
    C = visscher_complex(edge_weight_labels(EdgeWeighting.from_rows([[1, 2, 1], [3, 1, 2]])))
    for e in product(range(4), repeat=5):
        sub = C.restrict(Monomial(e, 2, 3))
        for cell in sub.cells:
            assert all(g in sub.cells for g, _, _ in cell.boundary())
