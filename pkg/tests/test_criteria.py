import itertools

import pytest

from cellres.criteria import (betti_formula, bs_oracle, lcm_lattice, qualifying_vertices, survey,
                              theorem_predicate, vertex_weighted_verdict)
from cellres.graphs import EdgeWeighting, VertexWeighting, delete_vertex, edge_weight_labels, min_weight
from cellres.monomials import Monomial
from cellres.visscher import visscher_complex


def W(rows):
    return EdgeWeighting.from_rows(rows)


def test_lattice_of_unweighted_square():
    assert len(lcm_lattice(edge_weight_labels(W([[1, 1], [1, 1]])))) == 9


@pytest.mark.parametrize("n", range(1, 7))
def test_lattice_of_coprime_generators(n):
    gens = [Monomial.var("Y", j, 1, n) for j in range(1, n + 1)]
    assert len(lcm_lattice(gens)) == 2 ** n - 1


def test_lattice_is_sorted_by_degree():
    lat = lcm_lattice(edge_weight_labels(W([[1, 2], [3, 1]])))
    assert [f.degree() for f in lat] == sorted(f.degree() for f in lat)


def all_branches(w):
    """Predicate outcome for every sequence of vertex choices (independent of qualifying_vertices)."""
    if w.m == 1 or w.n == 1:
        return {True}
    alpha = min(min(r) for r in w.omega)
    outcomes = set()
    for i in range(1, w.m + 1):
        if all(x == alpha for x in w.omega[i - 1]):
            outcomes |= all_branches(delete_vertex(w, "X", i))
    for j in range(1, w.n + 1):
        if all(r[j - 1] == alpha for r in w.omega):
            outcomes |= all_branches(delete_vertex(w, "Y", j))
    return outcomes or {False}


@pytest.mark.parametrize("m,n,k", [(2, 2, 3), (2, 3, 2), (3, 3, 2)])
def test_predicate_is_choice_independent(m, n, k):
    for flat in itertools.product(range(1, k + 1), repeat=m * n):
        w = W([flat[i * n:(i + 1) * n] for i in range(m)])
        branches = all_branches(w)
        assert len(branches) == 1
        assert theorem_predicate(w)[0] in branches


def test_predicate_recomputes_alpha():
    # after deleting X1 (weight 1) the minimum becomes 2 and Y1 qualifies
    w = W([[1, 1, 1], [2, 2, 4], [2, 2, 6]])
    ok, trace = theorem_predicate(w)
    assert ok and [s.alpha for s in trace.steps] == [1, 2, 2]
    assert trace.describe() == "v=X1 → v=Y1 → v=Y2 → base"
    assert bs_oracle(edge_weight_labels(w)).is_resolution
    assert not theorem_predicate(W([[1, 1, 1], [2, 3, 4], [2, 5, 6]]))[0]


def test_predicate_failure_trace():
    ok, trace = theorem_predicate(W([[2, 3], [3, 2]]))
    assert not ok and trace.failure_alpha == 2
    assert qualifying_vertices(W([[2, 3], [3, 2]])) == []


@pytest.mark.parametrize("rows,expected", [([[2, 3], [3, 2]], False), ([[2, 2], [3, 2]], True),
                                           ([[1, 2], [3, 4]], False), ([[5, 5], [5, 5]], True)])
def test_small_verdicts(rows, expected):
    assert theorem_predicate(W(rows))[0] is expected
    assert bs_oracle(edge_weight_labels(W(rows))).is_resolution is expected


def test_oracle_witness_for_crossed_square():
    v = bs_oracle(edge_weight_labels(W([[2, 3], [3, 2]])))
    assert str(v.witness) == "X1^2*X2^2*Y1^2*Y2^2"
    assert v.witness_profile.nonzero() == {0: 1}


@pytest.mark.parametrize("rows", [[[2, 3], [3, 2]], [[1, 2], [3, 4]], [[1, 2, 3], [3, 2, 1]],
                                  [[1, 1, 2], [2, 1, 1]]])
def test_generators_first_same_verdict(rows):
    labels = edge_weight_labels(W(rows))
    assert bs_oracle(labels).is_resolution == bs_oracle(labels, generators_first=True).is_resolution


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 3), (3, 4)])
def test_constant_weights_resolve(m, n):
    assert theorem_predicate(W([[3] * n] * m))[0]
    assert bs_oracle(edge_weight_labels(W([[3] * n] * m))).is_resolution


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 3)])
def test_all_distinct_weights_fail(m, n):
    rows = [[i * n + j + 1 for j in range(n)] for i in range(m)]
    assert not theorem_predicate(W(rows))[0]
    assert not bs_oracle(edge_weight_labels(W(rows))).is_resolution


def test_betti_formula_values():
    assert [betti_formula(2, 2, k) for k in range(3)] == [4, 4, 1]
    assert [betti_formula(2, 3, k) for k in range(4)] == [6, 9, 5, 1]
    with pytest.raises(ValueError):
        betti_formula(0, 2, 0)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 5) for n in range(1, 5)])
def test_betti_formula_counts_faces(m, n):
    from cellres.visscher import enumerate_faces
    for k in range(m + n - 1):
        assert betti_formula(m, n, k) == len(enumerate_faces(m, n, k + 1))


def test_vertex_weighted_always_resolves():
    assert vertex_weighted_verdict(VertexWeighting(2, 3, (3, 1), (2, 1, 3))).is_resolution


def test_survey_small_box_and_parallel_equal():
    serial = survey(2, 2, 2)
    parallel = survey(2, 2, 2, workers=2)
    assert serial.ok and serial.total == 16 and serial.agreements == 16
    assert serial.to_json() == parallel.to_json()
    assert serial.summary_line() == "16/16 agree"
