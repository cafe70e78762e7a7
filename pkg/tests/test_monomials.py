import pytest
from hypothesis import given, strategies as st

from cellres.monomials import (AmbientMismatch, Monomial, MonomialSum, NotDivisible, divides, gcd,
                               lcm, lcm_all, quotient)

M, N = 2, 3
exps = st.lists(st.integers(0, 6), min_size=M + N, max_size=M + N).map(lambda e: Monomial(tuple(e), M, N))


def test_parse_and_render_round_trip():
    f = Monomial.parse("X1^2*Y1*Y3^4", M, N)
    assert f.exponents == (2, 0, 1, 0, 4)
    assert str(f) == "X1^2*Y1*Y3^4"
    assert str(Monomial.one(M, N)) == "1"
    assert Monomial.parse("1", M, N).is_one()


def test_variable_order_is_x_then_y():
    assert Monomial.var("Y", 1, M, N).exponents == (0, 0, 1, 0, 0)
    assert Monomial.from_xy([1, 0], [0, 0, 2]).y == (0, 0, 2)


def test_rejects_bad_exponents():
    with pytest.raises(ValueError):
        Monomial((1, -1, 0, 0, 0), M, N)
    with pytest.raises(ValueError):
        Monomial((1, 0), M, N)
    with pytest.raises(OverflowError):
        Monomial((2 ** 63, 0, 0, 0, 0), M, N)


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        lcm(Monomial.one(2, 2), Monomial.one(2, 3))


def test_quotient_requires_divisibility():
    a, b = Monomial.parse("X1*Y1", M, N), Monomial.parse("X1^2", M, N)
    with pytest.raises(NotDivisible):
        quotient(a, b)
    assert str(quotient(Monomial.parse("X1^3*Y2", M, N), b)) == "X1*Y2"


def test_lcm_all_of_nothing_is_an_error():
    with pytest.raises(ValueError):
        lcm_all([])


@given(exps, exps)
def test_lcm_gcd_product(a, b):
    assert lcm(a, b) * gcd(a, b) == a * b
    assert divides(a, lcm(a, b)) and divides(gcd(a, b), a)


@given(exps, exps, exps)
def test_lcm_associative(a, b, c):
    assert lcm(lcm(a, b), c) == lcm(a, lcm(b, c)) == lcm_all([c, b, a])


@given(exps, exps)
def test_quotient_inverts_product(a, b):
    assert quotient(a * b, b) == a


def test_monomial_sum_cancels_and_orders():
    x, y = Monomial.parse("X1", M, N), Monomial.parse("Y2", M, N)
    s = MonomialSum([(x, 2), (y, -1), (x, -2)])
    assert s == MonomialSum.term(-1, y)
    assert (s - s).is_zero()
    assert str(MonomialSum.term(1, x).add_term(-3, y)) == "-3*Y2+X1"
    assert MonomialSum.term(2, x).times(MonomialSum.term(-1, y)) == MonomialSum.term(-2, x * y)
