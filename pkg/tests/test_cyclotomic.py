from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from mckaycone.cyclotomic import (ORDER_CAP_ENV, CyclotomicNumber, NotRationalError,
                                  OrderOverflowError, cyclotomic_polynomial, format_cyclotomic,
                                  hermitian_sum, parse_cyclotomic, root_of_unity)

X = sympy.Symbol("x")


@pytest.mark.parametrize("n", range(1, 61))
def test_cyclotomic_polynomial_matches_sympy(n):
    expect = sympy.Poly(sympy.cyclotomic_poly(n, X), X).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(n)) == [int(c) for c in expect]


def test_phi6():
    assert cyclotomic_polynomial(6) == (1, -1, 1)


@pytest.mark.parametrize("n", range(1, 25))
def test_root_of_unity_order(n):
    z = root_of_unity(n)
    assert z ** n == 1
    for k in range(1, n):
        if n % k == 0 and k < n:
            assert z ** k != 1


def test_primitive_root_sum_is_mobius():
    # sum of primitive N-th roots is mu(N)
    for n in range(1, 31):
        total = CyclotomicNumber.rational(0)
        for k in range(n):
            if sympy.gcd(k, n) == 1:
                total = total + root_of_unity(n, k)
        assert total == int(sympy.mobius(n))


def test_rationality_detection():
    z3 = root_of_unity(3)
    assert (z3 + z3.conj()).as_rational() == -1
    assert (z3 * z3.conj()).as_rational() == 1
    with pytest.raises(NotRationalError):
        z3.as_rational()
    i = root_of_unity(4)
    with pytest.raises(NotRationalError):
        (i + 1).as_rational()
    assert (i * i).as_rational() == -1


def test_cross_order_equality():
    assert root_of_unity(6, 2) == root_of_unity(3, 1)
    assert root_of_unity(12, 6) == -1
    assert root_of_unity(2) == -1


def test_order_cap(monkeypatch):
    monkeypatch.setenv(ORDER_CAP_ENV, "10")
    with pytest.raises(OrderOverflowError):
        root_of_unity(11)
    a, b = root_of_unity(4), root_of_unity(5)
    with pytest.raises(OrderOverflowError):
        a + b


def test_format_examples():
    assert format_cyclotomic(CyclotomicNumber.rational(Fraction(-3, 4))) == "-3/4"
    assert format_cyclotomic(root_of_unity(3, 2)) == "-1 - z(3)^1"
    assert format_cyclotomic(CyclotomicNumber.rational(0, 5)) == "0"


@pytest.mark.parametrize("bad", ["", "z(3", "1 2", "+"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_cyclotomic(bad)


def test_parse_mixed_orders():
    assert parse_cyclotomic("z(4)^2 + 1") == 0
    assert parse_cyclotomic("1/2*z(3) - z(6)^2") == root_of_unity(3) * Fraction(-1, 2)


ORDERS = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 9, 12])


@st.composite
def cyclos(draw, order=None):
    n = draw(ORDERS) if order is None else order
    coeffs = draw(st.lists(st.fractions(max_denominator=6, min_value=-5, max_value=5), min_size=1, max_size=n))
    return CyclotomicNumber.from_coeffs(n, coeffs)


@settings(max_examples=60, deadline=None)
@given(cyclos(), cyclos(), cyclos())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@settings(max_examples=60, deadline=None)
@given(cyclos(), cyclos())
def test_conjugation_is_ring_automorphism(a, b):
    assert a.conj().conj() == a
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()
    assert (a * a.conj()).conj() == a * a.conj()


@settings(max_examples=60, deadline=None)
@given(cyclos())
def test_format_parse_roundtrip(a):
    assert parse_cyclotomic(format_cyclotomic(a)) == a


@settings(max_examples=60, deadline=None)
@given(cyclos())
def test_numeric_value_consistent(a):
    # complex embedding zeta -> exp(2 pi i / N) respects the normal form
    import cmath
    z = cmath.exp(2j * cmath.pi / a.order)
    val = sum(float(c) * z ** k for k, c in enumerate(a.coeffs))
    raw = CyclotomicNumber(a.order, [int(c * a.den) for c in a.coeffs] + [0] * a.order, a.den)
    assert raw == a
    assert abs(val - sum(float(c) * z ** k for k, c in enumerate(raw.coeffs))) < 1e-9


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 4), cyclos(), cyclos()), min_size=1, max_size=6))
def test_hermitian_sum_matches_naive(items):
    ws, xs, ys = zip(*items)
    naive = CyclotomicNumber.rational(0)
    for w, x, y in items:
        naive = naive + x * y.conj() * w
    assert hermitian_sum(ws, xs, ys) == naive
