import pytest
from hypothesis import given
from hypothesis import strategies as st

from tchrom.qpoly import ONE, Q, ZERO, QPolynomial, monomial, one_plus_q_power, q_analog

polys = st.lists(st.integers(min_value=-9, max_value=9), max_size=6).map(QPolynomial)


def test_normalization():
    assert QPolynomial((1, 0, 0)).coeffs == (1,)
    assert QPolynomial(()).coeffs == ()
    assert QPolynomial((0, 0)) == ZERO
    assert not ZERO
    assert ONE.coeffs == (1,)
    assert Q.coeffs == (0, 1)


def test_rejects_non_integers():
    with pytest.raises(TypeError):
        QPolynomial((1.5,))


def test_degree():
    assert ZERO.degree == -1
    assert ONE.degree == 0
    assert QPolynomial((0, 0, 3)).degree == 2


def test_equality_with_int():
    assert QPolynomial((7,)) == 7
    assert ZERO == 0
    assert QPolynomial((0, 1)) != 1


def test_str():
    assert str(QPolynomial((6, 6, 6, 6))) == "6q^3 + 6q^2 + 6q + 6"
    assert str(QPolynomial((0, -1, 2))) == "2q^2 - q"
    assert str(ZERO) == "0"
    assert str(QPolynomial((1,))) == "1"


def test_arithmetic():
    p = QPolynomial((1, 2))
    assert p + p == QPolynomial((2, 4))
    assert p - p == ZERO
    assert p * p == QPolynomial((1, 4, 4))
    assert 3 * p == QPolynomial((3, 6))
    assert p * 3 == QPolynomial((3, 6))
    assert -p == QPolynomial((-1, -2))


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a * ZERO == ZERO


@given(polys, polys)
def test_evaluate_at_one_is_homomorphism(a, b):
    assert (a + b).evaluate_at_one() == a.evaluate_at_one() + b.evaluate_at_one()
    assert (a * b).evaluate_at_one() == a.evaluate_at_one() * b.evaluate_at_one()


def test_coefficient():
    p = QPolynomial((5, 0, 7))
    assert p.coefficient(0) == 5
    assert p.coefficient(1) == 0
    assert p.coefficient(2) == 7
    assert p.coefficient(99) == 0
    with pytest.raises(ValueError):
        p.coefficient(-1)


def test_is_palindromic():
    assert QPolynomial((6, 36, 36, 36, 6)).is_palindromic(4)
    assert not QPolynomial((1, 2)).is_palindromic(1)
    assert QPolynomial((0, 1, 1)).is_palindromic(3)
    assert not QPolynomial((0, 1, 1)).is_palindromic(2)
    assert ZERO.is_palindromic(0)
    with pytest.raises(ValueError):
        QPolynomial((1, 1, 1)).is_palindromic(1)


@given(polys, st.integers(min_value=0, max_value=4))
def test_palindromic_window(p, pad):
    window = p.degree + pad if p else pad
    mirrored = QPolynomial(tuple(p.coefficient(window - k) for k in range(window + 1)))
    assert mirrored.is_palindromic(window) == p.is_palindromic(window) if p == mirrored else True
    assert p.is_palindromic(window) == (p == mirrored)


def test_json_round_trip():
    p = QPolynomial((1, 0, 2))
    assert p.to_json() == [1, 0, 2]
    assert QPolynomial.from_json([1, 0, 2]) == p
    assert QPolynomial.from_json([]) == ZERO


def test_helpers():
    assert monomial(3, 2) == QPolynomial((0, 0, 3))
    assert q_analog(3) == QPolynomial((1, 1, 1))
    assert q_analog(0) == ZERO
    assert one_plus_q_power(2) == QPolynomial((1, 2, 1))
    assert one_plus_q_power(0) == ONE
    with pytest.raises(ValueError):
        q_analog(-1)
    with pytest.raises(ValueError):
        one_plus_q_power(-1)


@given(st.integers(min_value=0, max_value=8))
def test_one_plus_q_power_matches_product(k):
    base = ONE + Q
    product = ONE
    for _ in range(k):
        product = product * base
    assert one_plus_q_power(k) == product
