from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tchrom.qpoly import QPolynomial
from tchrom.qsymfunc import (
    QSymExpansion,
    SymExpansion,
    expansion_from_json,
    expansion_to_json,
    is_symmetric,
    quasi_shuffle_product,
    sym_product,
    sym_to_qsym,
    to_symmetric,
    verify_star_powersum,
)

compositions = st.lists(st.integers(min_value=1, max_value=3), min_size=1, max_size=3).map(tuple)


def monomial_in_variables(alpha, nvars):
    """Exponent-vector expansion of M_alpha in nvars variables."""
    out = Counter()
    for positions in combinations(range(nvars), len(alpha)):
        exponents = [0] * nvars
        for position, part in zip(positions, alpha):
            exponents[position] = part
        out[tuple(exponents)] += 1
    return out


def test_construction_and_lookup():
    f = QSymExpansion(3, {(1, 2): QPolynomial((5,))})
    assert f.degree == 3
    assert f.coefficient((1, 2)) == 5
    assert f.coefficient((2, 1)) == 0
    assert f.support() == [(1, 2)]
    assert not QSymExpansion.zero(3)


def test_weight_validation():
    with pytest.raises(ValueError):
        QSymExpansion(3, {(1, 1): QPolynomial((1,))})
    with pytest.raises(ValueError):
        QSymExpansion(3, {(0, 3): QPolynomial((1,))})
    with pytest.raises(ValueError):
        SymExpansion(3, {(1, 2): QPolynomial((1,))})


def test_zero_coefficients_dropped():
    f = QSymExpansion(2, {(2,): QPolynomial(()), (1, 1): QPolynomial((1,))})
    assert f.support() == [(1, 1)]


def test_addition_and_scaling():
    f = QSymExpansion(2, {(2,): QPolynomial((1,))})
    g = QSymExpansion(2, {(2,): QPolynomial((2,)), (1, 1): QPolynomial((3,))})
    assert (f + g).coefficient((2,)) == 3
    assert (f - g).coefficient((1, 1)) == -3
    assert f.scale(4).coefficient((2,)) == 4
    with pytest.raises(ValueError):
        f + QSymExpansion(3, {(3,): QPolynomial((1,))})


def test_quasi_shuffle_of_single_letters():
    f = QSymExpansion(1, {(1,): QPolynomial((1,))})
    product = quasi_shuffle_product(f, f)
    assert product.degree == 2
    assert product.coefficient((1, 1)) == 2
    assert product.coefficient((2,)) == 1


@settings(deadline=None)
@given(compositions, compositions)
def test_quasi_shuffle_matches_alphabet_expansion(alpha, beta):
    nvars = len(alpha) + len(beta)
    f = QSymExpansion(sum(alpha), {alpha: QPolynomial((1,))})
    g = QSymExpansion(sum(beta), {beta: QPolynomial((1,))})
    product = quasi_shuffle_product(f, g)
    expected = Counter()
    left = monomial_in_variables(alpha, nvars)
    right = monomial_in_variables(beta, nvars)
    for exponents_a, count_a in left.items():
        for exponents_b, count_b in right.items():
            merged = tuple(a + b for a, b in zip(exponents_a, exponents_b))
            expected[merged] += count_a * count_b
    observed = Counter()
    for gamma, coeff in product.terms.items():
        value = coeff.evaluate_at_one()
        for exponents, count in monomial_in_variables(gamma, nvars).items():
            observed[exponents] += value * count
    expected = Counter({k: v for k, v in expected.items() if v})
    assert observed == expected


@given(compositions, compositions)
def test_quasi_shuffle_commutes(alpha, beta):
    f = QSymExpansion(sum(alpha), {alpha: QPolynomial((1, 1))})
    g = QSymExpansion(sum(beta), {beta: QPolynomial((2,))})
    assert quasi_shuffle_product(f, g) == quasi_shuffle_product(g, f)


def test_is_symmetric():
    f = QSymExpansion(3, {(1, 2): QPolynomial((1,)), (2, 1): QPolynomial((1,))})
    assert is_symmetric(f)
    g = QSymExpansion(3, {(1, 2): QPolynomial((1,))})
    assert not is_symmetric(g)
    assert is_symmetric(QSymExpansion.zero(4))


def test_to_symmetric_and_back():
    f = QSymExpansion(
        3, {(1, 2): QPolynomial((1,)), (2, 1): QPolynomial((1,)), (3,): QPolynomial((5,))}
    )
    m = to_symmetric(f)
    assert m.coefficient((2, 1)) == 1
    assert m.coefficient((3,)) == 5
    assert sym_to_qsym(m) == f
    with pytest.raises(ValueError):
        to_symmetric(QSymExpansion(3, {(1, 2): QPolynomial((1,))}))


def test_sym_product():
    # m_(1) * m_(1) = 2 m_(1,1) + m_(2)
    f = SymExpansion(1, {(1,): QPolynomial((1,))})
    product = sym_product(f, f)
    assert product.coefficient((1, 1)) == 2
    assert product.coefficient((2,)) == 1


def test_json_round_trip():
    f = QSymExpansion(3, {(1, 2): QPolynomial((0, 4)), (3,): QPolynomial((7,))})
    data = expansion_to_json(f)
    assert data["degree"] == 3
    assert data["basis"] == "M"
    assert data["terms"][0]["index"] == [1, 2]
    assert expansion_from_json(data) == f
    again = expansion_to_json(expansion_from_json(data))
    assert again == data


def test_powersum_bridge_small():
    assert verify_star_powersum(1)
    assert verify_star_powersum(2)
    assert verify_star_powersum(3)
