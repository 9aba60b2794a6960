"""The expansions computed by the shared engine are checked here against
oracles built only on the public enumeration primitives."""

from itertools import islice
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tchrom.chromatic import (
    PreconditionError,
    StarContext,
    cqsf_labeled,
    cqsf_oriented,
    csf,
    normalized_total_star,
    star_cqsf_coeff_closed,
    star_csf_coeff_closed,
    total_labeling_cqsf,
    total_orientation_cqsf,
    total_orientation_star_closed,
    tst_coeff_by_root_color,
    tst_coeff_closed,
    tst_coeff_first_step,
    verify_csf_near_contraction,
    verify_tcqsf_o_near_contraction,
    verify_tree_formula,
)
from tchrom.combinat import (
    enumerate_compositions,
    enumerate_partitions,
    reverse_composition,
    sort_composition,
)
from tchrom.graph import (
    CapExceeded,
    cycle,
    disjoint_union,
    enumerate_acyclic_orientations,
    enumerate_labelings,
    enumerate_proper_colorings,
    ascents_labeled,
    ascents_oriented,
    coloring_composition,
    from_edge_list,
    path,
    star,
    star_representative_labeling,
)
from tchrom.qpoly import QPolynomial, one_plus_q_power
from tchrom.qsymfunc import (
    QSymExpansion,
    quasi_shuffle_product,
    sym_to_qsym,
    to_symmetric,
)


def oracle_cqsf_labeled(g, lab):
    """Refinement built directly from the public coloring stream."""
    terms = {}
    for ell in range(1, max(g.n, 1) + 1):
        for col in enumerate_proper_colorings(g, ell):
            alpha = coloring_composition(col)
            asc = ascents_labeled(g, lab, col)
            arr = terms.setdefault(alpha, [0] * (len(g.edges) + 1))
            arr[asc] += 1
    return QSymExpansion(g.n, {a: QPolynomial(tuple(arr)) for a, arr in terms.items()})


def oracle_cqsf_oriented(g, orientation):
    terms = {}
    for ell in range(1, max(g.n, 1) + 1):
        for col in enumerate_proper_colorings(g, ell):
            alpha = coloring_composition(col)
            asc = ascents_oriented(g, orientation, col)
            arr = terms.setdefault(alpha, [0] * (len(g.edges) + 1))
            arr[asc] += 1
    return QSymExpansion(g.n, {a: QPolynomial(tuple(arr)) for a, arr in terms.items()})


SMALL_GRAPHS = [
    path(1),
    path(2),
    path(3),
    star(3),
    cycle(3),
    path(4),
    star(4),
    cycle(4),
    from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 2)]),
]


@pytest.mark.parametrize("g", SMALL_GRAPHS, ids=lambda g: f"n{g.n}m{len(g.edges)}")
def test_labeled_refinement_matches_coloring_stream(g):
    for lab in islice(enumerate_labelings(g), 0, None, 5):
        assert cqsf_labeled(g, lab) == oracle_cqsf_labeled(g, lab)


@pytest.mark.parametrize("g", SMALL_GRAPHS, ids=lambda g: f"n{g.n}m{len(g.edges)}")
def test_oriented_refinement_matches_coloring_stream(g):
    for orientation in enumerate_acyclic_orientations(g):
        assert cqsf_oriented(g, orientation) == oracle_cqsf_oriented(g, orientation)


@pytest.mark.parametrize("g", SMALL_GRAPHS, ids=lambda g: f"n{g.n}m{len(g.edges)}")
def test_totals_match_their_defining_sums(g):
    by_labelings = QSymExpansion.zero(g.n)
    for lab in enumerate_labelings(g):
        by_labelings = by_labelings + oracle_cqsf_labeled(g, lab)
    assert total_labeling_cqsf(g) == by_labelings
    by_orientations = QSymExpansion.zero(g.n)
    for orientation in enumerate_acyclic_orientations(g):
        by_orientations = by_orientations + oracle_cqsf_oriented(g, orientation)
    assert total_orientation_cqsf(g) == by_orientations


def test_csf_counts_colorings():
    e = csf(cycle(3))
    assert e.coefficient((1, 1, 1)) == 6
    e = csf(path(3))
    assert e.coefficient((2, 1)) == 1  # only the end-vertices can share a color
    assert e.coefficient((1, 1, 1)) == 6
    assert csf(path(1)).coefficient((1,)) == 1


def test_csf_setting_q_to_one_in_labeled_refinement():
    g = cycle(4)
    e = csf(g)
    lab = (1, 2, 3, 4)
    refined = cqsf_labeled(g, lab)
    for alpha in enumerate_compositions(4):
        expected = e.coefficient(sort_composition(alpha)).evaluate_at_one()
        assert refined.coefficient(alpha).evaluate_at_one() == expected


TABLE_ROOT2 = {
    (1, 1, 1, 1, 1): (6, 36, 36, 36, 6),
    (1, 1, 1, 2): (0, 6, 9, 18, 3),
    (1, 1, 2, 1): (0, 12, 9, 12, 3),
    (1, 2, 1, 1): (3, 12, 9, 12),
    (2, 1, 1, 1): (3, 18, 9, 6),
    (1, 1, 3): (0, 0, 3, 4, 1),
    (1, 3, 1): (0, 4, 0, 4),
    (3, 1, 1): (1, 4, 3),
    (1, 2, 2): (0, 0, 0, 6),
    (2, 1, 2): (0, 3, 0, 3),
    (2, 2, 1): (0, 6),
    (1, 4): (0, 0, 0, 1),
    (4, 1): (0, 1),
}

TABLE_ROOT1 = {
    (1, 1, 1, 1, 1): (24, 24, 24, 24, 24),
    (1, 1, 1, 2): (0, 0, 12, 12, 12),
    (1, 1, 2, 1): (12, 0, 0, 12, 12),
    (1, 2, 1, 1): (12, 12, 0, 0, 12),
    (2, 1, 1, 1): (12, 12, 12),
    (1, 1, 3): (0, 0, 0, 4, 4),
    (1, 3, 1): (4, 0, 0, 0, 4),
    (3, 1, 1): (4, 4),
    (1, 2, 2): (0, 0, 0, 0, 6),
    (2, 1, 2): (0, 0, 6),
    (2, 2, 1): (6,),
    (1, 4): (0, 0, 0, 0, 1),
    (4, 1): (1,),
}


def test_five_vertex_star_refinement_both_roots():
    g = star(5)
    for root, table in ((2, TABLE_ROOT2), (1, TABLE_ROOT1)):
        refined = cqsf_labeled(g, star_representative_labeling(5, root))
        for alpha in enumerate_compositions(5):
            expected = QPolynomial(table.get(alpha, ()))
            assert refined.coefficient(alpha) == expected, (root, alpha)


def test_four_cycle_totals():
    tl = total_labeling_cqsf(cycle(4))
    assert tl.coefficient((1, 1, 1, 1)) == QPolynomial((56, 128, 208, 128, 56))
    assert tl.coefficient((1, 1, 2)) == QPolynomial((16, 16, 32, 16, 16))
    assert tl.coefficient((2, 1, 1)) == QPolynomial((16, 16, 32, 16, 16))
    assert tl.coefficient((1, 2, 1)) == QPolynomial((8, 16, 48, 16, 8))
    assert tl.coefficient((2, 2)) == QPolynomial((8, 8, 16, 8, 8))
    assert tl.coefficient((1, 3)) == QPolynomial(())
    to = total_orientation_cqsf(cycle(4))
    assert to.coefficient((1, 1, 1, 1)) == QPolynomial((24, 88, 112, 88, 24))
    assert to.coefficient((1, 1, 2)) == QPolynomial((4, 16, 16, 16, 4))
    assert to.coefficient((1, 2, 1)) == QPolynomial((4, 16, 16, 16, 4))
    assert to.coefficient((2, 1, 1)) == QPolynomial((4, 16, 16, 16, 4))
    assert to.coefficient((2, 2)) == QPolynomial((2, 8, 8, 8, 2))


def test_oriented_total_palindromic_and_degree():
    g = cycle(4)
    m = len(g.edges)
    e = csf(g)
    to = total_orientation_cqsf(g)
    for alpha, coeff in to.terms.items():
        assert coeff.is_palindromic(m)
        if e.coefficient(sort_composition(alpha)):
            assert coeff.degree == m
        assert coeff.coefficient(m) == e.coefficient(sort_composition(alpha)).evaluate_at_one()


def test_labeled_total_palindromic_and_reversal():
    for g in (path(4), star(4), cycle(4)):
        m = len(g.edges)
        tl = total_labeling_cqsf(g)
        for alpha, coeff in tl.terms.items():
            assert coeff.is_palindromic(m)
            assert coeff == tl.coefficient(reverse_composition(alpha))


def test_disjoint_union_products():
    g, h = path(2), cycle(3)
    union = disjoint_union(g, h)
    left = total_labeling_cqsf(g)
    right = total_labeling_cqsf(h)
    expected = quasi_shuffle_product(left, right).scale(comb(5, 2))
    assert total_labeling_cqsf(union) == expected
    expected = quasi_shuffle_product(total_orientation_cqsf(g), total_orientation_cqsf(h))
    assert total_orientation_cqsf(union) == expected


def test_csf_near_contraction_every_edge():
    for g in (path(4), cycle(4), star(5), cycle(3)):
        for e in g.edges:
            assert verify_csf_near_contraction(g, e)


def test_oriented_near_contraction():
    g = path(4)
    assert verify_tcqsf_o_near_contraction(g, (1, 2))
    with pytest.raises(PreconditionError):
        verify_tcqsf_o_near_contraction(g, (0, 1))
    with pytest.raises(PreconditionError):
        verify_tcqsf_o_near_contraction(cycle(4), (0, 1))
    # triangle with pendant paths on two corners: the bridge edges are internal
    g = from_edge_list(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
    assert verify_tcqsf_o_near_contraction(g, (2, 3))


def test_tree_formula():
    for g in (path(2), path(4), star(5)):
        assert verify_tree_formula(g)
        expected = sym_to_qsym(csf(g)).scale(one_plus_q_power(len(g.edges)))
        assert total_orientation_cqsf(g) == expected
    with pytest.raises(ValueError):
        verify_tree_formula(cycle(3))


def test_labeling_validation():
    g = path(3)
    with pytest.raises(ValueError):
        cqsf_labeled(g, (1, 2))
    with pytest.raises(ValueError):
        cqsf_labeled(g, (0, 1, 2))
    with pytest.raises(ValueError):
        cqsf_labeled(g, (1, 1, 2))


def test_orientation_validation():
    g = path(3)
    with pytest.raises(ValueError):
        cqsf_oriented(g, ((0, 1),))
    with pytest.raises(ValueError):
        cqsf_oriented(g, ((0, 1), (0, 1)))
    with pytest.raises(ValueError):
        cqsf_oriented(g, ((0, 1), (0, 2)))


def test_caps(monkeypatch):
    monkeypatch.setenv("TCHROM_MAX_N", "4")
    with pytest.raises(CapExceeded):
        csf(path(5))
    monkeypatch.setenv("TCHROM_MAX_N", "5")
    assert csf(path(5)).coefficient((1, 1, 1, 1, 1)) == 120
    monkeypatch.delenv("TCHROM_MAX_N")
    with pytest.raises(CapExceeded):
        total_labeling_cqsf(path(8))
    monkeypatch.setenv("TCHROM_MAX_N", "nope")
    with pytest.raises(ValueError):
        csf(path(5))


def test_star_context():
    ctx = StarContext(5, 2, 3)
    left, right, left_capped, right_capped = ctx.side_weights((1, 2, 1, 1))
    assert (left, right) == (3, 1)
    assert (left_capped, right_capped) == (3, 1)
    values = ctx.ascent_values((1, 2, 1, 1))
    assert values == (0, 2)
    with pytest.raises(ValueError):
        ctx.side_weights((1, 2, 2))  # position 3 does not hold a 1


def test_star_closed_form_small():
    for n in (2, 3, 4, 5):
        g = star(n)
        for r in range(1, n + 1):
            brute = cqsf_labeled(g, star_representative_labeling(n, r))
            for alpha in enumerate_compositions(n):
                closed = star_cqsf_coeff_closed(alpha, r, n)
                assert closed == brute.coefficient(alpha), (n, r, alpha)


def test_star_closed_form_ascent_support():
    # every ascent count produced by the closed form appears with the
    # parity and window promised by the two-sided weight analysis
    n, r = 6, 3
    g = star(n)
    brute = cqsf_labeled(g, star_representative_labeling(n, r))
    for alpha in enumerate_compositions(n):
        coeff = brute.coefficient(alpha)
        if not coeff:
            continue
        positions = [i for i, part in enumerate(alpha, start=1) if part == 1]
        allowed = set()
        for i in positions:
            allowed.update(StarContext(n, r, i).ascent_values(alpha))
        support = {k for k in range(coeff.degree + 1) if coeff.coefficient(k)}
        assert support <= allowed, alpha


def test_star_csf_closed_form():
    for n in (2, 4, 6, 8):
        e = csf(star(n))
        for lam in enumerate_partitions(n):
            assert e.coefficient(lam).evaluate_at_one() == star_csf_coeff_closed(lam)


def test_total_orientation_star_closed():
    for n in (2, 3, 4, 5, 6):
        assert total_orientation_star_closed(n) == to_symmetric(total_orientation_cqsf(star(n)))


def test_normalized_total_star_routes_agree():
    for n in (2, 3, 4, 5):
        assert normalized_total_star(n) == normalized_total_star(n, via_all_labelings=True)


def test_normalized_total_star_division_is_exact():
    tl = total_labeling_cqsf(star(4))
    tst = normalized_total_star(4)
    for alpha, coeff in tl.terms.items():
        assert coeff == tst.coefficient(alpha) * factorial(3)


def test_tst_closed_forms():
    for n in (2, 3, 4, 5, 6):
        brute = normalized_total_star(n)
        for alpha in enumerate_compositions(n):
            closed = tst_coeff_closed(alpha, n)
            assert closed == brute.coefficient(alpha), (n, alpha)
            for k in range((n - 1) // 2 + 1):
                assert tst_coeff_first_step(alpha, n, k) == closed.coefficient(k), (n, alpha, k)


def test_tst_first_step_guards_range():
    with pytest.raises(ValueError):
        tst_coeff_first_step((1, 1, 1, 1), 4, 2)
    with pytest.raises(ValueError):
        tst_coeff_first_step((1, 1, 1, 1), 4, -1)


def test_tst_root_color_slices():
    for n in (4, 5):
        for alpha in enumerate_compositions(n):
            ell = len(alpha)
            total = QPolynomial(())
            for i in range(1, ell + 1):
                total = total + tst_coeff_by_root_color(alpha, i, n)
            assert total == tst_coeff_closed(alpha, n), (n, alpha)
            rev = reverse_composition(alpha)
            for i in range(1, ell + 1):
                assert tst_coeff_by_root_color(alpha, i, n) == tst_coeff_by_root_color(
                    rev, ell - i + 1, n
                ), (n, alpha, i)


@settings(deadline=None, max_examples=25)
@given(st.integers(min_value=2, max_value=6), st.data())
def test_tst_coefficient_reversal_symmetry(n, data):
    compositions = enumerate_compositions(n)
    alpha = data.draw(st.sampled_from(compositions))
    assert tst_coeff_closed(alpha, n) == tst_coeff_closed(reverse_composition(alpha), n)


def test_unicyclic_asymmetry_is_oracle_confirmed():
    # the orientation total of this square-with-two-pendants is NOT
    # symmetric: (1,2,1,2) and (1,1,2,2) get different coefficients.
    # Pin the surprising value against the independent oracle.
    g = from_edge_list(6, [(0, 2), (0, 3), (0, 5), (1, 2), (1, 3), (1, 4)])
    engine = total_orientation_cqsf(g)
    oracle = QSymExpansion.zero(6)
    for orientation in enumerate_acyclic_orientations(g):
        oracle = oracle + oracle_cqsf_oriented(g, orientation)
    assert engine == oracle
    assert engine.coefficient((1, 1, 2, 2)) == QPolynomial((64, 376, 832, 1040, 832, 376, 64))
    assert engine.coefficient((1, 2, 1, 2)) == QPolynomial((64, 372, 832, 1048, 832, 372, 64))


def test_complement_relations_per_root():
    # flipping q to its complement swaps the root label across the table
    n = 5
    for r in range(1, n + 1):
        for alpha in enumerate_compositions(n):
            here = star_cqsf_coeff_closed(alpha, r, n)
            there = star_cqsf_coeff_closed(alpha, n + 1 - r, n)
            assert here == QPolynomial(
                tuple(there.coefficient(n - 1 - k) for k in range(n))
            ), (r, alpha)
            flipped = star_cqsf_coeff_closed(reverse_composition(alpha), r, n)
            assert here == QPolynomial(
                tuple(flipped.coefficient(n - 1 - k) for k in range(n))
            ), (r, alpha)
