"""Series engine: arithmetic, Pochhammer builders, comparison reports.

Expected coefficient tables are frozen literals; each [derived] table is
recomputed in-test by an independent brute-force oracle (subset sums or
direct partition enumeration) so the series path never checks itself.
"""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qpart.series import (
    MINUS,
    PLUS,
    CoefficientOverflowError,
    NonUnitConstantError,
    OrderMismatchError,
    SeriesError,
    TruncatedSeries,
    compare_series,
    pochhammer_finite,
    pochhammer_infinite,
    pochhammer_infinite_starts,
    series_sum,
)

S = TruncatedSeries.from_coeffs


# ---------------------------------------------------------------------------
# independent oracles
# ---------------------------------------------------------------------------


def distinct_part_counts(nmax, max_part=None):
    """Count subsets of {1..max_part} by sum: distinct-part partitions."""
    universe = range(1, (max_part or nmax) + 1)
    counts = [0] * (nmax + 1)
    for r in range(len(list(universe)) + 1):
        for combo in itertools.combinations(universe, r):
            s = sum(combo)
            if s <= nmax:
                counts[s] += 1
    return counts


def odd_part_counts(nmax):
    """Count partitions into odd parts by brute-force recursion."""
    def count(total, largest):
        if total == 0:
            return 1
        return sum(count(total - v, v) for v in range(1, min(total, largest) + 1, 2))
    return [count(n, n) for n in range(nmax + 1)]


DISTINCT_COUNTS_10 = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10]
ODD_COUNTS_20 = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27, 32, 38, 46, 54, 64]
BOUNDED_DISTINCT_5_AT_15 = [1, 1, 1, 2, 2, 3, 3, 3, 3, 3, 3, 2, 2, 1, 1, 1]


def test_oracles_match_frozen_tables():
    assert distinct_part_counts(10) == DISTINCT_COUNTS_10
    assert odd_part_counts(20) == ODD_COUNTS_20
    assert distinct_part_counts(15, 5) == BOUNDED_DISTINCT_5_AT_15


# ---------------------------------------------------------------------------
# add / sub / shift
# ---------------------------------------------------------------------------


def test_add_simple():
    assert (S([1, 1]) + S([1, -1])).coeffs == (2, 0)


def test_add_zero_is_identity():
    s = S([3, -2, 5, 0, 7])
    assert s + TruncatedSeries.zero(4) == s


def test_add_doubles_distinct_gf():
    gf = pochhammer_infinite(PLUS, 1, 1, 10)
    doubled = gf + gf
    assert list(doubled.coeffs) == [2 * c for c in DISTINCT_COUNTS_10]
    assert list(doubled.coeffs) == [2 * c for c in distinct_part_counts(10)]


def test_add_order_mismatch():
    with pytest.raises(OrderMismatchError):
        S([1, 2]) + S([1, 2, 3])


def test_shift_simple():
    assert S([1, 1, 0, 0]).shift(2).coeffs == (0, 0, 1, 1)


def test_shift_zero_is_identity():
    s = S([4, 0, -1])
    assert s.shift(0) == s


def test_shift_beyond_order_is_zero():
    assert S([1, 2, 3]).shift(5).is_zero()


def test_shift_rejects_negative():
    with pytest.raises(SeriesError):
        S([1]).shift(-1)


# ---------------------------------------------------------------------------
# mul
# ---------------------------------------------------------------------------


def test_mul_simple():
    a = S([1, 1, 0, 0])
    b = S([1, 0, 1, 0])
    assert (a * b).coeffs == (1, 1, 1, 1)


def test_mul_one_is_identity():
    s = S([2, -3, 0, 5])
    assert s * TruncatedSeries.one(3) == s


def test_mul_bounded_distinct_product():
    prod = pochhammer_finite(PLUS, 1, 1, 5, 15)
    assert list(prod.coeffs) == BOUNDED_DISTINCT_5_AT_15
    assert list(prod.coeffs) == distinct_part_counts(15, 5)


# ---------------------------------------------------------------------------
# reciprocal
# ---------------------------------------------------------------------------


def test_reciprocal_geometric():
    assert S([1, -1] + [0] * 5).reciprocal().coeffs == (1,) * 7


def test_reciprocal_of_one():
    assert TruncatedSeries.one(6).reciprocal() == TruncatedSeries.one(6)


def test_reciprocal_odd_part_counts():
    inv = pochhammer_infinite(MINUS, 1, 2, 20).reciprocal()
    assert list(inv.coeffs) == ODD_COUNTS_20
    assert list(inv.coeffs) == odd_part_counts(20)


def test_reciprocal_requires_unit_constant():
    with pytest.raises(NonUnitConstantError):
        S([2, 1]).reciprocal()


def test_reciprocal_of_negative_unit():
    s = S([-1, 3, 2, -4, 1])
    assert s * s.reciprocal() == TruncatedSeries.one(4)


# ---------------------------------------------------------------------------
# pochhammer builders
# ---------------------------------------------------------------------------


def test_pochhammer_finite_small():
    assert pochhammer_finite(MINUS, 1, 1, 2, 3).coeffs == (1, -1, -1, 1)


def test_pochhammer_zero_terms_is_one():
    assert pochhammer_finite(MINUS, 1, 1, 0, 5) == TruncatedSeries.one(5)
    assert pochhammer_finite(PLUS, 3, 2, 0, 5) == TruncatedSeries.one(5)


def test_pochhammer_even_step():
    got = pochhammer_finite(MINUS, 2, 2, 2, 10)
    direct = S([1, 0, -1] + [0] * 8) * S([1, 0, 0, 0, -1] + [0] * 6)
    assert got == direct


def test_pochhammer_infinite_distinct_counts():
    got = pochhammer_infinite(PLUS, 1, 1, 8)
    assert list(got.coeffs) == DISTINCT_COUNTS_10[:9]
    assert list(got.coeffs) == distinct_part_counts(8)


def test_pochhammer_infinite_pentagonal_signs():
    got = pochhammer_infinite(MINUS, 1, 1, 12)
    assert got.coeffs == (1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1)


def test_pochhammer_infinite_start_above_order():
    assert pochhammer_infinite(MINUS, 9, 1, 8) == TruncatedSeries.one(8)


def test_pochhammer_rejects_bad_arguments():
    with pytest.raises(ValueError):
        pochhammer_finite(2, 1, 1, 1, 5)
    with pytest.raises(ValueError):
        pochhammer_finite(MINUS, 0, 1, 1, 5)
    with pytest.raises(ValueError):
        pochhammer_finite(MINUS, 1, 1, -1, 5)
    with pytest.raises(ValueError):
        pochhammer_infinite(MINUS, 0, 1, 5)


def test_pochhammer_infinite_starts_family():
    order = 30
    for sign in (PLUS, MINUS):
        family = pochhammer_infinite_starts(sign, order)
        assert len(family) == order + 1
        for m in (1, 2, 7, order, order + 1):
            assert family[m - 1] == pochhammer_infinite(sign, m, 1, order)


# ---------------------------------------------------------------------------
# comparison reports
# ---------------------------------------------------------------------------


def test_compare_equal_series():
    a = S([1, 2, 3])
    assert compare_series(a, S([1, 2, 3])).equal


def test_compare_window_excludes_mismatch():
    a = S([0, 0, 0, 5, 9, 9])
    b = S([0, 0, 0, 7, 9, 9])
    full = compare_series(a, b)
    assert not full.equal and (full.index, full.left, full.right) == (3, 5, 7)
    assert compare_series(a, b, start=4).equal


def _signed_smallest_part_sides(k, big_n, order):
    """Both sides of the finite tail identity, built independently."""
    tails = pochhammer_infinite_starts(PLUS, order)
    lhs = series_sum([tails[j].shift(k * j) for j in range(big_n + 1)], order)
    partial = TruncatedSeries.one(order)
    for m in range(1, big_n + 1):
        partial = partial * pochhammer_finite(PLUS, m, 1, 1, order)
    recip = partial.reciprocal()
    two = TruncatedSeries.one(order).scale(2)
    bracket = TruncatedSeries.zero(order)
    for j in range(k):
        term = pochhammer_finite(MINUS, j + 1, 1, k - j - 1, order) \
            * (two - recip.shift((big_n + 1) * j))
        bracket = bracket + (term if (j + k - 1) % 2 == 0 else -term)
    return lhs, tails[0] * bracket


def test_compare_finite_tail_identity_cell():
    lhs, rhs = _signed_smallest_part_sides(2, 5, 60)
    assert compare_series(lhs, rhs).equal


def test_compare_order_mismatch():
    with pytest.raises(OrderMismatchError):
        compare_series(S([1]), S([1, 0]))


# ---------------------------------------------------------------------------
# overflow guard and serialization
# ---------------------------------------------------------------------------


def test_overflow_detected_on_construction():
    with pytest.raises(CoefficientOverflowError):
        S([1 << 63])


def test_overflow_detected_in_multiplication():
    big = S([1 << 62, 1 << 62])
    with pytest.raises(CoefficientOverflowError):
        big * S([2, 2])


def test_json_round_trip():
    s = pochhammer_finite(MINUS, 1, 1, 3, 7)
    data = s.to_json_dict()
    assert data["order"] == 7 and len(data["coeffs"]) == 8
    assert TruncatedSeries.from_json_dict(data) == s


def test_monomial_and_str():
    m = TruncatedSeries.monomial(3, 2, 4)
    assert m.coeffs == (0, 0, 3, 0, 0)
    assert "3*q^2" in str(m)


# ---------------------------------------------------------------------------
# algebraic properties
# ---------------------------------------------------------------------------


@st.composite
def series_pair(draw, max_order=10, max_coeff=40):
    order = draw(st.integers(0, max_order))
    box = st.integers(-max_coeff, max_coeff)
    a = draw(st.lists(box, min_size=order + 1, max_size=order + 1))
    b = draw(st.lists(box, min_size=order + 1, max_size=order + 1))
    return S(a), S(b)


@st.composite
def series_triple(draw, max_order=8, max_coeff=20):
    order = draw(st.integers(0, max_order))
    box = st.integers(-max_coeff, max_coeff)
    rows = [draw(st.lists(box, min_size=order + 1, max_size=order + 1)) for _ in range(3)]
    return tuple(S(r) for r in rows)


@given(series_pair())
def test_add_commutes(pair):
    a, b = pair
    assert a + b == b + a


@given(series_pair())
def test_mul_commutes(pair):
    a, b = pair
    assert a * b == b * a


@given(series_triple())
def test_mul_associates_and_distributes(triple):
    a, b, c = triple
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(series_pair())
@settings(max_examples=60)
def test_unit_constant_series_invert(pair):
    a, _ = pair
    unit = S((1,) + a.coeffs[1:])
    assert unit * unit.reciprocal() == TruncatedSeries.one(unit.order)


@given(series_pair(), st.integers(0, 6))
def test_shift_composes(pair, c):
    a, _ = pair
    assert a.shift(c).shift(1) == a.shift(c + 1)
