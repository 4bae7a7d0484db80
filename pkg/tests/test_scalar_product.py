import itertools
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from colour_vertex.algebra.polynomial import interpolate
from colour_vertex.config import Method
from colour_vertex.errors import InputError, PoleError
from colour_vertex.model.weights import ModelParams, Normalization, crossing_factor
from colour_vertex.partition.scalar_product import (
    coloured_scalar_product,
    frozen_block_reduction,
    ik_sum,
    ratio_product,
    scalar_product,
    slavnov,
    slavnov_type_det,
)


def rapidities(low, high, size):
    return st.lists(
        st.fractions(min_value=low, max_value=high, max_denominator=5), min_size=size, max_size=size, unique=True
    )


@st.composite
def full_products(draw):
    n = draw(st.integers(min_value=1, max_value=2))
    length = draw(st.integers(min_value=n, max_value=3))
    return draw(rapidities(8, 12, n)), draw(rapidities(14, 18, n)), draw(rapidities(0, 6, length))


def test_scalar_product_instance():
    assert scalar_product([3], [4], [0, 2], method=Method.ALL).value == Fraction(19, 120)


def test_ik_sum_instance():
    assert ik_sum([3], [4], [0, 2]).value == Fraction(19, 24)
    assert scalar_product([3], [4], [0, 2], Normalization.UNIT_B).value == Fraction(19, 24)


@given(full_products())
def test_ik_sum_matches_the_unit_b_lattice(case):
    xs, bs, ys = case
    assert ik_sum(xs, bs, ys).value == scalar_product(xs, bs, ys, Normalization.UNIT_B).value


@pytest.mark.parametrize("ys", [[0, 1], [0, 2, 5], [Fraction(1, 2), 4, 6, 7]])
def test_frozen_block_reduction_is_the_empty_b_scalar_product(ys):
    xs = [9, Fraction(23, 2)]
    assert frozen_block_reduction(xs, ys).value == scalar_product(xs, [], ys).value


def test_slavnov_on_shell_equals_the_lattice():
    # b = 1/2 solves the Bethe equation for y = {0, 2}
    assert slavnov([3], [Fraction(1, 2)], [0, 2]).value == Fraction(-1, 4)
    assert scalar_product([3], [Fraction(1, 2)], [0, 2], method=Method.ENUMERATION).value == Fraction(-1, 4)


def test_slavnov_off_shell_differs_from_the_lattice():
    assert slavnov([3], [4], [0, 2]).value == Fraction(5, 8)
    assert scalar_product([3], [4], [0, 2]).value != Fraction(5, 8)


def test_unit_b_slavnov_carries_the_x_row_crossing_factors():
    unit_a = slavnov([3], [Fraction(1, 2)], [0, 2]).value
    unit_b = slavnov([3], [Fraction(1, 2)], [0, 2], Normalization.UNIT_B).value
    assert unit_b == unit_a * crossing_factor(3, 0) * crossing_factor(3, 2) == Fraction(-2, 3)


def test_slavnov_type_det_validates_its_input():
    one = lambda x: Fraction(1)  # noqa: E731
    with pytest.raises(InputError):
        slavnov_type_det([Fraction(1)], [Fraction(2), Fraction(3)], one, one)
    with pytest.raises(PoleError):
        slavnov_type_det([Fraction(2)], [Fraction(2)], one, one)


def test_ratio_product():
    assert ratio_product(Fraction(3), [Fraction(0), Fraction(2)], 1, "test") == Fraction(8, 3)
    with pytest.raises(PoleError):
        ratio_product(Fraction(2), [Fraction(2)], -1, "test")


def test_scalar_product_shape_checks():
    with pytest.raises(InputError):
        scalar_product([3, 4], [5, 6, 7], [0, 1, 2])
    with pytest.raises(InputError):
        scalar_product([3, 4], [5], [0])


@st.composite
def restricted_products(draw):
    n = draw(st.integers(min_value=1, max_value=2))
    length = draw(st.integers(min_value=n, max_value=3))
    m = draw(st.integers(min_value=1, max_value=n))
    return draw(rapidities(8, 12, n)), draw(rapidities(14, 18, m)), draw(rapidities(0, 6, length))


@given(restricted_products())
def test_restricted_scalar_product_degree_in_the_last_b(case):
    xs, bs, ys = case
    n, m, length = len(xs), len(bs), len(ys)
    bound = length - n + m - 1
    points = []
    for k in range(bound + 3):
        b = Fraction(20 + k)
        value = scalar_product(xs, bs[:-1] + [b], ys).value
        for y in ys[n - m:]:
            value *= b - y + 1
        points.append((b, value))
    assert interpolate(points).degree <= bound


@given(restricted_products(), st.randoms(use_true_random=False))
def test_restricted_scalar_product_is_symmetric_in_the_open_columns(case, rng):
    xs, bs, ys = case
    frozen = len(xs) - len(bs)
    open_columns = ys[frozen:]
    rng.shuffle(open_columns)
    assert scalar_product(xs, bs, ys[:frozen] + open_columns).value == scalar_product(xs, bs, ys).value


@given(restricted_products())
def test_pinning_the_last_b_to_a_column_drops_one_b_row(case):
    xs, bs, ys = case
    assume(all(abs(u - v) != 1 for u, v in itertools.combinations(ys, 2)))
    pinned = bs[:-1] + [ys[len(xs) - len(bs)]]
    assert scalar_product(xs, pinned, ys).value == scalar_product(xs, bs[:-1], ys).value


def test_pinned_b_instance():
    xs, ys = [Fraction(9, 2), Fraction(13, 2)], [0, 2, 5]
    expected = Fraction(-23136, 105875)
    assert scalar_product(xs, [Fraction(7, 2), 0], ys, method=Method.ALL).value == expected
    assert scalar_product(xs, [Fraction(7, 2)], ys, method=Method.ALL).value == expected


@pytest.mark.parametrize("colours", list(itertools.product((1, 2), repeat=2)))
@pytest.mark.parametrize("bs", [[], [Fraction(29, 2)], [Fraction(29, 2), 16]])
def test_coloured_scalar_product_is_colour_blind(colours, bs):
    xs, ys = [9, Fraction(31, 3)], [0, 2, Fraction(7, 2)]
    coloured = coloured_scalar_product(xs, bs, ys, colours, ModelParams(rank=2))
    assert coloured.value == scalar_product(xs, bs, ys).value
