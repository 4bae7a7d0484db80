from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from mpmath import mp

from colour_vertex.algebra.linalg import cofactor_det, det, vandermonde
from colour_vertex.algebra.polynomial import Polynomial, interpolate, limit_at_infinity, polynomial_gcd
from colour_vertex.algebra.scalars import as_scalar, format_scalar, is_exact, unify
from colour_vertex.errors import InputError, LimitDivergence, SampleCollision

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=9)


@pytest.mark.parametrize(
    "text, expected",
    [("6/8", Fraction(3, 4)), ("-2", Fraction(-2)), ("0.125", Fraction(1, 8)), (5, Fraction(5))],
)
def test_as_scalar_parses_exact_forms(text, expected):
    assert as_scalar(text) == expected
    assert is_exact(as_scalar(text))


def test_as_scalar_rejects_garbage():
    with pytest.raises(InputError):
        as_scalar("three halves")
    with pytest.raises(InputError):
        as_scalar(True)


def test_format_scalar_keeps_denominator():
    assert format_scalar(Fraction(0)) == "0/1"
    assert format_scalar(Fraction(-4, 9)) == "-4/9"


def test_unify_promotes_everything_once_a_float_appears():
    with mp.workprec(128):
        values = unify([Fraction(1, 3), mp.mpf("0.5")])
    assert not any(is_exact(v) for v in values)


@given(st.lists(st.lists(rationals, min_size=4, max_size=4), min_size=4, max_size=4))
def test_bareiss_matches_cofactor_expansion(rows):
    assert det(rows) == cofactor_det(rows)


def test_det_of_singular_and_empty_matrices():
    assert det([[1, 2], [2, 4]]) == 0
    assert det([]) == 1


def test_det_rejects_ragged_rows():
    with pytest.raises(InputError):
        det([[1, 2], [3]])


def test_float_det_agrees_with_exact():
    rows = [[Fraction(1, 3), 2, 5], [7, Fraction(-1, 2), 1], [0, 4, Fraction(9, 7)]]
    with mp.workprec(256):
        floats = [[mp.mpf(x.numerator) / x.denominator if isinstance(x, Fraction) else mp.mpf(x) for x in r] for r in rows]
        exact = det(rows)
        assert abs(det(floats) - mp.mpf(exact.numerator) / exact.denominator) < mp.mpf(2) ** -200


@given(st.lists(rationals, min_size=1, max_size=5, unique=True))
def test_vandermonde_is_the_determinant_of_powers(xs):
    matrix = [[x**j for j in range(len(xs))] for x in xs]
    assert vandermonde(xs) == det(matrix)
    assert vandermonde(xs, negated=True) == vandermonde([-x for x in xs])


def test_polynomial_strips_trailing_zeros_and_evaluates():
    p = Polynomial((Fraction(1), Fraction(0), Fraction(2), Fraction(0)))
    assert p.degree == 2
    assert p.leading == 2
    assert p(3) == 19
    assert Polynomial(()).degree == -1


def test_deflate_divides_out_a_root():
    p = Polynomial(tuple(Fraction(c) for c in (-6, 1, 1)))  # (b - 2)(b + 3)
    assert p.deflate(2).coefficients == (Fraction(3), Fraction(1))
    with pytest.raises(InputError):
        p.deflate(1)


def test_primitive_integer_coefficients():
    assert Polynomial((Fraction(1, 2), Fraction(1, 3))).primitive_integer_coefficients() == [3, 2]
    # lcm(6, 4, 9) = 36, not the product of the denominators
    poly = Polynomial((Fraction(1, 6), Fraction(-3, 4), Fraction(2, 9)))
    assert poly.primitive_integer_coefficients() == [6, -27, 8]


def from_roots(roots, lead=Fraction(1)):
    coeffs = [Fraction(lead)]
    for r in roots:
        shifted = [Fraction(0)] + coeffs
        for k, c in enumerate(coeffs):
            shifted[k] -= r * c
        coeffs = shifted
    return Polynomial(tuple(coeffs))


@given(st.lists(rationals, min_size=1, max_size=5), st.lists(rationals, min_size=1, max_size=3))
def test_long_division(dividend, divisor):
    a, b = Polynomial(tuple(dividend)), Polynomial(tuple(divisor))
    if b.degree < 0:
        with pytest.raises(InputError):
            a.divmod(b)
        return
    quotient, remainder = a.divmod(b)
    assert remainder.degree < b.degree
    product = interpolate([(k, quotient(k) * b(k) + remainder(k)) for k in range(len(dividend) + len(divisor))])
    assert product == a


@given(st.lists(rationals, min_size=1, max_size=4, unique=True), st.integers(min_value=1, max_value=3))
def test_squarefree_keeps_each_root_once(roots, repeat):
    repeated = from_roots(roots[:1] * repeat + roots + roots[-1:], lead=Fraction(-5, 2))
    assert repeated.squarefree() == from_roots(sorted(roots))


def test_polynomial_gcd_is_monic():
    assert polynomial_gcd(from_roots([1, 2]), from_roots([3])) == Polynomial((Fraction(1),))
    assert polynomial_gcd(from_roots([1, 2]), from_roots([2, 5], lead=3)) == from_roots([2])


@given(st.lists(rationals, min_size=1, max_size=5))
def test_interpolation_recovers_the_polynomial(coefficients):
    p = Polynomial(tuple(coefficients))
    points = [(k, p(k)) for k in range(len(coefficients))]
    assert interpolate(points) == p


def test_interpolation_needs_distinct_abscissae():
    with pytest.raises(InputError):
        interpolate([(1, 2), (1, 3)])


@given(rationals, rationals, st.integers(min_value=1, max_value=5), st.integers(min_value=1, max_value=3))
def test_limit_is_independent_of_the_samples(r1, r2, start, step):
    f = lambda b: (3 * b + r1) / ((b - r1) * (b - r2))  # noqa: E731
    assert limit_at_infinity(f, [r1, r2], start=start, step=step) == 3


def test_limit_diverges_when_degrees_match():
    with pytest.raises(LimitDivergence):
        limit_at_infinity(lambda b: b / (b - 1), [1])


def test_limit_gives_up_after_repeated_collisions():
    with pytest.raises(SampleCollision):
        limit_at_infinity(lambda b: 1 / (b - 1), [1], start=1, step=1, retries=0)


def test_limit_of_a_vanishing_function():
    assert limit_at_infinity(lambda b: Fraction(0), []) == 0
