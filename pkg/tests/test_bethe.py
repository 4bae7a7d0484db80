import math
from fractions import Fraction

import pytest
from mpmath import mp

from colour_vertex.algebra.polynomial import Polynomial, interpolate
from colour_vertex.algebra.scalars import is_exact
from colour_vertex.bethe.equations import (
    BetheSystem,
    Status,
    Variant,
    poles,
    rescaled_nested_residual,
    residual,
    residual_magnitude,
)
from colour_vertex.bethe.solver import cleared_polynomial, polynomial_roots, solve
from colour_vertex.errors import InputError
from colour_vertex.lattice.evaluate import agree
from colour_vertex.partition.scalar_product import scalar_product, slavnov


def test_residual_sign_convention():
    system = BetheSystem(Variant.A1_FUNDAMENTAL, ys=[0, 2])
    assert residual(system, [Fraction(1, 2)]) == [0]
    assert residual(system, [0]) == [-1]


def test_cleared_polynomial_of_a_single_root():
    system = BetheSystem(Variant.A1_FUNDAMENTAL, ys=[0, 2])
    assert cleared_polynomial(system) == Polynomial((Fraction(-1), Fraction(2)))


def test_fundamental_single_root():
    system = solve(Variant.A1_FUNDAMENTAL, ys=[0, 2])
    assert system.status is Status.SOLVED
    assert system.solutions == ((Fraction(1, 2),),)


def test_root_on_a_site_is_not_a_solution():
    system = solve(Variant.A1_FUNDAMENTAL, ys=[0, 1])
    assert system.status is Status.NO_FINITE_SOLUTION
    assert system.solutions == ()


def test_antifundamental_single_root():
    system = solve(Variant.A1_ANTIFUNDAMENTAL, zs=[7, 3])
    assert system.solutions == ((Fraction(11, 2),),)


def test_antifundamental_with_one_site_has_no_finite_root():
    assert solve(Variant.A1_ANTIFUNDAMENTAL, zs=[4]).status is Status.NO_FINITE_SOLUTION


def test_polynomial_roots_beyond_quadratics_are_recognised():
    # (b - 1/2)(b - 3)(b + 2)
    poly = Polynomial(tuple(Fraction(c) for c in (3, Fraction(-11, 2), Fraction(-3, 2), 1)))
    with mp.workprec(256):
        roots = polynomial_roots(poly)
    assert sorted(roots) == [-2, Fraction(1, 2), 3]


def test_irrational_quadratic_roots_are_floats():
    with mp.workprec(128):
        roots = polynomial_roots(Polynomial((Fraction(-2), Fraction(0), Fraction(1))))
        assert all(abs(abs(r) - mp.sqrt(2)) < mp.mpf(2) ** -100 for r in roots)


def test_empty_system_is_trivially_solved():
    assert solve(Variant.A1_FUNDAMENTAL, ys=[0, 1], counts=(0,)).solutions == ((),)


def test_system_validation():
    with pytest.raises(InputError):
        BetheSystem(Variant.A2_NESTED, ys=[0], counts=(1,))
    with pytest.raises(InputError):
        BetheSystem(Variant.A2_NESTED, ys=[0], zs=[], counts=(1, 1))
    with pytest.raises(InputError):
        residual(BetheSystem(Variant.A1_FUNDAMENTAL, ys=[0, 2], counts=(2,)), [1])


def test_poles_name_the_inadmissible_roots():
    system = BetheSystem(Variant.A1_FUNDAMENTAL, ys=[0, 2], counts=(2,))
    assert poles(system, [Fraction(1), Fraction(2)])
    assert not poles(system, [Fraction(1, 3), Fraction(5, 7)])


def test_rescaled_nested_residual_tends_to_the_a1_residual():
    nested = BetheSystem(Variant.A2_NESTED, ys=[0, 2], zs=[7], counts=(1, 1))
    a1 = residual(BetheSystem(Variant.A1_FUNDAMENTAL, ys=[0, 2]), [3])[0]
    t = 10**6
    assert a1 == 5
    assert rescaled_nested_residual(nested, [3], t, "b2") == [5 - Fraction(18, t)]
    with pytest.raises(InputError):
        rescaled_nested_residual(nested, [3], t, "b3")


def test_coupled_roots_reproduce_the_lattice(config):
    ys, xs = [0, 1, 3, 6], [Fraction(9, 2), Fraction(13, 2)]
    system = solve(Variant.A1_FUNDAMENTAL, ys=ys, counts=(2,), config=config)
    assert system.status is Status.SOLVED
    with config.float_context():
        for roots in system.solutions:
            assert residual_magnitude(residual(system, roots)) < config.tolerance
            assert not poles(system, roots, config.tolerance)
        bs = list(system.solutions[0])
        assert agree(slavnov(xs, bs, ys).value, scalar_product(xs, bs, ys).value, config.tolerance_bits)


def test_coupled_roots_are_irrational(config):
    system = solve(Variant.A1_FUNDAMENTAL, ys=[0, 1, 3, 6], counts=(2,), config=config)
    assert system.solutions
    assert not any(is_exact(b) for roots in system.solutions for b in roots)


def test_coupled_solutions_are_the_symmetric_function_solutions(config):
    # Q(u) = u^2 - s u + p must divide A(u)Q(u-1) + D(u)Q(u+1); that forces
    # (s - 4)(s - 5)(s - 11) = 0 with p = (s^2 - 4s + 13)/3, i.e. {2 +- i/sqrt(3)},
    # {2, 3} and {5, 6}. The last two put a root on a site.
    system = solve(Variant.A1_FUNDAMENTAL, ys=[0, 1, 3, 6], counts=(2,), config=config)
    with config.float_context():
        assert len(system.solutions) == 1
        b1, b2 = system.solutions[0]
        assert abs(b1 + b2 - 4) < mp.mpf(2) ** -100
        assert abs(b1 * b2 - mp.mpf(13) / 3) < mp.mpf(2) ** -100
        for pair in ([Fraction(2), Fraction(3)], [Fraction(5), Fraction(6)]):
            assert residual(system, pair) == [0, 0]
            assert poles(system, pair)


def test_coupled_solutions_match_exact_elimination(config):
    """The first equation is linear in b2; eliminating it leaves one exact polynomial in b1."""
    ys = [0, 1, 3, 6]
    system = solve(Variant.A1_FUNDAMENTAL, ys=ys, counts=(2,), config=config)

    def a(u):
        return math.prod(u - y + 1 for y in ys)

    def d(u):
        return math.prod(u - y for y in ys)

    def partner(c):
        return ((c - 1) * a(c) - (c + 1) * d(c)) / (a(c) - d(c))

    def eliminated(c):
        # second equation at b2 = partner(c), times (a - d)^4 to clear the denominators
        b2 = partner(c)
        return (a(c) - d(c)) ** 4 * ((b2 - c - 1) * a(b2) - (b2 - c + 1) * d(b2))

    abscissae = [Fraction(k, 3) for k in range(1, 80) if a(Fraction(k, 3)) != d(Fraction(k, 3))][:24]
    poly = interpolate([(c, eliminated(c)) for c in abscissae])
    assert 0 < poly.degree < len(abscissae) - 1

    with config.float_context():
        pairs = []
        for c in polynomial_roots(poly):
            if abs(a(c) - d(c)) <= config.tolerance:
                continue
            pair = [c, partner(c)]
            tol = None if all(is_exact(b) for b in pair) else config.tolerance
            if poles(system, pair, tol) or residual_magnitude(residual(system, pair)) > config.tolerance:
                continue
            if not any(_same_pair(pair, other, mp.mpf(2) ** -100) for other in pairs):
                pairs.append(pair)
        assert len(pairs) == len(system.solutions)
        for roots in system.solutions:
            assert any(_same_pair(list(roots), pair, mp.mpf(2) ** -100) for pair in pairs)


def _same_pair(first, second, tol) -> bool:
    straight = max(abs(first[0] - second[0]), abs(first[1] - second[1]))
    crossed = max(abs(first[0] - second[1]), abs(first[1] - second[0]))
    return min(straight, crossed) <= tol


@pytest.mark.slow
def test_nested_system_is_solved(config):
    system = solve(Variant.A2_NESTED, ys=[0, 2], zs=[7], counts=(1, 1), config=config)
    assert system.status is Status.SOLVED
    assert system.solutions
    with config.float_context():
        for roots in system.solutions:
            assert residual_magnitude(residual(system, roots)) < config.tolerance
            assert not poles(system, roots, config.tolerance)
