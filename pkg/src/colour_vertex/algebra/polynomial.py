import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from mpmath import mp

from colour_vertex.algebra.scalars import Scalar, as_scalar, is_exact, unify
from colour_vertex.errors import InputError, LimitDivergence, PoleError, SampleCollision

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial with coefficients in ascending degree.

    Trailing zero coefficients are stripped, so the zero polynomial has an empty
    coefficient tuple and degree -1.
    """

    coefficients: tuple = ()

    def __post_init__(self):
        coeffs = list(self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Scalar:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def coefficient(self, k: int) -> Scalar:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return Fraction(0)

    def __call__(self, b) -> Scalar:
        b, *coeffs = unify([b, *self.coefficients])
        acc = b * 0
        for c in reversed(coeffs):
            acc = acc * b + c
        return acc

    def deflate(self, root) -> "Polynomial":
        """Divide by (b - root); the remainder must vanish."""
        if not self.coefficients:
            return self
        quotient = []
        carry = Fraction(0)
        for c in reversed(self.coefficients):
            carry = carry * root + c
            quotient.append(carry)
        remainder = quotient.pop()
        if remainder != 0:
            raise InputError(f"{root} is not a root (remainder {remainder})")
        return Polynomial(tuple(reversed(quotient)))

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(k * c for k, c in enumerate(self.coefficients))[1:])

    def divmod(self, divisor: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Exact long division by ``divisor``; returns (quotient, remainder)."""
        if divisor.degree < 0:
            raise InputError("Division by the zero polynomial")
        if not all(is_exact(c) for c in (*self.coefficients, *divisor.coefficients)):
            raise InputError("Long division needs exact rational coefficients")
        remainder = list(self.coefficients)
        quotient = [Fraction(0)] * max(self.degree - divisor.degree + 1, 0)
        for shift in range(len(quotient) - 1, -1, -1):
            factor = Fraction(remainder[shift + divisor.degree]) / Fraction(divisor.leading)
            quotient[shift] = factor
            for k, c in enumerate(divisor.coefficients):
                remainder[shift + k] -= factor * c
        return Polynomial(tuple(quotient)), Polynomial(tuple(remainder[: divisor.degree]))

    def squarefree(self) -> "Polynomial":
        """The product of the distinct irreducible factors: ``self / gcd(self, self')``, made monic.

        Examples
        --------
        >>> Polynomial((Fraction(1), Fraction(-2), Fraction(1))).squarefree().coefficients
        (Fraction(-1, 1), Fraction(1, 1))
        """
        if self.degree <= 0:
            return self
        quotient, _ = self.divmod(polynomial_gcd(self, self.derivative()))
        return Polynomial(tuple(c / quotient.leading for c in quotient.coefficients))

    def primitive_integer_coefficients(self) -> list[int]:
        """Integer coefficients of a rational polynomial scaled by the lcm of its denominators."""
        if not all(isinstance(c, Fraction) for c in self.coefficients):
            raise InputError("Integer clearing needs exact rational coefficients")
        lcm = math.lcm(*(c.denominator for c in self.coefficients))
        return [int(c * lcm) for c in self.coefficients]


def polynomial_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor of two exact polynomials (Euclid)."""
    while b.degree >= 0:
        a, b = b, a.divmod(b)[1]
    if a.degree < 0:
        return a
    return Polynomial(tuple(Fraction(c) / Fraction(a.leading) for c in a.coefficients))


def interpolate(points: Sequence[tuple]) -> Polynomial:
    """Unique polynomial of degree < len(points) through the given points.

    Newton divided differences, expanded to the monomial basis.

    Examples
    --------
    >>> interpolate([(0, 3), (1, 5)]).coefficients
    (Fraction(3, 1), Fraction(2, 1))
    """
    if not points:
        return Polynomial(())
    flat = unify([v for point in points for v in point])
    xs = flat[0::2]
    ys = flat[1::2]
    if len(set(xs)) != len(xs):
        raise InputError(f"Interpolation abscissae must be distinct, got {[str(x) for x in xs]}")

    n = len(xs)
    table = list(ys)
    newton = [table[0]]
    for level in range(1, n):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(n - level)]
        newton.append(table[0])

    zero = Fraction(0) if is_exact(xs[0]) else mp.mpf(0)
    coeffs = [zero] * n
    basis = [zero + 1]
    for k in range(n):
        for d, c in enumerate(basis):
            coeffs[d] = coeffs[d] + newton[k] * c
        if k + 1 < n:
            shifted = [zero] + basis
            for d, c in enumerate(basis):
                shifted[d] = shifted[d] - xs[k] * c
            basis = shifted
    return Polynomial(tuple(coeffs))


def _negligible(value, scale) -> bool:
    if is_exact(value):
        return value == 0
    return abs(value) <= scale * mp.mpf(2) ** (-(mp.prec * 3 // 5))


def limit_at_infinity(
    f: Callable,
    denom_roots: Sequence,
    *,
    start=1,
    step=1,
    retries: int = 64,
) -> Scalar:
    """lim_{b->oo} b*f(b) for a rational f with denominator prod_j (b - denom_roots[j]).

    The numerator P = f*D is reconstructed by exact interpolation at
    ``len(denom_roots) + 1`` sample points ``start, start+step, ...``; sample points that
    coincide with a root or make ``f`` raise :class:`PoleError` are skipped.

    Raises
    ------
    LimitDivergence
        If deg P equals deg D.
    SampleCollision
        If ``retries`` candidates were rejected before enough samples were found.

    Examples
    --------
    >>> limit_at_infinity(lambda b: 5 / (b - 2), [2])
    Fraction(5, 1)
    """
    roots = unify(denom_roots)
    degree = len(roots)
    start, step = as_scalar(start), as_scalar(step)
    if step == 0:
        raise InputError("Sample step must be nonzero")

    samples = []
    rejected = 0
    k = 0
    while len(samples) < degree + 1:
        b = start + k * step
        k += 1
        if any(b == r for r in roots):
            rejected += 1
        else:
            try:
                value = f(b)
            except PoleError:
                value = None
                rejected += 1
            if value is not None:
                b_u, value_u, *roots_u = unify([b, value, *roots])
                for r in roots_u:
                    value_u = value_u * (b_u - r)
                samples.append((b_u, value_u))
        if rejected > retries:
            raise SampleCollision(
                f"sample point collision: {rejected} candidates rejected while looking for {degree + 1} samples"
            )
    log.debug("limit sampling at %s", [str(b) for b, _ in samples])

    numerator = interpolate(samples)
    if degree == 0:
        if numerator.coefficients and not _negligible(numerator.leading, 1):
            raise LimitDivergence("limit diverges: f does not vanish at infinity")
        return Fraction(0)
    scale = max((abs(c) for c in numerator.coefficients), default=0)
    if numerator.degree >= degree and not _negligible(numerator.coefficient(degree), scale):
        raise LimitDivergence(
            f"limit diverges: numerator degree {numerator.degree} reaches denominator degree {degree}"
        )
    return numerator.coefficient(degree - 1)
