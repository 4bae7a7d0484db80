import logging
from fractions import Fraction
from typing import Callable, Sequence

from mpmath import mp

from colour_vertex.algebra.scalars import Scalar, is_exact, unify
from colour_vertex.errors import InputError

log = logging.getLogger(__name__)


def vandermonde(
    xs: Sequence,
    negated: bool = False,
    bracket: Callable | None = None,
) -> Scalar:
    """Vandermonde product of an ordered list.

    Parameters
    ----------
    xs:
        Ordered rapidities.
    negated:
        ``False`` gives prod_{i<j} (x_j - x_i); ``True`` gives prod_{i<j} (x_i - x_j),
        which is the product for the set {-x}.
    bracket:
        Optional map applied to every difference, e.g. ``mp.sinh`` for the
        trigonometric determinant.

    Examples
    --------
    >>> vandermonde([2, 3])
    Fraction(1, 1)
    >>> vandermonde([0, 1], negated=True)
    Fraction(-1, 1)
    """
    xs = unify(xs)
    result = Fraction(1) if all(is_exact(x) for x in xs) else mp.mpf(1)
    for j in range(len(xs)):
        for i in range(j):
            diff = xs[i] - xs[j] if negated else xs[j] - xs[i]
            result *= bracket(diff) if bracket is not None else diff
    return result


def _check_square(matrix) -> list[list]:
    rows = [list(row) for row in matrix]
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise InputError(f"Determinant needs a square matrix, got {n} rows and a row of length {len(row)}")
    return rows


def _bareiss(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    m = [list(row) for row in rows]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det(matrix) -> Scalar:
    """Determinant of a square matrix.

    Exact entries go through fraction-free (Bareiss) elimination; float entries
    use mpmath's LU determinant at the current working precision.

    Examples
    --------
    >>> det([[1, 2], [3, 4]])
    Fraction(-2, 1)
    """
    rows = _check_square(matrix)
    n = len(rows)
    if n == 0:
        return Fraction(1)
    flat = unify([x for row in rows for x in row])
    rows = [flat[i * n:(i + 1) * n] for i in range(n)]
    if all(is_exact(x) for x in flat):
        return _bareiss(rows)
    log.debug("float determinant of size %d at %d bits", n, mp.prec)
    return mp.det(mp.matrix(rows))


def cofactor_det(matrix) -> Scalar:
    """Laplace expansion along the first row; an independent oracle for :func:`det`."""
    rows = _check_square(matrix)
    n = len(rows)
    if n == 0:
        return Fraction(1)
    flat = unify([x for row in rows for x in row])
    rows = [flat[i * n:(i + 1) * n] for i in range(n)]
    return _laplace(rows)


def _laplace(rows: list[list]) -> Scalar:
    if len(rows) == 1:
        return rows[0][0]
    total = None
    for j, entry in enumerate(rows[0]):
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = entry * _laplace(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total
