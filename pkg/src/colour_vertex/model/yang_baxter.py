import itertools
import logging
from fractions import Fraction

from mpmath import mp

from colour_vertex.algebra.scalars import Scalar, as_scalar, is_exact
from colour_vertex.model.weights import ModelParams, Normalization, r_matrix

log = logging.getLogger(__name__)


def _embed(entries: dict, slots: tuple[int, int], n_colours: int) -> dict:
    """Lift a two-site sparse matrix to three sites; the remaining site is a spectator."""
    spectator = ({0, 1, 2} - set(slots)).pop()
    rows: dict = {}
    for ((i1, i2), (j1, j2)), value in entries.items():
        for k in range(n_colours):
            row = [0, 0, 0]
            col = [0, 0, 0]
            row[slots[0]], row[slots[1]], row[spectator] = i1, i2, k
            col[slots[0]], col[slots[1]], col[spectator] = j1, j2, k
            rows.setdefault(tuple(row), {})[tuple(col)] = value
    return rows


def _multiply(left: dict, right: dict) -> dict:
    product: dict = {}
    for row, cols in left.items():
        acc: dict = {}
        for mid, a in cols.items():
            for col, b in right.get(mid, {}).items():
                acc[col] = acc[col] + a * b if col in acc else a * b
        if acc:
            product[row] = acc
    return product


def ybe_residual(params: ModelParams, norm: Normalization, x, y, z) -> Scalar:
    """Largest entrywise |LHS - RHS| of R12(x,y) R13(x,z) R23(y,z) = R23(y,z) R13(x,z) R12(x,y).

    The operators act on the (n+1)^3-dimensional space; matrices are kept sparse so
    rank 3 stays cheap.

    Examples
    --------
    >>> ybe_residual(ModelParams(rank=1), Normalization.UNIT_A, 5, 3, 2)
    Fraction(0, 1)
    """
    x, y, z = as_scalar(x), as_scalar(y), as_scalar(z)
    n_colours = params.rank + 1
    r12 = _embed(r_matrix(params, norm, x, y), (0, 1), n_colours)
    r13 = _embed(r_matrix(params, norm, x, z), (0, 2), n_colours)
    r23 = _embed(r_matrix(params, norm, y, z), (1, 2), n_colours)

    lhs = _multiply(_multiply(r12, r13), r23)
    rhs = _multiply(_multiply(r23, r13), r12)

    worst = None
    for row in itertools.product(range(n_colours), repeat=3):
        left, right = lhs.get(row, {}), rhs.get(row, {})
        for col in set(left) | set(right):
            a = left.get(col)
            b = right.get(col)
            if a is None:
                diff = abs(b)
            elif b is None:
                diff = abs(a)
            else:
                diff = abs(a - b)
            if worst is None or diff > worst:
                worst = diff
    if worst is None:
        worst = Fraction(0)
    if not is_exact(worst):
        log.debug("ybe residual %s at %d bits", mp.nstr(worst, 8), mp.prec)
    return worst
