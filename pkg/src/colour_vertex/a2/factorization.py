"""Determinant forms of the degenerate A2 scalar products.

Both degenerations factor into a Slavnov-type determinant of one family of roots
times a partial domain-wall type determinant of the other family's rapidities.
"""

import enum
import itertools
import logging
from typing import Sequence

from colour_vertex.a2.layouts import A2
from colour_vertex.algebra.linalg import det, vandermonde
from colour_vertex.algebra.scalars import Scalar, one_like, unify
from colour_vertex.config import Method
from colour_vertex.errors import InputError
from colour_vertex.lattice.evaluate import PartitionValue
from colour_vertex.model.weights import Normalization
from colour_vertex.partition.dwpf import dwpf
from colour_vertex.partition.scalar_product import ratio_product, slavnov, slavnov_type_det

log = logging.getLogger(__name__)


class PartialForm(str, enum.Enum):
    """Which degeneration a partial determinant belongs to.

    ``partial-1``: rows x2, raising sites x1, lowering sites z.
    ``partial-2``: rows x1, raising sites y, lowering sites x2.
    """

    FIRST = "partial-1"
    SECOND = "partial-2"


def _split(values: Sequence, *lengths: int) -> list[list]:
    out, start = [], 0
    for n in lengths:
        out.append(list(values[start: start + n]))
        start += n
    return out


def partial_det(
    xs: Sequence,
    raising: Sequence,
    lowering: Sequence,
    form: PartialForm = PartialForm.FIRST,
) -> PartitionValue:
    """Delta{x}^-1 det[ x_i^{j-1} prod_u (x_i-u+1)/(x_i-u) - (x_i+1)^{j-1} prod_w (x_i-w-1)/(x_i-w) ].

    Examples
    --------
    >>> partial_det([4], [3], [7]).value
    Fraction(2, 3)
    >>> partial_det([3], [0, 1], [], PartialForm.SECOND).value
    Fraction(1, 1)
    """
    values = unify([*xs, *raising, *lowering])
    xs, raising, lowering = _split(values, len(xs), len(raising), len(lowering))
    if len(set(xs)) != len(xs):
        raise InputError("Rapidities {x} of a partial determinant must be pairwise distinct")
    label = f"{PartialForm(form).value} determinant"
    matrix = []
    for x in xs:
        up = ratio_product(x, raising, 1, label)
        down = ratio_product(x, lowering, -1, label)
        matrix.append([x**j * up - (x + 1) ** j * down for j in range(len(xs))])
    one = one_like(values)
    value = det(matrix) / vandermonde(xs) if xs else one
    return PartitionValue.of(value, Method.DETERMINANT, A2, Normalization.UNIT_B, form=PartialForm(form).value)


def antifundamental_slavnov(x2s: Sequence, b2s: Sequence, zs: Sequence) -> PartitionValue:
    """Slavnov determinant of the anti-fundamental A1 scalar product S(x2, b2 | z).

    Valid when {b2} solves the anti-fundamental Bethe equations for {z}.

    Examples
    --------
    >>> antifundamental_slavnov([5], ["11/2"], [7, 3]).value
    Fraction(1, 2)
    """
    values = unify([*x2s, *b2s, *zs])
    x2s, b2s, zs = _split(values, len(x2s), len(b2s), len(zs))
    one = one_like(values)
    value = slavnov_type_det(
        x2s, b2s, lambda x: one, lambda x: ratio_product(x, zs, -1, "anti-fundamental Slavnov determinant")
    )
    return PartitionValue.of(value, Method.DETERMINANT, A2, Normalization.UNIT_B)


def fact1(x2s: Sequence, x1s: Sequence, b1s: Sequence, ys: Sequence, zs: Sequence) -> PartitionValue:
    """The b2 degeneration as Slavnov(x1, b1 | y) times the first partial determinant.

    Examples
    --------
    >>> fact1([4], [3], ["1/2"], [0, 2], [7]).value
    Fraction(-4, 9)
    """
    first = slavnov(x1s, b1s, ys, norm=Normalization.UNIT_B).value
    second = partial_det(x2s, x1s, zs, PartialForm.FIRST).value
    first, second = unify([first, second])
    return PartitionValue.of(first * second, Method.DETERMINANT, A2, Normalization.UNIT_B, slavnov=first, partial=second)


def fact2(x2s: Sequence, x1s: Sequence, b2s: Sequence, ys: Sequence, zs: Sequence) -> PartitionValue:
    """The b1 degeneration as the anti-fundamental Slavnov(x2, b2 | z) times the second partial determinant.

    Examples
    --------
    >>> fact2([5], [3], ["11/2"], [0, 1], [7, 3]).value
    Fraction(1, 4)
    """
    first = antifundamental_slavnov(x2s, b2s, zs).value
    second = partial_det(x1s, ys, x2s, PartialForm.SECOND).value
    first, second = unify([first, second])
    return PartitionValue.of(first * second, Method.DETERMINANT, A2, Normalization.UNIT_B, slavnov=first, partial=second)


# ---------------------------------------------------------------
# Mixed scalar products as sums
# ---------------------------------------------------------------


def _ratio(first: Sequence, second: Sequence, shift: int, label: str) -> Scalar:
    acc = one_like([*first, *second])
    for u in first:
        acc *= ratio_product(u, second, shift, label)
    return acc


def mixed_ik_sum(rows: Sequence, bs: Sequence, ups: Sequence, downs: Sequence, method: Method = Method.DP) -> PartitionValue:
    """Mixed scalar product S(rows, bs | ups, downs) as a sum over splittings.

    ``ups`` are the quantum lines flowing up (factor (u-w+1)/(u-w)), ``downs``
    those flowing down (factor (u-w-1)/(u-w)). Each term is

    prod_{b_I, ups}(+) prod_{b_II, downs}(-) prod_{x_II, ups}(+) prod_{x_I, downs}(-)
    * prod_{x_I, x_II}(+) prod_{b_II, b_I}(+) * Z(b_II | x_II) Z(x_I | b_I)

    with unit_b domain walls. The same expression covers both mixed lattices.
    """
    values = unify([*rows, *bs, *ups, *downs])
    n = len(rows)
    if len(bs) != n:
        raise InputError(f"Mixed scalar product needs as many b as rows, got {len(bs)} and {n}")
    rows, bs, ups, downs = _split(values, n, n, len(ups), len(downs))
    label = "mixed Izergin-Korepin sum"

    total = one_like(values) * 0
    for size in range(n + 1):
        for xi in itertools.combinations(range(n), size):
            x_one = [rows[k] for k in xi]
            x_two = [rows[k] for k in range(n) if k not in xi]
            for bi in itertools.combinations(range(n), size):
                b_one = [bs[k] for k in bi]
                b_two = [bs[k] for k in range(n) if k not in bi]
                term = _ratio(b_one, ups, 1, label) * _ratio(b_two, downs, -1, label)
                term *= _ratio(x_two, ups, 1, label) * _ratio(x_one, downs, -1, label)
                term *= _ratio(x_one, x_two, 1, label) * _ratio(b_two, b_one, 1, label)
                if term == 0:
                    continue
                term *= dwpf(b_two, x_two, norm=Normalization.UNIT_B, method=method).value
                term *= dwpf(x_one, b_one, norm=Normalization.UNIT_B, method=method).value
                total += term
    return PartitionValue.of(total, Method.DETERMINANT, A2, Normalization.UNIT_B)
