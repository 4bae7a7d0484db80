"""A1 scalar products as lattices, as Slavnov determinants and as Izergin-Korepin sums.

The lattice stacks N rows ``x1..xN`` (black in on the left, white out on the right)
under m rows ``b1..bm`` (white in, black out). Columns run
``y_{N-m+1}, ..., y_L, y_1, ..., y_{N-m}``; the last N-m of them carry black out
of the top, all other top edges are white. m = N is the full scalar product.
"""

import itertools
import logging
from typing import Callable, Sequence

from colour_vertex.algebra.linalg import det, vandermonde
from colour_vertex.algebra.scalars import Scalar, as_scalars, one_like, unify
from colour_vertex.config import Method
from colour_vertex.errors import InputError, PoleError
from colour_vertex.lattice.evaluate import PartitionValue, evaluate
from colour_vertex.lattice.spec import Fixed, LatticeSpec, Weighted, grid
from colour_vertex.model.weights import RATIONAL_A1, ModelParams, Normalization
from colour_vertex.partition.dwpf import dwpf, dwpf_ik

log = logging.getLogger(__name__)


def scalar_product_lattice(
    xs: Sequence,
    bs: Sequence,
    ys: Sequence,
    params: ModelParams = RATIONAL_A1,
    norm: Normalization = Normalization.UNIT_A,
    colours: Sequence[int] | None = None,
) -> LatticeSpec:
    """Restricted scalar product lattice S(x, b_m | y); ``colours`` gives the coloured variant.

    In the coloured variant the x rows enter with the given colours and every
    black exit (b row right edges, black top edges) is summed over 1..n.
    """
    xs, bs, ys = as_scalars(xs), as_scalars(bs), as_scalars(ys)
    n_rows, m, length = len(xs), len(bs), len(ys)
    if not m <= n_rows <= length:
        raise InputError(f"Scalar product needs m <= N <= L, got m={m}, N={n_rows}, L={length}")

    if colours is None:
        left_x = [Fixed(1)] * n_rows
        black_out = Fixed(1)
    else:
        if len(colours) != n_rows:
            raise InputError(f"{n_rows} x rows need {n_rows} colours, got {len(colours)}")
        if any(c < 1 for c in colours):
            raise InputError(f"Colours must be at least 1, got {list(colours)}")
        left_x = [Fixed(params.check_colour(c)) for c in colours]
        black_out = Weighted.summed(range(1, params.rank + 1))

    frozen = n_rows - m
    order = list(range(frozen, length)) + list(range(frozen))
    return grid(
        xs + bs,
        [ys[k] for k in order],
        left=left_x + [Fixed(0)] * m,
        right=[Fixed(0)] * n_rows + [black_out] * m,
        bottom=[Fixed(0)] * length,
        top=[Fixed(0)] * (length - frozen) + [black_out] * frozen,
        model=params,
        norm=norm,
        row_names=[f"x{k + 1}" for k in range(n_rows)] + [f"b{k + 1}" for k in range(m)],
        col_names=[f"y{k + 1}" for k in order],
    )


def scalar_product(
    xs: Sequence,
    bs: Sequence,
    ys: Sequence,
    norm: Normalization = Normalization.UNIT_A,
    method: Method = Method.DP,
) -> PartitionValue:
    """Scalar product S({x}_N, {b}_m | {y}_L) by lattice evaluation; m < N gives the restricted one.

    Examples
    --------
    >>> scalar_product([3], [4], [0, 2]).value
    Fraction(19, 120)
    """
    return evaluate(scalar_product_lattice(xs, bs, ys, norm=norm), method)


def coloured_scalar_product(
    xs: Sequence,
    bs: Sequence,
    ys: Sequence,
    colours: Sequence[int],
    params: ModelParams,
    norm: Normalization = Normalization.UNIT_A,
    method: Method = Method.DP,
) -> PartitionValue:
    return evaluate(scalar_product_lattice(xs, bs, ys, params, norm, colours=colours), method)


def frozen_block_reduction(xs: Sequence, ys: Sequence) -> PartitionValue:
    """S({x}_N, {b}_0 | {y}_L) as a product of b weights times Z({x}|y_1..y_N).

    The L-N leftmost columns carry no black, so every vertex there is a b vertex
    and the rest of the lattice is a domain wall.
    """
    values = unify([*xs, *ys])
    xs, ys = values[: len(xs)], values[len(xs):]
    if len(xs) > len(ys):
        raise InputError(f"Scalar product needs N <= L, got N={len(xs)}, L={len(ys)}")
    factor = one_like(values)
    for x in xs:
        for y in ys[len(xs):]:
            if x - y + 1 == 0:
                raise PoleError(f"b weight has a pole at x={x}, y={y}", (x, y))
            factor *= (x - y) / (x - y + 1)
    z = dwpf_ik(xs, ys[: len(xs)])
    return PartitionValue.of(factor * z.value, Method.DETERMINANT, RATIONAL_A1, Normalization.UNIT_A)


# ---------------------------------------------------------------
# Slavnov-type determinants
# ---------------------------------------------------------------


def slavnov_type_det(
    xs: Sequence,
    bs: Sequence,
    plus_factor: Callable[[Scalar], Scalar],
    minus_factor: Callable[[Scalar], Scalar],
) -> Scalar:
    """Delta{x}^-1 Delta{-b}^-1 det[ (P_ij(+1) plus(x_i) - P_ij(-1) minus(x_i)) / (b_j - x_i) ]

    where P_ij(s) = prod_{k != j} (b_k - x_i + s). Inputs must already share one
    arithmetic mode.
    """
    if len(xs) != len(bs):
        raise InputError(f"Slavnov determinant needs as many x as b, got {len(xs)} and {len(bs)}")
    if len(set(xs)) != len(xs) or len(set(bs)) != len(bs):
        raise InputError("Rapidities within {x} and within {b} must be pairwise distinct")
    one = one_like([*xs, *bs])
    matrix = []
    for x in xs:
        plus, minus = plus_factor(x), minus_factor(x)
        row = []
        for j, b in enumerate(bs):
            if b == x:
                raise PoleError(f"Slavnov determinant has a pole at b={b}, x={x}", (b, x))
            up, down = one, one
            for k, other in enumerate(bs):
                if k != j:
                    up *= other - x + 1
                    down *= other - x - 1
            row.append((up * plus - down * minus) / (b - x))
        matrix.append(row)
    return det(matrix) / (vandermonde(xs) * vandermonde(bs, negated=True))


def ratio_product(x, ws: Sequence, shift: int, label: str) -> Scalar:
    """prod_k (x - w_k + shift)/(x - w_k)."""
    acc = one_like([x, *ws])
    for w in ws:
        if x == w:
            raise PoleError(f"{label} has a pole at x={x}, w={w}", (x, w))
        acc *= (x - w + shift) / (x - w)
    return acc


def slavnov(
    xs: Sequence,
    bs: Sequence,
    ys: Sequence,
    norm: Normalization = Normalization.UNIT_A,
) -> PartitionValue:
    """Slavnov's determinant for an off-shell {x} against on-shell {b}.

    Only equal to the scalar product when {b} solves the A1 Bethe equations for {y};
    nothing here checks that.

    Parameters
    ----------
    norm:
        ``UNIT_A`` weights the subtracted term by prod (x-y)/(x-y+1); ``UNIT_B`` instead
        weights the leading term by prod (x-y+1)/(x-y), which is the unit_a value
        times the crossing factors of the x rows only.

    Examples
    --------
    >>> slavnov([3], ["1/2"], [0, 2]).value
    Fraction(-1, 4)
    """
    values = unify([*xs, *bs, *ys])
    n_rows = len(xs)
    xs, bs, ys = values[:n_rows], values[n_rows: n_rows + len(bs)], values[n_rows + len(bs):]
    one = one_like(values)
    if Normalization(norm) is Normalization.UNIT_A:
        shifted = [y - 1 for y in ys]
        value = slavnov_type_det(xs, bs, lambda x: one, lambda x: ratio_product(x, shifted, -1, "Slavnov determinant"))
    else:
        value = slavnov_type_det(xs, bs, lambda x: ratio_product(x, ys, 1, "Slavnov determinant"), lambda x: one)
    return PartitionValue.of(value, Method.DETERMINANT, RATIONAL_A1, norm)


# ---------------------------------------------------------------
# Izergin-Korepin sum
# ---------------------------------------------------------------


def _cross(first: Sequence, second: Sequence, label: str) -> Scalar:
    """prod over pairs (u in first, v in second) of (u - v + 1)/(u - v)."""
    acc = one_like([*first, *second])
    for u in first:
        acc *= ratio_product(u, second, 1, label)
    return acc


def ik_sum(xs: Sequence, bs: Sequence, ys: Sequence, method: Method = Method.DP) -> PartitionValue:
    """Unit_b scalar product as a sum over splittings {x} = x_I + x_II, {b} = b_I + b_II with |x_I| = |b_I|.

    Each term is
    prod_{b_I, y} (b-y+1)/(b-y) * prod_{x_II, y} (x-y+1)/(x-y) * prod_{x_I, x_II} (x_I-x_II+1)/(x_I-x_II)
    * prod_{b_I, b_II} (b_II-b_I+1)/(b_II-b_I) * Z(b_II | x_II) Z(x_I | b_I),
    the two domain walls evaluated on unit_b lattices with ``method``.

    Examples
    --------
    >>> ik_sum([3], [4], [0, 2]).value
    Fraction(19, 24)
    """
    values = unify([*xs, *bs, *ys])
    n_rows = len(xs)
    if len(bs) != n_rows:
        raise InputError(f"Izergin-Korepin sum needs as many x as b, got {n_rows} and {len(bs)}")
    xs, bs, ys = values[:n_rows], values[n_rows: 2 * n_rows], values[2 * n_rows:]
    label = "Izergin-Korepin sum"

    total = one_like(values) * 0
    terms = 0
    for size in range(n_rows + 1):
        for xi in itertools.combinations(range(n_rows), size):
            x_one = [xs[k] for k in xi]
            x_two = [xs[k] for k in range(n_rows) if k not in xi]
            for bi in itertools.combinations(range(n_rows), size):
                b_one = [bs[k] for k in bi]
                b_two = [bs[k] for k in range(n_rows) if k not in bi]
                term = _cross(b_one, ys, label) * _cross(x_two, ys, label)
                term *= _cross(x_one, x_two, label) * _cross(b_two, b_one, label)
                if term == 0:
                    continue
                term *= dwpf(b_two, x_two, norm=Normalization.UNIT_B, method=method).value
                term *= dwpf(x_one, b_one, norm=Normalization.UNIT_B, method=method).value
                total += term
                terms += 1
    log.debug("Izergin-Korepin sum over %d splittings", terms)
    return PartitionValue.of(total, Method.DETERMINANT, RATIONAL_A1, Normalization.UNIT_B)
