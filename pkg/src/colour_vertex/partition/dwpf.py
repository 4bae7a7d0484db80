"""Domain-wall partition functions.

Rows ``x1..xN`` run bottom to top and flow right; columns ``y1..yN`` run left
to right and flow up. Black (colour 1) enters every left edge and leaves every
top edge; all other boundary edges are white.
"""

import logging
from typing import Iterable, Sequence

from mpmath import mp

from colour_vertex.algebra.linalg import det, vandermonde
from colour_vertex.algebra.scalars import Scalar, as_scalars, one_like, to_float, unify
from colour_vertex.config import Method
from colour_vertex.errors import InputError, PoleError
from colour_vertex.lattice.evaluate import PartitionValue, evaluate
from colour_vertex.lattice.spec import Fixed, LatticeSpec, Weighted, grid
from colour_vertex.model.weights import RATIONAL_A1, ModelKind, ModelParams, Normalization, crossing_factor

log = logging.getLogger(__name__)


def _names(prefix: str, count: int) -> list[str]:
    return [f"{prefix}{k + 1}" for k in range(count)]


def _distinct(values: Sequence, label: str) -> None:
    if len(set(values)) != len(values):
        raise InputError(f"Rapidities {label} must be pairwise distinct")


def to_unit_b(value: Scalar, pairs: Iterable[tuple]) -> Scalar:
    """Convert a unit_a value to unit_b: one factor (x-y+1)/(x-y) per crossing (x, y)."""
    for x, y in pairs:
        value, factor = unify([value, crossing_factor(x, y)])
        value = value * factor
    return value


# ---------------------------------------------------------------
# Lattices
# ---------------------------------------------------------------


def dwpf_lattice(
    xs: Sequence,
    ys: Sequence,
    params: ModelParams = RATIONAL_A1,
    norm: Normalization = Normalization.UNIT_A,
    colours: Sequence[int] | None = None,
) -> LatticeSpec:
    """DWBC lattice; with ``colours`` the left edges carry them and the top edges are summed over 1..n."""
    xs, ys = as_scalars(xs), as_scalars(ys)
    if len(xs) != len(ys):
        raise InputError(f"Domain-wall lattice needs as many x as y, got {len(xs)} and {len(ys)}")
    if colours is None:
        left = [Fixed(1)] * len(xs)
        top = [Fixed(1)] * len(ys)
    else:
        if len(colours) != len(xs):
            raise InputError(f"{len(xs)} rows need {len(xs)} colours, got {len(colours)}")
        if any(c < 1 for c in colours):
            raise InputError(f"Left colours must be at least 1, got {list(colours)}")
        left = [Fixed(params.check_colour(c)) for c in colours]
        top = [Weighted.summed(range(1, params.rank + 1))] * len(ys)
    return grid(
        xs,
        ys,
        left=left,
        right=[Fixed(0)] * len(xs),
        bottom=[Fixed(0)] * len(ys),
        top=top,
        model=params,
        norm=norm,
        row_names=_names("x", len(xs)),
        col_names=_names("y", len(ys)),
    )


def pdwpf_lattice(xs: Sequence, ys: Sequence) -> LatticeSpec:
    """N x L lattice, black in on the left, top edges summed over {0, 1}, unit_b weights."""
    xs, ys = as_scalars(xs), as_scalars(ys)
    if len(xs) > len(ys):
        raise InputError(f"Partial domain wall needs N <= L, got N={len(xs)}, L={len(ys)}")
    return grid(
        xs,
        ys,
        left=[Fixed(1)] * len(xs),
        right=[Fixed(0)] * len(xs),
        bottom=[Fixed(0)] * len(ys),
        top=[Weighted.summed([0, 1])] * len(ys),
        model=RATIONAL_A1,
        norm=Normalization.UNIT_B,
        row_names=_names("x", len(xs)),
        col_names=_names("y", len(ys)),
    )


# ---------------------------------------------------------------
# Partition functions
# ---------------------------------------------------------------


def dwpf(
    xs: Sequence,
    ys: Sequence,
    params: ModelParams = RATIONAL_A1,
    norm: Normalization = Normalization.UNIT_A,
    method: Method = Method.DP,
) -> PartitionValue:
    """Domain-wall partition function Z({x}|{y}) by lattice evaluation.

    Examples
    --------
    >>> dwpf([2, 3], [0, 1]).value
    Fraction(1, 6)
    """
    return evaluate(dwpf_lattice(xs, ys, params, norm), method)


def coloured_dwpf(
    xs: Sequence,
    ys: Sequence,
    colours: Sequence[int],
    params: ModelParams,
    norm: Normalization = Normalization.UNIT_A,
    method: Method = Method.DP,
) -> PartitionValue:
    return evaluate(dwpf_lattice(xs, ys, params, norm, colours=colours), method)


def pdwpf(xs: Sequence, ys: Sequence, method: Method = Method.DP) -> PartitionValue:
    return evaluate(pdwpf_lattice(xs, ys), method)


def dwpf_ik(xs: Sequence, ys: Sequence, norm: Normalization = Normalization.UNIT_A) -> PartitionValue:
    """Izergin-Korepin determinant of the rational domain-wall partition function.

    Z = prod(x_i - y_j) / (Delta{x} Delta{-y}) * det[1 / ((x_i - y_j)(x_i - y_j + 1))]

    Raises
    ------
    InputError
        If the x or the y are not pairwise distinct.
    PoleError
        If some x_i - y_j is 0 or -1.
    """
    values = unify([*xs, *ys])
    xs, ys = values[: len(xs)], values[len(xs):]
    if len(xs) != len(ys):
        raise InputError(f"Izergin-Korepin determinant needs as many x as y, got {len(xs)} and {len(ys)}")
    _distinct(xs, "{x}")
    _distinct(ys, "{y}")

    numerator = one_like(values)
    matrix = []
    for x in xs:
        row = []
        for y in ys:
            d = x - y
            if d == 0 or d + 1 == 0:
                raise PoleError(f"Izergin-Korepin kernel has a pole at x={x}, y={y}", (x, y))
            numerator *= d
            row.append(1 / (d * (d + 1)))
        matrix.append(row)
    value = numerator / (vandermonde(xs) * vandermonde(ys, negated=True)) * det(matrix)
    if Normalization(norm) is Normalization.UNIT_B:
        value = to_unit_b(value, [(x, y) for x in xs for y in ys])
    return PartitionValue.of(value, Method.DETERMINANT, RATIONAL_A1, norm)


def dwpf_ik_trig(xs: Sequence, ys: Sequence, gamma) -> PartitionValue:
    """Trigonometric Izergin-Korepin determinant at the current working precision.

    Z = e^{sum(y) - sum(x)} prod[x_i - y_j] / (Delta[x] Delta[-y]) * det[[gamma] / ([x_i - y_j][x_i - y_j + gamma])]

    with [u] = sinh(u); the Vandermonde products are taken over bracketed differences.
    """
    params = ModelParams(ModelKind.TRIGONOMETRIC, 1, gamma)
    g = to_float(params.gamma)
    xs = [to_float(x) for x in as_scalars(xs)]
    ys = [to_float(y) for y in as_scalars(ys)]
    if len(xs) != len(ys):
        raise InputError(f"Izergin-Korepin determinant needs as many x as y, got {len(xs)} and {len(ys)}")

    numerator = mp.exp(mp.fsum(ys) - mp.fsum(xs))
    matrix = []
    for x in xs:
        row = []
        for y in ys:
            s, t = mp.sinh(x - y), mp.sinh(x - y + g)
            if s == 0 or t == 0:
                raise PoleError(f"trigonometric kernel has a pole at x={x}, y={y}", (x, y))
            numerator *= s
            row.append(mp.sinh(g) / (s * t))
        matrix.append(row)
    denominator = to_float(vandermonde(xs, bracket=mp.sinh) * vandermonde(ys, negated=True, bracket=mp.sinh))
    if denominator == 0:
        raise InputError("Rapidities within {x} and within {y} must be pairwise distinct")
    value = numerator / denominator * to_float(det(matrix))
    return PartitionValue.of(value, Method.DETERMINANT, params, Normalization.UNIT_A)


def pdwpf_det(xs: Sequence, ys: Sequence) -> PartitionValue:
    """Unit_b partial domain-wall partition function in determinant form.

    Z = Delta{x}^-1 det[ x_i^{j-1} prod_k (x_i - y_k + 1)/(x_i - y_k) - (x_i + 1)^{j-1} ]

    Examples
    --------
    >>> pdwpf_det([3], [0, 1]).value
    Fraction(1, 1)
    """
    values = unify([*xs, *ys])
    xs, ys = values[: len(xs)], values[len(xs):]
    if len(xs) > len(ys):
        raise InputError(f"Partial domain wall needs N <= L, got N={len(xs)}, L={len(ys)}")
    _distinct(xs, "{x}")
    matrix = []
    for x in xs:
        ratio = x * 0 + 1
        for y in ys:
            if x == y:
                raise PoleError(f"partial domain wall determinant has a pole at x={x}, y={y}", (x, y))
            ratio *= (x - y + 1) / (x - y)
        matrix.append([x**j * ratio - (x + 1) ** j for j in range(len(xs))])
    value = det(matrix) / vandermonde(xs)
    return PartitionValue.of(value, Method.DETERMINANT, RATIONAL_A1, Normalization.UNIT_B)
