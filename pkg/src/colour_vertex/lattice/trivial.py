import logging
from typing import Sequence

from colour_vertex.config import Method
from colour_vertex.errors import InputError
from colour_vertex.lattice.evaluate import PartitionValue, evaluate
from colour_vertex.lattice.spec import Fixed, LatticeSpec, Weighted, grid
from colour_vertex.model.weights import ModelParams, Normalization

log = logging.getLogger(__name__)


def trivial_lattice(
    rows: Sequence,
    cols: Sequence,
    left: Sequence[int],
    bottom: Sequence[int],
    params: ModelParams,
    norm: Normalization = Normalization.UNIT_A,
) -> LatticeSpec:
    """M x N grid with fixed left and bottom colours and every top and right edge summed over all colours."""
    if len(left) != len(rows) or len(bottom) != len(cols):
        raise InputError(
            f"{len(rows)}x{len(cols)} lattice needs {len(rows)} left and {len(cols)} bottom colours, "
            f"got {len(left)} and {len(bottom)}"
        )
    summed = Weighted.summed(params.colours)
    return grid(
        rows,
        cols,
        left=[Fixed(params.check_colour(c)) for c in left],
        right=[summed] * len(rows),
        bottom=[Fixed(params.check_colour(c)) for c in bottom],
        top=[summed] * len(cols),
        model=params,
        norm=norm,
    )


def trivial_pf(
    rows: Sequence,
    cols: Sequence,
    left: Sequence[int],
    bottom: Sequence[int],
    params: ModelParams,
    norm: Normalization = Normalization.UNIT_A,
    method: Method = Method.DP,
) -> PartitionValue:
    """Partition function of :func:`trivial_lattice`; identically 1 in unit_a normalization.

    Examples
    --------
    >>> trivial_pf([3], [0], [2], [0], ModelParams(rank=2)).value
    Fraction(1, 1)
    """
    if Normalization(norm) is not Normalization.UNIT_A:
        log.warning("trivial_pf in %s normalization is not expected to equal 1", Normalization(norm).value)
    return evaluate(trivial_lattice(rows, cols, left, bottom, params, norm), method)
