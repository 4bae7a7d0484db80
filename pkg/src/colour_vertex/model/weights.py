"""Vertex weights and R-matrix entries for the rational and trigonometric A_n models.

Index convention: ``r_entry(..., ia, ja, ib, jb)`` is the weight of a vertex whose
first (alpha) line enters with colour ``ia`` and leaves with ``ja`` while the second
(beta) line enters with ``ib`` and leaves with ``jb``. For a horizontal alpha line
flowing right and a vertical beta line flowing up that is (left, right, bottom, top).
"""

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import mp

from colour_vertex.algebra.scalars import Scalar, as_scalar, format_scalar, to_float, unify
from colour_vertex.errors import InputError, PoleError

log = logging.getLogger(__name__)


class ModelKind(str, enum.Enum):
    RATIONAL = "rational"
    TRIGONOMETRIC = "trig"


class Normalization(str, enum.Enum):
    """Which weight is scaled to one: ``a`` (the default) or every ``b``."""

    UNIT_A = "unit_a"
    UNIT_B = "unit_b"


class VertexKind(str, enum.Enum):
    A = "a"
    B_PLUS = "b+"
    B_MINUS = "b-"
    C_PLUS = "c+"
    C_MINUS = "c-"


@dataclass(frozen=True)
class ModelParams:
    """Model family, rank and (trigonometric only) crossing parameter.

    Colours run over ``0..rank``; 0 is white, 1 black, higher values are the
    extra colours of A_n.
    """

    kind: ModelKind = ModelKind.RATIONAL
    rank: int = 1
    gamma: Scalar | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", ModelKind(self.kind))
        if self.rank < 1:
            raise InputError(f"Rank must be at least 1, got {self.rank}")
        if self.kind is ModelKind.RATIONAL and self.gamma is not None:
            raise InputError("The rational model carries no crossing parameter")
        if self.kind is ModelKind.TRIGONOMETRIC:
            if self.gamma is None:
                raise InputError("The trigonometric model needs a crossing parameter gamma")
            object.__setattr__(self, "gamma", as_scalar(self.gamma))

    @property
    def colours(self) -> range:
        return range(self.rank + 1)

    def check_colour(self, colour: int) -> int:
        if not isinstance(colour, int) or not 0 <= colour <= self.rank:
            raise InputError(f"Colour {colour!r} outside 0..{self.rank}")
        return colour

    def with_rank(self, rank: int) -> "ModelParams":
        return ModelParams(self.kind, rank, self.gamma)

    def to_payload(self) -> dict:
        payload = {"kind": self.kind.value, "rank": self.rank}
        if self.gamma is not None:
            payload["gamma"] = format_scalar(self.gamma)
        return payload

    @classmethod
    def from_payload(cls, payload: dict) -> "ModelParams":
        gamma = payload.get("gamma")
        return cls(
            kind=ModelKind(payload.get("kind", "rational")),
            rank=int(payload.get("rank", 1)),
            gamma=as_scalar(gamma) if gamma is not None else None,
        )


RATIONAL_A1 = ModelParams()


def classify(ia: int, ja: int, ib: int, jb: int) -> VertexKind | None:
    """Vertex kind of an index quadruple, or None when colour is not conserved."""
    if ia == ja and ib == jb:
        if ia == ib:
            return VertexKind.A
        return VertexKind.B_PLUS if ia < ib else VertexKind.B_MINUS
    if ia == jb and ib == ja:
        return VertexKind.C_PLUS if ia < ja else VertexKind.C_MINUS
    return None


class WeightTable:
    """The weights a, b+, b-, c+, c- of one model under one normalization.

    Parameters
    ----------
    params:
        Model family, rank and gamma.
    norm:
        ``UNIT_A`` (a = 1) or ``UNIT_B`` (b = 1, rational model only).

    Examples
    --------
    >>> table = WeightTable(RATIONAL_A1, Normalization.UNIT_A)
    >>> table.weight(VertexKind.C_PLUS, Fraction(1), Fraction(0))
    Fraction(1, 2)
    """

    def __init__(self, params: ModelParams, norm: Normalization = Normalization.UNIT_A):
        self.params = params
        self.norm = Normalization(norm)
        if self.norm is Normalization.UNIT_B and params.kind is not ModelKind.RATIONAL:
            raise InputError("unit_b normalization is defined for the rational model only")

    # ------------------------------------------------------------------
    # Poles
    # ------------------------------------------------------------------

    def _difference(self, x, y):
        if self.params.kind is ModelKind.TRIGONOMETRIC:
            return to_float(x) - to_float(y)
        x, y = unify([x, y])
        return x - y

    def check_poles(self, x, y) -> None:
        """Raise :class:`PoleError` if any weight of the table is singular at (x, y)."""
        d = self._difference(x, y)
        if self.params.kind is ModelKind.TRIGONOMETRIC:
            if mp.sinh(d + to_float(self.params.gamma)) == 0:
                raise PoleError(f"[x-y+gamma] vanishes at x={x}, y={y}", (x, y))
        elif self.norm is Normalization.UNIT_A:
            if d + 1 == 0:
                raise PoleError(f"x-y+1 vanishes at x={x}, y={y}", (x, y))
        elif d == 0:
            raise PoleError(f"x-y vanishes at x={x}, y={y} (unit_b)", (x, y))

    # ------------------------------------------------------------------
    # Weights
    # ------------------------------------------------------------------

    def weight(self, kind: VertexKind, x, y) -> Scalar:
        kind = VertexKind(kind)
        d = self._difference(x, y)
        if self.params.kind is ModelKind.TRIGONOMETRIC:
            return self._trig(kind, d)
        if self.norm is Normalization.UNIT_A:
            if kind is VertexKind.A:
                return d * 0 + 1
            if d + 1 == 0:
                raise PoleError(f"{kind.value} weight has a pole at x={x}, y={y}", (x, y))
            if kind in (VertexKind.B_PLUS, VertexKind.B_MINUS):
                return d / (d + 1)
            return 1 / (d + 1)
        if kind in (VertexKind.B_PLUS, VertexKind.B_MINUS):
            return d * 0 + 1
        if d == 0:
            raise PoleError(f"{kind.value} weight has a pole at x={x}, y={y} (unit_b)", (x, y))
        if kind is VertexKind.A:
            return (d + 1) / d
        return 1 / d

    def _trig(self, kind: VertexKind, d) -> Scalar:
        gamma = to_float(self.params.gamma)
        if kind is VertexKind.A:
            return mp.mpf(1)
        denominator = mp.sinh(d + gamma)
        if denominator == 0:
            raise PoleError(f"{kind.value} weight has a pole at x-y={d}", (d,))
        if kind is VertexKind.B_PLUS:
            return mp.exp(-gamma) * mp.sinh(d) / denominator
        if kind is VertexKind.B_MINUS:
            return mp.exp(gamma) * mp.sinh(d) / denominator
        if kind is VertexKind.C_PLUS:
            return mp.exp(d) * mp.sinh(gamma) / denominator
        return mp.exp(-d) * mp.sinh(gamma) / denominator

    def zero(self) -> Scalar:
        return mp.mpf(0) if self.params.kind is ModelKind.TRIGONOMETRIC else Fraction(0)

    def one(self) -> Scalar:
        return mp.mpf(1) if self.params.kind is ModelKind.TRIGONOMETRIC else Fraction(1)


@lru_cache(maxsize=64)
def weight_table(params: ModelParams, norm: Normalization = Normalization.UNIT_A) -> WeightTable:
    return WeightTable(params, Normalization(norm))


def weight(table: WeightTable, kind: VertexKind, x, y) -> Scalar:
    return table.weight(kind, as_scalar(x), as_scalar(y))


def r_entry(
    params: ModelParams,
    norm: Normalization,
    x,
    y,
    ia: int,
    ja: int,
    ib: int,
    jb: int,
) -> Scalar:
    """Matrix element [R(x, y)]^{ia ja}_{ib jb}; zero unless colour is conserved.

    Examples
    --------
    >>> r_entry(ModelParams(rank=2), Normalization.UNIT_A, 1, 0, 0, 1, 1, 0)
    Fraction(1, 2)
    """
    for colour in (ia, ja, ib, jb):
        params.check_colour(colour)
    table = weight_table(params, Normalization(norm))
    kind = classify(ia, ja, ib, jb)
    if kind is None:
        return table.zero()
    return table.weight(kind, as_scalar(x), as_scalar(y))


def r_matrix(params: ModelParams, norm: Normalization, x, y) -> dict:
    """Sparse R(x, y) as ``{((ia, ib), (ja, jb)): weight}`` over structurally nonzero entries."""
    table = weight_table(params, Normalization(norm))
    x, y = as_scalar(x), as_scalar(y)
    cache = {}
    entries = {}
    for ia in params.colours:
        for ib in params.colours:
            for ja, jb in {(ia, ib), (ib, ia)}:
                kind = classify(ia, ja, ib, jb)
                if kind not in cache:
                    cache[kind] = table.weight(kind, x, y)
                entries[((ia, ib), (ja, jb))] = cache[kind]
    return entries


def nonzero_count(params: ModelParams) -> int:
    return sum(
        1
        for ia in params.colours
        for ja in params.colours
        for ib in params.colours
        for jb in params.colours
        if classify(ia, ja, ib, jb) is not None
    )


def crossing_factor(x, y) -> Scalar:
    """Ratio unit_b / unit_a of every rational weight at (x, y): (x-y+1)/(x-y)."""
    x, y = unify([x, y])
    d = x - y
    if d == 0:
        raise PoleError(f"crossing factor has a pole at x={x}, y={y}", (x, y))
    return (d + 1) / d

