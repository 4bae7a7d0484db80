"""A2 scalar products and their b -> infinity degenerations.

Each degeneration is computed two ways: as the signed boundary sum of a single
lattice, and as exact sequential limits lim b*S in every degenerating line,
divided by the number of orderings. ``Method.ALL`` runs both and insists they agree.
"""

import enum
import logging
import math
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from colour_vertex.a2 import layouts
from colour_vertex.algebra.polynomial import limit_at_infinity
from colour_vertex.algebra.scalars import Scalar, as_scalars, format_scalar, is_exact, to_float
from colour_vertex.config import DEFAULT_CONFIG, EngineConfig, Method
from colour_vertex.errors import InputError, VerificationFailure
from colour_vertex.lattice.evaluate import PartitionValue, agree, evaluate
from colour_vertex.lattice.spec import LatticeSpec
from colour_vertex.model.weights import Normalization

log = logging.getLogger(__name__)


class Layout(str, enum.Enum):
    FIG1A = "fig1a"
    FIG1B = "fig1b"


@dataclass(frozen=True)
class A2Spec:
    """Rapidities of an A2 scalar product S({x2},{x1},{b1},{b2} | {y},{z})."""

    x2s: tuple = ()
    x1s: tuple = ()
    b1s: tuple = ()
    b2s: tuple = ()
    ys: tuple = ()
    zs: tuple = ()
    layout: Layout = Layout.FIG1A

    def __post_init__(self):
        for name in ("x2s", "x1s", "b1s", "b2s", "ys", "zs"):
            object.__setattr__(self, name, tuple(as_scalars(getattr(self, name))))
        object.__setattr__(self, "layout", Layout(self.layout))
        if len(self.x1s) + len(self.x2s) > len(self.ys) + len(self.zs):
            raise InputError(
                f"Need l + m <= L + M, got l={len(self.x1s)}, m={len(self.x2s)}, L={len(self.ys)}, M={len(self.zs)}"
            )

    @classmethod
    def from_payload(cls, payload: Mapping) -> "A2Spec":
        known = {"x2s", "x1s", "b1s", "b2s", "ys", "zs", "layout"}
        unknown = set(payload) - known - {"operation", "method"}
        if unknown:
            raise InputError(f"Unknown A2 fields: {sorted(unknown)}")
        return cls(**{k: payload[k] for k in known if k in payload})

    def to_payload(self) -> dict:
        out = {
            name: [format_scalar(v) for v in getattr(self, name)]
            for name in ("x2s", "x1s", "b1s", "b2s", "ys", "zs")
        }
        out["layout"] = self.layout.value
        return out


def build_layout(spec: A2Spec) -> LatticeSpec:
    builder = layouts.fig1a if spec.layout is Layout.FIG1A else layouts.fig1b
    return builder(spec.x2s, spec.x1s, spec.b1s, spec.b2s, spec.ys, spec.zs)


def a2_scalar_product(spec: A2Spec, method: Method = Method.DP) -> PartitionValue:
    """Evaluate the A2 scalar product on the lattice of ``spec.layout``."""
    return evaluate(build_layout(spec), method)


# ---------------------------------------------------------------
# Exact limits
# ---------------------------------------------------------------


def placeholders(avoid: Sequence, count: int) -> list[Scalar]:
    """``count`` integers clear of every value in ``avoid``; stand-ins for lines about to be sent to infinity."""
    top = max((math.ceil(abs(to_float(v))) for v in avoid), default=0)
    return [top + 2 + k for k in range(count)]


def sequential_limit(
    evaluator: Callable[[LatticeSpec], Scalar],
    spec: LatticeSpec,
    lines: Sequence[str],
    *,
    retries: int = DEFAULT_CONFIG.sample_retries,
) -> Scalar:
    """lim b_1 * ... lim b_k * evaluator(spec), one line of ``lines`` at a time.

    The denominator roots of each line come from the lattice's crossings, so the
    limit is exact whenever the evaluator is.
    """
    if not lines:
        return evaluator(spec)
    name, rest = lines[0], list(lines[1:])
    roots = spec.denominator_roots(name)
    log.debug("limit in %s over %d denominator roots", name, len(roots))

    def inner(b):
        return sequential_limit(evaluator, spec.with_rapidity(name, b), rest, retries=retries)

    return limit_at_infinity(inner, roots, retries=retries)


def _dp_value(spec: LatticeSpec) -> Scalar:
    return evaluate(spec, Method.DP).value


def _symmetric_limit(spec: LatticeSpec, lines: Sequence[str], config: EngineConfig) -> Scalar:
    value = sequential_limit(_dp_value, spec, lines, retries=config.sample_retries)
    return value / math.factorial(len(lines))


def _lattice_method(method: Method) -> Method:
    return Method.ENUMERATION if method is Method.ENUMERATION else Method.DP


def _combine(signed, limit, method: Method, norm: Normalization) -> PartitionValue:
    model = layouts.A2
    if method is Method.LIMIT:
        return PartitionValue.of(limit, Method.LIMIT, model, norm)
    if method is not Method.ALL:
        return PartitionValue.of(signed, method, model, norm)
    if not agree(signed, limit):
        raise VerificationFailure(
            f"signed boundary sum {format_scalar(signed)} and sequential limit {format_scalar(limit)} disagree",
            {"signed_sum": signed, "limit": limit},
        )
    difference = signed - limit if is_exact(signed) == is_exact(limit) else to_float(signed) - to_float(limit)
    return PartitionValue.of(signed, Method.ALL, model, norm, signed_sum=signed, limit=limit, difference=difference)


def _degenerate(signed_lattice: Callable[[], LatticeSpec], full: Callable[[], LatticeSpec], lines, method, config):
    method = Method(method)
    if method not in (Method.ENUMERATION, Method.DP, Method.LIMIT, Method.ALL):
        raise InputError(f"Degenerations are evaluated by enumeration, dp, limit or all, not {method.value}")
    with config.float_context():
        signed = limit = None
        if method is not Method.LIMIT:
            signed = evaluate(signed_lattice(), _lattice_method(method)).value
        if method in (Method.LIMIT, Method.ALL):
            limit = _symmetric_limit(full(), lines, config)
        return _combine(signed, limit, method, Normalization.UNIT_B)


def degenerate_b2(
    x2s: Sequence,
    x1s: Sequence,
    b1s: Sequence,
    ys: Sequence,
    zs: Sequence,
    method: Method = Method.ALL,
    config: EngineConfig = DEFAULT_CONFIG,
) -> PartitionValue:
    """(1/m!) lim_{b2 -> oo} b2_1 ... b2_m S, with the b2 lines of the first layout sent out one by one.

    Examples
    --------
    >>> degenerate_b2([], [3], ["1/2"], [0, 2], [7]).value == a2_scalar_product(A2Spec([], [3], ["1/2"], [], [0, 2], [7])).value
    True
    """
    x2s, x1s, b1s, ys, zs = (as_scalars(v) for v in (x2s, x1s, b1s, ys, zs))
    stand_in = placeholders([*x2s, *x1s, *b1s, *ys, *zs], len(x2s))
    return _degenerate(
        lambda: layouts.fig2a(x2s, x1s, b1s, ys, zs),
        lambda: layouts.fig1a(x2s, x1s, b1s, stand_in, ys, zs),
        layouts.names("b2", len(x2s)),
        method,
        config,
    )


def degenerate_b1(
    x2s: Sequence,
    x1s: Sequence,
    b2s: Sequence,
    ys: Sequence,
    zs: Sequence,
    method: Method = Method.ALL,
    config: EngineConfig = DEFAULT_CONFIG,
) -> PartitionValue:
    """(1/l!) lim_{b1 -> oo} b1_1 ... b1_l S, with the b1 lines of the second layout sent out one by one."""
    x2s, x1s, b2s, ys, zs = (as_scalars(v) for v in (x2s, x1s, b2s, ys, zs))
    stand_in = placeholders([*x2s, *x1s, *b2s, *ys, *zs], len(x1s))
    return _degenerate(
        lambda: layouts.fig2b(x2s, x1s, b2s, ys, zs),
        lambda: layouts.fig1b(x2s, x1s, stand_in, b2s, ys, zs),
        layouts.names("b1", len(x1s)),
        method,
        config,
    )


def mixed_scalar_product_limit(
    kind: str,
    rows: Sequence,
    ups: Sequence,
    downs: Sequence,
    config: EngineConfig = DEFAULT_CONFIG,
) -> PartitionValue:
    """(1/N!) lim b_1 ... b_N of a mixed scalar product; ``kind`` as in :func:`layouts.mixed_scalar_product_lattice`.

    Equals ``partial_det(rows, ups, downs)``.
    """
    rows, ups, downs = as_scalars(rows), as_scalars(ups), as_scalars(downs)
    stand_in = placeholders([*rows, *ups, *downs], len(rows))
    spec = layouts.mixed_scalar_product_lattice(kind, rows, stand_in, ups, downs)
    brow = "b2" if kind == "x1z" else "b1"
    with config.float_context():
        value = _symmetric_limit(spec, layouts.names(brow, len(rows)), config)
    return PartitionValue.of(value, Method.LIMIT, layouts.A2, Normalization.UNIT_B)
