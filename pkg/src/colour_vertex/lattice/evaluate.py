"""Partition functions of compiled lattices.

Two independent evaluators:

* :func:`enumerate_configurations` walks every colouring depth first; each vertex
  either passes both colours straight through or exchanges them.
* :func:`frontier_dp` sweeps the vertices in compiled order, keeping a map from the
  colours on the open edges to the accumulated weight.

Weighted boundary edges are folded into the sweep unless a global
:class:`~colour_vertex.lattice.spec.CountConstraint` is present, in which case the
admissible boundary assignments are enumerated explicitly.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from mpmath import mp

from colour_vertex.algebra.scalars import Scalar, format_scalar, is_exact, scalar_payload, to_float
from colour_vertex.config import Method
from colour_vertex.errors import InputError, VerificationFailure
from colour_vertex.lattice.spec import EdgeRef, End, Fixed, LatticeSpec
from colour_vertex.model.weights import (
    ModelKind,
    ModelParams,
    Normalization,
    VertexKind,
    classify,
    crossing_factor,
    weight_table,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PartitionValue:
    """A computed value with the model, normalization and method that produced it."""

    value: Scalar
    provenance: Method
    model: ModelParams
    norm: Normalization
    precision_bits: int | None = None
    detail: dict = field(default_factory=dict, compare=False)

    @classmethod
    def of(cls, value, provenance: Method, model: ModelParams, norm: Normalization, **detail) -> "PartitionValue":
        bits = None if is_exact(value) else mp.prec
        return cls(value, Method(provenance), model, Normalization(norm), bits, dict(detail))

    def to_payload(self) -> dict:
        payload = {
            "value": format_scalar(self.value),
            "provenance": self.provenance.value,
            "model": self.model.to_payload(),
            "norm": self.norm.value,
        }
        if self.precision_bits is not None:
            payload["precision_bits"] = self.precision_bits
        if self.detail:
            payload["detail"] = {
                k: scalar_payload(v)["value"] if isinstance(v, (Fraction, mp.mpf, mp.mpc)) else v
                for k, v in self.detail.items()
            }
        return payload


# ---------------------------------------------------------------
# Shared preparation
# ---------------------------------------------------------------


class _Prepared:
    """Per-vertex weights and boundary coefficients in one arithmetic mode."""

    def __init__(self, spec: LatticeSpec):
        self.spec = spec
        rapidities = [line.rapidity for line in spec.lines]
        coefficients = [v for _, cond in spec.weighted_edges() for _, v in cond.terms]
        self.exact = spec.model.kind is ModelKind.RATIONAL and all(
            is_exact(v) for v in rapidities + coefficients
        )
        self.one = Fraction(1) if self.exact else mp.mpf(1)
        self.zero = self.one * 0
        table = weight_table(spec.model, spec.norm)
        self.weights = []
        for v in spec.vertices:
            x = self._cast(spec.line(v.alpha).rapidity)
            y = self._cast(spec.line(v.beta).rapidity)
            self.weights.append({kind: self._cast(table.weight(kind, x, y)) for kind in VertexKind})
        last = {}
        for k, v in enumerate(spec.vertices):
            last[v.alpha] = k
            last[v.beta] = k
        self.last_vertex = last

    def _cast(self, value):
        if self.exact:
            return value
        return to_float(value)

    def coefficient(self, condition, colour: int):
        c = condition.coefficient(colour)
        if c is None:
            return None
        return self._cast(c) if not isinstance(c, int) else self.one * c

    def transitions(self, k: int, ia: int, ib: int):
        weights = self.weights[k]
        yield ia, ib, weights[classify(ia, ia, ib, ib)]
        if ia != ib:
            yield ib, ia, weights[classify(ia, ib, ib, ia)]


def _isolated_lines(spec: LatticeSpec) -> list:
    touched = {name for v in spec.vertices for name in (v.alpha, v.beta)}
    return [line for line in spec.lines if line.name not in touched]


# ---------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------


def enumerate_configurations(spec: LatticeSpec) -> Scalar:
    """Brute-force sum over every colouring, constraint applied to full boundary colourings."""
    prep = _Prepared(spec)
    names = [line.name for line in spec.lines]
    inflows = [spec.line(n).inflow for n in names]
    position = {n: i for i, n in enumerate(names)}
    vertices = [(position[v.alpha], position[v.beta]) for v in spec.vertices]
    total = prep.zero

    for incoming in itertools.product(*(cond.colours() for cond in inflows)):
        start = prep.one
        for cond, colour in zip(inflows, incoming):
            start = start * prep.coefficient(cond, colour)
        if start == 0:
            continue

        stack = [(0, list(incoming), start)]
        while stack:
            k, colours, weight = stack.pop()
            if k == len(vertices):
                total = total + _close(spec, prep, names, incoming, colours, weight)
                continue
            pa, pb = vertices[k]
            for ja, jb, w in prep.transitions(k, colours[pa], colours[pb]):
                if w == 0:
                    continue
                nxt = list(colours)
                nxt[pa], nxt[pb] = ja, jb
                stack.append((k + 1, nxt, weight * w))
    return total


def _close(spec, prep, names, incoming, outgoing, weight):
    for name, colour in zip(names, outgoing):
        coef = prep.coefficient(spec.line(name).outflow, colour)
        if coef is None:
            return prep.zero
        weight = weight * coef
    if spec.constraint is not None:
        colouring = {}
        for name, cin, cout in zip(names, incoming, outgoing):
            colouring[EdgeRef(name, End.IN)] = cin
            colouring[EdgeRef(name, End.OUT)] = cout
        if not spec.constraint.holds(colouring):
            return prep.zero
    return weight


# ---------------------------------------------------------------
# Frontier dynamic programming
# ---------------------------------------------------------------


def _sweep(spec: LatticeSpec, prep: _Prepared) -> Scalar:
    active: list[str] = []
    states: dict[tuple, Scalar] = {(): prep.one}
    widest = 0

    for k, v in enumerate(spec.vertices):
        for name in (v.alpha, v.beta):
            if name in active:
                continue
            inflow = spec.line(name).inflow
            grown: dict[tuple, Scalar] = {}
            for key, value in states.items():
                for colour in inflow.colours():
                    coef = prep.coefficient(inflow, colour)
                    if coef == 0:
                        continue
                    nk = key + (colour,)
                    grown[nk] = grown.get(nk, prep.zero) + value * coef
            states = grown
            active.append(name)
        widest = max(widest, len(active))

        pa, pb = active.index(v.alpha), active.index(v.beta)
        moved: dict[tuple, Scalar] = {}
        for key, value in states.items():
            for ja, jb, w in prep.transitions(k, key[pa], key[pb]):
                if w == 0:
                    continue
                nk = list(key)
                nk[pa], nk[pb] = ja, jb
                nk = tuple(nk)
                moved[nk] = moved.get(nk, prep.zero) + value * w
        states = moved

        for name in (v.alpha, v.beta):
            if prep.last_vertex[name] != k:
                continue
            pos = active.index(name)
            outflow = spec.line(name).outflow
            closed: dict[tuple, Scalar] = {}
            for key, value in states.items():
                coef = prep.coefficient(outflow, key[pos])
                if coef is None:
                    continue
                nk = key[:pos] + key[pos + 1:]
                closed[nk] = closed.get(nk, prep.zero) + value * coef
            states = closed
            active.pop(pos)

    log.debug("frontier sweep over %d vertices, widest cut %d", len(spec.vertices), widest)
    total = states.get((), prep.zero)
    for line in _isolated_lines(spec):
        through = prep.zero
        for colour in line.inflow.colours():
            cin = prep.coefficient(line.inflow, colour)
            cout = prep.coefficient(line.outflow, colour)
            if cout is not None:
                through = through + cin * cout
        total = total * through
    return total


def _constrained_assignments(spec: LatticeSpec, prep: _Prepared):
    """Yield (coefficient, all-fixed spec) for every boundary assignment allowed by the constraint."""
    weighted = spec.weighted_edges()
    fixed = {ref: cond.colour for ref, cond in spec.edges() if isinstance(cond, Fixed)}
    for choice in itertools.product(*(cond.colours() for _, cond in weighted)):
        colouring = dict(fixed)
        coef = prep.one
        for (ref, cond), colour in zip(weighted, choice):
            colouring[ref] = colour
            coef = coef * prep.coefficient(cond, colour)
        if coef == 0 or not spec.constraint.holds(colouring):
            continue
        pinned = {ref: Fixed(colour) for (ref, _), colour in zip(weighted, choice)}
        yield coef, spec.with_conditions(pinned, constraint=None)


def frontier_dp(spec: LatticeSpec) -> Scalar:
    prep = _Prepared(spec)
    if spec.constraint is None:
        return _sweep(spec, prep)
    total = prep.zero
    count = 0
    for coef, pinned in _constrained_assignments(spec, prep):
        total = total + coef * _sweep(pinned, _Prepared(pinned))
        count += 1
    log.debug("constrained sum over %d boundary assignments", count)
    return total


# ---------------------------------------------------------------
# Public entry points
# ---------------------------------------------------------------


def evaluate(spec: LatticeSpec, method: Method = Method.DP) -> PartitionValue:
    """Partition function of ``spec`` by the requested method.

    ``Method.ALL`` runs both evaluators and raises :class:`VerificationFailure`
    unless they agree (exactly for rational input, within 2^-(3/5 prec) otherwise).
    """
    method = Method(method)
    if method is Method.ENUMERATION:
        return PartitionValue.of(enumerate_configurations(spec), Method.ENUMERATION, spec.model, spec.norm)
    if method is Method.DP:
        return PartitionValue.of(frontier_dp(spec), Method.DP, spec.model, spec.norm)
    if method is Method.ALL:
        dp = frontier_dp(spec)
        brute = enumerate_configurations(spec)
        if not agree(dp, brute):
            raise VerificationFailure(
                f"enumeration {format_scalar(brute)} and frontier DP {format_scalar(dp)} disagree",
                {"enumeration": brute, "dp": dp},
            )
        return PartitionValue.of(brute, Method.ENUMERATION, spec.model, spec.norm, dp=dp)
    raise InputError(f"Lattices are evaluated by enumeration or dp, not {method.value}")


def evaluate_fixed(spec: LatticeSpec, method: Method = Method.DP) -> PartitionValue:
    if not spec.all_fixed:
        raise InputError("evaluate_fixed needs every boundary edge Fixed")
    return evaluate(spec, method)


def evaluate_summed(spec: LatticeSpec, method: Method = Method.DP) -> PartitionValue:
    return evaluate(spec, method)


def agree(a, b, bits: int | None = None) -> bool:
    """Exact equality for rationals; relative closeness at ``bits`` (default 3/5 of the precision) for floats."""
    if is_exact(a) and is_exact(b):
        return a == b
    a, b = to_float(a), to_float(b)
    bits = bits if bits is not None else mp.prec * 3 // 5
    scale = max(mp.mpf(1), abs(a), abs(b))
    return abs(a - b) <= scale * mp.mpf(2) ** (-bits)


def normalization_ratio(spec: LatticeSpec) -> Scalar:
    """Product of (x_alpha - x_beta + 1)/(x_alpha - x_beta) over every vertex.

    For a rational lattice, value(unit_b) = value(unit_a) * normalization_ratio.
    """
    ratio = Fraction(1)
    for v in spec.vertices:
        ratio = ratio * crossing_factor(spec.line(v.alpha).rapidity, spec.line(v.beta).rapidity)
    return ratio
