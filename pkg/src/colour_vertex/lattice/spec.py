"""Declarative lattices: oriented lines, their crossings and boundary conditions.

A lattice is a network of oriented lines. Every line carries a rapidity, a boundary
condition on the edge where it enters and one on the edge where it leaves, and an
ordered route of crossings with other lines. At each crossing one line plays the
first (alpha) space of R and the other the second (beta) space, so the vertex
weight is ``r_entry(x_alpha, x_beta, in_alpha, out_alpha, in_beta, out_beta)``.

Rectangular grids come from :func:`grid`; the A_2 layouts with bent or
downward lines are written with :class:`LatticeBuilder` routes directly.
"""

import enum
import heapq
import logging
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence

from colour_vertex.algebra.scalars import Scalar, as_scalar, format_scalar
from colour_vertex.errors import InputError
from colour_vertex.model.weights import ModelKind, ModelParams, Normalization, weight_table

log = logging.getLogger(__name__)


# ---------------------------------------------------------------
# Boundary conditions
# ---------------------------------------------------------------


@dataclass(frozen=True)
class Fixed:
    colour: int

    def coefficient(self, colour: int):
        return 1 if colour == self.colour else None

    def colours(self) -> tuple[int, ...]:
        return (self.colour,)

    def to_payload(self) -> dict:
        return {"fixed": self.colour}


@dataclass(frozen=True)
class Weighted:
    """A boundary edge summed over colours, each term scaled by its coefficient."""

    terms: tuple[tuple[int, Scalar], ...]

    def __post_init__(self):
        if not self.terms:
            raise InputError("Weighted boundary needs at least one colour")
        terms = tuple(sorted((int(c), as_scalar(v)) for c, v in self.terms))
        if len({c for c, _ in terms}) != len(terms):
            raise InputError(f"Weighted boundary repeats a colour: {terms}")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def of(cls, mapping: Mapping[int, object]) -> "Weighted":
        return cls(tuple(mapping.items()))

    @classmethod
    def summed(cls, colours: Iterable[int]) -> "Weighted":
        return cls(tuple((c, 1) for c in colours))

    def coefficient(self, colour: int):
        for c, value in self.terms:
            if c == colour:
                return value
        return None

    def colours(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.terms)

    def to_payload(self) -> dict:
        return {"weighted": {str(c): format_scalar(v) for c, v in self.terms}}


EdgeCondition = Fixed | Weighted


def condition_from_payload(payload) -> EdgeCondition:
    if isinstance(payload, int):
        return Fixed(payload)
    if not isinstance(payload, Mapping):
        raise InputError(f"Edge condition must be an object, got {payload!r}")
    if "fixed" in payload:
        return Fixed(int(payload["fixed"]))
    if "weighted" in payload:
        return Weighted.of({int(c): as_scalar(v) for c, v in payload["weighted"].items()})
    raise InputError(f"Edge condition needs 'fixed' or 'weighted': {payload!r}")


class Role(str, enum.Enum):
    ALPHA = "alpha"
    BETA = "beta"

    @property
    def other(self) -> "Role":
        return Role.BETA if self is Role.ALPHA else Role.ALPHA


class End(str, enum.Enum):
    IN = "in"
    OUT = "out"


@dataclass(frozen=True)
class EdgeRef:
    line: str
    end: End


@dataclass(frozen=True)
class CountConstraint:
    """Keep only boundary colourings where the listed edges show their listed colour ``total`` times."""

    terms: tuple[tuple[EdgeRef, int], ...]
    total: int

    def holds(self, colouring: Mapping[EdgeRef, int]) -> bool:
        return sum(1 for ref, colour in self.terms if colouring[ref] == colour) == self.total


# ---------------------------------------------------------------
# Lines, vertices, specs
# ---------------------------------------------------------------


@dataclass(frozen=True)
class Line:
    name: str
    rapidity: Scalar
    inflow: EdgeCondition
    outflow: EdgeCondition
    kind: str = ""


@dataclass(frozen=True)
class Vertex:
    alpha: str
    beta: str


@dataclass(frozen=True)
class LatticeSpec:
    """Compiled lattice: lines plus vertices in a topological order of every route."""

    lines: tuple[Line, ...]
    vertices: tuple[Vertex, ...]
    model: ModelParams
    norm: Normalization
    constraint: CountConstraint | None = None
    _index: dict = field(init=False, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {line.name: line for line in self.lines})

    def line(self, name: str) -> Line:
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f"Unknown line {name!r}") from None

    def route(self, name: str) -> list[int]:
        return [k for k, v in enumerate(self.vertices) if name in (v.alpha, v.beta)]

    def partners(self, name: str) -> list[tuple[str, Role]]:
        """Lines crossed by ``name`` in route order, with the role ``name`` plays there."""
        out = []
        for k in self.route(name):
            v = self.vertices[k]
            out.append((v.beta, Role.ALPHA) if v.alpha == name else (v.alpha, Role.BETA))
        return out

    def edges(self) -> list[tuple[EdgeRef, EdgeCondition]]:
        out = []
        for line in self.lines:
            out.append((EdgeRef(line.name, End.IN), line.inflow))
            out.append((EdgeRef(line.name, End.OUT), line.outflow))
        return out

    def weighted_edges(self) -> list[tuple[EdgeRef, Weighted]]:
        return [(ref, cond) for ref, cond in self.edges() if isinstance(cond, Weighted)]

    @property
    def all_fixed(self) -> bool:
        return not self.weighted_edges()

    def check_poles(self) -> None:
        table = weight_table(self.model, self.norm)
        for v in self.vertices:
            table.check_poles(self.line(v.alpha).rapidity, self.line(v.beta).rapidity)

    def with_rapidity(self, name: str, value) -> "LatticeSpec":
        """Same lattice with one line's rapidity replaced; poles are re-checked."""
        self.line(name)
        lines = tuple(
            replace(line, rapidity=as_scalar(value)) if line.name == name else line for line in self.lines
        )
        spec = replace(self, lines=lines)
        spec.check_poles()
        return spec

    def with_conditions(self, conditions: Mapping[EdgeRef, EdgeCondition], constraint=None) -> "LatticeSpec":
        lines = []
        for line in self.lines:
            inflow = conditions.get(EdgeRef(line.name, End.IN), line.inflow)
            outflow = conditions.get(EdgeRef(line.name, End.OUT), line.outflow)
            lines.append(replace(line, inflow=inflow, outflow=outflow))
        return replace(self, lines=tuple(lines), constraint=constraint)

    def denominator_roots(self, name: str) -> list[Scalar]:
        """Values of ``name``'s rapidity at which some weight along its route is singular.

        The lattice value is a rational function of that rapidity whose denominator
        divides the product of (b - root) over the returned roots.
        """
        if self.model.kind is not ModelKind.RATIONAL:
            raise InputError("Denominator roots are only defined for the rational model")
        shift = 0 if self.norm is Normalization.UNIT_B else 1
        roots = []
        for partner, role in self.partners(name):
            w = self.line(partner).rapidity
            roots.append(w - shift if role is Role.ALPHA else w + shift)
        return roots


# ---------------------------------------------------------------
# Construction
# ---------------------------------------------------------------


def as_alpha(names: Iterable[str]) -> list[tuple[str, Role]]:
    return [(n, Role.ALPHA) for n in names]


def as_beta(names: Iterable[str]) -> list[tuple[str, Role]]:
    return [(n, Role.BETA) for n in names]


class LatticeBuilder:
    """Collect lines and their routes, then compile them into a :class:`LatticeSpec`.

    Both partners of a crossing must list it, with complementary roles; the
    compiled vertex order is a topological order of all routes that prefers the
    order in which crossings were first declared.

    Examples
    --------
    >>> b = LatticeBuilder(ModelParams(), Normalization.UNIT_A)
    >>> b.line("x", 2, Fixed(1), Fixed(0)); b.line("y", 0, Fixed(0), Fixed(1))
    >>> b.route("x", as_alpha(["y"])); b.route("y", as_beta(["x"]))
    >>> len(b.build().vertices)
    1
    """

    def __init__(self, model: ModelParams, norm: Normalization = Normalization.UNIT_A):
        self.model = model
        self.norm = Normalization(norm)
        self._lines: dict[str, Line] = {}
        self._routes: dict[str, list[tuple[str, Role]]] = {}
        self._constraint: CountConstraint | None = None

    def line(self, name: str, rapidity, inflow: EdgeCondition, outflow: EdgeCondition, kind: str = "") -> None:
        if name in self._lines:
            raise InputError(f"Line {name!r} declared twice")
        for cond in (inflow, outflow):
            for colour in cond.colours():
                self.model.check_colour(colour)
        self._lines[name] = Line(name, as_scalar(rapidity), inflow, outflow, kind)
        self._routes[name] = []

    def route(self, name: str, crossings: Sequence[tuple[str, Role]]) -> None:
        if name not in self._lines:
            raise InputError(f"Route for undeclared line {name!r}")
        self._routes[name].extend((partner, Role(role)) for partner, role in crossings)

    def constrain(self, constraint: CountConstraint | None) -> None:
        self._constraint = constraint

    def build(self) -> LatticeSpec:
        keys: dict[frozenset, int] = {}
        vertices: list[Vertex] = []
        for name, route in self._routes.items():
            seen = set()
            for partner, role in route:
                if partner not in self._lines:
                    raise InputError(f"Line {name!r} crosses undeclared line {partner!r}")
                if partner == name or partner in seen:
                    raise InputError(f"Line {name!r} crosses {partner!r} more than once")
                seen.add(partner)
                if (name, role.other) not in self._routes[partner]:
                    raise InputError(
                        f"Crossing {name!r}/{partner!r} is not declared by {partner!r} with role {role.other.value}"
                    )
                key = frozenset((name, partner))
                if key not in keys:
                    keys[key] = len(vertices)
                    vertices.append(Vertex(name, partner) if role is Role.ALPHA else Vertex(partner, name))

        successors: dict[int, list[int]] = {k: [] for k in range(len(vertices))}
        indegree = [0] * len(vertices)
        for name, route in self._routes.items():
            ids = [keys[frozenset((name, partner))] for partner, _ in route]
            for a, b in zip(ids, ids[1:]):
                successors[a].append(b)
                indegree[b] += 1

        ready = [k for k in range(len(vertices)) if indegree[k] == 0]
        heapq.heapify(ready)
        order = []
        while ready:
            k = heapq.heappop(ready)
            order.append(k)
            for s in successors[k]:
                indegree[s] -= 1
                if indegree[s] == 0:
                    heapq.heappush(ready, s)
        if len(order) != len(vertices):
            raise InputError("Crossing routes are inconsistent: they admit no common order")

        spec = LatticeSpec(
            lines=tuple(self._lines.values()),
            vertices=tuple(vertices[k] for k in order),
            model=self.model,
            norm=self.norm,
            constraint=self._constraint,
        )
        if self._constraint is not None:
            names = set(self._lines)
            for ref, colour in self._constraint.terms:
                if ref.line not in names:
                    raise InputError(f"Constraint refers to unknown line {ref.line!r}")
                self.model.check_colour(colour)
        spec.check_poles()
        log.debug("built lattice with %d lines and %d vertices", len(spec.lines), len(spec.vertices))
        return spec


def grid(
    rows: Sequence,
    cols: Sequence,
    *,
    left: Sequence[EdgeCondition],
    right: Sequence[EdgeCondition],
    bottom: Sequence[EdgeCondition],
    top: Sequence[EdgeCondition],
    model: ModelParams,
    norm: Normalization = Normalization.UNIT_A,
    row_names: Sequence[str] | None = None,
    col_names: Sequence[str] | None = None,
    constraint: CountConstraint | None = None,
) -> LatticeSpec:
    """Rectangular lattice: rows bottom to top flowing right, columns left to right flowing up."""
    if not (len(left) == len(right) == len(rows)):
        raise InputError(f"{len(rows)} rows need as many left and right conditions")
    if not (len(bottom) == len(top) == len(cols)):
        raise InputError(f"{len(cols)} columns need as many bottom and top conditions")
    row_names = list(row_names or [f"row{k + 1}" for k in range(len(rows))])
    col_names = list(col_names or [f"col{k + 1}" for k in range(len(cols))])

    builder = LatticeBuilder(model, norm)
    for name, x, lc, rc in zip(row_names, rows, left, right):
        builder.line(name, x, lc, rc, kind="row")
    for name, y, bc, tc in zip(col_names, cols, bottom, top):
        builder.line(name, y, bc, tc, kind="col")
    for name in row_names:
        builder.route(name, as_alpha(col_names))
    for name in col_names:
        builder.route(name, as_beta(row_names))
    builder.constrain(constraint)
    return builder.build()


# ---------------------------------------------------------------
# JSON schema
# ---------------------------------------------------------------

_SIDES = {"left": ("row", End.IN), "right": ("row", End.OUT), "bottom": ("col", End.IN), "top": ("col", End.OUT)}


def lattice_from_payload(payload: Mapping) -> LatticeSpec:
    """Compile the grid JSON schema into a lattice.

    ``{"rows": [{"rapidity": "p/q"}, ...], "cols": [...], "model": {...}, "norm": "unit_a",
    "boundary": {"left": [...], "right": [...], "top": [...], "bottom": [...],
    "constraint": {"terms": [{"side": "top", "index": 0, "colour": 1}], "total": 1}}}``
    """
    try:
        rows = [as_scalar(r["rapidity"]) for r in payload["rows"]]
        cols = [as_scalar(c["rapidity"]) for c in payload["cols"]]
        boundary = payload["boundary"]
        sides = {side: [condition_from_payload(e) for e in boundary[side]] for side in _SIDES}
    except (KeyError, TypeError) as exc:
        raise InputError(f"Lattice JSON is missing a field: {exc}") from exc
    model = ModelParams.from_payload(payload.get("model", {}))
    norm = Normalization(payload.get("norm", "unit_a"))

    constraint = None
    if boundary.get("constraint"):
        terms = []
        for term in boundary["constraint"]["terms"]:
            prefix, end = _SIDES[term["side"]]
            terms.append((EdgeRef(f"{prefix}{int(term['index']) + 1}", end), int(term["colour"])))
        constraint = CountConstraint(tuple(terms), int(boundary["constraint"]["total"]))
    return grid(rows, cols, model=model, norm=norm, constraint=constraint, **sides)
