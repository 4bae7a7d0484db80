"""A2 scalar-product lattices and their degenerations, as crossing networks.

Line names: ``x2_k``, ``x1_k``, ``b1_k``, ``b2_k`` for the auxiliary lines and
``y_k``, ``z_k`` for the quantum lines, all 1-based. Every layout uses unit_b
weights of the rank-2 rational model. Quantum lines ``y`` flow up; ``z`` lines
flow down, so along a ``z`` route the auxiliary lines are met top to bottom.
"""

import logging
from typing import Sequence

from colour_vertex.algebra.scalars import as_scalars
from colour_vertex.errors import InputError
from colour_vertex.lattice.spec import (
    CountConstraint,
    EdgeRef,
    End,
    Fixed,
    LatticeBuilder,
    LatticeSpec,
    Weighted,
    as_alpha,
    as_beta,
)
from colour_vertex.model.weights import ModelParams, Normalization

log = logging.getLogger(__name__)

A2 = ModelParams(rank=2)


def names(prefix: str, count: int) -> list[str]:
    return [f"{prefix}_{k + 1}" for k in range(count)]


def _down(prefix: str, count: int) -> list[str]:
    return list(reversed(names(prefix, count)))


def _declare(builder: LatticeBuilder, prefix: str, values: Sequence, inflow, outflow, kind: str) -> None:
    for name, value in zip(names(prefix, len(values)), as_scalars(values)):
        builder.line(name, value, inflow, outflow, kind)


def _route_all(builder: LatticeBuilder, prefix: str, count: int, crossings: list) -> None:
    for name in names(prefix, count):
        builder.route(name, crossings)


def fig1a(x2s, x1s, b1s, b2s, ys, zs) -> LatticeSpec:
    """A2 scalar product with x2 rows bent across the x1 rows and b2 rows bent across the b1 rows."""
    ell, m, L, M = len(x1s), len(x2s), len(ys), len(zs)
    _check_counts(ell, m, len(b1s), len(b2s))
    y, z = names("y", L), names("z", M)
    b = LatticeBuilder(A2, Normalization.UNIT_B)
    _declare(b, "x2", x2s, Fixed(2), Fixed(1), "x2")
    _declare(b, "x1", x1s, Fixed(1), Fixed(0), "x1")
    _declare(b, "b1", b1s, Fixed(0), Fixed(1), "b1")
    _declare(b, "b2", b2s, Fixed(1), Fixed(2), "b2")
    _declare(b, "y", ys, Fixed(0), Fixed(0), "y")
    _declare(b, "z", zs, Fixed(2), Fixed(2), "z")

    _route_all(b, "x2", m, as_alpha(_down("x1", ell)) + as_alpha(y) + as_beta(z))
    _route_all(b, "x1", ell, as_beta(names("x2", m)) + as_alpha(y) + as_beta(z))
    _route_all(b, "b1", ell, as_alpha(y) + as_beta(z) + as_beta(names("b2", m)))
    _route_all(b, "b2", m, as_alpha(y) + as_beta(z) + as_alpha(_down("b1", ell)))
    _route_all(b, "y", L, as_beta(names("x2", m) + names("x1", ell) + names("b1", ell) + names("b2", m)))
    _route_all(b, "z", M, as_alpha(_down("b2", m) + _down("b1", ell) + _down("x1", ell) + _down("x2", m)))
    return b.build()


def fig1b(x2s, x1s, b1s, b2s, ys, zs) -> LatticeSpec:
    """A2 scalar product with x1 rows bent across the x2 rows and b1 rows bent across the b2 rows."""
    ell, m, L, M = len(x1s), len(x2s), len(ys), len(zs)
    _check_counts(ell, m, len(b1s), len(b2s))
    y, z = names("y", L), names("z", M)
    b = LatticeBuilder(A2, Normalization.UNIT_B)
    _declare(b, "x1", x1s, Fixed(1), Fixed(0), "x1")
    _declare(b, "x2", x2s, Fixed(2), Fixed(1), "x2")
    _declare(b, "b2", b2s, Fixed(1), Fixed(2), "b2")
    _declare(b, "b1", b1s, Fixed(0), Fixed(1), "b1")
    _declare(b, "y", ys, Fixed(0), Fixed(0), "y")
    _declare(b, "z", zs, Fixed(2), Fixed(2), "z")

    _route_all(b, "x1", ell, as_alpha(y) + as_beta(z) + as_beta(names("x2", m)))
    _route_all(b, "x2", m, as_alpha(y) + as_beta(z) + as_alpha(_down("x1", ell)))
    _route_all(b, "b2", m, as_alpha(_down("b1", ell)) + as_alpha(y) + as_beta(z))
    _route_all(b, "b1", ell, as_beta(names("b2", m)) + as_alpha(y) + as_beta(z))
    _route_all(b, "y", L, as_beta(names("x1", ell) + names("x2", m) + names("b2", m) + names("b1", ell)))
    _route_all(b, "z", M, as_alpha(_down("b1", ell) + _down("b2", m) + _down("x2", m) + _down("x1", ell)))
    return b.build()


def _check_counts(ell: int, m: int, n_b1: int, n_b2: int) -> None:
    if n_b1 != ell or n_b2 != m:
        raise InputError(f"Need |b1| = |x1| = {ell} and |b2| = |x2| = {m}, got |b1| = {n_b1}, |b2| = {n_b2}")


# ---------------------------------------------------------------
# Signed boundary sums
# ---------------------------------------------------------------

SIGNED_12 = Weighted.of({1: -1, 2: 1})
SIGNED_01 = Weighted.of({0: -1, 1: 1})


def fig2a(x2s, x1s, b1s, ys, zs) -> LatticeSpec:
    """The b2 -> infinity degeneration as a signed boundary sum.

    b1 rows leave with colour 1 or 2, z lines enter with colour 1 (weight -1) or 2,
    and exactly m of those edges carry their marked colour: 2 for b1, 1 for z.
    """
    ell, m, L, M = len(x1s), len(x2s), len(ys), len(zs)
    if len(b1s) != ell:
        raise InputError(f"Need |b1| = |x1| = {ell}, got {len(b1s)}")
    y, z = names("y", L), names("z", M)
    b = LatticeBuilder(A2, Normalization.UNIT_B)
    _declare(b, "x2", x2s, Fixed(2), Fixed(1), "x2")
    _declare(b, "x1", x1s, Fixed(1), Fixed(0), "x1")
    _declare(b, "b1", b1s, Fixed(0), Weighted.summed([1, 2]), "b1")
    _declare(b, "y", ys, Fixed(0), Fixed(0), "y")
    _declare(b, "z", zs, SIGNED_12, Fixed(2), "z")

    _route_all(b, "x2", m, as_alpha(_down("x1", ell)) + as_alpha(y) + as_beta(z))
    _route_all(b, "x1", ell, as_beta(names("x2", m)) + as_alpha(y) + as_beta(z))
    _route_all(b, "b1", ell, as_alpha(y))
    _route_all(b, "y", L, as_beta(names("x2", m) + names("x1", ell) + names("b1", ell)))
    _route_all(b, "z", M, as_alpha(_down("x1", ell) + _down("x2", m)))

    terms = [(EdgeRef(n, End.OUT), 2) for n in names("b1", ell)]
    terms += [(EdgeRef(n, End.IN), 1) for n in z]
    b.constrain(CountConstraint(tuple(terms), m))
    return b.build()


def fig2b(x2s, x1s, b2s, ys, zs) -> LatticeSpec:
    """The b1 -> infinity degeneration as a signed boundary sum.

    b2 rows enter with colour 0 (weight -1) or 1, y lines leave with colour 0 or 1,
    and exactly l of those edges carry their marked colour: 0 for b2, 1 for y.
    """
    ell, m, L, M = len(x1s), len(x2s), len(ys), len(zs)
    if len(b2s) != m:
        raise InputError(f"Need |b2| = |x2| = {m}, got {len(b2s)}")
    y, z = names("y", L), names("z", M)
    b = LatticeBuilder(A2, Normalization.UNIT_B)
    _declare(b, "x1", x1s, Fixed(1), Fixed(0), "x1")
    _declare(b, "x2", x2s, Fixed(2), Fixed(1), "x2")
    _declare(b, "b2", b2s, SIGNED_01, Fixed(2), "b2")
    _declare(b, "y", ys, Fixed(0), Weighted.summed([0, 1]), "y")
    _declare(b, "z", zs, Fixed(2), Fixed(2), "z")

    _route_all(b, "x1", ell, as_alpha(y) + as_beta(z) + as_beta(names("x2", m)))
    _route_all(b, "x2", m, as_alpha(y) + as_beta(z) + as_alpha(_down("x1", ell)))
    _route_all(b, "b2", m, as_beta(z))
    _route_all(b, "y", L, as_beta(names("x1", ell) + names("x2", m)))
    _route_all(b, "z", M, as_alpha(_down("b2", m) + _down("x2", m) + _down("x1", ell)))

    terms = [(EdgeRef(n, End.IN), 0) for n in names("b2", m)]
    terms += [(EdgeRef(n, End.OUT), 1) for n in y]
    b.constrain(CountConstraint(tuple(terms), ell))
    return b.build()


# ---------------------------------------------------------------
# Colour-invariance lattices
# ---------------------------------------------------------------


def colour_invariance_b2_lattice(x1s, b1s, ys, zs, x1_colours: Sequence[int], z_colours: Sequence[int]) -> LatticeSpec:
    """Right-hand factor of the b2 degeneration with fixed x1 in-colours and z out-colours.

    Equals (-1)^{#(z_colours == 1)} times the A1 unit_b scalar product S(x1, b1 | y)
    whenever #(x1_colours == 2) + #(z_colours == 1) = m.
    """
    ell, L, M = len(x1s), len(ys), len(zs)
    if len(x1_colours) != ell or len(z_colours) != M:
        raise InputError(f"Need {ell} x1 colours and {M} z colours, got {len(x1_colours)} and {len(z_colours)}")
    y = names("y", L)
    b = LatticeBuilder(A2, Normalization.UNIT_B)
    for name, value, colour in zip(names("x1", ell), as_scalars(x1s), x1_colours):
        b.line(name, value, Fixed(A2.check_colour(colour)), Fixed(0), "x1")
    _declare(b, "b1", b1s, Fixed(0), Weighted.summed([1, 2]), "b1")
    _declare(b, "y", ys, Fixed(0), Fixed(0), "y")
    for name, value, colour in zip(names("z", M), as_scalars(zs), z_colours):
        b.line(name, value, SIGNED_12, Fixed(A2.check_colour(colour)), "z")

    _route_all(b, "x1", ell, as_alpha(y) + as_beta(names("z", M)))
    _route_all(b, "b1", ell, as_alpha(y))
    _route_all(b, "y", L, as_beta(names("x1", ell) + names("b1", ell)))
    _route_all(b, "z", M, as_alpha(_down("x1", ell)))
    return b.build()


def colour_invariance_b1_lattice(x2s, b2s, ys, zs, x2_colours: Sequence[int], y_colours: Sequence[int]) -> LatticeSpec:
    """Left-hand factor of the b1 degeneration with fixed x2 out-colours and y in-colours.

    Equals (-1)^{#(x2_colours == 0)} times the anti-fundamental scalar product
    S(x2, b2 | z) whenever #(x2_colours == 0) + #(y_colours == 1) = l.
    """
    m, L, M = len(x2s), len(ys), len(zs)
    if len(x2_colours) != m or len(y_colours) != L:
        raise InputError(f"Need {m} x2 colours and {L} y colours, got {len(x2_colours)} and {len(y_colours)}")
    z = names("z", M)
    b = LatticeBuilder(A2, Normalization.UNIT_B)
    _declare(b, "b2", b2s, SIGNED_01, Fixed(2), "b2")
    for name, value, colour in zip(names("x2", m), as_scalars(x2s), x2_colours):
        b.line(name, value, Fixed(2), Fixed(A2.check_colour(colour)), "x2")
    for name, value, colour in zip(names("y", L), as_scalars(ys), y_colours):
        b.line(name, value, Fixed(A2.check_colour(colour)), Weighted.summed([0, 1]), "y")
    _declare(b, "z", zs, Fixed(2), Fixed(2), "z")

    _route_all(b, "b2", m, as_beta(z))
    _route_all(b, "x2", m, as_alpha(names("y", L)) + as_beta(z))
    _route_all(b, "y", L, as_beta(names("x2", m)))
    _route_all(b, "z", M, as_alpha(_down("b2", m) + _down("x2", m)))
    return b.build()


def antifundamental_scalar_product_lattice(x2s, b2s, zs) -> LatticeSpec:
    """S(x2, b2 | z) with colours 1 and 2: x2 rows 2 -> 1 under b2 rows 1 -> 2, z lines flowing down."""
    m, M = len(x2s), len(zs)
    if len(b2s) != m:
        raise InputError(f"Need |b2| = |x2| = {m}, got {len(b2s)}")
    z = names("z", M)
    b = LatticeBuilder(A2, Normalization.UNIT_B)
    _declare(b, "x2", x2s, Fixed(2), Fixed(1), "x2")
    _declare(b, "b2", b2s, Fixed(1), Fixed(2), "b2")
    _declare(b, "z", zs, Fixed(2), Fixed(2), "z")
    _route_all(b, "x2", m, as_beta(z))
    _route_all(b, "b2", m, as_beta(z))
    _route_all(b, "z", M, as_alpha(_down("b2", m) + _down("x2", m)))
    return b.build()


# ---------------------------------------------------------------
# Mixed scalar products
# ---------------------------------------------------------------


def mixed_scalar_product_lattice(kind: str, rows, bs, ups, downs) -> LatticeSpec:
    """Scalar products whose quantum lines mix both flow directions.

    ``kind="x1z"``: S(x2, b2 | x1, z); x2 rows 2 -> 1 and b2 rows 1 -> 2 cross upward
    x1 lines (colour 1) and downward z lines (colour 2).

    ``kind="yx2"``: S(x1, b1 | y, x2); x1 rows 1 -> 0 and b1 rows 0 -> 1 cross upward
    y lines (colour 0) and downward x2 lines (colour 1).
    """
    if len(bs) != len(rows):
        raise InputError(f"Need as many b as rows, got {len(bs)} and {len(rows)}")
    if kind == "x1z":
        row, brow, up, down = "x2", "b2", "x1", "z"
        row_in, row_out, up_colour, down_colour = 2, 1, 1, 2
    elif kind == "yx2":
        row, brow, up, down = "x1", "b1", "y", "x2"
        row_in, row_out, up_colour, down_colour = 1, 0, 0, 1
    else:
        raise InputError(f"Unknown mixed scalar product {kind!r}; expected 'x1z' or 'yx2'")
    n = len(rows)
    up_names, down_names = names(up, len(ups)), names(down, len(downs))
    b = LatticeBuilder(A2, Normalization.UNIT_B)
    _declare(b, row, rows, Fixed(row_in), Fixed(row_out), row)
    _declare(b, brow, bs, Fixed(row_out), Fixed(row_in), brow)
    _declare(b, up, ups, Fixed(up_colour), Fixed(up_colour), up)
    _declare(b, down, downs, Fixed(down_colour), Fixed(down_colour), down)
    _route_all(b, row, n, as_alpha(up_names) + as_beta(down_names))
    _route_all(b, brow, n, as_alpha(up_names) + as_beta(down_names))
    _route_all(b, up, len(ups), as_beta(names(row, n) + names(brow, n)))
    _route_all(b, down, len(downs), as_alpha(_down(brow, n) + _down(row, n)))
    return b.build()
