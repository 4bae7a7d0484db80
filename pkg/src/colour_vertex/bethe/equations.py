"""Bethe equations in denominator-cleared form.

For an equation LHS = RHS with LHS = A/B and RHS = C/D the residual is
C*B - A*D, so residuals are polynomial evaluations and finite everywhere.
"""

import enum
import logging
from dataclasses import dataclass, field, replace
from typing import Sequence

from colour_vertex.algebra.scalars import Scalar, as_scalars, format_scalar, one_like, unify
from colour_vertex.errors import InputError

log = logging.getLogger(__name__)


class Variant(str, enum.Enum):
    A1_FUNDAMENTAL = "a1-fundamental"
    A1_ANTIFUNDAMENTAL = "a1-antifundamental"
    A2_NESTED = "a2-nested"


class Status(str, enum.Enum):
    UNSOLVED = "unsolved"
    SOLVED = "solved"
    NO_FINITE_SOLUTION = "no-finite-solution"


@dataclass(frozen=True)
class BetheSystem:
    """One Bethe system and the root tuples found for it.

    ``counts`` is ``(N,)`` for the A1 variants and ``(l, m)`` for the nested system.
    Each entry of ``solutions`` is a flat tuple; for the nested system the first
    ``l`` values are b(1) and the remaining ``m`` are b(2).
    """

    variant: Variant
    ys: tuple = ()
    zs: tuple = ()
    counts: tuple = (1,)
    solutions: tuple = ()
    status: Status = Status.UNSOLVED
    stats: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        object.__setattr__(self, "status", Status(self.status))
        object.__setattr__(self, "ys", tuple(as_scalars(self.ys)))
        object.__setattr__(self, "zs", tuple(as_scalars(self.zs)))
        counts = tuple(int(c) for c in self.counts)
        expected = 2 if self.variant is Variant.A2_NESTED else 1
        if len(counts) != expected or any(c < 0 for c in counts):
            raise InputError(f"{self.variant.value} needs {expected} non-negative root count(s), got {counts}")
        object.__setattr__(self, "counts", counts)
        if self.variant is Variant.A2_NESTED and sum(counts) > len(self.ys) + len(self.zs):
            raise InputError(
                f"Nested system needs l + m <= L + M, got l + m = {sum(counts)} with L + M = {len(self.ys) + len(self.zs)}"
            )
        for roots in self.solutions:
            if len(roots) != sum(counts):
                raise InputError(f"Root tuple {roots} does not match counts {counts}")

    @property
    def size(self) -> int:
        return sum(self.counts)

    def families(self, roots: Sequence) -> tuple[list, list]:
        """Split a flat root tuple into (b1, b2); the A1 variants put everything in b1."""
        if self.variant is Variant.A2_NESTED:
            ell = self.counts[0]
            return list(roots[:ell]), list(roots[ell:])
        return list(roots), []

    def with_roots(self, roots: Sequence) -> "BetheSystem":
        return replace(self, solutions=(tuple(as_scalars(roots)),), status=Status.SOLVED)

    def to_payload(self) -> dict:
        return {
            "variant": self.variant.value,
            "counts": list(self.counts),
            "status": self.status.value,
            "solutions": [
                {
                    "roots": [format_scalar(b) for b in roots],
                    "residuals": [format_scalar(r) for r in residual(self, roots)],
                }
                for roots in self.solutions
            ],
            "stats": dict(self.stats),
        }


def _prod(values, one):
    acc = one
    for v in values:
        acc = acc * v
    return acc


def _a1_equation(b, others, sites, one, site_shift):
    """Cleared A1 equation; ``site_shift`` 1 gives (b-y+1)/(b-y), -1 gives (b-z)/(b-z-1)."""
    lhs_den = _prod((b - o - 1 for o in others), one)
    lhs_num = _prod((b - o + 1 for o in others), one)
    if site_shift > 0:
        rhs_num = _prod((b - y + 1 for y in sites), one)
        rhs_den = _prod((b - y for y in sites), one)
    else:
        rhs_num = _prod((b - z for z in sites), one)
        rhs_den = _prod((b - z - 1 for z in sites), one)
    return lhs_den, lhs_num, rhs_num, rhs_den


def residual(system: BetheSystem, roots: Sequence | None = None) -> list[Scalar]:
    """Cleared residual of every equation at ``roots`` (default: the first stored solution).

    Examples
    --------
    >>> residual(BetheSystem(Variant.A1_FUNDAMENTAL, ys=[0, 2]), ["1/2"])
    [Fraction(0, 1)]
    >>> residual(BetheSystem(Variant.A1_FUNDAMENTAL, ys=[0, 2]), [0])
    [Fraction(-1, 1)]
    """
    if roots is None:
        if not system.solutions:
            raise InputError("System has no stored solution to evaluate")
        roots = system.solutions[0]
    if len(roots) != system.size:
        raise InputError(f"Expected {system.size} roots, got {len(roots)}")
    values = unify([*roots, *system.ys, *system.zs])
    n = system.size
    roots, ys, zs = values[:n], values[n: n + len(system.ys)], values[n + len(system.ys):]
    one = one_like(values)
    b1, b2 = system.families(roots)

    out = []
    if system.variant is not Variant.A2_NESTED:
        sites, shift = (ys, 1) if system.variant is Variant.A1_FUNDAMENTAL else (zs, -1)
        for i, b in enumerate(b1):
            others = b1[:i] + b1[i + 1:]
            lhs_den, lhs_num, rhs_num, rhs_den = _a1_equation(b, others, sites, one, shift)
            out.append(rhs_num * lhs_den - lhs_num * rhs_den)
        return out

    for i, b in enumerate(b1):
        lhs_den, lhs_num, rhs_num, rhs_den = _a1_equation(b, b1[:i] + b1[i + 1:], ys, one, 1)
        rhs_num *= _prod((b - w for w in b2), one)
        rhs_den *= _prod((b - w - 1 for w in b2), one)
        out.append(rhs_num * lhs_den - lhs_num * rhs_den)
    for i, b in enumerate(b2):
        lhs_den, lhs_num, rhs_num, rhs_den = _a1_equation(b, b2[:i] + b2[i + 1:], zs, one, -1)
        rhs_num *= _prod((b - w + 1 for w in b1), one)
        rhs_den *= _prod((b - w for w in b1), one)
        out.append(rhs_num * lhs_den - lhs_num * rhs_den)
    return out


def poles(system: BetheSystem, roots: Sequence, tol=None) -> list[str]:
    """Reasons ``roots`` is inadmissible: coincidences and zeros of the uncleared denominators.

    Float roots are compared within ``tol``; exact roots are compared exactly.
    """
    values = unify([*roots, *system.ys, *system.zs])
    n = system.size
    roots, ys, zs = values[:n], values[n: n + len(system.ys)], values[n + len(system.ys):]
    b1, b2 = system.families(roots)

    def same(a, b) -> bool:
        return a == b if tol is None else abs(a - b) <= tol

    reasons = []
    for family in (b1, b2):
        for i, b in enumerate(family):
            for other in family[i + 1:]:
                if same(b, other):
                    reasons.append(f"coincident roots {format_scalar(b)}")
                if same(b - other, 1) or same(b - other, -1):
                    reasons.append(f"roots {format_scalar(b)}, {format_scalar(other)} differ by one")
    if system.variant is Variant.A1_ANTIFUNDAMENTAL:
        reasons += [f"root {format_scalar(b)} = z + 1" for b in b1 for z in zs if same(b, z + 1)]
        return reasons
    reasons += [f"root {format_scalar(b)} meets y" for b in b1 for y in ys if same(b, y)]
    if system.variant is Variant.A2_NESTED:
        reasons += [f"root {format_scalar(b)} = z + 1" for b in b2 for z in zs if same(b, z + 1)]
        reasons += [f"b1 - b2 = 1 at {format_scalar(u)}" for u in b1 for w in b2 if same(u - w, 1)]
        reasons += [f"b2 meets b1 at {format_scalar(w)}" for u in b1 for w in b2 if same(u, w)]
    return reasons


def rescaled_nested_residual(system: BetheSystem, roots: Sequence, t, degenerate: str = "b2") -> list[Scalar]:
    """Nested residuals of the surviving family with the other sent to t, t+1, ...

    Each surviving equation is divided by prod_k(-w_k) over the large values w_k;
    as t grows the result tends to the corresponding A1 residual of ``roots``.
    """
    if system.variant is not Variant.A2_NESTED:
        raise InputError("Rescaled residuals are defined for the nested system only")
    ell, m = system.counts
    if degenerate == "b2":
        large = [t + k for k in range(m)]
        flat = [*roots, *large]
        keep = slice(0, ell)
    elif degenerate == "b1":
        large = [t + k for k in range(ell)]
        flat = [*large, *roots]
        keep = slice(ell, ell + m)
    else:
        raise InputError(f"degenerate must be 'b1' or 'b2', got {degenerate!r}")
    raw = residual(system, flat)[keep]
    large = unify(large)
    scale = one_like(large)
    for w in large:
        scale = scale * (-w)
    return [r / s for r, s in (unify([r, scale]) for r in raw)]


def residual_magnitude(values: Sequence[Scalar]) -> Scalar:
    return max((abs(v) for v in values), default=0)
