"""Finding Bethe roots.

Single-root systems reduce to one cleared polynomial, rebuilt exactly by
interpolation and solved in closed form (degree <= 2) or with ``mp.polyroots``.
Coupled systems go through damped Newton on the cleared residuals with seeded
random restarts; every converged root tuple is deflated away for later restarts.
Only the returned roots are certified; the coupled search claims no completeness.
"""

import logging
import math
import random
from fractions import Fraction
from typing import Sequence

from mpmath import mp

from colour_vertex.algebra.polynomial import Polynomial, interpolate
from colour_vertex.algebra.scalars import Scalar, as_scalars, is_exact, to_float
from colour_vertex.bethe.equations import BetheSystem, Status, Variant, poles, residual, residual_magnitude
from colour_vertex.config import DEFAULT_CONFIG, EngineConfig
from colour_vertex.errors import InputError, SearchExhausted

log = logging.getLogger(__name__)


# ---------------------------------------------------------------
# Single-root systems
# ---------------------------------------------------------------


def cleared_polynomial(system: BetheSystem) -> Polynomial:
    """The cleared equation of a one-root system as an exact polynomial in b."""
    if system.size != 1:
        raise InputError(f"Cleared polynomial needs a single unknown, the system has {system.size}")
    degree = len(system.ys) + len(system.zs)
    samples = [(Fraction(k), residual(system, [Fraction(k)])[0]) for k in range(degree + 1)]
    if not all(is_exact(v) for _, v in samples):
        raise InputError("Cleared polynomials are built for exact rapidities only")
    return interpolate(samples)


def _rational_root(poly: Polynomial, approx) -> Scalar:
    """``approx`` as an exact rational root of ``poly`` when one is nearby, else ``approx``."""
    if isinstance(approx, mp.mpc):
        if abs(approx.imag) > mp.mpf(2) ** (-(mp.prec // 2)):
            return approx
        approx = approx.real
    lead = poly.primitive_integer_coefficients()[-1]
    candidate = Fraction(mp.nstr(approx, mp.dps)).limit_denominator(abs(lead))
    return candidate if poly(candidate) == 0 else approx


def _quadratic_roots(poly: Polynomial) -> list[Scalar]:
    c, b, a = poly.coefficients
    disc = b * b - 4 * a * c
    num, den = disc.numerator, disc.denominator
    rn, rd = _isqrt(num), _isqrt(den)
    if rn is not None and rd is not None:
        root = Fraction(rn, rd)
        return [(-b - root) / (2 * a), (-b + root) / (2 * a)]
    sq = mp.sqrt(to_float(disc))
    fa, fb = to_float(a), to_float(b)
    return [(-fb - sq) / (2 * fa), (-fb + sq) / (2 * fa)]


def _isqrt(value: int) -> int | None:
    if value < 0:
        return None
    r = math.isqrt(value)
    return r if r * r == value else None


def polynomial_roots(poly: Polynomial) -> list[Scalar]:
    """Distinct roots of a polynomial, exact where rational.

    Exact input is reduced to its square-free part first, so ``polyroots`` only
    ever sees simple roots.
    """
    if poly.degree > 2 and all(is_exact(c) for c in poly.coefficients):
        poly = poly.squarefree()
    if poly.degree <= 0:
        return []
    if poly.degree == 1:
        return [-poly.coefficients[0] / poly.coefficients[1]]
    if poly.degree == 2:
        return _quadratic_roots(poly)
    coeffs = [to_float(c) for c in reversed(poly.coefficients)]
    try:
        approx = mp.polyroots(coeffs, maxsteps=200, extraprec=2 * mp.prec)
    except mp.NoConvergence as exc:
        raise SearchExhausted(
            f"polyroots did not converge on the degree {poly.degree} cleared polynomial",
            {"method": "polyroots", "degree": poly.degree},
        ) from exc
    return [_rational_root(poly, r) for r in approx]


def _solve_single(system: BetheSystem, config: EngineConfig) -> BetheSystem:
    poly = cleared_polynomial(system)
    if poly.degree < 0:
        raise InputError("The cleared equation vanishes identically; every b is a root")
    found = []
    rejected = []
    for root in polynomial_roots(poly):
        reasons = poles(system, [root], None if is_exact(root) else config.tolerance)
        if reasons:
            rejected.append(reasons)
        elif not any(_same(root, other, config) for other in found):
            found.append(root)
    stats = {"method": "closed-form" if poly.degree <= 2 else "polyroots", "degree": poly.degree, "rejected": len(rejected)}
    if not found:
        log.info("%s system has no finite admissible root (degree %d)", system.variant.value, poly.degree)
        return BetheSystem(system.variant, system.ys, system.zs, system.counts, (), Status.NO_FINITE_SOLUTION, stats)
    return BetheSystem(
        system.variant, system.ys, system.zs, system.counts, tuple((r,) for r in found), Status.SOLVED, stats
    )


def _same(a, b, config: EngineConfig) -> bool:
    if is_exact(a) and is_exact(b):
        return a == b
    return abs(to_float(a) - to_float(b)) <= config.tolerance


# ---------------------------------------------------------------
# Coupled systems
# ---------------------------------------------------------------


def _float_residual(system: BetheSystem, roots: list) -> list:
    return [to_float(r) for r in residual(system, roots)]


def _deflated(system: BetheSystem, roots: list, known: list[list]) -> list:
    values = _float_residual(system, roots)
    factor = mp.mpf(1)
    for other in known:
        dist = mp.fsum(abs(a - b) ** 2 for a, b in zip(roots, other))
        factor *= 1 + 1 / dist
    return [v * factor for v in values]


def _newton_step(system: BetheSystem, b: list, known: list[list], current: list) -> list:
    """Solve J * step = -current with a central-difference Jacobian of the deflated residuals."""
    size = len(b)
    h = mp.mpf(2) ** (-(mp.prec // 3))
    jac = mp.matrix(size, size)
    for j in range(size):
        up = list(b)
        down = list(b)
        up[j] += h
        down[j] -= h
        fu, fd = _deflated(system, up, known), _deflated(system, down, known)
        for i in range(size):
            jac[i, j] = (fu[i] - fd[i]) / (2 * h)
    step = mp.lu_solve(jac, mp.matrix([-v for v in current]))
    return [step[i] for i in range(size)]


def _newton(system: BetheSystem, start: list, known: list[list], config: EngineConfig, max_iter: int = 80):
    """Damped Newton on the deflated residuals, then a few full steps to polish; returns the roots or None."""
    b = list(start)
    try:
        current = _deflated(system, b, known)
        for _ in range(max_iter):
            if residual_magnitude(_float_residual(system, b)) <= config.tolerance:
                break
            step = _newton_step(system, b, known, current)
            damping = mp.mpf(1)
            norm = residual_magnitude(current)
            for _ in range(40):
                trial = [v + damping * s for v, s in zip(b, step)]
                try:
                    candidate = _deflated(system, trial, known)
                except ZeroDivisionError:
                    candidate = None
                if candidate is not None and residual_magnitude(candidate) < norm:
                    b, current = trial, candidate
                    break
                damping /= 2
            else:
                return None
        else:
            return None
        for _ in range(3):
            plain = _float_residual(system, b)
            b = [v + s for v, s in zip(b, _newton_step(system, b, [], plain))]
    except (ZeroDivisionError, ValueError):
        return None
    return b if residual_magnitude(_float_residual(system, b)) <= config.tolerance else None


def _recognise(system: BetheSystem, roots: list) -> list:
    """Replace a float root tuple by an exact one when a nearby rational tuple solves the system exactly."""
    if not all(is_exact(v) for v in (*system.ys, *system.zs)):
        return roots
    exact = []
    for r in roots:
        if isinstance(r, mp.mpc):
            if abs(r.imag) > mp.mpf(2) ** (-(mp.prec // 2)):
                return roots
            r = r.real
        exact.append(Fraction(mp.nstr(r, mp.dps)).limit_denominator(10**6))
    if any(v != 0 for v in residual(system, exact)):
        return roots
    return exact


def _canonical(roots: list, system: BetheSystem, config: EngineConfig) -> tuple:
    """Root tuple with each family sorted, so permutations compare equal; negligible imaginary parts dropped."""
    roots = [
        r.real if isinstance(r, mp.mpc) and abs(r.imag) <= config.tolerance else r for r in roots
    ]
    b1, b2 = system.families(roots)

    def key(v):
        f = to_float(v)
        return (float(mp.re(f)), float(mp.im(f)))

    return tuple(sorted(b1, key=key) + sorted(b2, key=key))


def _start_point(rng: random.Random, system: BetheSystem) -> list:
    sites = [to_float(v) for v in (*system.ys, *system.zs)] or [mp.mpf(0)]
    centre = mp.fsum(sites) / len(sites)
    spread = max(mp.mpf(1), max(abs(s - centre) for s in sites))
    return [
        mp.mpc(centre + spread * (2 * rng.random() - 1), spread * (2 * rng.random() - 1) / 2)
        for _ in range(system.size)
    ]


def _solve_coupled(system: BetheSystem, config: EngineConfig) -> BetheSystem:
    rng = random.Random(config.seed)
    known: list[list] = []
    solutions: list[tuple] = []
    stats = {"method": "newton", "restarts": 0, "converged": 0, "rejected": 0, "duplicates": 0}
    for attempt in range(config.max_restarts):
        stats["restarts"] = attempt + 1
        roots = _newton(system, _start_point(rng, system), known, config)
        if roots is None:
            continue
        stats["converged"] += 1
        known.append(roots)
        if poles(system, roots, config.tolerance):
            stats["rejected"] += 1
            continue
        canonical = _canonical(_recognise(system, roots), system, config)
        if any(all(_same(a, b, config) for a, b in zip(canonical, other)) for other in solutions):
            stats["duplicates"] += 1
            continue
        log.debug("restart %d converged to %s", attempt, [mp.nstr(to_float(v), 12) for v in canonical])
        solutions.append(canonical)
    if not solutions:
        raise SearchExhausted(
            f"no admissible {system.variant.value} root tuple after {stats['restarts']} restarts", stats
        )
    return BetheSystem(system.variant, system.ys, system.zs, system.counts, tuple(solutions), Status.SOLVED, stats)


# ---------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------


def solve(
    variant: Variant,
    ys: Sequence = (),
    zs: Sequence = (),
    counts: Sequence[int] = (1,),
    config: EngineConfig = DEFAULT_CONFIG,
) -> BetheSystem:
    """Solve a Bethe system at the configured precision.

    Examples
    --------
    >>> solve(Variant.A1_FUNDAMENTAL, ys=[0, 2]).solutions
    ((Fraction(1, 2),),)
    >>> solve(Variant.A1_FUNDAMENTAL, ys=[0, 1]).status.value
    'no-finite-solution'
    """
    system = BetheSystem(Variant(variant), tuple(as_scalars(ys)), tuple(as_scalars(zs)), tuple(counts))
    with config.float_context():
        if system.size == 0:
            return BetheSystem(system.variant, system.ys, system.zs, system.counts, ((),), Status.SOLVED, {})
        exact_input = all(is_exact(v) for v in (*system.ys, *system.zs))
        if system.size == 1 and exact_input:
            return _solve_single(system, config)
        return _solve_coupled(system, config)
