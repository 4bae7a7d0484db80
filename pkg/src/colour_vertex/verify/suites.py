"""Verification suites.

Every suite compares two independent computations of the same quantity over a
deterministic set of cases and reports each case by a stable identifier, e.g.
``dwpf-determinant/N=3/sample=1``. Exact cases must agree exactly; float cases
must agree to ``float_bits`` of the working precision.
"""

import itertools
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from mpmath import mp

from colour_vertex.a2 import layouts
from colour_vertex.a2.degeneration import A2Spec, Layout, a2_scalar_product, degenerate_b1, degenerate_b2, mixed_scalar_product_limit
from colour_vertex.a2.factorization import PartialForm, fact1, fact2, mixed_ik_sum, partial_det
from colour_vertex.algebra.polynomial import interpolate
from colour_vertex.algebra.scalars import format_scalar, is_exact, to_float
from colour_vertex.bethe.equations import Variant
from colour_vertex.bethe.solver import solve
from colour_vertex.config import DEFAULT_CONFIG, EngineConfig, Method
from colour_vertex.errors import InputError, VertexEngineError
from colour_vertex.lattice.evaluate import agree, evaluate
from colour_vertex.lattice.trivial import trivial_pf
from colour_vertex.model.weights import (
    ModelKind,
    ModelParams,
    Normalization,
    VertexKind,
    nonzero_count,
    weight_table,
)
from colour_vertex.model.yang_baxter import ybe_residual
from colour_vertex.partition.dwpf import (
    coloured_dwpf,
    dwpf,
    dwpf_ik,
    dwpf_ik_trig,
    pdwpf,
    pdwpf_det,
)
from colour_vertex.partition.scalar_product import (
    coloured_scalar_product,
    frozen_block_reduction,
    ik_sum,
    scalar_product,
    slavnov,
)

log = logging.getLogger(__name__)

GAMMA = Fraction(1, 2)


@dataclass(frozen=True)
class SuiteOptions:
    """Size knobs shared by all suites.

    ``max_size`` bounds lattice sizes, ``rank`` is the number of colours for the
    colour-independence suites, ``samples`` the number of random rapidity sets per size.
    """

    max_size: int = 3
    rank: int = 2
    samples: int = 3

    def __post_init__(self):
        if self.max_size < 1 or self.rank < 1 or self.samples < 1:
            raise InputError(
                f"max_size, rank and samples must be positive, got {self.max_size}, {self.rank}, {self.samples}"
            )


@dataclass
class CaseResult:
    case: str
    passed: bool
    values: dict = field(default_factory=dict)
    message: str = ""

    def to_payload(self) -> dict:
        payload = {
            "case": self.case,
            "passed": self.passed,
            "values": {k: format_scalar(v) if not isinstance(v, str) else v for k, v in self.values.items()},
        }
        if self.message:
            payload["message"] = self.message
        return payload


class Recorder:
    """Collects case outcomes for one suite run."""

    def __init__(self, suite: str, config: EngineConfig):
        self.suite = suite
        self.config = config
        self.cases: list[CaseResult] = []

    @property
    def float_bits(self) -> int:
        return self.config.precision_bits * 25 // 32

    def equal(self, case: str, left, right, labels=("left", "right"), bits: int | None = None) -> bool:
        if is_exact(left) and is_exact(right):
            ok = left == right
        else:
            ok = agree(left, right, bits if bits is not None else self.float_bits)
        values = {labels[0]: left, labels[1]: right}
        if not (is_exact(left) and is_exact(right)):
            values["difference"] = abs(to_float(left) - to_float(right))
        return self.record(case, ok, values)

    def record(self, case: str, passed: bool, values: dict | None = None, message: str = "") -> bool:
        result = CaseResult(f"{self.suite}/{case}", bool(passed), dict(values or {}), message)
        self.cases.append(result)
        if passed:
            log.info("%s passed", result.case)
        else:
            log.warning("%s FAILED %s", result.case, message)
        return result.passed

    def guard(self, case: str, compute: Callable[[], None]) -> None:
        """Run ``compute``; an engine error fails the case instead of aborting the suite."""
        try:
            compute()
        except VertexEngineError as exc:
            self.record(case, False, message=f"{type(exc).__name__}: {exc}")


# ---------------------------------------------------------------
# Sampling
# ---------------------------------------------------------------


def _rng(suite: str, config: EngineConfig) -> random.Random:
    return random.Random(f"{config.seed}:{suite}")


def _rationals(rng: random.Random, count: int, low: int, high: int, den: int = 7) -> list[Fraction]:
    """``count`` distinct rationals with denominator ``den`` in [low, high)."""
    return [Fraction(p, den) for p in rng.sample(range(low * den, high * den), count)]


def _pole_free(rng: random.Random, count: int, low: int, high: int) -> list[Fraction]:
    """Distinct rationals no two of which differ by 1, so every unit_a weight between them is finite."""
    while True:
        values = _rationals(rng, count, low, high)
        if all(abs(u - v) != 1 for u, v in itertools.combinations(values, 2)):
            return values


def _split_sample(rng: random.Random, *counts: int, low: int = 0, high: int = 12) -> list[list[Fraction]]:
    """Pairwise distinct rapidities shared out into groups of the given sizes."""
    pool = _rationals(rng, sum(counts), low, high)
    out, start = [], 0
    for c in counts:
        out.append(pool[start: start + c])
        start += c
    return out


def _auxiliary_quantum(rng: random.Random, n_aux: int, n_quantum: int) -> tuple[list, list]:
    """Auxiliary rapidities in [5, 10) and quantum ones in [0, 3): no unit_a pole between the two sets."""
    return _rationals(rng, n_aux, 5, 10), _rationals(rng, n_quantum, 0, 3)


# ---------------------------------------------------------------
# Model
# ---------------------------------------------------------------


def suite_ybe(options: SuiteOptions, config: EngineConfig, rec: Recorder) -> None:
    """Yang-Baxter residuals: rational ranks 1..max(rank, 3) exactly, trigonometric ranks 1..min(rank, 2) in floats."""
    rng = _rng(rec.suite, config)
    for n in range(1, max(options.rank, 3) + 1):
        params = ModelParams(rank=n)
        rec.equal(f"nonzero/n={n}", Fraction(nonzero_count(params)), Fraction((n + 1) * (2 * n + 1)))
        for s in range(options.samples):
            x, y, z = _pole_free(rng, 3, 0, 10)
            case = f"rational/n={n}/sample={s}"
            rec.guard(case, lambda: rec.equal(case, ybe_residual(params, Normalization.UNIT_A, x, y, z), Fraction(0)))
    for n in range(1, min(options.rank, 2) + 1):
        params = ModelParams(ModelKind.TRIGONOMETRIC, n, GAMMA)
        for s in range(options.samples):
            x, y, z = _rationals(rng, 3, 0, 3)
            case = f"trigonometric/n={n}/sample={s}"
            rec.guard(case, lambda: _small(rec, case, ybe_residual(params, Normalization.UNIT_A, x, y, z)))


def _small(rec: Recorder, case: str, residual) -> bool:
    bound = mp.mpf(2) ** (-rec.float_bits)
    return rec.record(case, abs(residual) <= bound, {"residual": residual})


def suite_weight_identity(options: SuiteOptions, config: EngineConfig, rec: Recorder) -> None:
    """a = b+ + c+ = b- + c- in unit_a, exactly for the rational weights and to float_bits for the trigonometric ones."""
    rng = _rng(rec.suite, config)
    tables = {
        "rational": weight_table(ModelParams(), Normalization.UNIT_A),
        "trigonometric": weight_table(ModelParams(ModelKind.TRIGONOMETRIC, 1, GAMMA), Normalization.UNIT_A),
    }
    for label, table in tables.items():
        for s in range(options.samples):
            x, y = _pole_free(rng, 2, 0, 10)
            case = f"{label}/sample={s}"

            def check():
                a = table.weight(VertexKind.A, x, y)
                plus = table.weight(VertexKind.B_PLUS, x, y) + table.weight(VertexKind.C_PLUS, x, y)
                minus = table.weight(VertexKind.B_MINUS, x, y) + table.weight(VertexKind.C_MINUS, x, y)
                rec.equal(case + "/plus", a, plus, ("a", "b+c+"))
                rec.equal(case + "/minus", a, minus, ("a", "b-c-"))

            rec.guard(case, check)


# ---------------------------------------------------------------
# Domain walls
# ---------------------------------------------------------------


def suite_dwpf_determinant(options: SuiteOptions, config: EngineConfig, rec: Recorder) -> None:
    rng = _rng(rec.suite, config)
    rec.equal("instance/x=2,3/y=0,1", dwpf([2, 3], [0, 1], method=Method.ENUMERATION).value, Fraction(1, 6))
    for n in range(1, options.max_size + 1):
        for s in range(options.samples):
            xs, ys = _auxiliary_quantum(rng, n, n)
            case = f"rational/N={n}/sample={s}"
            rec.guard(
                case,
                lambda: rec.equal(
                    case,
                    dwpf_ik(xs, ys).value,
                    dwpf(xs, ys, method=Method.ENUMERATION).value,
                    ("determinant", "enumeration"),
                ),
            )
    trig = ModelParams(ModelKind.TRIGONOMETRIC, 1, GAMMA)
    for n in range(1, min(options.max_size, 3) + 1):
        for s in range(options.samples):
            xs, ys = _auxiliary_quantum(rng, n, n)
            case = f"trigonometric/N={n}/sample={s}"
            rec.guard(
                case,
                lambda: rec.equal(
                    case,
                    dwpf_ik_trig(xs, ys, GAMMA).value,
                    dwpf(xs, ys, params=trig, method=Method.ENUMERATION).value,
                    ("determinant", "enumeration"),
                ),
            )


def suite_dwpf_properties(options: SuiteOptions, config: EngineConfig, rec: Recorder) -> None:
    """Degree bound in x_N, symmetry in {y}, the x_N = y_N recursion and the 1x1 value."""
    rng = _rng(rec.suite, config)
    for s in range(options.samples):
        (x,), (y,) = _auxiliary_quantum(rng, 1, 1)
        rec.equal(f"initial/sample={s}", dwpf([x], [y]).value, 1 / (x - y + 1), ("lattice", "c-"))

    for n in range(2, min(options.max_size, 4) + 1):
        for s in range(options.samples):
            xs, ys = _auxiliary_quantum(rng, n, n)

            def degree():
                points = []
                for k in range(n + 1):
                    trial = xs[:-1] + [Fraction(20 + k)]
                    value = dwpf(trial, ys).value
                    for xi in trial:
                        for yj in ys:
                            value *= xi - yj + 1
                    points.append((trial[-1], value))
                top = interpolate(points).coefficient(n)
                rec.equal(f"degree/N={n}/sample={s}", top, Fraction(0), ("coefficient", "zero"))

            def symmetry():
                base = dwpf(xs, ys).value
                for j in range(n - 1):
                    swapped = ys[:j] + [ys[j + 1], ys[j]] + ys[j + 2:]
                    rec.equal(f"symmetry/N={n}/sample={s}/swap={j}", dwpf(xs, swapped).value, base)

            def recursion():
                pinned = xs[:-1] + [ys[-1]]
                rec.equal(f"recursion/N={n}/sample={s}", dwpf(pinned, ys).value, dwpf(xs[:-1], ys[:-1]).value)

            for name, check in (("degree", degree), ("symmetry", symmetry), ("recursion", recursion)):
                rec.guard(f"{name}/N={n}/sample={s}", check)


def suite_lemma1(options: SuiteOptions, config: EngineConfig, rec: Recorder) -> None:
    """Top and right edges summed over every colour give 1, for every left and bottom colouring."""
    rng = _rng(rec.suite, config)
    params = ModelParams(rank=options.rank)
    for rows, cols in itertools.product(range(1, options.max_size + 1), repeat=2):
        for s in range(options.samples):
            xs, ys = _auxiliary_quantum(rng, rows, cols)
            bad = []
            count = 0
            for colours in itertools.product(params.colours, repeat=rows + cols):
                value = trivial_pf(xs, ys, colours[:rows], colours[rows:], params).value
                count += 1
                if value != 1:
                    bad.append((colours, value))
            case = f"{rows}x{cols}/n={options.rank}/sample={s}"
            message = "" if not bad else f"first failure at colours {bad[0][0]}: {format_scalar(bad[0][1])}"
            rec.record(case, not bad, {"assignments": str(count), "failures": str(len(bad))}, message)


def _colour_vectors(rank: int, length: int) -> Iterator[tuple[int, ...]]:
    return itertools.product(range(1, rank + 1), repeat=length)


def suite_lemma2(options: SuiteOptions, config: EngineConfig, rec: Recorder) -> None:
    rng = _rng(rec.suite, config)
    params = ModelParams(rank=options.rank)
    for n in range(1, options.max_size + 1):
        for s in range(options.samples):
            xs, ys = _auxiliary_quantum(rng, n, n)
            plain = dwpf(xs, ys).value
            for colours in _colour_vectors(options.rank, n):
                case = f"N={n}/sample={s}/colours={''.join(map(str, colours))}"
                rec.guard(case, lambda: rec.equal(case, coloured_dwpf(xs, ys, colours, params).value, plain))


def suite_lemma3(options: SuiteOptions, config: EngineConfig, rec: Recorder) -> None:
    rng = _rng(rec.suite, config)
    params = ModelParams(rank=options.rank)
    for n in range(1, min(options.max_size, 2) + 1):
        for length in range(n, min(options.max_size + 1, 4) + 1):
            for m in range(n + 1):
                for s in range(options.samples):
                    aux, ys = _auxiliary_quantum(rng, n + m, length)
                    xs, bs = aux[:n], aux[n:]
                    plain = scalar_product(xs, bs, ys).value
                    for colours in _colour_vectors(options.rank, n):
                        case = f"N={n}/L={length}/m={m}/sample={s}/colours={''.join(map(str, colours))}"
                        rec.guard(
                            case,
                            lambda: rec.equal(case, coloured_scalar_product(xs, bs, ys, colours, params).value, plain),
                        )


# ---------------------------------------------------------------
# Scalar products
# ---------------------------------------------------------------


def suite_slavnov(options: SuiteOptions, config: EngineConfig, rec: Recorder) -> None:
    """On-shell Slavnov determinants against lattice enumeration, plus the m=0 reduction."""
    ys = [Fraction(0), Fraction(2)]
    xs = [Fraction(3)]

    def exact_instance():
        system = solve(Variant.A1_FUNDAMENTAL, ys=ys, counts=(1,), config=config)
        (root,) = system.solutions[0]
        rec.equal("instance/root", root, Fraction(1, 2), ("solver", "expected"))
        det_value = slavnov(xs, [root], ys).value
        rec.equal("instance/slavnov", det_value, Fraction(-1, 4), ("determinant", "expected"))
        rec.equal("instance/enumeration", scalar_product(xs, [root], ys, method=Method.ENUMERATION).value, det_value)
        off_shell = slavnov(xs, [Fraction(4)], ys).value
        rec.record("instance/off-shell", off_shell != scalar_product(xs, [4], ys).value, {"slavnov": off_shell})

    rec.guard("instance", exact_instance)

    def irrational_instance():
        quantum = [Fraction(0), Fraction(1), Fraction(3), Fraction(6)]
        free = [Fraction(9, 2), Fraction(13, 2)]
        with config.float_context():
            system = solve(Variant.A1_FUNDAMENTAL, ys=quantum, counts=(2,), config=config)
            roots_found = [b for roots in system.solutions for b in roots]
            rec.record(
                "coupled/irrational",
                bool(roots_found) and not any(is_exact(b) for b in roots_found),
                {f"b{k + 1}": b for k, b in enumerate(roots_found)},
            )
            for k, roots in enumerate(system.solutions):
                rec.equal(
                    f"coupled/solution={k}",
                    slavnov(free, list(roots), quantum).value,
                    scalar_product(free, list(roots), quantum, method=Method.ENUMERATION).value,
                    ("determinant", "enumeration"),
                    bits=config.tolerance_bits,
                )

    rec.guard("coupled", irrational_instance)

    rng = _rng(rec.suite, config)
    for n in range(1, min(options.max_size, 3) + 1):
        for s in range(options.samples):
            xs_r, ys_r = _auxiliary_quantum(rng, n, n + 1)
            case = f"frozen-block/N={n}/L={n + 1}/sample={s}"
            rec.guard(
                case,
                lambda: rec.equal(case, scalar_product(xs_r, [], ys_r).value, frozen_block_reduction(xs_r, ys_r).value),
            )


def suite_scalar_product_properties(options: SuiteOptions, config: EngineConfig, rec: Recorder) -> None:
    """Restricted scalar products: degree bound in b_m, symmetry in y_{N-m+1}..y_L, the b_m = y_{N-m+1} recursion."""
    rng = _rng(rec.suite, config)
    for n in range(1, min(options.max_size, 3) + 1):
        for length in (n, n + 1):
            for m in range(1, n + 1):
                for s in range(options.samples):
                    xs, bs = _split_sample(rng, n, m, low=5, high=10)
                    ys = _pole_free(rng, length, 0, 3)
                    tag = f"N={n}/L={length}/m={m}/sample={s}"
                    bound = length - n + m - 1

                    def degree():
                        points = []
                        for k in range(bound + 2):
                            b = Fraction(20 + k)
                            value = scalar_product(xs, bs[:-1] + [b], ys).value
                            for y in ys[n - m:]:
                                value *= b - y + 1
                            points.append((b, value))
                        top = interpolate(points).coefficient(bound + 1)
                        rec.equal(f"degree/{tag}", top, Fraction(0), ("coefficient", "zero"))

                    def symmetry():
                        base = scalar_product(xs, bs, ys).value
                        for j in range(n - m, length - 1):
                            swapped = ys[:j] + [ys[j + 1], ys[j]] + ys[j + 2:]
                            rec.equal(f"symmetry/{tag}/swap={j}", scalar_product(xs, bs, swapped).value, base)

                    def recursion():
                        pinned = bs[:-1] + [ys[n - m]]
                        rec.equal(
                            f"recursion/{tag}",
                            scalar_product(xs, pinned, ys).value,
                            scalar_product(xs, bs[:-1], ys).value,
                        )

                    for name, check in (("degree", degree), ("symmetry", symmetry), ("recursion", recursion)):
                        rec.guard(f"{name}/{tag}", check)


def suite_appendix_a(options: SuiteOptions, config: EngineConfig, rec: Recorder) -> None:
    rng = _rng(rec.suite, config)
    rec.equal("instance/pdwpf", pdwpf([3], [0, 1], method=Method.ENUMERATION).value, Fraction(1))
    rec.equal("instance/ik-sum", ik_sum([3], [4], [0, 2]).value, Fraction(19, 24))
    for n in range(1, min(options.max_size, 3) + 1):
        for length in range(n, min(n + 2, 5) + 1):
            for s in range(options.samples):
                xs, ys = _auxiliary_quantum(rng, n, length)
                case = f"pdwpf/N={n}/L={length}/sample={s}"
                rec.guard(case, lambda: rec.equal(case, pdwpf_det(xs, ys).value, pdwpf(xs, ys).value, ("determinant", "lattice")))
    for n in range(1, min(options.max_size, 2) + 1):
        for length in range(n, 4):
            for s in range(options.samples):
                aux, ys = _auxiliary_quantum(rng, 2 * n, length)
                xs, bs = aux[:n], aux[n:]
                case = f"ik-sum/N={n}/L={length}/sample={s}"
                rec.guard(
                    case,
                    lambda: rec.equal(
                        case,
                        ik_sum(xs, bs, ys).value,
                        scalar_product(xs, bs, ys, norm=Normalization.UNIT_B).value,
                        ("sum", "lattice"),
                    ),
                )


# ---------------------------------------------------------------
# A2
# ---------------------------------------------------------------


def _a2_shapes():
    for ell, m in itertools.product((0, 1), repeat=2):
        for length in range(0, 3):
            for big_m in range(0, 2):
                if ell + m <= length + big_m and ell + m > 0:
                    yield ell, m, length, big_m


def suite_a2_degenerations(options: SuiteOptions, config: EngineConfig, rec: Recorder) -> None:
    """Both layouts agree, and each degeneration's signed sum matches its sequential limit."""
    rng = _rng(rec.suite, config)
    for ell, m, length, big_m in _a2_shapes():
        shape = f"l={ell}/m={m}/L={length}/M={big_m}"
        for s in range(options.samples):
            x2s, x1s, b1s, b2s, ys, zs = _split_sample(rng, m, ell, ell, m, length, big_m)
            spec = A2Spec(x2s, x1s, b1s, b2s, ys, zs)

            def layouts_agree():
                first = a2_scalar_product(spec).value
                second = a2_scalar_product(A2Spec(x2s, x1s, b1s, b2s, ys, zs, Layout.FIG1B)).value
                rec.equal(f"layouts/{shape}/sample={s}", first, second, ("fig1a", "fig1b"))

            def b2_limit():
                value = degenerate_b2(x2s, x1s, b1s, ys, zs, Method.ALL, config)
                rec.equal(f"b2/{shape}/sample={s}", value.detail["signed_sum"], value.detail["limit"], ("signed_sum", "limit"))

            def b1_limit():
                value = degenerate_b1(x2s, x1s, b2s, ys, zs, Method.ALL, config)
                rec.equal(f"b1/{shape}/sample={s}", value.detail["signed_sum"], value.detail["limit"], ("signed_sum", "limit"))

            rec.guard(f"layouts/{shape}/sample={s}", layouts_agree)
            rec.guard(f"b2/{shape}/sample={s}", b2_limit)
            rec.guard(f"b1/{shape}/sample={s}", b1_limit)


def suite_factorizations(options: SuiteOptions, config: EngineConfig, rec: Recorder) -> None:
    """Determinant forms of both degenerations at on-shell roots, and the mixed scalar products behind them."""

    def first():
        ys, zs, x1s, x2s = [0, 2], [7], [3], [4]
        system = solve(Variant.A1_FUNDAMENTAL, ys=ys, counts=(1,), config=config)
        b1s = list(system.solutions[0])
        determinant = fact1(x2s, x1s, b1s, ys, zs).value
        rec.equal("fact1/value", determinant, Fraction(-4, 9), ("determinant", "expected"))
        rec.equal("fact1/degeneration", determinant, degenerate_b2(x2s, x1s, b1s, ys, zs, Method.ALL, config).value)

    def second():
        ys, zs, x1s, x2s = [0, 1], [7, 3], [3], [5]
        system = solve(Variant.A1_ANTIFUNDAMENTAL, zs=zs, counts=(1,), config=config)
        b2s = list(system.solutions[0])
        determinant = fact2(x2s, x1s, b2s, ys, zs).value
        rec.equal("fact2/value", determinant, Fraction(1, 4), ("determinant", "expected"))
        rec.equal("fact2/degeneration", determinant, degenerate_b1(x2s, x1s, b2s, ys, zs, Method.ALL, config).value)

    rec.guard("fact1", first)
    rec.guard("fact2", second)

    rng = _rng(rec.suite, config)
    for kind, form in (("x1z", PartialForm.FIRST), ("yx2", PartialForm.SECOND)):
        for n in range(1, min(options.max_size, 2) + 1):
            for s in range(options.samples):
                rows, bs, ups, downs = _split_sample(rng, n, n, n, 1)
                case = f"mixed/{kind}/N={n}/sample={s}"

                def check():
                    lattice = evaluate(layouts.mixed_scalar_product_lattice(kind, rows, bs, ups, downs)).value
                    rec.equal(case + "/sum", mixed_ik_sum(rows, bs, ups, downs).value, lattice, ("sum", "lattice"))
                    rec.equal(
                        case + "/limit",
                        mixed_scalar_product_limit(kind, rows, ups, downs, config).value,
                        partial_det(rows, ups, downs, form).value,
                        ("limit", "determinant"),
                    )

                rec.guard(case, check)


def suite_lemma5_7(options: SuiteOptions, config: EngineConfig, rec: Recorder) -> None:
    """Colour-invariance with signs for every admissible fixed colouring at l = m = 1, L = 2, M = 1."""
    rng = _rng(rec.suite, config)
    ell, m, length, big_m = 1, 1, 2, 1
    for s in range(options.samples):
        x2s, x1s, b1s, b2s, ys, zs = _split_sample(rng, m, ell, ell, m, length, big_m)
        a1 = scalar_product(x1s, b1s, ys, norm=Normalization.UNIT_B).value
        for ins in itertools.product((1, 2), repeat=ell):
            for outs in itertools.product((1, 2), repeat=big_m):
                if ins.count(2) + outs.count(1) != m:
                    continue
                case = f"b2/sample={s}/x1={''.join(map(str, ins))}/z={''.join(map(str, outs))}"
                sign = (-1) ** outs.count(1)
                rec.guard(
                    case,
                    lambda: rec.equal(
                        case,
                        evaluate(layouts.colour_invariance_b2_lattice(x1s, b1s, ys, zs, ins, outs)).value,
                        sign * a1,
                        ("coloured", "signed A1"),
                    ),
                )
        anti = evaluate(layouts.antifundamental_scalar_product_lattice(x2s, b2s, zs)).value
        for outs in itertools.product((0, 1), repeat=m):
            for ins in itertools.product((0, 1), repeat=length):
                if outs.count(0) + ins.count(1) != ell:
                    continue
                case = f"b1/sample={s}/x2={''.join(map(str, outs))}/y={''.join(map(str, ins))}"
                sign = (-1) ** outs.count(0)
                rec.guard(
                    case,
                    lambda: rec.equal(
                        case,
                        evaluate(layouts.colour_invariance_b1_lattice(x2s, b2s, ys, zs, outs, ins)).value,
                        sign * anti,
                        ("coloured", "signed anti-fundamental"),
                    ),
                )


# ---------------------------------------------------------------
# Registry
# ---------------------------------------------------------------

SUITES: dict[str, Callable[[SuiteOptions, EngineConfig, Recorder], None]] = {
    "ybe": suite_ybe,
    "weight-identity": suite_weight_identity,
    "dwpf-determinant": suite_dwpf_determinant,
    "dwpf-properties": suite_dwpf_properties,
    "lemma1": suite_lemma1,
    "lemma2": suite_lemma2,
    "lemma3": suite_lemma3,
    "slavnov": suite_slavnov,
    "scalar-product-properties": suite_scalar_product_properties,
    "appendix-a": suite_appendix_a,
    "a2-degenerations": suite_a2_degenerations,
    "factorizations": suite_factorizations,
    "lemma5-7": suite_lemma5_7,
}


def run_suite(name: str, options: SuiteOptions = SuiteOptions(), config: EngineConfig = DEFAULT_CONFIG) -> dict:
    """Run one suite (or ``"all"``) and return its report.

    Examples
    --------
    >>> run_suite("lemma1", SuiteOptions(max_size=1, rank=1, samples=1))["status"]
    'ok'
    """
    names = list(SUITES) if name == "all" else [name]
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise InputError(f"Unknown suite {unknown[0]!r}; expected one of {sorted(SUITES)} or 'all'")
    cases: list[CaseResult] = []
    with config.float_context():
        for suite in names:
            rec = Recorder(suite, config)
            SUITES[suite](options, config, rec)
            cases.extend(rec.cases)
    failed = [c for c in cases if not c.passed]
    return {
        "status": "ok" if not failed else "error",
        "suite": name,
        "options": {"max_size": options.max_size, "rank": options.rank, "samples": options.samples},
        "passed": len(cases) - len(failed),
        "failed": len(failed),
        "cases": [c.to_payload() for c in cases],
    }
