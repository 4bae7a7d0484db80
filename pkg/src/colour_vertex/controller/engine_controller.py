import logging
from dataclasses import replace
from typing import Callable, Mapping

from colour_vertex.a2.degeneration import A2Spec, a2_scalar_product, degenerate_b1, degenerate_b2, mixed_scalar_product_limit
from colour_vertex.a2.factorization import PartialForm, fact1, fact2, mixed_ik_sum, partial_det
from colour_vertex.a2.layouts import mixed_scalar_product_lattice
from colour_vertex.algebra.polynomial import Polynomial, limit_at_infinity
from colour_vertex.algebra.scalars import as_scalar, as_scalars, format_scalar, is_exact, to_float
from colour_vertex.bethe.equations import BetheSystem, Variant, residual
from colour_vertex.bethe.solver import solve
from colour_vertex.config import DEFAULT_CONFIG, EngineConfig, Method
from colour_vertex.errors import (
    InputError,
    LimitDivergence,
    PoleError,
    SampleCollision,
    SearchExhausted,
    VerificationFailure,
    VertexEngineError,
)
from colour_vertex.lattice.evaluate import PartitionValue, agree, evaluate
from colour_vertex.lattice.spec import lattice_from_payload
from colour_vertex.model.weights import ModelKind, ModelParams, Normalization
from colour_vertex.model.yang_baxter import ybe_residual
from colour_vertex.partition.dwpf import coloured_dwpf, dwpf, dwpf_ik, dwpf_ik_trig, pdwpf, pdwpf_det
from colour_vertex.partition.scalar_product import (
    coloured_scalar_product,
    frozen_block_reduction,
    ik_sum,
    scalar_product,
    slavnov,
)
from colour_vertex.verify.suites import SuiteOptions, run_suite

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2

LATTICE_METHODS = (Method.ENUMERATION, Method.DP)


class EngineController:
    """Dispatch verbs with JSON-shaped payloads to the engine and build report dictionaries.

    Every report carries ``status`` (``"ok"`` or ``"error"``), the ``verb``, the
    echoed ``input`` and either a ``result`` or a ``message``.

    Examples
    --------
    >>> EngineController().run("dwpf", {"xs": [2, 3], "ys": [0, 1]})[1]["result"]["value"]
    '1/6'
    """

    def __init__(self, config: EngineConfig = DEFAULT_CONFIG):
        self.config = config
        self._handlers: dict[str, Callable[[Mapping, Method], dict]] = {
            "ybe-check": self._ybe_check,
            "dwpf": self._dwpf,
            "pdwpf": self._pdwpf,
            "scalar-product": self._scalar_product,
            "slavnov": self._slavnov,
            "ik-sum": self._ik_sum,
            "coloured": self._coloured,
            "bethe-solve": self._bethe_solve,
            "a2": self._a2,
            "limit": self._limit,
            "lattice": self._lattice,
            "verify": self._verify,
        }

    @property
    def verbs(self) -> list[str]:
        return list(self._handlers)

    # ---------------------------------------------------------------
    # Main entrypoint
    # ---------------------------------------------------------------

    def execute(self, verb: str, payload: Mapping, method: Method | str | None = None) -> dict:
        """Run one verb and return its result dictionary; engine errors propagate."""
        if verb not in self._handlers:
            raise InputError(f"Unknown verb {verb!r}; expected one of {self.verbs}")
        if not isinstance(payload, Mapping):
            raise InputError(f"Input must be a JSON object, got {type(payload).__name__}")
        chosen = Method(method or payload.get("method") or self.config.method)
        log.debug("running %s with method %s", verb, chosen.value)
        with self.config.float_context():
            return self._handlers[verb](payload, chosen)

    def run(self, verb: str, payload: Mapping, method: Method | str | None = None) -> tuple[int, dict]:
        """Like :meth:`execute`, but map every outcome to an exit code and a report."""
        report = {"verb": verb, "input": dict(payload) if isinstance(payload, Mapping) else payload}
        try:
            result = self.execute(verb, payload, method)
        except VerificationFailure as exc:
            values = {k: format_scalar(v) for k, v in exc.values.items()}
            return EXIT_VERIFICATION, {"status": "error", **report, "message": str(exc), "values": values}
        except (InputError, PoleError, LimitDivergence, SampleCollision, SearchExhausted) as exc:
            extra = {"stats": exc.stats} if isinstance(exc, SearchExhausted) else {}
            return EXIT_INPUT, {"status": "error", **report, "error": type(exc).__name__, "message": str(exc), **extra}
        except VertexEngineError as exc:
            return EXIT_INPUT, {"status": "error", **report, "error": type(exc).__name__, "message": str(exc)}
        except ValueError as exc:
            return EXIT_INPUT, {"status": "error", **report, "error": "InputError", "message": str(exc)}
        if result.get("status") == "error":
            return EXIT_VERIFICATION, {**result, **report}
        return EXIT_OK, {"status": "ok", **report, "result": result}

    # ---------------------------------------------------------------
    # Helpers
    # ---------------------------------------------------------------

    @staticmethod
    def _field(payload: Mapping, name: str, default=None):
        if name in payload:
            return payload[name]
        if default is not None:
            return default
        raise InputError(f"Missing field {name!r}")

    @staticmethod
    def _params(payload: Mapping) -> ModelParams:
        return ModelParams.from_payload(payload.get("model", {}))

    @staticmethod
    def _norm(payload: Mapping, default: Normalization = Normalization.UNIT_A) -> Normalization:
        return Normalization(payload.get("norm", default))

    @staticmethod
    def _compare(primary: PartitionValue, others: Mapping[str, object]) -> dict:
        """Result payload of ``primary`` plus the other values; raise when any of them disagrees."""
        payload = primary.to_payload()
        for label, value in others.items():
            if not agree(primary.value, value):
                raise VerificationFailure(
                    f"{primary.provenance.value} value {format_scalar(primary.value)} and {label} value "
                    f"{format_scalar(value)} disagree",
                    {primary.provenance.value: primary.value, label: value},
                )
            payload.setdefault("detail", {})[label] = format_scalar(value)
        return payload

    @staticmethod
    def _difference(a, b) -> str:
        if is_exact(a) and is_exact(b):
            return format_scalar(a - b)
        return format_scalar(abs(to_float(a) - to_float(b)))

    # ---------------------------------------------------------------
    # Verbs
    # ---------------------------------------------------------------

    def _ybe_check(self, payload: Mapping, method: Method) -> dict:
        params = self._params(payload)
        x, y, z = (as_scalar(self._field(payload, k)) for k in ("x", "y", "z"))
        value = ybe_residual(params, self._norm(payload), x, y, z)
        return {"residual": format_scalar(value), "model": params.to_payload()}

    def _dwpf(self, payload: Mapping, method: Method) -> dict:
        xs, ys = as_scalars(self._field(payload, "xs")), as_scalars(self._field(payload, "ys"))
        params, norm = self._params(payload), self._norm(payload)

        def determinant() -> PartitionValue:
            if params.kind is ModelKind.TRIGONOMETRIC:
                return dwpf_ik_trig(xs, ys, params.gamma)
            return dwpf_ik(xs, ys, norm)

        if method is Method.DETERMINANT:
            return determinant().to_payload()
        if method in LATTICE_METHODS:
            return dwpf(xs, ys, params, norm, method).to_payload()
        if method is Method.ALL:
            lattice = dwpf(xs, ys, params, norm, Method.ALL)
            return self._compare(lattice, {"determinant": determinant().value, "dp": lattice.detail["dp"]})
        raise InputError(f"dwpf supports enumeration, dp, determinant or all, not {method.value}")

    def _pdwpf(self, payload: Mapping, method: Method) -> dict:
        xs, ys = as_scalars(self._field(payload, "xs")), as_scalars(self._field(payload, "ys"))
        if method is Method.DETERMINANT:
            return pdwpf_det(xs, ys).to_payload()
        if method in LATTICE_METHODS:
            return pdwpf(xs, ys, method).to_payload()
        if method is Method.ALL:
            lattice = pdwpf(xs, ys, Method.ALL)
            return self._compare(lattice, {"determinant": pdwpf_det(xs, ys).value, "dp": lattice.detail["dp"]})
        raise InputError(f"pdwpf supports enumeration, dp, determinant or all, not {method.value}")

    def _scalar_product(self, payload: Mapping, method: Method) -> dict:
        xs, bs, ys = (as_scalars(self._field(payload, k)) for k in ("xs", "bs", "ys"))
        norm = self._norm(payload)

        def determinant() -> PartitionValue:
            if not bs and norm is Normalization.UNIT_A:
                return frozen_block_reduction(xs, ys)
            if norm is Normalization.UNIT_B and len(bs) == len(xs):
                return ik_sum(xs, bs, ys)
            raise InputError("A closed form exists for m=0 (unit_a) and for the full unit_b scalar product only")

        if method is Method.DETERMINANT:
            return determinant().to_payload()
        if method in LATTICE_METHODS:
            return scalar_product(xs, bs, ys, norm, method).to_payload()
        if method is Method.ALL:
            lattice = scalar_product(xs, bs, ys, norm, Method.ALL)
            others = {"dp": lattice.detail["dp"]}
            try:
                others["determinant"] = determinant().value
            except InputError:
                pass
            return self._compare(lattice, others)
        raise InputError(f"scalar-product supports enumeration, dp, determinant or all, not {method.value}")

    def _slavnov(self, payload: Mapping, method: Method) -> dict:
        xs, bs, ys = (as_scalars(self._field(payload, k)) for k in ("xs", "bs", "ys"))
        norm = self._norm(payload)
        value = slavnov(xs, bs, ys, norm)
        result = value.to_payload()
        system = BetheSystem(Variant.A1_FUNDAMENTAL, ys=ys, counts=(len(bs),))
        result["bethe_residuals"] = [format_scalar(r) for r in residual(system, bs)]
        if method is Method.ALL or method in LATTICE_METHODS:
            lattice = scalar_product(xs, bs, ys, norm, Method.DP if method is Method.ALL else method).value
            result["lattice"] = format_scalar(lattice)
            result["difference"] = self._difference(value.value, lattice)
        return result

    def _ik_sum(self, payload: Mapping, method: Method) -> dict:
        xs, bs, ys = (as_scalars(self._field(payload, k)) for k in ("xs", "bs", "ys"))
        lattice_method = method if method in LATTICE_METHODS else Method.DP
        value = ik_sum(xs, bs, ys, lattice_method)
        if method is Method.ALL:
            return self._compare(value, {"lattice": scalar_product(xs, bs, ys, Normalization.UNIT_B).value})
        return value.to_payload()

    def _coloured(self, payload: Mapping, method: Method) -> dict:
        xs, ys = as_scalars(self._field(payload, "xs")), as_scalars(self._field(payload, "ys"))
        colours = [int(c) for c in self._field(payload, "colours")]
        params = self._params(payload)
        if "model" not in payload:
            params = params.with_rank(max(colours, default=1))
        norm = self._norm(payload)
        lattice_method = method if method in LATTICE_METHODS else Method.DP
        if "bs" in payload:
            bs = as_scalars(payload["bs"])
            value = coloured_scalar_product(xs, bs, ys, colours, params, norm, lattice_method)
            plain = lambda: scalar_product(xs, bs, ys, norm).value  # noqa: E731
        else:
            value = coloured_dwpf(xs, ys, colours, params, norm, lattice_method)
            plain = lambda: dwpf(xs, ys, norm=norm).value  # noqa: E731
        if method is Method.ALL:
            return self._compare(value, {"uncoloured": plain()})
        return value.to_payload()

    def _bethe_solve(self, payload: Mapping, method: Method) -> dict:
        variant = Variant(self._field(payload, "variant"))
        counts = payload.get("counts", [1])
        config = self.config
        if "seed" in payload:
            config = replace(config, seed=int(payload["seed"]))
        system = solve(variant, payload.get("ys", []), payload.get("zs", []), counts, config)
        return system.to_payload()

    def _a2(self, payload: Mapping, method: Method) -> dict:
        operation = payload.get("operation", "scalar-product")
        get = lambda name: as_scalars(payload.get(name, []))  # noqa: E731
        if operation == "scalar-product":
            spec = A2Spec.from_payload(payload)
            if method is Method.ALL:
                first = a2_scalar_product(spec, Method.ALL)
                other = replace(spec, layout="fig1b" if spec.layout.value == "fig1a" else "fig1a")
                return self._compare(first, {other.layout.value: a2_scalar_product(other).value})
            return a2_scalar_product(spec, method).to_payload()
        if operation == "degenerate-b2":
            value = degenerate_b2(get("x2s"), get("x1s"), get("b1s"), get("ys"), get("zs"), method, self.config)
            return self._with_difference(value)
        if operation == "degenerate-b1":
            value = degenerate_b1(get("x2s"), get("x1s"), get("b2s"), get("ys"), get("zs"), method, self.config)
            return self._with_difference(value)
        if operation == "fact1":
            value = fact1(get("x2s"), get("x1s"), get("b1s"), get("ys"), get("zs"))
            if method is Method.ALL:
                limit = degenerate_b2(get("x2s"), get("x1s"), get("b1s"), get("ys"), get("zs"), Method.ALL, self.config)
                return self._compare(value, {"degeneration": limit.value})
            return value.to_payload()
        if operation == "fact2":
            value = fact2(get("x2s"), get("x1s"), get("b2s"), get("ys"), get("zs"))
            if method is Method.ALL:
                limit = degenerate_b1(get("x2s"), get("x1s"), get("b2s"), get("ys"), get("zs"), Method.ALL, self.config)
                return self._compare(value, {"degeneration": limit.value})
            return value.to_payload()
        if operation == "partial":
            form = PartialForm(payload.get("form", PartialForm.FIRST.value))
            return partial_det(get("xs"), get("raising"), get("lowering"), form).to_payload()
        if operation == "mixed":
            kind = payload.get("kind", "x1z")
            value = mixed_ik_sum(get("rows"), get("bs"), get("ups"), get("downs"))
            if method is Method.ALL:
                form = PartialForm.FIRST if kind == "x1z" else PartialForm.SECOND
                lattice = evaluate(mixed_scalar_product_lattice(kind, get("rows"), get("bs"), get("ups"), get("downs")))
                result = self._compare(value, {"lattice": lattice.value})
                limit = mixed_scalar_product_limit(kind, get("rows"), get("ups"), get("downs"), self.config)
                checked = self._compare(limit, {"partial": partial_det(get("rows"), get("ups"), get("downs"), form).value})
                result["limit"] = checked["value"]
                return result
            return value.to_payload()
        raise InputError(
            f"Unknown a2 operation {operation!r}; expected scalar-product, degenerate-b2, degenerate-b1, "
            "fact1, fact2, partial or mixed"
        )

    def _with_difference(self, value: PartitionValue) -> dict:
        result = value.to_payload()
        if "signed_sum" in value.detail and "limit" in value.detail:
            result["difference"] = self._difference(value.detail["signed_sum"], value.detail["limit"])
        return result

    def _limit(self, payload: Mapping, method: Method) -> dict:
        numerator = Polynomial(tuple(as_scalars(self._field(payload, "numerator"))))
        roots = as_scalars(self._field(payload, "denominator_roots"))

        def f(b):
            value = numerator(b)
            for r in roots:
                value = value / (b - r)
            return value

        value = limit_at_infinity(
            f,
            roots,
            start=payload.get("start", 1),
            step=payload.get("step", 1),
            retries=self.config.sample_retries,
        )
        return {"value": format_scalar(value), "provenance": Method.LIMIT.value}

    def _lattice(self, payload: Mapping, method: Method) -> dict:
        spec = lattice_from_payload(payload)
        if method not in (*LATTICE_METHODS, Method.ALL):
            raise InputError(f"Lattices are evaluated by enumeration, dp or all, not {method.value}")
        return evaluate(spec, method).to_payload()

    def _verify(self, payload: Mapping, method: Method) -> dict:
        options = SuiteOptions(
            max_size=int(payload.get("max_size", 3)),
            rank=int(payload.get("rank", 2)),
            samples=int(payload.get("samples", 3)),
        )
        return run_suite(payload.get("suite", "all"), options, self.config)
