import pytest

from colour_vertex.config import EngineConfig
from colour_vertex.errors import InputError
from colour_vertex.verify.suites import SUITES, Recorder, SuiteOptions, run_suite

SMALL = SuiteOptions(max_size=2, rank=2, samples=1)


@pytest.mark.parametrize(
    "suite",
    [
        "ybe",
        "weight-identity",
        "dwpf-determinant",
        "dwpf-properties",
        "lemma2",
        "lemma3",
        "scalar-product-properties",
        "appendix-a",
        "lemma5-7",
    ],
)
def test_small_suites_pass(config, suite):
    report = run_suite(suite, SMALL, config)
    assert report["status"] == "ok", [c for c in report["cases"] if not c["passed"]]
    assert report["passed"] > 0
    assert all(c["case"].startswith(f"{suite}/") for c in report["cases"])


def test_lemma1_reports_every_value_as_one(config):
    report = run_suite("lemma1", SuiteOptions(max_size=2, rank=2, samples=1), config)
    assert report["status"] == "ok"
    assert report["failed"] == 0


def test_factorizations_suite(config):
    report = run_suite("factorizations", SuiteOptions(max_size=1, rank=2, samples=1), config)
    assert report["status"] == "ok", [c for c in report["cases"] if not c["passed"]]
    values = {c["case"]: c["values"] for c in report["cases"]}
    assert values["factorizations/fact1/value"]["determinant"] == "-4/9"
    assert values["factorizations/fact2/value"]["determinant"] == "1/4"


@pytest.mark.slow
def test_slavnov_suite(config):
    assert run_suite("slavnov", SMALL, config)["status"] == "ok"


@pytest.mark.slow
def test_a2_degenerations_suite(config):
    assert run_suite("a2-degenerations", SMALL, config)["status"] == "ok"


@pytest.mark.slow
def test_acceptance_sizes():
    report = run_suite("all", SuiteOptions(max_size=3, rank=2, samples=3), EngineConfig())
    assert report["status"] == "ok", [c["case"] for c in report["cases"] if not c["passed"]]


def test_reports_are_deterministic(config):
    assert run_suite("appendix-a", SMALL, config) == run_suite("appendix-a", SMALL, config)


def test_unknown_suite_and_bad_options():
    with pytest.raises(InputError):
        run_suite("lemma4")
    with pytest.raises(InputError):
        SuiteOptions(max_size=0)
    assert "all" not in SUITES


def test_recorder_turns_engine_errors_into_failed_cases(config):
    rec = Recorder("demo", config)

    def explode():
        raise InputError("bad input")

    rec.guard("case", explode)
    assert [c.to_payload() for c in rec.cases] == [
        {"case": "demo/case", "passed": False, "values": {}, "message": "InputError: bad input"}
    ]


def test_scalar_product_properties_report_every_property(config):
    report = run_suite("scalar-product-properties", SMALL, config)
    assert {c["case"].split("/")[1] for c in report["cases"]} == {"degree", "symmetry", "recursion"}
