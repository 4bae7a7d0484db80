from fractions import Fraction

import pytest
from mpmath import mp

from colour_vertex.config import Method
from colour_vertex.controller import engine_controller
from colour_vertex.controller.cli import VERBS
from colour_vertex.controller.engine_controller import EXIT_INPUT, EXIT_OK, EXIT_VERIFICATION
from colour_vertex.errors import InputError
from colour_vertex.lattice.evaluate import PartitionValue
from colour_vertex.model.weights import RATIONAL_A1, Normalization


def test_every_cli_verb_has_a_handler(controller):
    assert sorted(controller.verbs) == sorted(VERBS)


def test_dwpf_cross_checks_every_method(controller):
    code, report = controller.run("dwpf", {"xs": [2, 3], "ys": [0, 1]})
    assert code == EXIT_OK
    assert report["status"] == "ok"
    assert report["input"] == {"xs": [2, 3], "ys": [0, 1]}
    result = report["result"]
    assert result["value"] == "1/6"
    assert result["detail"]["determinant"] == result["detail"]["dp"] == "1/6"


def test_method_precedence(controller):
    payload = {"xs": [2, 3], "ys": [0, 1], "method": "dp"}
    assert controller.execute("dwpf", payload)["provenance"] == "dp"
    assert controller.execute("dwpf", payload, Method.DETERMINANT)["provenance"] == "determinant"


def test_disagreement_exits_with_verification_status(controller, monkeypatch):
    wrong = PartitionValue.of(Fraction(1, 5), Method.DETERMINANT, RATIONAL_A1, Normalization.UNIT_A)
    monkeypatch.setattr(engine_controller, "dwpf_ik", lambda xs, ys, norm: wrong)
    code, report = controller.run("dwpf", {"xs": [2, 3], "ys": [0, 1]})
    assert code == EXIT_VERIFICATION
    assert report["values"] == {"enumeration": "1/6", "determinant": "1/5"}


@pytest.mark.parametrize(
    "verb, payload, error",
    [
        ("dwpf", {"xs": [0], "ys": [1]}, "PoleError"),
        ("dwpf", {"xs": [2, 3]}, "InputError"),
        ("dwpf", {"xs": [2, 3], "ys": [0, 1], "method": "limit"}, "InputError"),
        ("limit", {"numerator": [1, 2], "denominator_roots": [0]}, "LimitDivergence"),
        ("bethe-solve", {"variant": "a3-nested"}, "InputError"),
        ("a2", {"operation": "fact3"}, "InputError"),
        ("nope", {}, "InputError"),
    ],
)
def test_input_problems_exit_with_input_status(controller, verb, payload, error):
    code, report = controller.run(verb, payload)
    assert code == EXIT_INPUT
    assert report["status"] == "error"
    assert report["error"] == error


def test_non_object_payload_is_rejected(controller):
    with pytest.raises(InputError):
        controller.execute("dwpf", [1, 2])


def test_ybe_check_reports_an_exact_zero(controller):
    result = controller.execute("ybe-check", {"x": 5, "y": 3, "z": 2, "model": {"rank": 3}})
    assert result["residual"] == "0/1"
    assert result["model"]["rank"] == 3


def test_scalar_product_and_slavnov(controller):
    assert controller.execute("scalar-product", {"xs": [3], "bs": [4], "ys": [0, 2]})["value"] == "19/120"
    assert controller.execute("ik-sum", {"xs": [3], "bs": [4], "ys": [0, 2]})["value"] == "19/24"
    result = controller.execute("slavnov", {"xs": [3], "bs": ["1/2"], "ys": [0, 2]})
    assert result["value"] == result["lattice"] == "-1/4"
    assert result["bethe_residuals"] == ["0/1"]
    assert result["difference"] == "0/1"


def test_coloured_defaults_the_rank_to_the_largest_colour(controller):
    result = controller.execute("coloured", {"xs": [9, 10], "ys": [0, 2], "colours": [2, 1]})
    assert result["model"]["rank"] == 2
    assert result["value"] == controller.execute("dwpf", {"xs": [9, 10], "ys": [0, 2]})["value"]


def test_bethe_solve(controller):
    result = controller.execute("bethe-solve", {"variant": "a1-fundamental", "ys": [0, 2]})
    assert result["status"] == "solved"
    assert result["solutions"][0]["roots"] == ["1/2"]


def test_a2_operations(controller):
    first = {"x2s": [4], "x1s": [3], "b1s": ["1/2"], "ys": [0, 2], "zs": [7]}
    fact1 = controller.execute("a2", {**first, "operation": "fact1"})
    assert fact1["value"] == fact1["detail"]["degeneration"] == "-4/9"
    degenerate = controller.execute("a2", {**first, "operation": "degenerate-b2"})
    assert degenerate["difference"] == "0/1"
    mixed = controller.execute("a2", {"operation": "mixed", "kind": "x1z", "rows": [2], "bs": [10], "ups": [0], "downs": [5]})
    assert mixed["value"] == "-1/30"
    assert mixed["limit"] == "1/6"
    partial = controller.execute("a2", {"operation": "partial", "xs": [4], "raising": [3], "lowering": [7]})
    assert partial["value"] == "2/3"


def test_limit_verb(controller):
    assert controller.execute("limit", {"numerator": [5], "denominator_roots": [2]})["value"] == "5/1"


def test_lattice_verb(controller):
    payload = {
        "rows": [{"rapidity": "2"}, {"rapidity": "3"}],
        "cols": [{"rapidity": "0"}, {"rapidity": "1"}],
        "boundary": {
            "left": [{"fixed": 1}, {"fixed": 1}],
            "right": [{"fixed": 0}, {"fixed": 0}],
            "bottom": [{"fixed": 0}, {"fixed": 0}],
            "top": [{"fixed": 1}, {"fixed": 1}],
        },
    }
    result = controller.execute("lattice", payload)
    assert result["value"] == result["detail"]["dp"] == "1/6"
    with pytest.raises(InputError):
        controller.execute("lattice", payload, Method.DETERMINANT)


def test_failed_suite_exits_with_verification_status(controller, monkeypatch):
    monkeypatch.setattr(engine_controller, "run_suite", lambda name, options, config: {"status": "error", "suite": name})
    code, report = controller.run("verify", {"suite": "lemma1"})
    assert code == EXIT_VERIFICATION
    assert report["suite"] == "lemma1"
    assert report["verb"] == "verify"


def test_root_finder_divergence_exits_with_input_status(controller, monkeypatch):
    def no_convergence(*args, **kwargs):
        raise mp.NoConvergence("polyroots failed to converge")

    monkeypatch.setattr(mp, "polyroots", no_convergence)
    # four sites make the cleared polynomial a cubic, which goes through polyroots
    code, report = controller.run("bethe-solve", {"variant": "a1-fundamental", "ys": [0, 1, 3, 6]})
    assert code == EXIT_INPUT
    assert report["error"] == "SearchExhausted"
    assert report["stats"] == {"method": "polyroots", "degree": 3}
