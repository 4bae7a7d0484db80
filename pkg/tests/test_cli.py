import json

import pytest

from colour_vertex.controller.cli import build_parser, main


@pytest.fixture
def write_input(tmp_path):
    def write(document, name="input.json"):
        path = tmp_path / name
        path.write_text(document if isinstance(document, str) else json.dumps(document), encoding="utf-8")
        return str(path)

    return write


def _report(path):
    return json.loads(open(path, encoding="utf-8").read())


def test_dwpf_writes_a_report(tmp_path, write_input):
    out = tmp_path / "report.json"
    code = main(["dwpf", "--input", write_input({"xs": [2, 3], "ys": [0, 1]}), "--output", str(out)])
    assert code == 0
    report = _report(out)
    assert report["status"] == "ok"
    assert report["result"]["value"] == "1/6"


def test_report_goes_to_stdout_by_default(write_input, capsys):
    assert main(["ybe-check", "-i", write_input({"x": 5, "y": 3, "z": 2, "model": {"rank": 3}})]) == 0
    assert json.loads(capsys.readouterr().out)["result"]["residual"] == "0/1"


def test_reports_are_byte_identical(tmp_path, write_input):
    source = write_input({"xs": [3], "bs": [4], "ys": [0, 2]})
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    main(["scalar-product", "-i", source, "-o", str(first)])
    main(["scalar-product", "-i", source, "-o", str(second)])
    assert first.read_bytes() == second.read_bytes()


def test_timing_is_opt_in(tmp_path, write_input):
    source = write_input({"xs": [2, 3], "ys": [0, 1]})
    plain, timed = tmp_path / "plain.json", tmp_path / "timed.json"
    main(["dwpf", "-i", source, "-o", str(plain)])
    main(["dwpf", "-i", source, "-o", str(timed), "--timing"])
    assert "timing_seconds" not in _report(plain)
    assert _report(timed)["timing_seconds"] >= 0


def test_method_flag_overrides_the_input(tmp_path, write_input):
    out = tmp_path / "report.json"
    main(["dwpf", "-i", write_input({"xs": [2, 3], "ys": [0, 1], "method": "dp"}), "-o", str(out), "--method", "determinant"])
    assert _report(out)["result"]["provenance"] == "determinant"


def test_verify_suite(tmp_path):
    out = tmp_path / "report.json"
    code = main(["verify", "--suite", "lemma1", "--max-size", "1", "--rank", "1", "--samples", "1", "-o", str(out)])
    assert code == 0
    report = _report(out)
    assert report["result"]["suite"] == "lemma1"
    assert report["result"]["failed"] == 0


@pytest.mark.parametrize(
    "document, error",
    [
        ("{not json", "InputError"),
        ("[1, 2]", "InputError"),
        ({"xs": [0], "ys": [1]}, "PoleError"),
    ],
)
def test_bad_input_exits_with_status_two(tmp_path, write_input, document, error):
    out = tmp_path / "report.json"
    assert main(["dwpf", "-i", write_input(document), "-o", str(out)]) == 2
    assert _report(out)["error"] == error


def test_missing_input_and_file(tmp_path):
    out = tmp_path / "report.json"
    assert main(["dwpf", "-o", str(out)]) == 2
    assert main(["dwpf", "-i", str(tmp_path / "absent.json"), "-o", str(out)]) == 2


def test_bad_precision_is_an_input_error(tmp_path, write_input):
    out = tmp_path / "report.json"
    assert main(["dwpf", "-i", write_input({"xs": [2], "ys": [0]}), "-o", str(out), "--precision-bits", "0"]) == 2


def test_unknown_verb_is_rejected_by_the_parser():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["dwpfs"])


def test_sample_retries_flag_reaches_limit_extraction(tmp_path, write_input):
    source = write_input({"numerator": [5], "denominator_roots": [1]})
    out = tmp_path / "report.json"
    assert main(["limit", "-i", source, "-o", str(out)]) == 0
    assert _report(out)["result"]["value"] == "5/1"
    assert main(["limit", "-i", source, "-o", str(out), "--sample-retries", "0"]) == 2
    assert _report(out)["error"] == "SampleCollision"
    assert main(["limit", "-i", source, "-o", str(out), "--sample-retries", "-1"]) == 2
