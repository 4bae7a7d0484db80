import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from colour_vertex.config import Method
from colour_vertex.errors import InputError, PoleError, VerificationFailure
from colour_vertex.lattice.evaluate import (
    agree,
    enumerate_configurations,
    evaluate,
    evaluate_fixed,
    evaluate_summed,
    frontier_dp,
    normalization_ratio,
)
from colour_vertex.lattice.spec import (
    CountConstraint,
    EdgeRef,
    End,
    Fixed,
    LatticeBuilder,
    Weighted,
    as_alpha,
    as_beta,
    grid,
    lattice_from_payload,
)
from colour_vertex.lattice.trivial import trivial_lattice, trivial_pf
from colour_vertex.model.weights import ModelKind, ModelParams, Normalization

A1 = ModelParams()
A2 = ModelParams(rank=2)


def _dw_grid(xs, ys, norm=Normalization.UNIT_A):
    return grid(
        xs,
        ys,
        left=[Fixed(1)] * len(xs),
        right=[Fixed(0)] * len(xs),
        bottom=[Fixed(0)] * len(ys),
        top=[Fixed(1)] * len(ys),
        model=A1,
        norm=norm,
    )


def test_single_vertex_is_a_c_weight():
    assert evaluate(_dw_grid([2], [0])).value == Fraction(1, 3)


def test_two_by_two_domain_wall():
    assert evaluate(_dw_grid([2, 3], [0, 1]), Method.ALL).value == Fraction(1, 6)


def test_normalization_ratio_relates_unit_a_and_unit_b():
    xs, ys = [2, Fraction(7, 2)], [0, 1]
    unit_a = evaluate(_dw_grid(xs, ys)).value
    unit_b = evaluate(_dw_grid(xs, ys, Normalization.UNIT_B)).value
    assert unit_b == unit_a * normalization_ratio(_dw_grid(xs, ys))


@st.composite
def bordered_grids(draw):
    n_rows = draw(st.integers(min_value=1, max_value=3))
    n_cols = draw(st.integers(min_value=1, max_value=4))
    params = ModelParams(rank=draw(st.integers(min_value=1, max_value=2)))
    colours = st.integers(min_value=0, max_value=params.rank)
    rows = draw(st.lists(st.fractions(8, 14, max_denominator=3), min_size=n_rows, max_size=n_rows, unique=True))
    cols = draw(st.lists(st.fractions(0, 6, max_denominator=3), min_size=n_cols, max_size=n_cols))
    coefficients = st.fractions(-3, 3, max_denominator=4)
    exits = Weighted.of({c: draw(coefficients) for c in range(params.rank + 1)})
    return grid(
        rows,
        cols,
        left=[Fixed(draw(colours)) for _ in rows],
        right=[exits] * n_rows,
        bottom=[Fixed(draw(colours)) for _ in cols],
        top=[exits] * n_cols,
        model=params,
    )


@given(bordered_grids())
def test_enumeration_matches_frontier_dp(spec):
    assert enumerate_configurations(spec) == frontier_dp(spec)


def test_trigonometric_lattice_evaluates_in_floats(config):
    params = ModelParams(ModelKind.TRIGONOMETRIC, 1, Fraction(1, 2))
    with config.float_context():
        spec = grid(
            [2, 3],
            [0, 1],
            left=[Fixed(1)] * 2,
            right=[Fixed(0)] * 2,
            bottom=[Fixed(0)] * 2,
            top=[Fixed(1)] * 2,
            model=params,
        )
        value = evaluate(spec, Method.ALL)
    assert value.precision_bits == 256
    assert agree(value.value, value.detail["dp"])


def test_evaluate_fixed_refuses_summed_edges():
    spec = trivial_lattice([3], [0], [1], [0], A1)
    with pytest.raises(InputError):
        evaluate_fixed(spec)
    assert evaluate_summed(spec).value == 1


@pytest.mark.parametrize("left", list(itertools.product(range(3), repeat=2)))
@pytest.mark.parametrize("bottom", list(itertools.product(range(3), repeat=2)))
def test_trivial_lattice_sums_to_one(left, bottom):
    rows, cols = [5, Fraction(9, 2)], [0, Fraction(4, 3)]
    assert trivial_pf(rows, cols, left, bottom, A2).value == 1


def test_count_constraint_filters_boundaries():
    summed = Weighted.summed(A1.colours)
    constraint = CountConstraint(((EdgeRef("col1", End.OUT), 1), (EdgeRef("col2", End.OUT), 1)), 1)
    spec = grid(
        [3],
        [0, 1],
        left=[Fixed(1)],
        right=[Fixed(0)],
        bottom=[Fixed(0)] * 2,
        top=[summed] * 2,
        model=A1,
        constraint=constraint,
    )
    unconstrained = grid([3], [0, 1], left=[Fixed(1)], right=[Fixed(0)], bottom=[Fixed(0)] * 2, top=[summed] * 2, model=A1)
    assert evaluate(spec, Method.ALL).value == evaluate(unconstrained).value


def test_lattice_from_payload_matches_grid():
    payload = {
        "rows": [{"rapidity": "2"}, {"rapidity": "3"}],
        "cols": [{"rapidity": "0"}, {"rapidity": "1"}],
        "boundary": {
            "left": [{"fixed": 1}, {"fixed": 1}],
            "right": [{"fixed": 0}, {"fixed": 0}],
            "bottom": [{"fixed": 0}, {"fixed": 0}],
            "top": [{"weighted": {"0": "1", "1": "1"}}, {"fixed": 1}],
            "constraint": {"terms": [{"side": "top", "index": 0, "colour": 1}], "total": 1},
        },
    }
    assert evaluate(lattice_from_payload(payload)).value == Fraction(1, 6)


def test_lattice_from_payload_reports_missing_fields():
    with pytest.raises(InputError):
        lattice_from_payload({"rows": []})


def test_builder_rejects_one_sided_crossings():
    builder = LatticeBuilder(A1)
    builder.line("x", 2, Fixed(1), Fixed(0))
    builder.line("y", 0, Fixed(0), Fixed(1))
    builder.route("x", as_alpha(["y"]))
    with pytest.raises(InputError):
        builder.build()


def test_builder_rejects_duplicate_lines_and_bad_colours():
    builder = LatticeBuilder(A1)
    builder.line("x", 2, Fixed(1), Fixed(0))
    with pytest.raises(InputError):
        builder.line("x", 3, Fixed(1), Fixed(0))
    with pytest.raises(InputError):
        builder.line("z", 3, Fixed(2), Fixed(0))


def test_builder_rejects_cyclic_routes():
    builder = LatticeBuilder(A1)
    for name in ("p", "q", "r"):
        builder.line(name, 0, Fixed(0), Fixed(0))
    builder.route("p", [("q", "alpha"), ("r", "alpha")])
    builder.route("q", [("r", "alpha"), ("p", "beta")])
    builder.route("r", [("p", "beta"), ("q", "beta")])
    with pytest.raises(InputError):
        builder.build()


def test_isolated_line_applies_both_conditions():
    builder = LatticeBuilder(A1)
    builder.line("x", 2, Fixed(1), Weighted.of({0: 5, 1: 7}))
    assert evaluate(builder.build(), Method.ALL).value == 7


def test_poles_are_reported_at_build_and_on_rapidity_change():
    with pytest.raises(PoleError):
        _dw_grid([0], [1])
    spec = _dw_grid([2, 3], [0, 1])
    with pytest.raises(PoleError):
        spec.with_rapidity("row1", -1)


def test_denominator_roots_follow_the_normalization():
    assert sorted(_dw_grid([2, 3], [0, 1]).denominator_roots("row1")) == [-1, 0]
    assert sorted(_dw_grid([2, 3], [0, 1], Normalization.UNIT_B).denominator_roots("row1")) == [0, 1]


def test_all_method_raises_on_disagreement(monkeypatch):
    import colour_vertex.lattice.evaluate as module

    monkeypatch.setattr(module, "frontier_dp", lambda spec: Fraction(0))
    with pytest.raises(VerificationFailure):
        module.evaluate(_dw_grid([2], [0]), Method.ALL)
