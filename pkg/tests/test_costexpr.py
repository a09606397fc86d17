"""Cost expression grammar: parsing, printing, evaluation."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nashvop.costexpr import (
    Abs,
    Add,
    Lit,
    Mul,
    Neg,
    Sub,
    Var,
    cost_variables,
    evaluate_cost,
    format_cost,
    linear_expression,
    parse_cost,
)
from nashvop.errors import CostSyntaxError, UnknownVariable
from nashvop.rationals import Q


def test_parse_structure():
    e = parse_cost("1 - 2*3")
    assert e == Sub(Lit(Q(1)), Mul(Lit(Q(2)), Lit(Q(3))))
    assert parse_cost("2*(1+1)") == Mul(Lit(Q(2)), Add(Lit(Q(1)), Lit(Q(1))))
    assert parse_cost("--x[1][1]") == Neg(Neg(Var(1, 1)))


def test_parse_rational_literals():
    assert parse_cost("3/2") == Lit(Q(3, 2))
    assert parse_cost("-5/10") == Neg(Lit(Q(1, 2)))


def test_format_round_trip_examples():
    for src in (
        "-1 + 2*x[1][1] + 2*x[2][1] - 4*x[1][1]*x[2][1]",
        "abs(x[1][2] - 3/2)",
        "-(x[1][1]*x[2][1])",
        "x[1][1] - (x[2][1] - 1)",
    ):
        e = parse_cost(src)
        assert format_cost(e) == src
        assert parse_cost(format_cost(e)) == e


def test_evaluate():
    e = parse_cost("-1 + 2*x[1][1] + 2*x[2][1] - 4*x[1][1]*x[2][1]")
    half = {(1, 1): Q(1, 2), (2, 1): Q(1, 2)}
    assert evaluate_cost(e, half) == 0
    assert evaluate_cost(e, {(1, 1): Q(0), (2, 1): Q(0)}) == -1
    m = parse_cost("abs(x[1][1] - x[2][1])")
    assert evaluate_cost(m, {(1, 1): Q(1), (2, 1): Q(0)}) == 1
    assert evaluate_cost(m, {(1, 1): Q(0), (2, 1): Q(0)}) == 0


def test_variables():
    e = parse_cost("x[1][1]*x[2][3] + abs(x[1][2])")
    assert cost_variables(e) == frozenset({(1, 1), (2, 3), (1, 2)})
    assert cost_variables(Lit(Q(5))) == frozenset()


def test_syntax_errors_carry_offsets():
    with pytest.raises(CostSyntaxError) as exc:
        parse_cost("x[1][1")
    assert exc.value.offset == 6
    with pytest.raises(CostSyntaxError):
        parse_cost("")
    with pytest.raises(CostSyntaxError):
        parse_cost("1 +")
    with pytest.raises(CostSyntaxError):
        parse_cost("x[0][1]")  # indices are 1-based
    with pytest.raises(CostSyntaxError):
        parse_cost("1/0")
    with pytest.raises(CostSyntaxError):
        parse_cost("1 ? 2")


def test_unknown_names():
    with pytest.raises(UnknownVariable):
        parse_cost("y + 1")
    e = parse_cost("x[3][1]")
    with pytest.raises(UnknownVariable):
        evaluate_cost(e, {(1, 1): Q(0)})


def test_linear_expression_printing():
    e = linear_expression([-2, -1, 0, 0], (2, 2))
    assert format_cost(e) == "-2*x[1][1] - x[1][2]"
    assert format_cost(linear_expression([0, 0, 0, 0], (2, 2))) == "0"
    assert format_cost(linear_expression([1, 0], (1, 1))) == "x[1][1]"


@settings(deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=2, max_size=5),
       st.lists(st.integers(-3, 3), min_size=2, max_size=5))
def test_linear_expression_evaluates_to_dot_product(row, point):
    n = min(len(row), len(point))
    row, point = row[:n], point[:n]
    dims = (1,) * n  # n single-variable players
    e = linear_expression(row, dims)
    values = {(i + 1, 1): Q(point[i]) for i in range(n)}
    assert evaluate_cost(e, values) == sum(r * p for r, p in zip(row, point))


# random expression trees: format/parse round trip is exact

atoms = st.one_of(
    st.integers(0, 9).map(lambda k: Lit(Q(k))),
    st.builds(Lit, st.builds(Q, st.integers(1, 9), st.integers(2, 9))),
    st.builds(Var, st.integers(1, 3), st.integers(1, 3)),
)


def _combine(children):
    return st.one_of(
        st.builds(Add, children, children),
        st.builds(Sub, children, children),
        st.builds(Mul, children, children),
        st.builds(Neg, children),
        st.builds(Abs, children),
    )


exprs = st.recursive(atoms, _combine, max_leaves=12)


@settings(deadline=None, max_examples=200)
@given(exprs)
def test_printer_parser_round_trip(e):
    assert parse_cost(format_cost(e)) == e


@settings(deadline=None, max_examples=100)
@given(exprs, st.integers(0, 10**9))
def test_round_trip_preserves_value(e, seed):
    import random
    rng = random.Random(seed)
    values = {(i, j): Q(rng.randint(-6, 6), rng.choice((1, 2, 3)))
              for i in range(1, 4) for j in range(1, 4)}
    again = parse_cost(format_cost(e))
    assert evaluate_cost(again, values) == evaluate_cost(e, values)
