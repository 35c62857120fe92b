from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qpcert.closedform import (
    Add,
    Const,
    DivisorNotLiteral,
    ExprSyntaxError,
    Floor,
    Mul,
    Neg,
    Pow,
    Round,
    Sub,
    Var,
    expr_eval,
    expr_to_qp,
    format_expr,
    parse,
)
from qpcert.polynomial import Poly

ANDREWS = "round(n^2/12) - floor(n/4)*floor((n+2)/4)"

# battery of closed forms exercising nesting, round-of-floor and products
BATTERY = [
    "n",
    "7",
    "n^2",
    "floor(n/4)",
    "round(n^2/12)",
    "floor((n+2)/4)",
    ANDREWS,
    "floor(floor(n/2)/3)",
    "round(floor(n/3)/5)",
    "floor(n/2)*floor(n/3)",
    "(n - 2*floor(n/2))*(n - 3*floor(n/3))",
    "n^3 - 6*floor((n^2+3)/7)",
    "-n^2 + floor((2*n+1)/3)",
    "floor((n^2+n)/2) - n*floor(n/2)",
]


def test_parse_variable():
    assert parse("n") == Var()


def test_parse_andrews_ast():
    expected = Sub(
        Round(Pow(Var(), 2), 12),
        Mul(Floor(Var(), 4), Floor(Add(Var(), Const(2)), 4)),
    )
    assert parse(ANDREWS) == expected


def test_trunc_is_floor_alias():
    assert parse("trunc(n/4)") == parse("floor(n/4)")
    assert parse("round(n^2/12)-trunc(n/4)*trunc((n+2)/4)") == parse(ANDREWS)


def test_whitespace_insignificant():
    assert parse(" floor( ( n + 2 ) / 4 ) ") == parse("floor((n+2)/4)")


def test_precedence_power_over_product_over_sum():
    assert parse("2+3*n^2") == Add(Const(2), Mul(Const(3), Pow(Var(), 2)))


def test_left_associativity():
    assert parse("1-2-3") == Sub(Sub(Const(1), Const(2)), Const(3))
    assert parse("1-2+3") == Add(Sub(Const(1), Const(2)), Const(3))
    assert parse("2*3*4") == Mul(Mul(Const(2), Const(3)), Const(4))


def test_unary_minus_binds_into_power_base():
    # per the grammar, -n^2 is (-n)^2
    assert parse("-n^2") == Pow(Neg(Var()), 2)
    assert parse("-(n^2)") == Neg(Pow(Var(), 2))


def test_parse_error_reports_offset():
    with pytest.raises(ExprSyntaxError) as err:
        parse("n + ")
    assert err.value.offset == 4
    with pytest.raises(ExprSyntaxError) as err:
        parse("(n")
    assert err.value.offset == 2
    with pytest.raises(ExprSyntaxError) as err:
        parse("n ^ 0")
    assert err.value.offset == 4
    with pytest.raises(ExprSyntaxError) as err:
        parse("round(n^2/")
    assert err.value.offset == 10
    with pytest.raises(ExprSyntaxError):
        parse("n n")


def test_unknown_identifier():
    with pytest.raises(ExprSyntaxError) as err:
        parse("floor(m/4)")
    assert err.value.offset == 6


def test_division_only_inside_floor_round():
    with pytest.raises(ExprSyntaxError):
        parse("n/4")


def test_divisor_must_be_literal():
    with pytest.raises(DivisorNotLiteral):
        parse("floor(n/n)")
    with pytest.raises(DivisorNotLiteral):
        parse("floor(n/(4))")
    with pytest.raises(DivisorNotLiteral):
        parse("floor(n/0)")


def test_eval_andrews_values():
    e = parse(ANDREWS)
    assert expr_eval(e, 3) == 1
    assert expr_eval(e, 4) == 0
    assert expr_eval(e, 12) == 3
    assert expr_eval(e, 36) == 27


def test_eval_floor_example():
    assert expr_eval(parse("floor((n+2)/4)"), 12) == 3


def test_eval_floor_toward_minus_infinity():
    e = parse("floor(n/4)")
    assert expr_eval(e, -1) == -1
    assert expr_eval(e, -4) == -1


def test_eval_round_half_up():
    e = parse("round(n/2)")
    assert expr_eval(e, 1) == 1
    assert expr_eval(e, -1) == 0
    assert expr_eval(e, 3) == 2


def test_to_qp_floor():
    q = expr_to_qp(parse("floor(n/4)"))
    assert q.period == 4
    for r in range(4):
        assert q.constituents[r] == (Poly(0, 1) - r) * Fraction(1, 4)


def test_to_qp_polynomial():
    q = expr_to_qp(parse("n^2"))
    assert q.period == 1
    assert q.constituents == (Poly(0, 0, 1),)


def test_to_qp_andrews_degree_and_period():
    q = expr_to_qp(parse(ANDREWS))
    assert q.degree == 2
    assert q.period == 12
    e = parse(ANDREWS)
    for n in range(144):
        assert q(n) == expr_eval(e, n)


@pytest.mark.parametrize("text", BATTERY)
def test_conversion_soundness_battery(text):
    e = parse(text)
    q = expr_to_qp(e)
    for n in range(-60, 601):
        assert q(n) == expr_eval(e, n), (text, n)


@pytest.mark.parametrize("text", BATTERY)
def test_round_trip_battery(text):
    e = parse(text)
    assert parse(format_expr(e)) == e


# random ASTs shaped like what parse can produce (non-negative literals)
def _exprs():
    leaves = st.one_of(
        st.integers(min_value=0, max_value=9).map(Const),
        st.just(Var()),
    )

    def extend(children):
        return st.one_of(
            st.tuples(children, children).map(lambda ab: Add(*ab)),
            st.tuples(children, children).map(lambda ab: Sub(*ab)),
            st.tuples(children, children).map(lambda ab: Mul(*ab)),
            children.map(Neg),
            st.tuples(children, st.integers(1, 3)).map(lambda bk: Pow(*bk)),
            st.tuples(children, st.integers(1, 6)).map(lambda am: Floor(*am)),
            st.tuples(children, st.integers(1, 6)).map(lambda am: Round(*am)),
        )

    return st.recursive(leaves, extend, max_leaves=6)


@settings(max_examples=120, deadline=None)
@given(_exprs())
def test_print_parse_round_trip(e):
    assert parse(format_expr(e)) == e


@settings(max_examples=40, deadline=None)
@given(_exprs(), st.integers(min_value=-40, max_value=90))
def test_eval_total_and_integer(e, n):
    v = expr_eval(e, n)
    assert isinstance(v, int)


@settings(max_examples=30, deadline=None)
@given(_exprs())
def test_conversion_soundness_random(e):
    q = expr_to_qp(e)
    for n in range(-12, 37, 5):
        assert q(n) == expr_eval(e, n)
