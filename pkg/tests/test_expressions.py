from fractions import Fraction

import pytest

from expressions import (
    BraceArgumentNotGenerator,
    ParseError,
    UnknownGenerator,
    eval_text,
    evaluate,
    parse,
)
from gja import Sampler


def ev(text, num_x=3, num_theta=1):
    return str(eval_text(text, num_x, num_theta))


@pytest.mark.parametrize("text,expected", [
    ("t1 o x1", "1/2*t1*x1 + 1/2*x1*t1"),
    ("x1 o t1", "0"),
    ("rev(x1*x2)", "x2*x1"),
    ("rev(x1*t1)", "t1*x1"),
    ("rev(1)", "1"),
    ("t1*t1", "0"),
    ("(x1*t1 + 1) * t1", "t1"),
    ("x1 * (x2*x3)", "x1*x2*x3"),
    ("ev(x1 + t1)", "x1"),
    ("od(x1*t1*x2 + x1*x2)", "x1*t1*x2"),
    ("ev(0)", "0"),
    ("{t1}", "t1"),
    ("{x1,x2}", "1/2*x1*x2 + 1/2*x2*x1"),
    ("{}", "1"),
    ("lassoc(1, 1, 1)", "0"),
    ("{t1,x1,x2} - ((t1 o x1) o x2 - (t1 o x2) o x1 + t1 o (x1 o x2))", "0"),
    ("-x1*x2 + x1*x2", "0"),
    ("3/6*x1 - 2", "-2 + 1/2*x1"),
])
def test_evaluation(text, expected):
    assert ev(text) == expected


def test_scalar_form_of_bullet():
    assert eval_text("1/2 * (t1*x1 + x1*t1)", 1, 1) == eval_text("t1 o x1", 1, 1)


def test_precedence():
    # `*` liga mais forte que `o`, que liga mais forte que `+`
    assert ev("x1 + x2 o x3 * x1") == ev("x1 + (x2 o (x3 * x1))")
    assert ev("x1 o x2 o x3") == ev("(x1 o x2) o x3")
    assert ev("x1 - x2 - x3") == ev("x1 - (x2 + x3)")


def test_whitespace_is_insignificant():
    assert ev("t1ox1") == ev("  t1 o   x1 ")
    assert ev("lassoc(x1,x2,x3)") == ev("lassoc( x1 , x2 , x3 )")


def test_brace_rejects_expressions():
    with pytest.raises(BraceArgumentNotGenerator) as exc:
        parse("{x1+x2, x3}", 3, 1)
    assert exc.value.offset == 1


def test_unknown_generator():
    with pytest.raises(UnknownGenerator):
        parse("x5", 4, 1)
    with pytest.raises(UnknownGenerator):
        parse("t2 o x1", 4, 1)
    with pytest.raises(UnknownGenerator):
        parse("x0", 4, 1)


@pytest.mark.parametrize("text,offset", [
    ("x1 + $", 5),
    ("x1 +", 4),
    ("(x1", 3),
    ("x1 x2", 3),
    ("1/0", 2),
    ("θ + x1", 0),
    ("x1 + θ", 5),
])
def test_parse_errors_report_byte_offset(text, offset):
    with pytest.raises(ParseError) as exc:
        parse(text, 2, 1)
    assert exc.value.offset == offset
    assert f"byte {offset}" in str(exc.value)


def test_function_arity():
    with pytest.raises(ParseError):
        parse("lassoc(x1, x2)", 2, 1)
    with pytest.raises(ParseError):
        parse("foo(x1)", 2, 1)


def test_canonical_round_trip():
    sampler = Sampler(3, 2, max_deg=3, seed=13, terms=4)
    for k in range(500):
        p = sampler.element().scale(Fraction(1, 1 + k % 5))
        s = str(p)
        assert str(eval_text(s, 3, 2)) == s


def test_tree_text_is_fully_parenthesized():
    e = parse("t1 o x1 + 2*rev(x1*x2) - {t1,x1}", 2, 1)
    text = str(e)
    assert text == "(((t1 o x1) + (2 * rev((x1 * x2)))) - {t1,x1})"
    assert eval_text(text, 2, 1) == evaluate(e)
    assert str(parse("-1/2 o x1", 1, 0)) == "(-(1/2) o x1)"
