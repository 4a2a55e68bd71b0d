from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bisym.bases import e_to_p, h_to_p, schur_pair_expansion
from bisym.exprlang import (
    FUNCTIONS,
    Atom,
    BinOp,
    Call,
    EvalError,
    Hbar,
    Named,
    Neg,
    Num,
    ParseError,
    Pow,
    Regular,
    evaluate,
    parse,
    render,
    to_source,
)
from bisym.series import BiSymSeries, Truncation

T = Truncation(6, 6, -8, 8)


# parsing ------------------------------------------------------------------------


def test_parse_product():
    e = parse("p[2](x)*h[1](y)")
    assert e == BinOp("*", Atom("p", (2,), "x"), Atom("h", (1,), "y"))


def test_parse_call():
    e = parse("sat(p[1](x)*p[1](y))")
    assert isinstance(e, Call) and e.name == "sat"


def test_parse_relpleth_separator():
    e = parse("relpleth(p[2](y); p[1](x)*p[1](y), p[3](y))")
    assert isinstance(e, Call) and len(e.args) == 3


@pytest.mark.parametrize(
    "text,expected",
    [
        ("1 + 2 * 3", BinOp("+", Num(1), BinOp("*", Num(2), Num(3)))),
        ("1 - 2 - 3", BinOp("-", BinOp("-", Num(1), Num(2)), Num(3))),
        ("-hbar^2", Neg(Pow(Hbar(), 2))),
        ("3/4", Num(Fraction(3, 4))),
        ("3 / 4", BinOp("/", Num(3), Num(4))),
        ("hbar^-1", Pow(Hbar(), -1)),
        ("E", Named("E", "x")),
        ("L(y)", Named("L", "y")),
        ("R[3]", Regular(3)),
        ("s[](x)", Atom("s", (), "x")),
    ],
)
def test_precedence_and_literals(text, expected):
    assert parse(text) == expected


@pytest.mark.parametrize(
    "text,line,col",
    [
        ("s[2,1)(x)", 1, 6),
        ("p[2](z)", 1, 6),
        ("p[1](x) +", 1, 10),
        ("foo(p[1](x))", 1, 1),
        ("s[1,2](x)", 1, 6),
        ("p[1](x)\n  * $", 2, 5),
        ("pleth(p[1](x))", 1, 1),
        ("1/0", 1, 1),
    ],
)
def test_syntax_errors_are_positioned(text, line, col):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (line, col)


# printing round trip ------------------------------------------------------------

alphabets = st.sampled_from(["x", "y"])
small_partitions = st.lists(st.integers(1, 3), max_size=3).map(lambda l: tuple(sorted(l, reverse=True)))
leaves = st.one_of(
    st.fractions(min_value=0, max_value=10, max_denominator=5).map(Num),
    st.just(Hbar()),
    st.builds(lambda k, i, a: Atom(k, (i,) if i else (), a), st.sampled_from("phe"), st.integers(0, 4), alphabets),
    st.builds(lambda lam, a: Atom("s", lam, a), small_partitions, alphabets),
    st.builds(Named, st.sampled_from(["E", "L"]), alphabets),
    st.builds(Regular, st.integers(0, 4)),
)


def _calls(children):
    def make(name, args):
        return Call(name, tuple(args[: FUNCTIONS[name]]))

    return st.builds(make, st.sampled_from(sorted(FUNCTIONS)), st.lists(children, min_size=3, max_size=3))


asts = st.recursive(
    leaves,
    lambda children: st.one_of(
        st.builds(Neg, children),
        st.builds(BinOp, st.sampled_from("+-*/"), children, children),
        st.builds(Pow, children, st.integers(-3, 4)),
        _calls(children),
    ),
    max_leaves=12,
)


@settings(max_examples=300, deadline=None)
@given(asts)
def test_parse_print_round_trip(e):
    assert parse(to_source(e)) == e


# evaluation ---------------------------------------------------------------------


def test_evaluate_examples():
    got = evaluate("pleth(p[2](x), h[2](x))", T)
    assert got == BiSymSeries({((2, 2), (), 0): Fraction(1, 2), ((4,), (), 0): Fraction(1, 2)}, T)
    assert evaluate("omega(h[2](x))", T) == e_to_p(2, "x", T).embed()
    got = evaluate("box(p[1](x)*p[1](y), p[1](x)*p[1](y))", T)
    assert got.filter(lambda a, b, k: sum(a) == 1 and sum(b) == 1) == BiSymSeries.monomial((1,), (1,), trunc=T)


def test_hbar_is_minus_t():
    assert evaluate("hbar", T) == BiSymSeries.monomial((), (), 1, c=-1, trunc=T)
    assert evaluate("hbar^-2 * hbar^2", T) == BiSymSeries.one(T)


def test_E_and_L_follow_their_alphabet():
    assert evaluate("E(y)", T).is_y_only()
    assert evaluate("pleth(E - 1, L)", T) == BiSymSeries.p(1, "x", T)


def test_relpleth_and_koike():
    got = evaluate("relpleth(p[2](y); p[1](x)*p[1](y), p[3](y))", T)
    assert got == BiSymSeries.p(6, "y", T)
    assert evaluate("koike(p[2](x), p[1](x)*p[1](y))", T) == BiSymSeries.monomial((2,), (2,), trunc=T)


@pytest.mark.parametrize("basis", ["p", "schur"])
@pytest.mark.parametrize(
    "text",
    [
        "sat(p[1](x)*p[1](y))",
        "hbar*s[2,1](x)*h[2](y) - 3/2*p[2](x)",
        "psi(h[1](x)*h[2](y))",
        "exp1(hbar*p[1](x)*p[2](y))",
    ],
)
def test_render_reparses_to_same_value(text, basis):
    v = evaluate(text, T)
    assert evaluate(render(v, basis), T) == v


@pytest.mark.parametrize(
    "text,snippet",
    [
        ("pleth(h[2](x), 1 + p[1](x))", "pleth(h[2](x), 1 + p[1](x))"),
        ("p[1](x) / p[1](y)", "p[1](y)"),
        ("p[1](x)^-1", "p[1](x)^-1"),
        ("relpleth(p[1](y); p[1](x), p[1](x))", "p[1](x)"),
        ("pleth(p[1](x), p[1](y)*p[1](x))", "pleth(p[1](x), p[1](y)*p[1](x))"),
        ("exp1(1 + p[1](x))", "exp1(1 + p[1](x))"),
        ("psi(hbar^-3*p[6](x))", "psi(hbar^-3*p[6](x))"),
        ("2 * (1 / 0)", "0"),
    ],
)
def test_eval_errors_name_a_span(text, snippet):
    with pytest.raises(EvalError) as info:
        evaluate(text, T)
    span = info.value.span
    assert span is not None
    assert text[span[0] : span[1]] == snippet
    assert snippet in str(info.value)
