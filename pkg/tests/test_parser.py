"""Tests for the surface syntax parser."""

import random

import pytest
from conftest import formulas
from hypothesis import given

from ltlfuc.formula import (
    And,
    Globally,
    Iff,
    Implies,
    Next,
    Not,
    Or,
    Since,
    Until,
    Var,
    to_str,
)
from ltlfuc.parser import (
    ParseError,
    ReservedNameError,
    parse,
    parse_spec,
    parse_trace,
)
from ltlfuc.randgen import random_formula

a, b, c = Var("a"), Var("b"), Var("c")


def test_atoms_and_constants():
    assert parse("a") == a
    assert parse("true").value is True
    assert parse("false").value is False


def test_precedence():
    # unary binds tightest, then U-family, &, |, ->, <->
    assert parse("! a & b") == And(Not(a), b)
    assert parse("a U b & c") == And(Until(a, b), c)
    assert parse("a & b | c") == Or(And(a, b), c)
    assert parse("a | b -> c") == Implies(Or(a, b), c)
    assert parse("a -> b <-> c") == Iff(Implies(a, b), c)


def test_right_associativity():
    assert parse("a -> b -> c") == Implies(a, Implies(b, c))
    assert parse("a U b U c") == Until(a, Until(b, c))


def test_unary_stacking():
    assert parse("G X ! a") == Globally(Next(Not(a)))
    assert parse("!!a") == Not(Not(a))


def test_past_operators():
    assert parse("a S b") == Since(a, b)
    assert parse("Y a").op == "Y"
    assert parse("Z a").op == "Z"
    assert parse("O a").op == "O"
    assert parse("H a").op == "H"
    assert parse("a T b").op == "T"


def test_reserved_names_rejected():
    with pytest.raises(ReservedNameError):
        parse("end")
    with pytest.raises(ReservedNameError):
        parse("a & _act_1")
    # internal callers may opt in
    assert parse("end", allow_reserved=True) == Var("end")


def test_parse_errors_carry_position():
    with pytest.raises(ParseError):
        parse("a &")
    with pytest.raises(ParseError):
        parse("(a | b")
    with pytest.raises(ParseError):
        parse("a ? b")


def test_parse_spec_splits_top_level_conjuncts():
    spec = parse_spec("(G a) & (F b) & c", name="s")
    assert spec.name == "s"
    assert spec.labels == ["c1", "c2", "c3"]
    assert spec.formulas == [Globally(a), parse("F b"), c]


def test_parse_trace():
    trace = parse_trace("a=1; b=0\n# comment\na=0; b=1\n")
    assert trace == [{"a": True, "b": False}, {"a": False, "b": True}]


def test_roundtrip_random_formulas():
    rng = random.Random(7)
    for _ in range(300):
        f = random_formula(rng, ["a", "b", "c"], depth=4, allow_past=True)
        assert parse(to_str(f)) == f


@given(formulas(var_names=("a", "b", "c")))
def test_roundtrip_property(f):
    assert parse(to_str(f)) == f
