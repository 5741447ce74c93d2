"""Tests for the formula AST helpers."""

from ltlfuc.formula import (
    FALSE,
    TRUE,
    And,
    Const,
    Eventually,
    Globally,
    Next,
    Not,
    Once,
    Or,
    Until,
    Var,
    Yesterday,
    conjoin,
    conjuncts,
    free_vars,
    has_past,
    make_spec,
    subformulas,
    to_str,
)

a, b, c = Var("a"), Var("b"), Var("c")


def test_nodes_are_hashable_and_comparable():
    assert Var("a") == Var("a")
    assert Var("a") != Var("b")
    assert And(a, b) == And(a, b)
    assert len({And(a, b), And(a, b), Or(a, b)}) == 2


def test_constants():
    assert TRUE == Const(True)
    assert FALSE == Const(False)
    assert TRUE != FALSE


def test_to_str_is_fully_parenthesized():
    f = Until(And(a, b), Not(c))
    assert to_str(f) == "((a & b) U (!c))"
    assert to_str(Globally(Next(a))) == "(G (X a))"
    assert to_str(TRUE) == "true"


def test_subformulas_children_first():
    f = And(Next(a), b)
    subs = list(subformulas(f))
    assert subs.index(a) < subs.index(Next(a)) < subs.index(f)
    assert b in subs
    # each subformula listed once
    assert len(subs) == len(set(subs))


def test_free_vars_first_occurrence_order():
    assert free_vars(And(Or(b, a), And(b, c))) == ["b", "a", "c"]
    assert free_vars(TRUE) == []


def test_has_past():
    assert not has_past(Until(a, Next(b)))
    assert has_past(Globally(Yesterday(a)))
    assert has_past(Once(a))


def test_conjuncts_and_conjoin():
    assert conjuncts(And(And(a, b), c)) == [a, b, c]
    assert conjuncts(a) == [a]
    assert conjoin([a, b, c]) == And(And(a, b), c)
    assert conjoin([]) == TRUE
    assert conjoin([a]) == a


def test_make_spec_labels():
    spec = make_spec(And(Globally(a), Eventually(Not(a))), name="s")
    assert spec.labels == ["c1", "c2"]
    assert spec.alphabet == ["a"]
    assert spec.formula() == And(Globally(a), Eventually(Not(a)))


def test_spec_restrict():
    spec = make_spec(And(And(Globally(a), b), Eventually(c)))
    sub = spec.restrict(["c1", "c3"])
    assert sub.labels == ["c1", "c3"]
    assert sub.formulas == [Globally(a), Eventually(c)]


def test_spec_single_conjunct():
    spec = make_spec(Globally(a))
    assert spec.labels == ["c1"]
    assert spec.formula() == Globally(a)
