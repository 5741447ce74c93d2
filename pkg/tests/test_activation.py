"""Tests for the activation-variable construction."""

from ltlfuc.activation import (
    REDUCED_TO_FALSE,
    SAT,
    UNKNOWN,
    UNSAT,
    UcResult,
    activate,
)
from ltlfuc.formula import Implies, Var, conjuncts
from ltlfuc.parser import parse_spec


def test_activate_guards_each_conjunct():
    spec = parse_spec("(G a) & (F b)", name="s")
    act = activate(spec)
    names = act.activation_names
    assert len(names) == 2
    assert all(n.startswith("_act_") for n in names)
    guarded = conjuncts(act.psi)
    assert guarded == [Implies(Var(n), f)
                       for n, f in zip(names, spec.formulas)]


def test_activation_names_are_fresh_per_conjunct():
    spec = parse_spec("a & a & a", name="s")
    act = activate(spec)
    assert len(set(act.activation_names)) == 3


def test_labels_for_maps_back_to_conjunct_labels():
    spec = parse_spec("(G a) & (F b) & c", name="s")
    act = activate(spec)
    names = act.activation_names
    assert act.labels_for([names[2], names[0]]) == ["c1", "c3"]
    assert act.labels_for([]) == []


def test_result_round_trips_to_dict():
    r = UcResult(UNSAT, "bdd", core=["c1", "c2"], elapsed=0.5)
    d = r.to_dict()
    assert d["status"] == UNSAT
    assert d["algorithm"] == "bdd"
    assert d["core"] == ["c1", "c2"]


def test_status_constants_are_distinct():
    assert len({SAT, UNSAT, UNKNOWN, REDUCED_TO_FALSE}) == 4
