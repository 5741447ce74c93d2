"""Tests for the obligation-set (IC3-style) algorithm."""

from conftest import assert_core_valid, assert_witness_valid

from ltlfuc.activation import SAT, UNKNOWN, UNSAT
from ltlfuc.native import TransitionState, algorithm3_uc, is_final
from ltlfuc.parser import parse, parse_spec
from ltlfuc.randgen import random_spec
from ltlfuc.semantics import oracle_sat


def test_is_final_discharges_weak_obligations():
    st = TransitionState(obligations=frozenset([parse("N (G a)")]),
                         assignment={})
    assert is_final(st)
    st = TransitionState(obligations=frozenset([parse("X a")]),
                         assignment={"a": True})
    assert not is_final(st)


def test_is_final_checks_the_assignment():
    g = parse("a & (N b)")
    assert is_final(TransitionState(frozenset([g]), {"a": True}))
    assert not is_final(TransitionState(frozenset([g]), {"a": False}))


def test_unsat_core():
    spec = parse_spec("(G a) & (F (! a)) & b", name="s")
    res = algorithm3_uc(spec)
    assert res.status == UNSAT
    assert set(res.core) == {"c1", "c2"}
    assert_core_valid(spec, res.core)


def test_sat_with_witness():
    spec = parse_spec("(a U b) & (G (b -> X (! b)))", name="s")
    res = algorithm3_uc(spec)
    assert res.status == SAT
    assert_witness_valid(spec, res.witness)


def test_past_operators():
    spec = parse_spec("(F b) & (G (b -> O a)) & (G (! a))", name="s")
    res = algorithm3_uc(spec)
    assert res.status == UNSAT
    assert_core_valid(spec, res.core)


def test_depth_budget_yields_unknown():
    # the only models need three steps; a depth budget of one is too small
    spec = parse_spec("X (X a)", name="s")
    assert algorithm3_uc(spec, max_level=1).status == UNKNOWN
    assert algorithm3_uc(spec).status == SAT


def test_timeout_yields_unknown():
    spec = parse_spec("(G a) & (F (! a))", name="s")
    assert algorithm3_uc(spec, timeout=0.0).status == UNKNOWN


def test_core_label_order_follows_the_spec():
    spec = parse_spec("(F (! a)) & b & (G a)", name="s")
    res = algorithm3_uc(spec)
    assert res.status == UNSAT
    assert res.core == sorted(res.core, key=spec.labels.index)


def test_agreement_with_oracle_on_random_specs():
    for seed in range(60):
        spec = random_spec(seed, n_conjuncts=3, n_vars=2, depth=2)
        expected = oracle_sat(spec.formula()).status
        res = algorithm3_uc(spec)
        assert res.status in (SAT, UNSAT)
        assert res.status.lower() == expected
        if res.status == UNSAT:
            assert_core_valid(spec, res.core)
        else:
            assert_witness_valid(spec, res.witness)
