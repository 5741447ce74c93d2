"""Tests for the bounded model checking algorithm."""

from conftest import assert_core_valid, assert_witness_valid

from ltlfuc.activation import SAT, UNKNOWN, UNSAT
from ltlfuc.bmc import algorithm2_uc, end_padding_axiom
from ltlfuc.formula import Globally, Implies, Var
from ltlfuc.parser import parse, parse_spec
from ltlfuc.randgen import random_spec
from ltlfuc.semantics import oracle_sat


def test_unsat_core():
    spec = parse_spec("(G a) & (F (! a))", name="s")
    res = algorithm2_uc(spec)
    assert res.status == UNSAT
    assert set(res.core) == {"c1", "c2"}


def test_k_max_zero_yields_unknown():
    spec = parse_spec("(G a) & (F (! a))", name="s")
    res = algorithm2_uc(spec, k_max=0)
    assert res.status == UNKNOWN


def test_sat_witness_is_a_model():
    spec = parse_spec("(G (a -> X b)) & (F a)", name="s")
    res = algorithm2_uc(spec)
    assert res.status == SAT
    assert_witness_valid(spec, res.witness)
    assert res.k_reached is not None


def test_core_excludes_unrelated_conjuncts():
    spec = parse_spec("(G a) & (F (! a)) & (F b)", name="s")
    res = algorithm2_uc(spec)
    assert res.status == UNSAT
    assert set(res.core) <= {"c1", "c2", "c3"}
    assert_core_valid(spec, res.core)


def test_past_operators():
    spec = parse_spec("a & (Y b)", name="s")
    res = algorithm2_uc(spec)
    assert res.status == UNSAT
    assert set(res.core) == {"c2"}
    sat_spec = parse_spec("(F (Y a)) & (G (! b))", name="s")
    res = algorithm2_uc(sat_spec)
    assert res.status == SAT
    assert_witness_valid(sat_spec, res.witness)


def test_timeout_yields_unknown():
    spec = parse_spec("(G a) & (F (! a))", name="s")
    res = algorithm2_uc(spec, timeout=0.0)
    assert res.status == UNKNOWN


def test_end_padding_axiom_shape():
    f = parse("(G a) | b")
    pad = end_padding_axiom(f)
    assert pad == Globally(Implies(Var("end"), parse("(! a) & (! b)")))
    assert end_padding_axiom(parse("true")) is None


def test_agreement_with_oracle_on_random_specs():
    for seed in range(60):
        spec = random_spec(seed, n_conjuncts=3, n_vars=2, depth=2)
        expected = oracle_sat(spec.formula()).status
        res = algorithm2_uc(spec)
        assert res.status in (SAT, UNSAT)
        assert res.status.lower() == expected
        if res.status == UNSAT:
            assert_core_valid(spec, res.core)
        else:
            assert_witness_valid(spec, res.witness)
