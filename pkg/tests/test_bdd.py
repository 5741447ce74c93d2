"""Tests for the binary decision diagram engine."""

import itertools
import random

import pytest

from ltlfuc.bdd import Bdd, BddBudgetError


def eval_node(bdd, f, env):
    """Interpret a node under a level->bool environment."""
    while f not in (bdd.const(True), bdd.const(False)):
        level, lo, hi = bdd.nodes[f]
        f = hi if env[level] else lo
    return f == bdd.const(True)


def random_node(bdd, rng, levels, depth):
    if depth == 0 or rng.random() < 0.3:
        return bdd.var(rng.choice(levels)) if rng.random() < 0.9 \
            else bdd.const(rng.random() < 0.5)
    op = rng.choice(["and", "or", "not", "iff"])
    f = random_node(bdd, rng, levels, depth - 1)
    if op == "not":
        return bdd.not_(f)
    g = random_node(bdd, rng, levels, depth - 1)
    return {"and": bdd.and_, "or": bdd.or_, "iff": bdd.iff}[op](f, g)


def test_canonicity_same_function_same_node():
    bdd = Bdd()
    x, y = bdd.var(0), bdd.var(1)
    f = bdd.not_(bdd.and_(x, y))
    g = bdd.or_(bdd.not_(x), bdd.not_(y))
    assert f == g
    assert bdd.and_(x, bdd.not_(x)) == bdd.const(False)
    assert bdd.iff(x, x) == bdd.const(True)


def test_agreement_with_truth_tables():
    rng = random.Random(9)
    levels = [0, 1, 2]
    for _ in range(200):
        bdd = Bdd()
        f = random_node(bdd, rng, levels, 4)
        # rebuild the node from its truth table; canonicity means the
        # result must be the very same node
        minterms = []
        for bits in itertools.product([False, True], repeat=3):
            env = dict(zip(levels, bits))
            if eval_node(bdd, f, env):
                minterms.append(bdd.and_all(
                    [bdd.var(l) if env[l] else bdd.nvar(l) for l in levels]))
        assert bdd.or_all(minterms) == f


def test_ite_matches_boolean_definition():
    bdd = Bdd()
    x, y, z = bdd.var(0), bdd.var(1), bdd.var(2)
    assert bdd.ite(x, y, z) == bdd.or_(bdd.and_(x, y),
                                       bdd.and_(bdd.not_(x), z))


def test_exists_quantifies_levels():
    bdd = Bdd()
    x, y = bdd.var(0), bdd.var(1)
    f = bdd.and_(x, y)
    assert bdd.exists(f, [1]) == x
    assert bdd.exists(f, [0, 1]) == bdd.const(True)
    g = bdd.and_(x, bdd.not_(x))
    assert bdd.exists(g, [0]) == bdd.const(False)


def test_rename_shifts_levels():
    bdd = Bdd()
    f = bdd.and_(bdd.var(0), bdd.not_(bdd.var(2)))
    g = bdd.rename(f, {0: 1, 2: 3})
    assert g == bdd.and_(bdd.var(1), bdd.not_(bdd.var(3)))


def test_support():
    bdd = Bdd()
    f = bdd.and_(bdd.var(0), bdd.or_(bdd.var(2), bdd.var(2)))
    assert bdd.support(f) == {0, 2}


def test_conjunction_chain_stays_linear():
    bdd = Bdd()
    f = bdd.and_all([bdd.var(i) for i in range(40)])
    # an ordered conjunction of n variables is a chain of n nodes
    assert bdd.count_nodes(f) <= 42


def test_cubes_cover_exactly_the_function():
    rng = random.Random(10)
    levels = [0, 1, 2]
    for _ in range(50):
        bdd = Bdd()
        f = random_node(bdd, rng, levels, 3)
        covered = set()
        for cube in bdd.cubes(f):
            for bits in itertools.product([False, True], repeat=3):
                env = dict(zip(levels, bits))
                if all(env[k] == v for k, v in cube.items()):
                    covered.add(bits)
        expected = {bits for bits in itertools.product([False, True], repeat=3)
                    if eval_node(bdd, f, dict(zip(levels, bits)))}
        assert covered == expected


def test_assignments_expands_dont_cares():
    bdd = Bdd()
    x = bdd.var(0)
    assert bdd.assignments(x, [0, 1]) == {frozenset({0}), frozenset({0, 1})}
    assert bdd.assignments(bdd.const(False), [0]) == set()


def test_pick_cube_on_false_is_none():
    bdd = Bdd()
    assert bdd.pick_cube(bdd.const(False)) is None


def test_node_budget():
    bdd = Bdd(node_budget=10)
    with pytest.raises(BddBudgetError):
        f = bdd.const(True)
        for i in range(10):
            f = bdd.iff(f, bdd.var(i))


def test_to_dot_names_variables():
    bdd = Bdd()
    f = bdd.and_(bdd.var(0), bdd.var(1))
    dot = bdd.to_dot(f, names={0: "a", 1: "b"})
    assert dot.startswith("digraph")
    assert "a" in dot and "b" in dot
