"""Shared helpers for the algorithm test modules."""

import itertools

from hypothesis import strategies as st

from ltlfuc import formula as F
from ltlfuc.semantics import evaluate, oracle_sat


def formulas(var_names=("a", "b"), max_leaves=12, allow_past=True):
    """Hypothesis strategy producing formula trees."""
    leaves = st.one_of(
        st.sampled_from([F.Var(n) for n in var_names]),
        st.sampled_from([F.TRUE, F.FALSE]),
    )
    unary = list("!XNFG") + (list("ZYOH") if allow_past else [])
    binary = ["&", "|", "->", "<->", "U", "R"] + \
        (["S", "T"] if allow_past else [])

    def extend(children):
        return st.one_of(
            st.tuples(st.sampled_from(unary), children).map(
                lambda t: F.Unary(t[0], t[1])),
            st.tuples(st.sampled_from(binary), children, children).map(
                lambda t: F.Binary(t[0], t[1], t[2])),
        )

    return st.recursive(leaves, extend, max_leaves=max_leaves)


def traces(var_names=("a", "b"), max_len=5):
    """Hypothesis strategy producing nonempty finite traces."""
    state = st.fixed_dictionaries({n: st.booleans() for n in var_names})
    return st.lists(state, min_size=1, max_size=max_len)


def unsat_subsets(spec):
    """Brute force: every nonempty label subset whose conjunction is
    unsatisfiable per the reference oracle."""
    out = set()
    for r in range(1, len(spec.labels) + 1):
        for combo in itertools.combinations(spec.labels, r):
            sub = spec.restrict(list(combo))
            if oracle_sat(sub.formula()).status == "unsat":
                out.add(frozenset(combo))
    return out


def assert_core_valid(spec, core):
    assert core, "empty core returned"
    assert set(core) <= set(spec.labels)
    sub = spec.restrict(core)
    assert oracle_sat(sub.formula()).status == "unsat", \
        "core %s is satisfiable" % (core,)


def assert_witness_valid(spec, witness):
    assert witness, "empty witness returned"
    assert evaluate(spec.formula(), witness), \
        "witness does not satisfy the spec"
