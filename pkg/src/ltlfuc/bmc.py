"""SAT-based bounded model checking with core extraction.

Two encodings over the shared symbolic automaton, iterated for k = 0..k_max:

* a witness query: a (k+1)-state prefix closed into a lasso by loop
  selectors, with every fairness constraint discharged inside the loop;
  a model is a satisfying infinite trace.
* a completeness query: a simple path of k+1 pairwise-distinct states from
  the initial states; when it is unsatisfiable under the activation
  assumptions, no longer path exists and the failed assumptions form an
  unsatisfiable core.

When k_max is exhausted without either query resolving, the result is
UNKNOWN.
"""

import time

from .activation import SAT, UNKNOWN, UNSAT, UcResult, activate
from .formula import And, Globally, Implies, Not, Var, conjoin, free_vars
from .sat import CnfBuilder
from .tableau import build_automaton, is_primed, unprime
from .translations import END, ltlf_to_ltl
from .util import Deadline, DeadlineExceeded


def end_padding_axiom(f):
    """G(end -> all variables false).

    The end-encoding never reads a variable at or after the position where
    `end` rises, so pinning the padding region is satisfiability-preserving;
    it keeps the simple-path diameter small, which is what lets the
    completeness query converge.
    """
    names = [v for v in free_vars(f) if v != END.name]
    if not names:
        return None
    return Globally(Implies(END, conjoin([Not(Var(v)) for v in names])))


class Unrolling:
    """Instantiates an automaton's formulas at integer time steps."""

    def __init__(self, aut):
        self.aut = aut
        self.builder = CnfBuilder()

    def at(self, name, step):
        if is_primed(name):
            return self.builder.var_for((unprime(name), step + 1))
        return self.builder.var_for((name, step))

    def lit(self, f, step, tag):
        return self.builder.encode(
            f, lambda v: self.at(v.name, step), ctx=(tag, step))

    def init_lit(self):
        return self.lit(self.aut.init, 0, "i")

    def trans_lit(self, step):
        return self.lit(self.aut.trans, step, "t")


def _distinct_vars(aut):
    """Variables that the transition relation actually constrains; state
    distinctness is checked over these."""
    names = set(free_vars(aut.init))
    for v in free_vars(aut.trans):
        names.add(unprime(v))
    for f in aut.fairness:
        names.update(free_vars(f))
    return [n for n in aut.var_order if n in names]


def check_complete(aut, assumption_names, k):
    """Simple-path query at bound k.  Returns ('sat', None) or
    ('unsat', failed assumption names)."""
    un = Unrolling(aut)
    b = un.builder
    b.add_clause([un.init_lit()])
    for i in range(k):
        b.add_clause([un.trans_lit(i)])
    dvars = [n for n in _distinct_vars(aut) if n not in assumption_names]
    for i in range(k + 1):
        for j in range(i + 1, k + 1):
            clause = []
            for v in dvars:
                d = b.new_var()
                vi, vj = b.var_for((v, i)), b.var_for((v, j))
                b.add_clause([-d, vi, vj])
                b.add_clause([-d, -vi, -vj])
                clause.append(d)
            b.add_clause(clause if clause else [])
    assumptions = {b.var_for((a, 0)): a for a in assumption_names}
    outcome = b.build_solver().solve(sorted(assumptions))
    if outcome.status == "sat":
        return "sat", None
    return "unsat", [assumptions[l] for l in outcome.failed if l in assumptions]


def check_witness(aut, assumption_names, k):
    """Lasso query at bound k.  Returns the k+2 unrolled states (dicts over
    the automaton alphabet) when satisfiable, else None."""
    un = Unrolling(aut)
    b = un.builder
    b.add_clause([un.init_lit()])
    for i in range(k + 1):
        b.add_clause([un.trans_lit(i)])
    for a in assumption_names:
        b.add_clause([b.var_for((a, 0))])
    selectors = [b.new_var() for _ in range(k + 1)]
    b.add_clause(selectors)
    for x in range(len(selectors)):
        for y in range(x + 1, len(selectors)):
            b.add_clause([-selectors[x], -selectors[y]])
    loop_vars = aut.var_order
    for j, sel in enumerate(selectors):
        for v in loop_vars:
            vk1, vj = b.var_for((v, k + 1)), b.var_for((v, j))
            b.add_clause([-sel, -vk1, vj])
            b.add_clause([-sel, vk1, -vj])
        for f in aut.fairness:
            fair_lits = [un.lit(f, i, "f") for i in range(j, k + 1)]
            b.add_clause([-sel] + fair_lits)
    outcome = b.build_solver().solve()
    if outcome.status != "sat":
        return None
    states = []
    for i in range(k + 2):
        states.append({v: outcome.model.get(b.var_for((v, i)), False)
                       for v in aut.alphabet})
    return states


def bounded_uc(aut, assumption_names, k_max=50, deadline=None):
    """Iterate the two queries up to k_max.

    Returns a dict: status 'sat' (with unrolled states), 'unsat' (with
    failed assumption names), or 'unknown'; plus the bound reached.
    """
    deadline = deadline or Deadline(None)
    for k in range(k_max + 1):
        deadline.check()
        status, failed = check_complete(aut, assumption_names, k)
        if status == "unsat":
            return {"status": "unsat", "failed": failed, "k": k}
        deadline.check()
        states = check_witness(aut, assumption_names, k)
        if states is not None:
            return {"status": "sat", "states": states, "k": k}
    return {"status": "unknown", "k": k_max}


def finite_witness(states, alphabet):
    """Cut an infinite-trace model of the `end`-encoding back to a finite
    trace over the original alphabet."""
    stop = next(i for i, st in enumerate(states) if st.get("end", False))
    return [{v: st.get(v, False) for v in alphabet} for st in states[:stop]]


def algorithm2_uc(spec, k_max=50, timeout=None):
    """Bounded model checking over the end-encoded guarded conjunction."""
    t0 = time.perf_counter()
    deadline = Deadline(timeout)
    act = activate(spec)
    encoded = ltlf_to_ltl(act.psi)
    pad = end_padding_axiom(act.psi)
    if pad is not None:
        encoded = And(encoded, pad)
    aut = build_automaton(encoded, activation_names=act.activation_names)
    try:
        res = bounded_uc(aut, act.activation_names, k_max=k_max,
                         deadline=deadline)
    except DeadlineExceeded:
        return UcResult(UNKNOWN, "bmc", elapsed=time.perf_counter() - t0,
                        detail="timeout")
    elapsed = time.perf_counter() - t0
    if res["status"] == "sat":
        witness = finite_witness(res["states"], spec.alphabet)
        return UcResult(SAT, "bmc", witness=witness, elapsed=elapsed,
                        k_reached=res["k"])
    if res["status"] == "unsat":
        core = act.labels_for(res["failed"])
        if not core:
            # the simple-path query closed without blaming any guard;
            # fall back to the whole conjunction, which is then unsatisfiable
            core = list(spec.labels)
        return UcResult(UNSAT, "bmc", core=core, elapsed=elapsed,
                        k_reached=res["k"])
    return UcResult(UNKNOWN, "bmc", elapsed=elapsed, k_reached=res["k"],
                    detail="bound %d exhausted" % k_max)
