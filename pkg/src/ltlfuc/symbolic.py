"""BDD-based satisfiability and core extraction.

The spec's guarded conjunction is reduced to an infinite-trace formula,
compiled to a symbolic automaton, and checked for nonemptiness with the
Emerson-Lei fair-states fixpoint.  Projecting the denotation onto the
activation variables and negating yields the full set of unsatisfiable
conjunct subsets in one BDD; cores are read off as cubes.
"""

import time

from .activation import SAT, UNKNOWN, UNSAT, UcResult, activate
from .bdd import Bdd, BddBudgetError
from .formula import Binary, Const, Unary, Var
from .tableau import build_automaton, primed
from .translations import ltlf_to_ltl
from .util import Deadline, DeadlineExceeded


class BddAutomaton:
    """An Automaton instantiated over a BDD manager.

    Variables are ordered as the automaton suggests; each name takes two
    adjacent levels (current at 2k, primed at 2k+1), so priming is an
    order-preserving level shift.
    """

    def __init__(self, aut, node_budget=5_000_000):
        self.aut = aut
        self.mgr = Bdd(node_budget=node_budget)
        self.levels = {}
        for k, name in enumerate(aut.var_order):
            self.levels[name] = 2 * k
            self.levels[primed(name)] = 2 * k + 1
        self.current_levels = frozenset(
            self.levels[n] for n in aut.var_order)
        self.primed_levels = frozenset(
            self.levels[primed(n)] for n in aut.var_order)
        self.shift_up = {self.levels[n]: self.levels[primed(n)]
                         for n in aut.var_order}
        self.init = self.build(aut.init)
        self.trans = self.build(aut.trans)
        self.fairness = [self.build(g) for g in aut.fairness]

    def build(self, f):
        m = self.mgr
        if isinstance(f, Var):
            return m.var(self.levels[f.name])
        if isinstance(f, Const):
            return m.const(f.value)
        if isinstance(f, Unary) and f.op == "!":
            return m.not_(self.build(f.arg))
        if isinstance(f, Binary):
            a, b = self.build(f.left), self.build(f.right)
            if f.op == "&":
                return m.and_(a, b)
            if f.op == "|":
                return m.or_(a, b)
            if f.op == "->":
                return m.implies(a, b)
            if f.op == "<->":
                return m.iff(a, b)
        raise TypeError("automaton formulas are boolean, got %r" % (f,))

    def ex(self, z):
        """States with a transition into z."""
        zp = self.mgr.rename(z, self.shift_up)
        return self.mgr.exists(self.mgr.and_(self.trans, zp),
                               self.primed_levels)

    def eu(self, z, goal):
        """States with a path inside z reaching goal (E[z U goal])."""
        y = goal
        while True:
            y2 = self.mgr.or_(goal, self.mgr.and_(z, self.ex(y)))
            if y2 == y:
                return y
            y = y2

    def fair_states(self, deadline=None):
        """Greatest fixpoint of the Emerson-Lei operator: states from which
        some path visits every fairness constraint infinitely often."""
        m = self.mgr
        z = m.TRUE
        while True:
            if deadline is not None:
                deadline.check()
            z2 = m.TRUE
            for f in self.fairness:
                z2 = m.and_(z2, self.ex(self.eu(z, m.and_(z, f))))
            if z2 == z:
                return z
            z = z2


def algorithm1_uc(spec, mode="pick_one", node_budget=5_000_000, timeout=None):
    """Decide spec and extract cores symbolically.

    mode: 'pick_one' returns one core (BDD cube, don't-cares dropped);
    'all' additionally enumerates every unsatisfiable subset;
    'minimum' returns a smallest-cardinality core.
    """
    if mode not in ("pick_one", "all", "minimum"):
        raise ValueError("unknown mode %r" % mode)
    t0 = time.perf_counter()
    deadline = Deadline(timeout)
    act = activate(spec)
    try:
        aut = build_automaton(ltlf_to_ltl(act.psi),
                              activation_names=act.activation_names)
        ba = BddAutomaton(aut, node_budget=node_budget)
        den = ba.mgr.and_(ba.init, ba.fair_states(deadline))
        a_levels = frozenset(ba.levels[a] for a in act.activation_names)
        ucs = ba.mgr.not_(ba.mgr.exists(den, ba.current_levels - a_levels))
    except BddBudgetError:
        return UcResult(UNKNOWN, "bdd", elapsed=time.perf_counter() - t0,
                        detail="node budget exceeded")
    except DeadlineExceeded:
        return UcResult(UNKNOWN, "bdd", elapsed=time.perf_counter() - t0,
                        detail="timeout")

    level_name = {ba.levels[a]: a for a in act.activation_names}
    if ucs == ba.mgr.FALSE:
        return UcResult(SAT, "bdd", elapsed=time.perf_counter() - t0)

    def labels_of(true_levels):
        return act.labels_for([level_name[l] for l in true_levels])

    if mode == "pick_one":
        cube = ba.mgr.pick_cube(ucs)
        core = labels_of([l for l, v in cube.items() if v])
    elif mode == "minimum":
        best = None
        for cube in ba.mgr.cubes(ucs):
            trues = [l for l, v in cube.items() if v]
            if best is None or len(trues) < len(best):
                best = trues
        core = labels_of(best)
    else:
        all_sets = ba.mgr.assignments(ucs, a_levels)
        cores = sorted((labels_of(s) for s in all_sets),
                       key=lambda c: (len(c), c))
        return UcResult(UNSAT, "bdd", core=cores[0], all_cores=cores,
                        elapsed=time.perf_counter() - t0)
    return UcResult(UNSAT, "bdd", core=core,
                    elapsed=time.perf_counter() - t0)
