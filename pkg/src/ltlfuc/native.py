"""Native finite-trace decision procedure with core extraction.

After past removal, the guarded conjunction is normal-formed so that every
temporal obligation sits under a strong (X) or weak (N) next.  A state of
the search is the set of obligations pending at the current position:

* a state is final under an assignment when every obligation evaluates to
  true with X-atoms read as false and N-atoms as true (the trace may stop);
* a transition picks an assignment satisfying the obligations' propositional
  parts and hands the bodies of the asserted next-atoms to the successor.

The search does iterative deepening over the witness length.  Every failed
SAT query yields (a) activation literals, accumulated into the reported
core, and (b) an obligation cube that generalizes the failure: any state
containing the cube cannot reach a final state within the current depth.
Cubes are pushed to higher levels IC3-style; when some level ends up with
no cube of exactly that level while the initial state keeps failing, the
blocked region is inductive and the spec is unsatisfiable.
"""

import time

from .activation import SAT, UNKNOWN, UNSAT, UcResult, activate
from .formula import Binary, Const, Unary, Var, conjuncts
from .sat import CnfBuilder
from .translations import remove_past, to_nnf, xnf
from .util import Deadline, DeadlineExceeded


class TransitionState:
    """An obligation set plus the propositional layer it was reached with."""

    def __init__(self, obligations, assignment=None):
        self.obligations = frozenset(obligations)
        self.assignment = dict(assignment or {})

    def __eq__(self, other):
        return (isinstance(other, TransitionState)
                and self.obligations == other.obligations)

    def __hash__(self):
        return hash(self.obligations)


def _next_atoms(g):
    """X/N atoms of the normal form of g, in deterministic order."""
    out = []
    seen = set()
    stack = [xnf(g)]
    while stack:
        h = stack.pop()
        if h in seen:
            continue
        seen.add(h)
        if isinstance(h, Unary):
            if h.op in ("X", "N"):
                out.append(h)
                continue
            stack.append(h.arg)
        elif isinstance(h, Binary):
            stack.append(h.right)
            stack.append(h.left)
    return sorted(out, key=str)


def is_final(state):
    """Whether the trace may stop at this state: every obligation holds
    under the state's assignment with strong nexts false and weak nexts
    true."""

    def ev(g):
        if isinstance(g, Var):
            return bool(state.assignment.get(g.name, False))
        if isinstance(g, Const):
            return g.value
        if isinstance(g, Unary):
            if g.op == "!":
                return not ev(g.arg)
            if g.op == "X":
                return False
            if g.op == "N":
                return True
        if isinstance(g, Binary):
            if g.op == "&":
                return ev(g.left) and ev(g.right)
            if g.op == "|":
                return ev(g.left) or ev(g.right)
        raise TypeError("unexpected node in normal form: %r" % (g,))

    return all(ev(xnf(g)) for g in state.obligations)


class _Engine:
    def __init__(self, aspec, deadline):
        self.aspec = aspec
        self.deadline = deadline
        rp = remove_past(aspec.psi)
        self.phi = to_nnf(rp.full())
        self.initial = frozenset(conjuncts(self.phi))
        self.builder = CnfBuilder()
        self.roots = {}  # obligation -> root literal of its encoding
        self.atoms = {}  # obligation -> its X/N atoms
        self.bodies = set()  # formulas that can appear in successor states
        self.m_lit = {}  # body -> literal meaning "body is a next obligation"
        self.all_atoms = set()
        self.cubes = {}  # frozenset of bodies -> level
        self.core_labels = set()
        self.a_lits = {self.builder.var_for(("v", a)): a
                       for a in aspec.activation_names}
        # close the obligation universe so every body has an indicator
        work = list(self.initial)
        seen = set(work)
        while work:
            g = work.pop()
            for t in self._atoms_of(g):
                if t.arg not in seen:
                    seen.add(t.arg)
                    work.append(t.arg)
        for g in seen:
            if g in self.bodies:
                self._m_for(g)

    def _atom_lit(self, t):
        return self.builder.var_for(("n", t))

    def _atoms_of(self, g):
        if g not in self.atoms:
            self.atoms[g] = _next_atoms(g)
            for t in self.atoms[g]:
                self.bodies.add(t.arg)
                self.all_atoms.add(t)
        return self.atoms[g]

    def _root_of(self, g):
        if g not in self.roots:
            def atom(node):
                if isinstance(node, Var):
                    return self.builder.var_for(("v", node.name))
                if isinstance(node, Unary) and node.op in ("X", "N"):
                    return self._atom_lit(node)
                raise TypeError("unexpected leaf %r" % (node,))
            self.roots[g] = self.builder.encode(xnf(g), atom)
            self._atoms_of(g)
        return self.roots[g]

    def _m_for(self, body):
        """Indicator literal: 'body is among the successor's obligations',
        i.e. some X/N atom with this body is asserted."""
        if body not in self.m_lit:
            forms = [t for t in (Unary("X", body), Unary("N", body))
                     if t in self.all_atoms]
            lits = [self._atom_lit(t) for t in forms] or [self.builder.new_var()]
            m = self.builder.new_var()
            self.builder.add_clause([-m] + lits)
            for l in lits:
                self.builder.add_clause([m, -l])
            self.m_lit[body] = m
        return self.m_lit[body]

    def _solver(self, blocking_level):
        s = self.builder.build_solver()
        if blocking_level is not None:
            for cube, level in self.cubes.items():
                if level >= blocking_level:
                    s.add_clause([-self._m_for(g) for g in cube])
        return s

    def _query(self, obligations, blocking_level, final):
        self.deadline.check()
        assumptions = []
        for g in sorted(obligations, key=str):
            assumptions.append(self._root_of(g))
        assumptions.extend(sorted(self.a_lits))
        forced = {}
        if final:
            for g in obligations:
                for t in self._atoms_of(g):
                    lit = self._atom_lit(t)
                    forced[lit if t.op == "N" else -lit] = t
            assumptions.extend(sorted(forced, key=abs))
        out = self._solver(blocking_level).solve(assumptions)
        if out.status == "sat":
            return out.model, None
        failed = set(out.failed)
        for lit, label_name in self.a_lits.items():
            if lit in failed:
                self.core_labels.add(self.aspec.labels_for([label_name])[0])
        cube = frozenset(g for g in obligations if self._root_of(g) in failed)
        return None, cube

    def _assignment(self, model):
        out = {}
        for key, var in self.builder.names.items():
            if key[0] == "v":
                out[key[1]] = model.get(var, False)
        return out

    def _successors(self, model, obligations):
        nxt = set()
        for g in obligations:
            for t in self._atoms_of(g):
                if model.get(self._atom_lit(t), False):
                    nxt.add(t.arg)
        return frozenset(nxt)

    def _learn(self, cube, level):
        if not cube or not all(g in self.bodies for g in cube):
            return  # not expressible over successor indicators
        for g in cube:
            self._m_for(g)
        if self.cubes.get(cube, -1) < level:
            self.cubes[cube] = level

    def reach(self, obligations, k):
        """A trace of length k+1 satisfying the obligations, or None (in
        which case a generalizing cube has been learned)."""
        model, final_cube = self._query(obligations, None, final=True)
        if model is not None:
            return [self._assignment(model)]
        if k == 0:
            self._learn(final_cube, 0)
            return None
        while True:
            model, trans_cube = self._query(obligations, k - 1, final=False)
            if model is None:
                self._learn(final_cube | trans_cube, k)
                return None
            succ = self._successors(model, obligations)
            rest = self.reach(succ, k - 1)
            if rest is not None:
                return [self._assignment(model)] + rest
            # the child learned a cube at level k-1; retry the query

    def _propagate(self, max_level):
        """Push cubes to higher levels while their successor query stays
        unsatisfiable.  A cube already certifies non-finality (it contains
        the final-test core it was learned from), so only the transition
        side needs rechecking."""
        for cube in sorted(self.cubes,
                           key=lambda c: (self.cubes[c], sorted(map(str, c)))):
            while self.cubes[cube] < max_level:
                model, _ = self._query(cube, self.cubes[cube], final=False)
                if model is not None:
                    break
                self.cubes[cube] += 1

    def _converged(self, failed_level):
        taken = set(self.cubes.values())
        for j in range(failed_level):
            if j not in taken:
                return True
        return False


def algorithm3_uc(spec, max_level=100, timeout=None):
    """Iterative-deepening obligation-set search with cube learning."""
    t0 = time.perf_counter()
    deadline = Deadline(timeout)
    act = activate(spec)
    eng = _Engine(act, deadline)
    try:
        for level in range(max_level + 1):
            trace = eng.reach(eng.initial, level)
            if trace is not None:
                witness = [{v: st.get(v, False) for v in spec.alphabet}
                           for st in trace]
                return UcResult(SAT, "native", witness=witness,
                                elapsed=time.perf_counter() - t0,
                                k_reached=level)
            eng._propagate(level)
            if eng._converged(level):
                core = sorted(eng.core_labels,
                              key=spec.labels.index) if eng.core_labels \
                    else list(spec.labels)
                return UcResult(UNSAT, "native", core=core,
                                elapsed=time.perf_counter() - t0,
                                k_reached=level)
    except DeadlineExceeded:
        return UcResult(UNKNOWN, "native",
                        elapsed=time.perf_counter() - t0, detail="timeout")
    return UcResult(UNKNOWN, "native", elapsed=time.perf_counter() - t0,
                    k_reached=max_level, detail="depth budget exhausted")
