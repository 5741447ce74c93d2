"""A small CDCL SAT solver with assumptions, plus CNF plumbing.

Literals are nonzero ints in DIMACS convention: variable v appears as v
(positive) or -v (negative).  The solver implements two-watched-literal
propagation, first-UIP clause learning, variable activities, phase saving,
and Luby-sequence restarts.  `solve` takes a list of assumption literals;
when the problem is unsatisfiable under assumptions, `failed` holds a subset
of the assumptions whose conjunction already contradicts the clauses (it is
not minimized).  The solver is deterministic.
"""

import heapq
from dataclasses import dataclass

from .formula import Binary, Const, Unary


@dataclass
class SatOutcome:
    status: str  # "sat" or "unsat"
    model: dict | None = None  # var -> bool, when sat
    failed: list | None = None  # failed assumption literals, when unsat


def _idx(lit):
    return (abs(lit) << 1) | (lit < 0)


class Solver:
    def __init__(self):
        self.nvars = 0
        self.clauses = []
        self.learnts = []
        self.watches = [[], []]  # indexed by _idx(lit)
        self.assigns = [None]  # indexed by var
        self.level = [0]
        self.reason = [None]
        self.phase = [False]
        self.activity = [0.0]
        self.var_inc = 1.0
        self.order = []  # lazy max-heap of (-activity, var)
        self.trail = []
        self.trail_lim = []
        self.qhead = 0
        self.ok = True

    def new_var(self):
        self.nvars += 1
        v = self.nvars
        self.assigns.append(None)
        self.level.append(0)
        self.reason.append(None)
        self.phase.append(False)
        self.activity.append(0.0)
        self.watches.append([])
        self.watches.append([])
        heapq.heappush(self.order, (0.0, v))
        return v

    def ensure_var(self, v):
        while self.nvars < v:
            self.new_var()

    def value(self, lit):
        a = self.assigns[abs(lit)]
        if a is None:
            return None
        return a if lit > 0 else not a

    def add_clause(self, lits):
        """Add a clause; only valid before search (at decision level 0)."""
        assert not self.trail_lim, "clauses must be added at the root level"
        for lit in lits:
            self.ensure_var(abs(lit))
        # simplify: drop duplicate and false literals, detect tautologies
        out = []
        seen = set()
        for lit in lits:
            if -lit in seen:
                return True  # tautology
            if lit in seen:
                continue
            v = self.value(lit)
            if v is True:
                return True
            if v is False:
                continue
            seen.add(lit)
            out.append(lit)
        if not out:
            self.ok = False
            return False
        if len(out) == 1:
            if not self._enqueue(out[0], None):
                self.ok = False
                return False
            self.ok = self._propagate() is None and self.ok
            return self.ok
        self.clauses.append(out)
        self.watches[_idx(out[0])].append(out)
        self.watches[_idx(out[1])].append(out)
        return True

    # -- search machinery -------------------------------------------------

    def _enqueue(self, lit, reason):
        v = abs(lit)
        val = self.value(lit)
        if val is not None:
            return val
        self.assigns[v] = lit > 0
        self.level[v] = len(self.trail_lim)
        self.reason[v] = reason
        self.trail.append(lit)
        return True

    def _propagate(self):
        while self.qhead < len(self.trail):
            p = self.trail[self.qhead]
            self.qhead += 1
            ws = self.watches[_idx(-p)]
            i = j = 0
            n = len(ws)
            while i < n:
                c = ws[i]
                i += 1
                if c[0] == -p:
                    c[0], c[1] = c[1], c[0]
                first = c[0]
                if self.value(first) is True:
                    ws[j] = c
                    j += 1
                    continue
                moved = False
                for k in range(2, len(c)):
                    if self.value(c[k]) is not False:
                        c[1], c[k] = c[k], c[1]
                        self.watches[_idx(c[1])].append(c)
                        moved = True
                        break
                if moved:
                    continue
                ws[j] = c
                j += 1
                if self.value(first) is False:
                    while i < n:
                        ws[j] = ws[i]
                        j += 1
                        i += 1
                    del ws[j:]
                    self.qhead = len(self.trail)
                    return c
                self._enqueue(first, c)
            del ws[j:]
        return None

    def _bump(self, v):
        self.activity[v] += self.var_inc
        if self.activity[v] > 1e100:
            for u in range(1, self.nvars + 1):
                self.activity[u] *= 1e-100
            self.var_inc *= 1e-100
        heapq.heappush(self.order, (-self.activity[v], v))

    def _decay(self):
        self.var_inc /= 0.95

    def _pick_branch(self):
        while self.order:
            act, v = self.order[0]
            if self.assigns[v] is None and -act == self.activity[v]:
                return v
            heapq.heappop(self.order)
        for v in range(1, self.nvars + 1):
            if self.assigns[v] is None:
                return v
        return None

    def _new_level(self):
        self.trail_lim.append(len(self.trail))

    def _backtrack(self, lvl):
        if len(self.trail_lim) <= lvl:
            return
        bound = self.trail_lim[lvl]
        for lit in reversed(self.trail[bound:]):
            v = abs(lit)
            self.phase[v] = self.assigns[v]
            self.assigns[v] = None
            self.reason[v] = None
            heapq.heappush(self.order, (-self.activity[v], v))
        del self.trail[bound:]
        del self.trail_lim[lvl:]
        self.qhead = len(self.trail)

    def _analyze(self, confl):
        """First-UIP conflict analysis: returns (learnt clause, backjump level)."""
        cur = len(self.trail_lim)
        seen = bytearray(self.nvars + 1)
        learnt = [0]
        counter = 0
        p = 0  # the literal implied by the current reason clause
        idx = len(self.trail) - 1
        c = confl
        while True:
            for q in c:
                if q == p:
                    continue
                v = abs(q)
                if not seen[v] and self.level[v] > 0:
                    seen[v] = 1
                    self._bump(v)
                    if self.level[v] >= cur:
                        counter += 1
                    else:
                        learnt.append(q)
            while not seen[abs(self.trail[idx])]:
                idx -= 1
            p = self.trail[idx]
            idx -= 1
            seen[abs(p)] = 0
            counter -= 1
            if counter == 0:
                break
            c = self.reason[abs(p)]
        learnt[0] = -p
        if len(learnt) == 1:
            return learnt, 0
        back = max(self.level[abs(q)] for q in learnt[1:])
        # move a literal of the backjump level into the second watch slot
        for k in range(1, len(learnt)):
            if self.level[abs(learnt[k])] == back:
                learnt[1], learnt[k] = learnt[k], learnt[1]
                break
        return learnt, back

    def _analyze_final(self, p):
        """Assumptions responsible for assumption literal p being false."""
        out = {p}
        if not self.trail_lim:
            return out
        seen = bytearray(self.nvars + 1)
        seen[abs(p)] = 1
        for i in range(len(self.trail) - 1, self.trail_lim[0] - 1, -1):
            lit = self.trail[i]
            v = abs(lit)
            if not seen[v]:
                continue
            r = self.reason[v]
            if r is None:
                out.add(lit)
            else:
                for q in r:
                    if abs(q) != v and self.level[abs(q)] > 0:
                        seen[abs(q)] = 1
            seen[v] = 0
        return out

    @staticmethod
    def _luby(i):
        # the i-th term (1-based) of the Luby restart sequence
        k = 1
        while (1 << k) - 1 < i:
            k += 1
        while (1 << k) - 1 != i:
            k -= 1
            i -= (1 << k) - 1
        return 1 << (k - 1) if k else 1

    def solve(self, assumptions=()):
        assumptions = list(assumptions)
        for lit in assumptions:
            self.ensure_var(abs(lit))
        self._backtrack(0)
        if not self.ok or self._propagate() is not None:
            self.ok = False
            return SatOutcome("unsat", failed=[])
        restart = 1
        budget = 100 * self._luby(restart)
        conflicts = 0
        while True:
            confl = self._propagate()
            if confl is not None:
                if not self.trail_lim:
                    self.ok = False
                    return SatOutcome("unsat", failed=[])
                conflicts += 1
                learnt, back = self._analyze(confl)
                # never backjump into the middle of the assumption prefix in
                # a way that loses the learnt unit: clamp like a restart
                self._backtrack(back)
                if len(learnt) == 1:
                    if not self._enqueue(learnt[0], None):
                        self.ok = False
                        return SatOutcome("unsat", failed=[])
                else:
                    self.learnts.append(learnt)
                    self.watches[_idx(learnt[0])].append(learnt)
                    self.watches[_idx(learnt[1])].append(learnt)
                    self._enqueue(learnt[0], learnt)
                self._decay()
                continue
            if conflicts >= budget:
                conflicts = 0
                restart += 1
                budget = 100 * self._luby(restart)
                self._backtrack(0)
                continue
            if len(self.trail_lim) < len(assumptions):
                p = assumptions[len(self.trail_lim)]
                val = self.value(p)
                if val is False:
                    failed = sorted(self._analyze_final(p), key=abs)
                    self._backtrack(0)
                    return SatOutcome("unsat", failed=failed)
                self._new_level()
                if val is None:
                    self._enqueue(p, None)
                continue
            v = self._pick_branch()
            if v is None:
                model = {u: bool(self.assigns[u]) for u in range(1, self.nvars + 1)
                         if self.assigns[u] is not None}
                for u in range(1, self.nvars + 1):
                    model.setdefault(u, self.phase[u])
                self._backtrack(0)
                return SatOutcome("sat", model=model)
            self._new_level()
            self._enqueue(v if self.phase[v] else -v, None)


# -- CNF construction ------------------------------------------------------


class CnfBuilder:
    """Tseitin transformation of formula trees into clauses.

    Boolean structure is encoded with definitional variables; leaves are
    resolved through a caller-supplied atom function, so the same formula
    can be instantiated at several time steps.  Gate definitions are full
    biconditionals, hence always satisfiable on their own: a model of the
    clauses restricted to the atom variables satisfies the source formula
    whenever the root literal is asserted.
    """

    def __init__(self):
        self.nvars = 0
        self.clauses = []
        self.names = {}
        self.cache = {}
        self._true = None

    def new_var(self):
        self.nvars += 1
        return self.nvars

    def var_for(self, name):
        if name not in self.names:
            self.names[name] = self.new_var()
        return self.names[name]

    def add_clause(self, lits):
        self.clauses.append(list(lits))

    def true_lit(self):
        if self._true is None:
            self._true = self.new_var()
            self.add_clause([self._true])
        return self._true

    def encode(self, f, atom, ctx=None):
        """Return a literal equivalent to f; `atom(node)` maps leaves to
        literals.  `ctx` keys the structural cache (e.g. the time step)."""
        key = (f, ctx)
        if key in self.cache:
            return self.cache[key]
        lit = self._encode(f, atom, ctx)
        self.cache[key] = lit
        return lit

    def _encode(self, f, atom, ctx):
        if isinstance(f, Const):
            t = self.true_lit()
            return t if f.value else -t
        if isinstance(f, Unary) and f.op == "!":
            return -self.encode(f.arg, atom, ctx)
        if isinstance(f, Binary) and f.op in ("&", "|", "->", "<->"):
            a = self.encode(f.left, atom, ctx)
            b = self.encode(f.right, atom, ctx)
            if f.op == "->":
                a = -a
            v = self.new_var()
            if f.op in ("&",):
                self.add_clause([-v, a])
                self.add_clause([-v, b])
                self.add_clause([v, -a, -b])
            elif f.op in ("|", "->"):
                self.add_clause([-v, a, b])
                self.add_clause([v, -a])
                self.add_clause([v, -b])
            else:  # <->
                self.add_clause([-v, -a, b])
                self.add_clause([-v, a, -b])
                self.add_clause([v, a, b])
                self.add_clause([v, -a, -b])
            return v
        # anything else (variables, temporal atoms) is the caller's business
        return atom(f)

    def build_solver(self):
        s = Solver()
        s.ensure_var(self.nvars)
        for c in self.clauses:
            if not s.add_clause(c):
                break
        return s


def to_dimacs(nvars, clauses):
    lines = ["p cnf %d %d" % (nvars, len(clauses))]
    for c in clauses:
        lines.append(" ".join(str(l) for l in c) + " 0")
    return "\n".join(lines) + "\n"


def parse_dimacs(text):
    nvars = 0
    clauses = []
    cur = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            nvars = int(parts[2])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(cur)
                cur = []
            else:
                cur.append(lit)
    if cur:
        clauses.append(cur)
    return nvars, clauses
