"""Finite-trace evaluation and a slow-but-trusted satisfiability oracle.

A trace is a nonempty list of states; each state is a dict from variable
name to bool (missing names read as false).

The oracle decides satisfiability by exhaustive tableau search after past
removal.  It is meant for cross-checking the real decision procedures on
small inputs, so it prefers obvious correctness over speed, and it raises
OracleBudgetError rather than guess when its exploration budget runs out.
"""

from collections import deque
from dataclasses import dataclass

from .formula import Binary, Const, Unary, Var, conjoin, free_vars
from .translations import remove_past, to_nnf


def evaluate(f, trace, i=0):
    """Truth value of f at position i of the given finite trace."""
    n = len(trace)
    if n == 0:
        raise ValueError("traces are nonempty by definition")
    if not 0 <= i < n:
        raise IndexError("position %d outside trace of length %d" % (i, n))
    memo = {}

    def ev(g, j):
        key = (g, j)
        if key in memo:
            return memo[key]
        memo[key] = out = _ev(g, j)
        return out

    def _ev(g, j):
        if isinstance(g, Var):
            return bool(trace[j].get(g.name, False))
        if isinstance(g, Const):
            return g.value
        if isinstance(g, Unary):
            a = g.arg
            if g.op == "!":
                return not ev(a, j)
            if g.op == "X":
                return j + 1 < n and ev(a, j + 1)
            if g.op == "N":
                return j + 1 >= n or ev(a, j + 1)
            if g.op == "F":
                return any(ev(a, k) for k in range(j, n))
            if g.op == "G":
                return all(ev(a, k) for k in range(j, n))
            if g.op == "Y":
                return j > 0 and ev(a, j - 1)
            if g.op == "Z":
                return j == 0 or ev(a, j - 1)
            if g.op == "O":
                return any(ev(a, k) for k in range(0, j + 1))
            if g.op == "H":
                return all(ev(a, k) for k in range(0, j + 1))
        if isinstance(g, Binary):
            a, b = g.left, g.right
            if g.op == "&":
                return ev(a, j) and ev(b, j)
            if g.op == "|":
                return ev(a, j) or ev(b, j)
            if g.op == "->":
                return (not ev(a, j)) or ev(b, j)
            if g.op == "<->":
                return ev(a, j) == ev(b, j)
            if g.op == "U":
                return any(
                    ev(b, k) and all(ev(a, m) for m in range(j, k))
                    for k in range(j, n)
                )
            if g.op == "R":
                return all(
                    ev(b, k) or any(ev(a, m) for m in range(j, k))
                    for k in range(j, n)
                )
            if g.op == "S":
                return any(
                    ev(b, k) and all(ev(a, m) for m in range(k + 1, j + 1))
                    for k in range(j, -1, -1)
                )
            if g.op == "T":
                return all(
                    ev(b, k) or any(ev(a, m) for m in range(k + 1, j + 1))
                    for k in range(j, -1, -1)
                )
        raise TypeError("not a formula: %r" % (g,))

    return ev(f, i)


class OracleBudgetError(RuntimeError):
    """The oracle ran out of exploration budget before reaching a verdict."""


@dataclass
class OracleResult:
    status: str  # "sat" or "unsat"
    witness: list | None = None  # shortest model when sat


def _expand(obligations):
    """Saturate an obligation set into disjunctive branches.

    Each branch is (literals, strong, weak): a partial assignment that must
    hold now, obligations under a strong next, and obligations under a weak
    next.  Branches with contradictory literals are dropped.  The input must
    be a future-only NNF formula set.
    """
    branches = [({}, frozenset(), frozenset(), tuple(sorted(obligations, key=str)))]
    done = []
    while branches:
        lits, strong, weak, pending = branches.pop()
        if not pending:
            done.append((lits, strong, weak))
            continue
        g, rest = pending[0], pending[1:]
        if isinstance(g, Const):
            if g.value:
                branches.append((lits, strong, weak, rest))
            continue
        if isinstance(g, Var) or (isinstance(g, Unary) and g.op == "!"):
            name, val = (g.name, True) if isinstance(g, Var) else (g.arg.name, False)
            if lits.get(name, val) != val:
                continue  # contradiction
            new = dict(lits)
            new[name] = val
            branches.append((new, strong, weak, rest))
            continue
        if isinstance(g, Unary):
            if g.op == "X":
                branches.append((lits, strong | {g.arg}, weak, rest))
                continue
            if g.op == "N":
                branches.append((lits, strong, weak | {g.arg}, rest))
                continue
            if g.op == "F":
                branches.append((lits, strong, weak, (g.arg,) + rest))
                branches.append((lits, strong | {g}, weak, rest))
                continue
            if g.op == "G":
                branches.append((lits, strong, weak | {g}, (g.arg,) + rest))
                continue
        if isinstance(g, Binary):
            if g.op == "&":
                branches.append((lits, strong, weak, (g.left, g.right) + rest))
                continue
            if g.op == "|":
                branches.append((lits, strong, weak, (g.left,) + rest))
                branches.append((lits, strong, weak, (g.right,) + rest))
                continue
            if g.op == "U":
                branches.append((lits, strong, weak, (g.right,) + rest))
                branches.append((lits, strong | {g}, weak, (g.left,) + rest))
                continue
            if g.op == "R":
                branches.append((lits, strong, weak, (g.right, g.left) + rest))
                branches.append((lits, strong, weak | {g}, (g.right,) + rest))
                continue
        raise ValueError("oracle expansion hit unexpected node %r" % (g,))
    # deduplicate
    uniq = {}
    for lits, strong, weak in done:
        key = (frozenset(lits.items()), strong, weak)
        uniq[key] = (lits, strong, weak)
    return list(uniq.values())


def oracle_sat(f, max_len=200, max_states=50000):
    """Decide finite-trace satisfiability of f by exhaustive tableau search.

    Returns OracleResult with a shortest witness when satisfiable.  Raises
    OracleBudgetError when the search exceeds max_len trace positions or
    max_states distinct tableau states without concluding; the oracle never
    reports an unreliable verdict.
    """
    rp = remove_past(f)
    g0 = to_nnf(rp.full())
    original = free_vars(f)

    start = frozenset([g0])
    expand_memo = {}

    def branches_of(state):
        if state not in expand_memo:
            expand_memo[state] = _expand(state)
        return expand_memo[state]

    def complete(lits):
        st = {v: False for v in original}
        st.update(lits)
        return {v: st[v] for v in original}

    parent = {start: None}
    frontier = deque([start])
    depth = 0
    while frontier:
        if depth > max_len:
            raise OracleBudgetError(
                "no verdict within %d trace positions" % max_len)
        next_frontier = deque()
        for state in frontier:
            for lits, strong, weak in branches_of(state):
                if not strong:
                    # accepting: weak obligations are discharged at the
                    # last state, so this branch ends the trace here
                    path = []
                    node = state
                    while parent[node] is not None:
                        node, assign = parent[node]
                        path.append(assign)
                    path.reverse()
                    witness = path + [complete(lits)]
                    assert evaluate(f, witness, 0), "oracle produced a bad witness"
                    return OracleResult("sat", witness)
            for lits, strong, weak in branches_of(state):
                succ = frozenset(strong | weak)
                if succ not in parent:
                    if len(parent) >= max_states:
                        raise OracleBudgetError(
                            "state budget of %d exhausted" % max_states)
                    parent[succ] = (state, complete(lits))
                    next_frontier.append(succ)
        frontier = next_frontier
        depth += 1
    return OracleResult("unsat")


def oracle_all_min_ucs(spec, max_len=200, max_states=50000):
    """All minimal unsatisfiable cores of a spec, as frozensets of labels.

    Brute force over label subsets in increasing size; supersets of a known
    core are skipped, so every returned set is minimal.
    """
    from itertools import combinations

    labels = spec.labels
    cores = []
    for size in range(1, len(labels) + 1):
        for combo in combinations(labels, size):
            cset = frozenset(combo)
            if any(c <= cset for c in cores):
                continue
            sub = conjoin(spec.restrict(combo).formulas)
            if oracle_sat(sub, max_len=max_len, max_states=max_states).status == "unsat":
                cores.append(cset)
    return set(cores)
