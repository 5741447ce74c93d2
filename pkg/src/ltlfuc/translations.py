"""Formula transformations shared by the decision procedures.

* to_nnf: negation normal form over finite-trace duals.
* xnf: neXt normal form; every temporal obligation is guarded by X or N.
* ftol / ltlf_to_ltl: finite-trace to infinite-trace reduction using the
  distinguished `end` variable.
* remove_past: replaces past operators with fresh monitored variables, giving
  an equisatisfiable future-only formula.
"""

from dataclasses import dataclass

from .formula import (
    And,
    Binary,
    Const,
    Eventually,
    FALSE,
    Formula,
    Globally,
    Implies,
    Next,
    Not,
    Or,
    RESERVED_NAME,
    Since,
    TRUE,
    Unary,
    Var,
    WeakNext,
    conjoin,
    free_vars,
    subformulas,
)

END = Var(RESERVED_NAME)


def to_nnf(f):
    """Push negations down to variables using finite-trace dualities.

    Implications and biconditionals are expanded away.  The strong/weak
    pairs (X,N), (F,G), (U,R), (Y,Z), (O,H), (S,T) are dual under negation
    on finite traces.
    """
    return _nnf(f, False)


_UNARY_DUAL = {"X": "N", "N": "X", "F": "G", "G": "F",
               "Y": "Z", "Z": "Y", "O": "H", "H": "O"}
_BINARY_DUAL = {"U": "R", "R": "U", "S": "T", "T": "S"}


def _nnf(f, neg):
    if isinstance(f, Var):
        return Not(f) if neg else f
    if isinstance(f, Const):
        return Const(f.value != neg)
    if isinstance(f, Unary):
        if f.op == "!":
            return _nnf(f.arg, not neg)
        op = _UNARY_DUAL[f.op] if neg else f.op
        return Unary(op, _nnf(f.arg, neg))
    if isinstance(f, Binary):
        a, b = f.left, f.right
        if f.op == "&":
            op = "|" if neg else "&"
            return Binary(op, _nnf(a, neg), _nnf(b, neg))
        if f.op == "|":
            op = "&" if neg else "|"
            return Binary(op, _nnf(a, neg), _nnf(b, neg))
        if f.op == "->":
            return _nnf(Or(Not(a), b), neg)
        if f.op == "<->":
            return _nnf(Or(And(a, b), And(Not(a), Not(b))), neg)
        op = _BINARY_DUAL[f.op] if neg else f.op
        return Binary(op, _nnf(a, neg), _nnf(b, neg))
    raise TypeError("not a formula: %r" % (f,))


def _mk_and(a, b):
    if a == TRUE:
        return b
    if b == TRUE:
        return a
    if a == FALSE or b == FALSE:
        return FALSE
    return And(a, b)


def _mk_or(a, b):
    if a == FALSE:
        return b
    if b == FALSE:
        return a
    if a == TRUE or b == TRUE:
        return TRUE
    return Or(a, b)


def xnf(f):
    """Rewrite a future-only formula so that every temporal obligation sits
    under an X (strong next) or N (weak next) guard.  The input is first put
    in negation normal form.  Past operators are not supported here.
    """
    return _xnf(to_nnf(f))


def _xnf(f):
    if isinstance(f, (Var, Const)):
        return f
    if isinstance(f, Unary):
        if f.op == "!":
            return f  # literal in NNF
        if f.op in ("X", "N"):
            return f
        if f.op == "F":
            return _mk_or(_xnf(f.arg), Next(f))
        if f.op == "G":
            return _mk_and(_xnf(f.arg), WeakNext(f))
        raise ValueError("xnf requires a future-only formula, found %s" % f.op)
    if isinstance(f, Binary):
        if f.op == "&":
            return _mk_and(_xnf(f.left), _xnf(f.right))
        if f.op == "|":
            return _mk_or(_xnf(f.left), _xnf(f.right))
        if f.op == "U":
            return _mk_or(_xnf(f.right), _mk_and(_xnf(f.left), Next(f)))
        if f.op == "R":
            return _mk_and(_xnf(f.right), _mk_or(_xnf(f.left), WeakNext(f)))
        raise ValueError("xnf requires a future-only formula, found %s" % f.op)
    raise TypeError("not a formula: %r" % (f,))


def ftol(f):
    """Finite-to-infinite translation of the temporal operators.

    Future operators are relativized to the region before `end`; past
    operators translate homomorphically.  The input must not mention `end`.
    """
    if RESERVED_NAME in free_vars(f):
        raise ValueError("input already mentions the reserved variable 'end'")
    return _ftol(f)


def _ftol(f):
    if isinstance(f, (Var, Const)):
        return f
    if isinstance(f, Unary):
        g = _ftol(f.arg)
        if f.op == "!":
            return Not(g)
        if f.op == "X":
            return Next(And(g, Not(END)))
        if f.op == "N":
            return Next(Or(g, END))
        if f.op == "F":
            return Eventually(And(g, Not(END)))
        if f.op == "G":
            return Globally(Or(g, END))
        return Unary(f.op, g)  # past operators pass through
    if isinstance(f, Binary):
        a, b = _ftol(f.left), _ftol(f.right)
        if f.op == "U":
            return Binary("U", a, And(b, Not(END)))
        if f.op == "R":
            return Binary("R", And(a, Not(END)), Or(b, END))
        return Binary(f.op, a, b)
    raise TypeError("not a formula: %r" % (f,))


def ltlf_to_ltl(f):
    """Reduce finite-trace satisfiability to infinite-trace satisfiability.

    The encoding keeps `end` false at the first position (traces are
    nonempty), forces it to eventually rise and then stay up, and
    relativizes f to the prefix before it.
    """
    return conjoin([
        Not(END),
        Eventually(END),
        Globally(Implies(END, Next(END))),
        ftol(f),
    ])


@dataclass(frozen=True)
class PastRemoval:
    """Result of remove_past.

    formula: future-only translation of the input.
    monitors: constraints tying each fresh variable to the past subformula
        it replaces; the conjunction formula & monitors is equisatisfiable
        with the input and agrees with it on the original variables.
    fresh: fresh variable name -> the past subformula it tracks.
    """

    formula: Formula
    monitors: tuple
    fresh: dict

    def full(self):
        return conjoin([self.formula] + list(self.monitors))


def remove_past(f):
    """Eliminate past operators from f.

    Each distinct Y- or S-subformula gets a fresh variable p holding its
    value shifted one step into the future (p is false at the first state).
    The monitor G((X p -> v) & (v -> N p)) pins p to the defining value v at
    every step that has a successor and constrains nothing at the last
    state, so satisfiability over finite traces is preserved.  Z, O, H and T
    are reduced to Y and S first.
    """
    used = set(free_vars(f))
    for g in subformulas(f):
        if isinstance(g, Var):
            used.add(g.name)

    state = {"n": 0}
    monitors = []
    fresh = {}
    memo = {}
    past_memo = {}

    def fresh_var(origin):
        state["n"] += 1
        name = "_p%d" % state["n"]
        while name in used:
            state["n"] += 1
            name = "_p%d" % state["n"]
        used.add(name)
        fresh[name] = origin
        return Var(name)

    def monitor(p, value):
        monitors.append(Not(p))
        monitors.append(Globally(And(Implies(Next(p), value),
                                     Implies(value, WeakNext(p)))))

    def t(g):
        if g in memo:
            return memo[g]
        out = _t(g)
        memo[g] = out
        return out

    def _t(g):
        if isinstance(g, (Var, Const)):
            return g
        if isinstance(g, Unary):
            if g.op == "Y":
                if g in past_memo:
                    return past_memo[g]
                value = t(g.arg)
                p = fresh_var(g)
                monitor(p, value)
                past_memo[g] = p
                return p
            if g.op == "Z":
                return t(Not(Unary("Y", Not(g.arg))))
            if g.op == "O":
                return t(Since(TRUE, g.arg))
            if g.op == "H":
                return t(Not(Since(TRUE, Not(g.arg))))
            return Unary(g.op, t(g.arg))
        if isinstance(g, Binary):
            if g.op == "S":
                if g in past_memo:
                    return past_memo[g]
                a, b = t(g.left), t(g.right)
                p = fresh_var(g)
                value = Or(b, And(a, p))
                monitor(p, value)
                past_memo[g] = value
                return value
            if g.op == "T":
                return t(Not(Since(Not(g.left), Not(g.right))))
            return Binary(g.op, t(g.left), t(g.right))
        raise TypeError("not a formula: %r" % (g,))

    out = t(f)
    return PastRemoval(out, tuple(monitors), fresh)
