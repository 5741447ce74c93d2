"""Symbolic transition-system view of a temporal formula.

An infinite-trace formula is compiled into a boolean automaton: one input
variable per proposition, one state variable per X/Until subformula (a
prophecy of the next value) and per Yesterday/Since subformula (a history
register).  init, trans and fairness are plain boolean formulas; in trans,
`name'` (prime suffix) denotes the next-state copy of `name`.  Both the
BDD engine and the bounded model checker instantiate this one structure.
"""

from dataclasses import dataclass

from .formula import (
    And,
    Binary,
    Const,
    Formula,
    Iff,
    Not,
    Or,
    TRUE,
    Unary,
    Until,
    Var,
    conjoin,
)

PRIME = "'"


def primed(name):
    return name + PRIME


def is_primed(name):
    return name.endswith(PRIME)


def unprime(name):
    return name[:-1] if is_primed(name) else name


def normalize(f):
    """Rewrite to the core connectives: literals, & | !, X, U, Y, S."""
    memo = {}

    def go(g):
        if g in memo:
            return memo[g]
        memo[g] = out = _go(g)
        return out

    def _go(g):
        if isinstance(g, (Var, Const)):
            return g
        if isinstance(g, Unary):
            a = g.arg
            if g.op == "!":
                return Not(go(a))
            if g.op == "X":
                return Unary("X", go(a))
            if g.op == "N":
                return Not(Unary("X", Not(go(a))))
            if g.op == "F":
                return Binary("U", TRUE, go(a))
            if g.op == "G":
                return Not(Binary("U", TRUE, Not(go(a))))
            if g.op == "Y":
                return Unary("Y", go(a))
            if g.op == "Z":
                return Not(Unary("Y", Not(go(a))))
            if g.op == "O":
                return Binary("S", TRUE, go(a))
            if g.op == "H":
                return Not(Binary("S", TRUE, Not(go(a))))
        if isinstance(g, Binary):
            a, b = g.left, g.right
            if g.op in ("&", "|"):
                return Binary(g.op, go(a), go(b))
            if g.op == "->":
                return Or(Not(go(a)), go(b))
            if g.op == "<->":
                na, nb = go(a), go(b)
                return Or(And(na, nb), And(Not(na), Not(nb)))
            if g.op == "U":
                return Binary("U", go(a), go(b))
            if g.op == "R":
                return Not(Binary("U", Not(go(a)), Not(go(b))))
            if g.op == "S":
                return Binary("S", go(a), go(b))
            if g.op == "T":
                return Not(Binary("S", Not(go(a)), Not(go(b))))
        raise TypeError("not a formula: %r" % (g,))

    return go(f)


def prime_formula(f):
    """Replace every variable v by v' in a boolean formula."""
    if isinstance(f, Var):
        return Var(primed(f.name))
    if isinstance(f, Const):
        return f
    if isinstance(f, Unary):
        return Unary(f.op, prime_formula(f.arg))
    if isinstance(f, Binary):
        return Binary(f.op, prime_formula(f.left), prime_formula(f.right))
    raise TypeError("not a formula: %r" % (f,))


@dataclass
class Automaton:
    alphabet: list  # proposition names, first-use order
    state_vars: list  # synthetic state variable names
    init: Formula  # boolean, over unprimed vars
    trans: Formula  # boolean, over unprimed and primed vars
    fairness: list  # boolean formulas over unprimed vars
    var_order: list  # ordering hint: activation vars first, then first use


def build_automaton(f, activation_names=()):
    nf = normalize(f)

    order = list(activation_names)
    order_seen = set(order)
    alphabet = list(activation_names)
    alphabet_seen = set(alphabet)
    temporal = []  # (kind, node, state var name), kind in X U Y S
    state_for = {}

    def slot(name):
        if name not in order_seen:
            order_seen.add(name)
            order.append(name)

    def collect(g):
        if isinstance(g, Var):
            if g.name not in alphabet_seen:
                alphabet_seen.add(g.name)
                alphabet.append(g.name)
            slot(g.name)
            return
        if isinstance(g, Const):
            return
        if isinstance(g, Unary):
            if g.op in ("X", "Y"):
                if g not in state_for:
                    name = "_el%d" % len(state_for)
                    state_for[g] = name
                    temporal.append((g.op, g, name))
                    slot(name)
                    collect(g.arg)
                return
            collect(g.arg)
            return
        if isinstance(g, Binary):
            if g.op in ("U", "S"):
                if g not in state_for:
                    name = "_el%d" % len(state_for)
                    state_for[g] = name
                    temporal.append((g.op, g, name))
                    slot(name)
                    collect(g.left)
                    collect(g.right)
                return
            collect(g.left)
            collect(g.right)
            return
        raise TypeError("not a formula: %r" % (g,))

    collect(nf)

    lit_memo = {}

    def lit(g):
        """Boolean value of subformula g in the current state."""
        if g in lit_memo:
            return lit_memo[g]
        lit_memo[g] = out = _lit(g)
        return out

    def _lit(g):
        if isinstance(g, (Var, Const)):
            return g
        if isinstance(g, Unary):
            if g.op == "!":
                return Not(lit(g.arg))
            if g.op == "X":
                return Var(state_for[g])
            if g.op == "Y":
                return Var(state_for[g])
        if isinstance(g, Binary):
            if g.op in ("&", "|"):
                return Binary(g.op, lit(g.left), lit(g.right))
            if g.op == "U":
                return Or(lit(g.right), And(lit(g.left), Var(state_for[g])))
            if g.op == "S":
                return Or(lit(g.right), And(lit(g.left), Var(state_for[g])))
        raise TypeError("unexpected node %r" % (g,))

    trans_parts = []
    init_parts = [lit(nf)]
    fairness = []
    for kind, node, name in temporal:
        v = Var(name)
        if kind == "X":
            # v holds now iff the operand holds in the successor state
            trans_parts.append(Iff(v, prime_formula(lit(node.arg))))
        elif kind == "U":
            # v is a prophecy of the Until holding in the successor state
            trans_parts.append(Iff(v, prime_formula(lit(node))))
            fairness.append(Or(Not(lit(node)), lit(node.right)))
        else:
            # history register: v holds iff the operand held one step ago
            target = node.arg if kind == "Y" else node
            trans_parts.append(Iff(Var(primed(name)), lit(target)))
            init_parts.append(Not(v))

    return Automaton(
        alphabet=alphabet,
        state_vars=[name for _, _, name in temporal],
        init=conjoin(init_parts),
        trans=conjoin(trans_parts) if trans_parts else TRUE,
        fairness=fairness if fairness else [TRUE],
        var_order=order,
    )
