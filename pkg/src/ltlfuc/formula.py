"""Formula AST for linear temporal logic over finite traces, with past operators.

A formula is an immutable tree built from variables, the constants true and
false, and the connectives below.  Operators are tagged with the same token
the concrete syntax uses, which keeps printing, parsing and structural
pattern matching in one vocabulary.

Unary operators:
    !   negation
    X   next (strong: requires a successor state)
    N   weak next (true at the last state)
    F   eventually
    G   always
    Y   yesterday (strong: false at the first state)
    Z   weak yesterday (true at the first state)
    O   once
    H   historically

Binary operators:
    &  |  ->  <->   boolean connectives
    U   until
    R   release
    S   since
    T   trigger
"""

from dataclasses import dataclass, field

UNARY_OPS = ("!", "X", "N", "F", "G", "Y", "Z", "O", "H")
BINARY_OPS = ("&", "|", "->", "<->", "U", "R", "S", "T")
TEMPORAL_UNARY = ("X", "N", "F", "G", "Y", "Z", "O", "H")
TEMPORAL_BINARY = ("U", "R", "S", "T")
PAST_UNARY = ("Y", "Z", "O", "H")
PAST_BINARY = ("S", "T")

# Names the surface syntax refuses in user input: `end` is claimed by the
# finite-to-infinite trace translation, and the activation prefix is claimed
# by core extraction.
RESERVED_NAME = "end"
ACTIVATION_PREFIX = "_act_"


class Formula:
    """Base class; all nodes are hashable and compare structurally."""

    __slots__ = ()

    def __and__(self, other):
        return Binary("&", self, other)

    def __or__(self, other):
        return Binary("|", self, other)

    def __invert__(self):
        return Unary("!", self)

    def __str__(self):
        return to_str(self)

    def __repr__(self):
        return "Formula(%s)" % to_str(self)


@dataclass(frozen=True, repr=False)
class Var(Formula):
    name: str


@dataclass(frozen=True, repr=False)
class Const(Formula):
    value: bool


@dataclass(frozen=True, repr=False)
class Unary(Formula):
    op: str
    arg: Formula


@dataclass(frozen=True, repr=False)
class Binary(Formula):
    op: str
    left: Formula
    right: Formula


TRUE = Const(True)
FALSE = Const(False)


def Not(f):
    return Unary("!", f)


def And(a, b):
    return Binary("&", a, b)


def Or(a, b):
    return Binary("|", a, b)


def Implies(a, b):
    return Binary("->", a, b)


def Iff(a, b):
    return Binary("<->", a, b)


def Next(f):
    return Unary("X", f)


def WeakNext(f):
    return Unary("N", f)


def Eventually(f):
    return Unary("F", f)


def Globally(f):
    return Unary("G", f)


def Until(a, b):
    return Binary("U", a, b)


def Release(a, b):
    return Binary("R", a, b)


def Yesterday(f):
    return Unary("Y", f)


def WeakYesterday(f):
    return Unary("Z", f)


def Once(f):
    return Unary("O", f)


def Historically(f):
    return Unary("H", f)


def Since(a, b):
    return Binary("S", a, b)


def Trigger(a, b):
    return Binary("T", a, b)


def to_str(f):
    """Render a formula fully parenthesized; variables and constants are bare."""
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Const):
        return "true" if f.value else "false"
    if isinstance(f, Unary):
        sep = "" if f.op == "!" else " "
        return "(%s%s%s)" % (f.op, sep, to_str(f.arg))
    if isinstance(f, Binary):
        return "(%s %s %s)" % (to_str(f.left), f.op, to_str(f.right))
    raise TypeError("not a formula: %r" % (f,))


def subformulas(f):
    """Yield every node of f once, children before parents."""
    seen = set()

    def walk_iter(g):
        stack = [(g, False)]
        while stack:
            node, expanded = stack.pop()
            if node in seen:
                continue
            if expanded:
                seen.add(node)
                yield node
            else:
                stack.append((node, True))
                if isinstance(node, Unary):
                    stack.append((node.arg, False))
                elif isinstance(node, Binary):
                    stack.append((node.right, False))
                    stack.append((node.left, False))

    return walk_iter(f)


def free_vars(f):
    """Variable names occurring in f, in first-occurrence (document) order."""
    out = []
    seen = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Var):
            if g.name not in seen:
                seen.add(g.name)
                out.append(g.name)
        elif isinstance(g, Unary):
            stack.append(g.arg)
        elif isinstance(g, Binary):
            stack.append(g.right)
            stack.append(g.left)
    return out


def has_past(f):
    """True when f contains any past-time operator."""
    for g in subformulas(f):
        if isinstance(g, Unary) and g.op in PAST_UNARY:
            return True
        if isinstance(g, Binary) and g.op in PAST_BINARY:
            return True
    return False


def conjuncts(f):
    """Flatten the top-level & spine of f into a list, left to right."""
    out = []
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Binary) and g.op == "&":
            stack.append(g.right)
            stack.append(g.left)
        else:
            out.append(g)
    return out


def conjoin(fs):
    """Conjunction of a sequence of formulas; the empty conjunction is true."""
    fs = list(fs)
    if not fs:
        return TRUE
    acc = fs[0]
    for g in fs[1:]:
        acc = And(acc, g)
    return acc


@dataclass(frozen=True)
class Spec:
    """A labeled conjunction: the unit of core extraction.

    Conjunct labels are c1..cN in source order.  The alphabet lists variable
    names in first-occurrence order across the conjuncts.
    """

    name: str
    conjunct_list: tuple = field(default_factory=tuple)  # of (label, Formula)

    @property
    def labels(self):
        return [lab for lab, _ in self.conjunct_list]

    @property
    def formulas(self):
        return [g for _, g in self.conjunct_list]

    @property
    def alphabet(self):
        out = []
        seen = set()
        for _, g in self.conjunct_list:
            for v in free_vars(g):
                if v not in seen:
                    seen.add(v)
                    out.append(v)
        return out

    def formula(self):
        return conjoin(self.formulas)

    def restrict(self, labels):
        """A sub-spec keeping only the given labels, in original order."""
        keep = set(labels)
        return Spec(self.name, tuple(p for p in self.conjunct_list if p[0] in keep))


def make_spec(f, name="spec"):
    """Split f on its top-level & spine into a Spec labeled c1..cN."""
    parts = conjuncts(f)
    return Spec(name, tuple(("c%d" % (i + 1), g) for i, g in enumerate(parts)))
