"""Concrete syntax for formulas and specification files.

Grammar (lowest precedence first, all binary levels right-associative):

    iff     := impl ('<->' iff)?
    impl    := disj ('->' impl)?
    disj    := conj ('|' disj)?
    conj    := temp ('&' conj)?
    temp    := unary (('U'|'R'|'S'|'T') temp)?
    unary   := ('!'|'X'|'N'|'F'|'G'|'Y'|'Z'|'O'|'H') unary | atom
    atom    := 'true' | 'false' | identifier | '(' iff ')'

Identifiers match [a-zA-Z_][a-zA-Z0-9_]* and must not collide with operator
keywords.  The name `end` and names starting with `_act_` are reserved and
rejected with a dedicated message.  `#` starts a comment running to end of
line.  Specification files (.ltlf) contain one formula, possibly spanning
several lines; the top-level conjunction is split into labeled conjuncts.
"""

import re

from .formula import (
    ACTIVATION_PREFIX,
    Binary,
    Const,
    RESERVED_NAME,
    Unary,
    Var,
    make_spec,
)

KEYWORD_OPS = {"U", "R", "S", "T", "X", "N", "F", "G", "Y", "Z", "O", "H"}

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<op><->|->|&|\||!|\(|\))
  | (?P<ident>[a-zA-Z_][a-zA-Z0-9_]*)
    """,
    re.VERBOSE,
)


class ParseError(ValueError):
    """Syntax error with 1-based line/column position."""

    def __init__(self, message, line, col):
        super().__init__("%s (line %d, column %d)" % (message, line, col))
        self.line = line
        self.col = col


class ReservedNameError(ParseError):
    """A reserved identifier appeared in user input."""


class Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col


def tokenize(text, allow_reserved=False):
    tokens = []
    pos = 0
    line = 1
    line_start = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(
                "unexpected character %r" % text[pos], line, pos - line_start + 1
            )
        kind = m.lastgroup
        chunk = m.group()
        col = pos - line_start + 1
        if kind == "op":
            tokens.append(Token("op", chunk, line, col))
        elif kind == "ident":
            if chunk in KEYWORD_OPS:
                tokens.append(Token("op", chunk, line, col))
            elif chunk in ("true", "false"):
                tokens.append(Token("const", chunk, line, col))
            elif allow_reserved:
                tokens.append(Token("var", chunk, line, col))
            else:
                if chunk == RESERVED_NAME:
                    raise ReservedNameError(
                        "'end' is reserved for the finite-trace translation "
                        "and cannot be used as a variable",
                        line,
                        col,
                    )
                if chunk.startswith(ACTIVATION_PREFIX):
                    raise ReservedNameError(
                        "names starting with %r are reserved for activation "
                        "variables" % ACTIVATION_PREFIX,
                        line,
                        col,
                    )
                tokens.append(Token("var", chunk, line, col))
        # whitespace and comments are skipped
        nl = chunk.count("\n")
        if nl:
            line += nl
            line_start = pos + chunk.rfind("\n") + 1
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is not None:
            self.i += 1
        return tok

    def error(self, message):
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else None
            line = last.line if last else 1
            col = last.col + len(last.text) if last else 1
            raise ParseError(message + " at end of input", line, col)
        raise ParseError("%s, got %r" % (message, tok.text), tok.line, tok.col)

    def expect(self, text):
        tok = self.peek()
        if tok is None or tok.text != text:
            self.error("expected %r" % text)
        return self.take()

    def parse_formula(self):
        f = self.parse_iff()
        tok = self.peek()
        if tok is not None:
            raise ParseError("unexpected trailing input %r" % tok.text, tok.line, tok.col)
        return f

    def _right_assoc(self, ops, sub):
        left = sub()
        tok = self.peek()
        if tok is not None and tok.kind == "op" and tok.text in ops:
            self.take()
            right = self._right_assoc(ops, sub)
            return Binary(tok.text, left, right)
        return left

    def parse_iff(self):
        return self._right_assoc(("<->",), self.parse_impl)

    def parse_impl(self):
        return self._right_assoc(("->",), self.parse_disj)

    def parse_disj(self):
        return self._right_assoc(("|",), self.parse_conj)

    def parse_conj(self):
        return self._right_assoc(("&",), self.parse_temp)

    def parse_temp(self):
        return self._right_assoc(("U", "R", "S", "T"), self.parse_unary)

    def parse_unary(self):
        tok = self.peek()
        if tok is not None and tok.kind == "op" and tok.text in (
            "!", "X", "N", "F", "G", "Y", "Z", "O", "H",
        ):
            self.take()
            return Unary(tok.text, self.parse_unary())
        return self.parse_atom()

    def parse_atom(self):
        tok = self.peek()
        if tok is None:
            self.error("expected a formula")
        if tok.kind == "var":
            self.take()
            return Var(tok.text)
        if tok.kind == "const":
            self.take()
            return Const(tok.text == "true")
        if tok.text == "(":
            self.take()
            f = self.parse_iff()
            self.expect(")")
            return f
        self.error("expected a variable, constant, or '('")


def parse(text, allow_reserved=False):
    """Parse a single formula from text.  `allow_reserved` admits the
    internal names (`end`, activation variables); it is used when reading
    back files this package generated itself."""
    tokens = tokenize(text, allow_reserved=allow_reserved)
    if not tokens:
        raise ParseError("empty input", 1, 1)
    return _Parser(tokens).parse_formula()


def parse_spec(text, name="spec"):
    """Parse text into a Spec, labeling its top-level conjuncts c1..cN."""
    return make_spec(parse(text), name=name)


def load_spec(path, name=None):
    """Read an .ltlf file into a Spec named after the file by default."""
    with open(path) as fh:
        text = fh.read()
    if name is None:
        name = re.sub(r"\.ltlf$", "", path.replace("\\", "/").rsplit("/", 1)[-1])
    return parse_spec(text, name=name)


def parse_trace(text, alphabet=None):
    """Parse a trace fixture: one state per line, `var=0` / `var=1` pairs
    separated by `;`.  Variables missing from a line default to false.
    Returns a list of dicts.
    """
    states = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        state = {}
        for part in line.split(";"):
            part = part.strip()
            if not part:
                continue
            m = re.fullmatch(r"([a-zA-Z_][a-zA-Z0-9_]*)\s*=\s*([01])", part)
            if m is None:
                raise ParseError("bad assignment %r" % part, lineno, 1)
            state[m.group(1)] = m.group(2) == "1"
        if alphabet is not None:
            for v in alphabet:
                state.setdefault(v, False)
        states.append(state)
    return states
