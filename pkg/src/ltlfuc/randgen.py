"""Seeded random formula and spec generation for testing and benchmarks."""

import random

from .formula import Binary, Const, Spec, Unary, Var

FUTURE_UNARY = ["X", "N", "F", "G"]
PAST_UNARY = ["Y", "Z", "O", "H"]
FUTURE_BINARY = ["U", "R"]
PAST_BINARY = ["S", "T"]
BOOL_BINARY = ["&", "|", "->", "<->"]


def random_formula(rng, var_names, depth, allow_past=True):
    """A random formula of the given maximum operator depth."""
    if depth <= 0 or rng.random() < 0.18:
        r = rng.random()
        if r < 0.06:
            return Const(rng.random() < 0.5)
        v = Var(rng.choice(var_names))
        return Unary("!", v) if rng.random() < 0.4 else v
    unary = FUTURE_UNARY + (PAST_UNARY if allow_past else []) + ["!"]
    binary = BOOL_BINARY + FUTURE_BINARY + (PAST_BINARY if allow_past else [])
    if rng.random() < 0.45:
        return Unary(rng.choice(unary),
                     random_formula(rng, var_names, depth - 1, allow_past))
    op = rng.choice(binary)
    return Binary(op,
                  random_formula(rng, var_names, depth - 1, allow_past),
                  random_formula(rng, var_names, depth - 1, allow_past))


def random_spec(seed, n_conjuncts=3, n_vars=3, depth=2, allow_past=True,
                name=None):
    """A random spec with the given shape, reproducible from the seed."""
    rng = random.Random(seed)
    var_names = ["p%d" % i for i in range(1, n_vars + 1)]
    k = rng.randint(1, n_conjuncts)
    pairs = tuple(
        ("c%d" % (i + 1), random_formula(rng, var_names, depth, allow_past))
        for i in range(k))
    return Spec(name or "rand%s" % seed, pairs)
