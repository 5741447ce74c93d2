"""Bridge to an external infinite-trace LTL prover.

The guarded conjunction is past-removed, end-encoded, and written to a text
problem file; an external prover command is spawned on it and its verdict
is parsed back.  The problem format is line based:

    axiom: <formula>        # unguarded background constraint
    c3: <formula>           # the guarded translation of conjunct c3
    assume: _act_3          # activation variable to assume true

The prover must print one line starting with one of:

    SAT
    UNSAT CORE: <activation variable names>
    SIMPLIFIED TO FALSE
    UNKNOWN

SIMPLIFIED TO FALSE means the prover collapsed the problem before producing
a core attribution; it is surfaced as its own status rather than guessed at.

A stub prover (`ltlfuc-stub-prover`, also `python -m ltlfuc.trp`) ships with
the package: it re-reads the problem and decides it with the bounded model
checker, so the bridge is exercisable without third-party software.
"""

import subprocess
import sys
import tempfile
import time

from .activation import (
    REDUCED_TO_FALSE,
    SAT,
    UNKNOWN,
    UNSAT,
    UcResult,
    activate,
)
from .bmc import bounded_uc, end_padding_axiom
from .formula import FALSE, And, conjoin, conjuncts, to_str
from .parser import parse
from .tableau import build_automaton
from .translations import ftol, ltlf_to_ltl, remove_past
from .util import DeadlineExceeded


def export_trp(spec):
    """Render the spec as an external prover problem (see module docstring)."""
    act = activate(spec)
    rp = remove_past(act.psi)
    guarded = conjuncts(rp.formula)
    if len(guarded) != len(act.bindings):
        # a spec with zero conjuncts translates to the single formula `true`
        guarded = [] if not act.bindings else guarded
    lines = ["# generated LTL problem; finite traces are encoded with `end`"]
    for ax in conjuncts(ltlf_to_ltl(conjoin(list(rp.monitors)))):
        lines.append("axiom: %s" % to_str(ax))
    pad = end_padding_axiom(And(rp.formula, conjoin(list(rp.monitors))))
    if pad is not None:
        lines.append("axiom: %s" % to_str(pad))
    for (name, label), g in zip(act.bindings, guarded):
        lines.append("%s: %s" % (label, to_str(ftol(g))))
    for name, _ in act.bindings:
        lines.append("assume: %s" % name)
    return "\n".join(lines) + "\n"


def parse_trp(text):
    """Read a problem file back: returns (formulas, assumption names)."""
    formulas = []
    assumptions = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        label, rest = line.split(":", 1)
        if label.strip() == "assume":
            assumptions.append(rest.strip())
        else:
            formulas.append(parse(rest, allow_reserved=True))
    return formulas, assumptions


def parse_verdict(output):
    """Extract (status, core names) from prover output."""
    for raw in output.splitlines():
        line = raw.strip()
        if line.startswith("UNSAT CORE:"):
            return UNSAT, line.split(":", 1)[1].split()
        if line == "UNSAT":
            return UNSAT, []
        if line == "SAT":
            return SAT, None
        if line == "SIMPLIFIED TO FALSE":
            return REDUCED_TO_FALSE, None
        if line == "UNKNOWN":
            return UNKNOWN, None
    return UNKNOWN, None


def algorithm4_uc(spec, trp_exe=None, trp_timeout=60, k_max=50):
    """Decide spec through an external prover.

    trp_exe: the prover command as a list (the problem file path is
    appended); defaults to the bundled stub prover.
    """
    t0 = time.perf_counter()
    if trp_exe is None:
        trp_exe = [sys.executable, "-m", "ltlfuc.trp", "--k-max", str(k_max)]
    act = activate(spec)
    with tempfile.NamedTemporaryFile(
            "w", suffix=".trp", delete=False) as fh:
        fh.write(export_trp(spec))
        path = fh.name
    try:
        proc = subprocess.run(list(trp_exe) + [path], capture_output=True,
                              text=True, timeout=trp_timeout)
    except subprocess.TimeoutExpired:
        return UcResult(UNKNOWN, "trp", elapsed=time.perf_counter() - t0,
                        detail="prover timeout")
    except OSError as e:
        return UcResult(UNKNOWN, "trp", elapsed=time.perf_counter() - t0,
                        detail="prover failed to start: %s" % e)
    status, names = parse_verdict(proc.stdout)
    elapsed = time.perf_counter() - t0
    if status == UNSAT:
        core = act.labels_for(names) if names else list(spec.labels)
        return UcResult(UNSAT, "trp", core=core, elapsed=elapsed)
    if status == SAT:
        return UcResult(SAT, "trp", elapsed=elapsed)
    if status == REDUCED_TO_FALSE:
        return UcResult(REDUCED_TO_FALSE, "trp", elapsed=elapsed)
    return UcResult(UNKNOWN, "trp", elapsed=elapsed,
                    detail=proc.stdout.strip()[:200] or "no verdict")


def stub_prover_main(argv=None):
    """Entry point of the bundled prover (UNSAT cores via bounded model
    checking at the infinite-trace level)."""
    import argparse

    ap = argparse.ArgumentParser(prog="ltlfuc-stub-prover")
    ap.add_argument("problem")
    ap.add_argument("--k-max", type=int, default=50)
    args = ap.parse_args(argv)
    with open(args.problem) as fh:
        formulas, assumptions = parse_trp(fh.read())
    whole = conjoin(formulas)
    if _folds_to_false(whole):
        print("SIMPLIFIED TO FALSE")
        return 0
    aut = build_automaton(whole, activation_names=assumptions)
    try:
        res = bounded_uc(aut, assumptions, k_max=args.k_max)
    except DeadlineExceeded:
        res = {"status": "unknown"}
    if res["status"] == "sat":
        print("SAT")
    elif res["status"] == "unsat":
        if res["failed"]:
            print("UNSAT CORE: %s" % " ".join(sorted(res["failed"])))
        else:
            print("UNSAT")
    else:
        print("UNKNOWN")
    return 0


def _folds_to_false(f):
    """Cheap constant propagation; detects problems that collapse outright."""
    from .formula import Binary, Const, Unary

    def fold(g):
        if isinstance(g, Const):
            return g.value
        if isinstance(g, Unary) and g.op == "!":
            v = fold(g.arg)
            return None if v is None else not v
        if isinstance(g, Binary) and g.op == "&":
            a, b = fold(g.left), fold(g.right)
            if a is False or b is False:
                return False
            if a is True and b is True:
                return True
            return None
        if isinstance(g, Binary) and g.op == "|":
            a, b = fold(g.left), fold(g.right)
            if a is True or b is True:
                return True
            if a is False and b is False:
                return False
            return None
        return None

    return fold(f) is False


if __name__ == "__main__":
    sys.exit(stub_prover_main())
