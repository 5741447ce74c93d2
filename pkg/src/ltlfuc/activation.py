"""Activation variables and the common result type of the core extractors.

Given a spec with conjuncts c1..cN, `activate` builds the guarded formula
Psi = (A1 -> phi1) & ... & (AN -> phiN) where each Ai is a fresh activation
variable.  Psi is always satisfiable with all guards off; turning a subset
of guards on is equisatisfiable with the conjunction of the corresponding
conjuncts, which is what lets the solvers extract unsatisfiable cores from
assumption failures or projections onto the activation variables.
"""

from dataclasses import dataclass

from .formula import ACTIVATION_PREFIX, Formula, Implies, Spec, Var, conjoin, free_vars


SAT = "SAT"
UNSAT = "UNSAT"
UNKNOWN = "UNKNOWN"
REDUCED_TO_FALSE = "REDUCED_TO_FALSE"


@dataclass(frozen=True)
class ActivatedSpec:
    spec: Spec
    psi: Formula
    bindings: tuple  # of (activation var name, conjunct label)

    @property
    def activation_names(self):
        return [a for a, _ in self.bindings]

    def labels_for(self, names):
        """Map a set of activation variable names back to conjunct labels."""
        by_name = dict(self.bindings)
        unknown = set(names) - set(by_name)
        if unknown:
            raise KeyError("not activation variables of this spec: %s"
                           % sorted(unknown))
        order = {lab: i for i, (_, lab) in enumerate(self.bindings)}
        return sorted((by_name[n] for n in names), key=order.__getitem__)


def activate(spec):
    """Guard each conjunct of spec with a fresh activation variable."""
    used = set()
    for g in spec.formulas:
        used.update(free_vars(g))
    bindings = []
    guarded = []
    for i, (label, g) in enumerate(spec.conjunct_list, start=1):
        name = "%s%d" % (ACTIVATION_PREFIX, i)
        if name in used:
            raise ValueError("formula variables collide with reserved "
                             "activation name %r" % name)
        bindings.append((name, label))
        guarded.append(Implies(Var(name), g))
    return ActivatedSpec(spec, conjoin(guarded), tuple(bindings))


@dataclass
class UcResult:
    """Outcome of a satisfiability / core extraction run.

    status: SAT, UNSAT, UNKNOWN, or REDUCED_TO_FALSE (an external prover
        simplified the problem to false before producing a core).
    core: conjunct labels of an unsatisfiable core when status is UNSAT.
    witness: a satisfying trace (list of states) when status is SAT and the
        algorithm produces one.
    all_cores: every unsatisfiable subset, when the algorithm was asked to
        enumerate them.
    """

    status: str
    algorithm: str
    core: list | None = None
    witness: list | None = None
    all_cores: list | None = None
    elapsed: float = 0.0
    k_reached: int | None = None
    detail: str = ""

    def to_dict(self):
        out = {"status": self.status, "algorithm": self.algorithm,
               "elapsed": round(self.elapsed, 6)}
        if self.core is not None:
            out["core"] = list(self.core)
        if self.witness is not None:
            out["witness"] = self.witness
        if self.all_cores is not None:
            out["all_cores"] = [sorted(c) for c in self.all_cores]
        if self.k_reached is not None:
            out["k_reached"] = self.k_reached
        if self.detail:
            out["detail"] = self.detail
        return out
