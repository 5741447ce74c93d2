"""Command line interface.

    ltlfuc check FILE [--algo ...]      decide one spec, extract a core
    ltlfuc bench [--dir DIR] ...        run algorithms over a directory, CSV out
    ltlfuc crosscheck [--dir DIR] ...   compare algorithms against the oracle
    ltlfuc oracle FILE                  the trusted (slow) reference answer

Exit codes for `check` and `oracle`: 0 satisfiable, 10 unsatisfiable,
20 unknown, 30 reduced-to-false, 2 usage or input error.
"""

import argparse
import csv
import io
import json
import shlex
import sys
from importlib import resources

from .activation import REDUCED_TO_FALSE, SAT, UNKNOWN, UNSAT
from .bmc import algorithm2_uc
from .native import algorithm3_uc
from .parser import ParseError, load_spec
from .semantics import OracleBudgetError, oracle_all_min_ucs, oracle_sat
from .symbolic import algorithm1_uc
from .trp import algorithm4_uc

EXIT_CODES = {SAT: 0, UNSAT: 10, UNKNOWN: 20, REDUCED_TO_FALSE: 30}
ALGORITHMS = ("bdd", "bmc", "native", "trp")


def run_algorithm(spec, algo, args):
    if algo == "bdd":
        return algorithm1_uc(spec, mode=args.mode, timeout=args.timeout)
    if algo == "bmc":
        return algorithm2_uc(spec, k_max=args.k_max, timeout=args.timeout)
    if algo == "native":
        return algorithm3_uc(spec, timeout=args.timeout)
    if algo == "trp":
        exe = shlex.split(args.trp_exe) if args.trp_exe else None
        return algorithm4_uc(spec, trp_exe=exe, trp_timeout=args.trp_timeout,
                             k_max=args.k_max)
    raise ValueError("unknown algorithm %r" % algo)


def _render_trace(states):
    lines = []
    for st in states:
        lines.append("; ".join("%s=%d" % (v, int(b))
                               for v, b in sorted(st.items())) or "-")
    return lines


def cmd_check(args):
    spec = load_spec(args.file)
    res = run_algorithm(spec, args.algo, args)
    if args.format == "json":
        print(json.dumps({"problem": spec.name, **res.to_dict()}, indent=2))
    else:
        print("%s %s [%s, %.3fs]" % (spec.name, res.status, res.algorithm,
                                     res.elapsed))
        if res.core is not None:
            print("core: %s" % " ".join(res.core))
        if res.all_cores is not None:
            for c in res.all_cores:
                print("unsat subset: %s" % " ".join(c))
        if res.witness is not None:
            print("witness:")
            for line in _render_trace(res.witness):
                print("  " + line)
        if res.detail:
            print("note: %s" % res.detail)
    return EXIT_CODES[res.status]


def cmd_oracle(args):
    spec = load_spec(args.file)
    try:
        res = oracle_sat(spec.formula(), max_len=args.max_len)
    except OracleBudgetError as e:
        print("oracle gave up: %s" % e, file=sys.stderr)
        return 2
    if res.status == "sat":
        print("%s SAT" % spec.name)
        for line in _render_trace(res.witness):
            print("  " + line)
        return 0
    print("%s UNSAT" % spec.name)
    if len(spec.labels) > 1 and args.cores:
        for core in sorted(oracle_all_min_ucs(spec), key=sorted):
            print("minimal core: %s" % " ".join(sorted(core)))
    return 10


def _suite_problems(args):
    """Yield (name, spec, family) for the chosen problem set."""
    import os

    if args.dir:
        families = {}
        fam_path = os.path.join(args.dir, "families.tsv")
        if os.path.exists(fam_path):
            with open(fam_path) as fh:
                for line in fh:
                    if line.strip() and not line.startswith("#"):
                        prob, fam = line.split()
                        families[prob] = fam
        names = sorted(n for n in os.listdir(args.dir) if n.endswith(".ltlf"))
        for n in names:
            spec = load_spec(os.path.join(args.dir, n))
            yield spec.name, spec, families.get(spec.name, "default")
    else:
        root = resources.files("ltlfuc").joinpath("suite")
        families = {}
        for line in root.joinpath("families.tsv").read_text().splitlines():
            if line.strip() and not line.startswith("#"):
                prob, fam = line.split()
                families[prob] = fam
        for entry in sorted(root.iterdir(), key=lambda e: e.name):
            if entry.name.endswith(".ltlf"):
                from .parser import parse_spec
                name = entry.name[:-5]
                spec = parse_spec(entry.read_text(), name=name)
                yield name, spec, families.get(name, "default")


CSV_COLUMNS = ["problem", "family", "n_conjuncts", "n_vars", "algorithm",
               "status", "core_size", "elapsed", "k_reached"]


def cmd_bench(args):
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    for a in algos:
        if a not in ALGORITHMS:
            print("unknown algorithm %r" % a, file=sys.stderr)
            return 2
    rows = []
    for name, spec, family in _suite_problems(args):
        per_problem = []
        for algo in algos:
            res = run_algorithm(spec, algo, args)
            per_problem.append((algo, res))
            rows.append({
                "problem": name,
                "family": family,
                "n_conjuncts": len(spec.labels),
                "n_vars": len(spec.alphabet),
                "algorithm": algo,
                "status": res.status,
                "core_size": len(res.core) if res.core is not None else "",
                "elapsed": "%.6f" % res.elapsed,
                "k_reached": res.k_reached if res.k_reached is not None else "",
            })
        # virtual best: the fastest run that reached a verdict
        decided = [(a, r) for a, r in per_problem if r.status != UNKNOWN]
        if decided:
            algo, res = min(decided, key=lambda ar: ar[1].elapsed)
            rows.append({
                "problem": name,
                "family": family,
                "n_conjuncts": len(spec.labels),
                "n_vars": len(spec.alphabet),
                "algorithm": "virtual_best",
                "status": res.status,
                "core_size": len(res.core) if res.core is not None else "",
                "elapsed": "%.6f" % res.elapsed,
                "k_reached": res.k_reached if res.k_reached is not None else "",
            })
        print("%-24s %s" % (name, "  ".join(
            "%s:%s(%.2fs)" % (a, r.status, r.elapsed) for a, r in per_problem)))
    out = io.StringIO()
    w = csv.DictWriter(out, fieldnames=CSV_COLUMNS)
    w.writeheader()
    w.writerows(rows)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(out.getvalue())
        print("wrote %s (%d rows)" % (args.out, len(rows)))
    else:
        sys.stdout.write(out.getvalue())
    return 0


def cmd_crosscheck(args):
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    mismatches = 0
    checked = 0
    for name, spec, _family in _suite_problems(args):
        try:
            expected = oracle_sat(spec.formula()).status
        except OracleBudgetError:
            print("%-24s oracle gave up, skipped" % name)
            continue
        verdicts = {}
        for algo in algos:
            res = run_algorithm(spec, algo, args)
            verdicts[algo] = res
        checked += 1
        for algo, res in verdicts.items():
            got = res.status.lower()
            if res.status == UNKNOWN:
                continue
            bad = got != expected
            if not bad and res.status == UNSAT and res.core is not None:
                sub = spec.restrict(res.core)
                try:
                    bad = oracle_sat(sub.formula()).status != "unsat"
                except OracleBudgetError:
                    bad = False
            if bad:
                mismatches += 1
                print("%-24s MISMATCH %s: oracle=%s got=%s core=%s"
                      % (name, algo, expected, got, res.core))
        if not any(v.status != UNKNOWN and v.status.lower() != expected
                   for v in verdicts.values()):
            print("%-24s ok (oracle=%s)" % (name, expected))
    print("crosscheck: %d problems, %d mismatches" % (checked, mismatches))
    return 1 if mismatches else 0


def main(argv=None):
    ap = argparse.ArgumentParser(prog="ltlfuc", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--algo", choices=ALGORITHMS, default="bdd")
        p.add_argument("--algos", default="bdd,bmc,native")
        p.add_argument("--mode", choices=("pick_one", "all", "minimum"),
                       default="pick_one", help="core mode of the bdd algorithm")
        p.add_argument("--k-max", type=int, default=50)
        p.add_argument("--timeout", type=float, default=60.0,
                       help="per-run wall clock budget in seconds")
        p.add_argument("--trp-exe", default=None,
                       help="external prover command (problem path appended)")
        p.add_argument("--trp-timeout", type=float, default=60.0)
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("check", help="decide one spec file")
    p.add_argument("file")
    common(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("oracle", help="reference verdict for one spec file")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, default=200)
    p.add_argument("--cores", action="store_true",
                   help="also enumerate minimal cores when unsatisfiable")
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("bench", help="run algorithms over a problem directory")
    p.add_argument("--dir", default=None,
                   help="directory of .ltlf files (default: bundled suite)")
    p.add_argument("--out", default=None, help="CSV output path")
    p.add_argument("--seed", type=int, default=0, help="reserved; recorded only")
    common(p)
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("crosscheck",
                       help="compare algorithm verdicts against the oracle")
    p.add_argument("--dir", default=None)
    common(p)
    p.set_defaults(fn=cmd_crosscheck)

    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as e:
        print("parse error: %s" % e, file=sys.stderr)
        return 2
    except OSError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
