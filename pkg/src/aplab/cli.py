"""Command-line front end and the only module that touches files.

Four commands: count (AP counts and degree moments), enum (exhaustive
m-subset tables), sweep (seeded Monte Carlo threshold curves with a CSV),
and proof (saturate / advancing / zbuild / deletion / pz instruments).
Every run appends one JSONL record; a key = value config file can supply
any flag, with command-line values winning.
"""

import argparse
import os
import sys
import time
from datetime import datetime, timezone
from fractions import Fraction
from math import comb
from pathlib import Path

from .budget import DEFAULT_NODE_BUDGET, BudgetExceededError
from .core import count_aps, degree_profile, degree_sum_sides
from .enumeration import count_apfree_msets, count_deficient_msets
from .prooflab import (
    build_deletion_families,
    check_advancing,
    derive_proof_params,
    paley_zygmund_check,
    saturated_set,
    sequential_Z_builder,
)
from .randomlab import DEFAULT_TRIAL_BUDGET, SweepConfig, threshold_sweep
from .records import SCHEMA_VERSION, RecordWriter, RunRecord, code_revision
from .sets import GroundSet, ProblemParams
from .specs import (
    SpecError,
    parse_bool,
    parse_fraction,
    parse_fraction_list,
    parse_int,
    parse_set_spec,
)

DEFAULT_RECORDS = "aplab_records.jsonl"

# every option dest ever registered, for config-key validation
_KNOWN_DESTS = set()


class CLIError(Exception):
    """User-facing failure before or during a command; exits nonzero."""


def _opt(parser, *names, **kwargs):
    action = parser.add_argument(*names, **kwargs)
    _KNOWN_DESTS.add(action.dest)
    return action


def _common_options(parser):
    _opt(parser, "--config", metavar="PATH",
         help="key = value file supplying any flag ('#' comments)")
    _opt(parser, "--records", metavar="PATH",
         help=f"record stream to append to (default {DEFAULT_RECORDS})")
    _opt(parser, "--budget-nodes", metavar="N",
         help="search node budget (overrides APLAB_BUDGET_NODES)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="aplab",
        description="Exact and Monte Carlo experiments on k-term "
                    "arithmetic progressions in subsets of 1..n.")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("count", help="AP count and degree-profile moments")
    _common_options(p)
    _opt(p, "--n", help="universe size")
    _opt(p, "--k", help="progression length (>= 3)")
    _opt(p, "--kprime", help="hit threshold k' (default k)")
    _opt(p, "--set-spec", help="S as elements/intervals (default: D)")
    _opt(p, "--ground-spec", help="D (default 1..n)")

    p = sub.add_parser("enum", help="exhaustive AP-free / deficient tables")
    _common_options(p)
    _opt(p, "--n", help="universe size")
    _opt(p, "--k", help="progression length")
    _opt(p, "--m", help="subset size (default: every m from 0 to n)")
    _opt(p, "--gamma", help="deficiency threshold factor (optional)")
    _opt(p, "--alpha", help="density parameter for the record (default 1)")
    _opt(p, "--beta", help="comparison base for beta^m C(n,m) (default 1/2)")
    _opt(p, "--allow-long", action="store_const", const="true",
         help="run past the node budget")

    p = sub.add_parser("sweep", help="Monte Carlo threshold sweep + CSV")
    _common_options(p)
    _opt(p, "--n", help="universe size")
    _opt(p, "--k", help="progression length")
    _opt(p, "--alpha", help="AP-free density target in (0, 1]")
    _opt(p, "--c-grid", help="comma list of C values, p = C n^{-1/(k-1)}")
    _opt(p, "--trials", help="trials per grid point")
    _opt(p, "--seed", help="base seed")
    _opt(p, "--threads", help="worker threads (results do not depend on it)")
    _opt(p, "--csv", metavar="PATH", help="curve output path")

    p = sub.add_parser("proof", help="proof-machinery instruments")
    psub = p.add_subparsers(dest="proof_command")

    q = psub.add_parser("saturate", help="saturated set at a threshold")
    _common_options(q)
    _opt(q, "--n", help="universe size")
    _opt(q, "--k", help="progression length")
    _opt(q, "--kprime", help="hit threshold k'")
    _opt(q, "--hat-spec", help="accumulated set (default empty)")
    _opt(q, "--ground-spec", help="D (default 1..n)")
    _opt(q, "--threshold", help="saturation threshold (rational)")

    def proof_params(q):
        _opt(q, "--n", help="universe size")
        _opt(q, "--m", help="total sample size m")
        _opt(q, "--k", help="progression length")
        _opt(q, "--kprime", help="hit threshold k'")
        _opt(q, "--alpha", help="density parameter (default 1)")
        _opt(q, "--beta", help="beta parameter (default 1/2)")
        _opt(q, "--gamma-prime", help="gamma' driving z and gamma")
        _opt(q, "--xi-prime", help="xi' driving the deletion cap")
        _opt(q, "--big-t", help="T in z = ceil(gamma'/(4T)) (default 1)")
        _opt(q, "--ground-spec", help="D (default 1..n)")
        _opt(q, "--mode", help="exact or greedy (default exact)")

    q = psub.add_parser("advancing", help="advancing property of one block")
    _common_options(q)
    proof_params(q)
    _opt(q, "--block-spec", help="the block S (size m')")
    _opt(q, "--hat-spec", help="accumulated set (default empty)")

    q = psub.add_parser("zbuild", help="sequential Z construction")
    _common_options(q)
    proof_params(q)
    _opt(q, "--blocks-spec", help="2z block specs separated by ';'")
    _opt(q, "--x-spec", help="deletion target X (default empty)")

    q = psub.add_parser("deletion", help="k'-set families and K bound")
    _common_options(q)
    _opt(q, "--n", help="universe size")
    _opt(q, "--k", help="progression length")
    _opt(q, "--kprime", help="subset size k'")

    q = psub.add_parser("pz", help="Paley-Zygmund check on a degree profile")
    _common_options(q)
    _opt(q, "--n", help="universe size")
    _opt(q, "--k", help="progression length")
    _opt(q, "--kprime", help="hit threshold k'")
    _opt(q, "--set-spec", help="S (default: D)")
    _opt(q, "--ground-spec", help="D (default 1..n)")

    return parser


def load_config(path):
    """Parse a key = value file; '#' comments, blank lines ignored."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CLIError(f"cannot read config '{path}': {exc}") from exc
    cfg = {}
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise CLIError(f"{path}:{ln}: expected key = value, got "
                           f"'{line}'")
        key, val = (s.strip() for s in line.split("=", 1))
        dest = key.replace("-", "_")
        if dest not in _KNOWN_DESTS:
            raise CLIError(f"{path}:{ln}: unknown config key '{key}'")
        if dest in cfg:
            raise CLIError(f"{path}:{ln}: duplicate config key '{key}'")
        cfg[dest] = val
    return cfg


def _apply_config(args):
    if getattr(args, "config", None):
        for dest, val in load_config(args.config).items():
            if hasattr(args, dest) and getattr(args, dest) is None:
                setattr(args, dest, val)


def _req(args, dest, flag):
    val = getattr(args, dest, None)
    if val is None:
        raise CLIError(f"missing required {flag}")
    return val


def _get(args, dest, default=None):
    val = getattr(args, dest, None)
    return default if val is None else val


def _resolve_budget(args, fallback=DEFAULT_NODE_BUDGET):
    if getattr(args, "budget_nodes", None) is not None:
        return parse_int(args.budget_nodes, "--budget-nodes")
    env = os.environ.get("APLAB_BUDGET_NODES", "").strip()
    if env:
        return int(env)
    return fallback


class _Runner:
    """Times a command and appends exactly one record on success."""

    def __init__(self, args, command, seed=0):
        self.args = args
        self.command = command
        self.seed = seed
        self.started_at = datetime.now(timezone.utc).isoformat(
            timespec="milliseconds")
        self.t0 = time.monotonic()

    def emit(self, params, results, budget_flags=()):
        record = RunRecord(
            schema_version=SCHEMA_VERSION,
            command=self.command,
            params=params,
            seed=self.seed,
            started_at=self.started_at,
            duration_ms=int((time.monotonic() - self.t0) * 1000),
            results=results,
            budget_flags=list(budget_flags),
            code_revision=code_revision(),
        )
        writer = RecordWriter(_get(self.args, "records", DEFAULT_RECORDS))
        return writer.append(record)


def cmd_count(args):
    n = parse_int(_req(args, "n", "--n"), "--n")
    k = parse_int(_req(args, "k", "--k"), "--k")
    kp = parse_int(_get(args, "kprime", str(k)), "--kprime")
    ground = _get(args, "ground_spec", "1..n")
    spec = _get(args, "set_spec", ground)
    runner = _Runner(args, "count")
    D = parse_set_spec(ground, n)
    S = parse_set_spec(spec, n)
    try:
        total = count_aps(S, D, kp, k)
        prof = degree_profile(S, D, kp, k)
        lhs, rhs_exact, rhs_uniform = degree_sum_sides(S, D, kp, k)
    except ValueError as exc:
        raise CLIError(str(exc)) from exc
    print(f"AP_{{{kp},{k}}}(S, D) = {total}   "
          f"(|S| = {S.size}, |D| = {D.size}, n = {n})")
    print(f"degree profile: first moment {prof.first_moment}, "
          f"second moment {prof.second_moment}, max {prof.max_count}")
    print(f"degree sum {lhs} = (k-k')N_eq + kN_gt = {rhs_exact}; "
          f"uniform bound kN_>= = {rhs_uniform}")
    params = {"n": n, "k": k, "kprime": kp, "set_spec": spec,
              "ground_spec": ground}
    results = {"ap_count": total,
               "first_moment": prof.first_moment,
               "second_moment": prof.second_moment,
               "max_count": prof.max_count,
               "degree_sum": lhs,
               "degree_sum_exact_rhs": rhs_exact,
               "degree_sum_uniform_rhs": rhs_uniform}
    runner.emit(params, results)
    return 0


def cmd_enum(args):
    n = parse_int(_req(args, "n", "--n"), "--n")
    k = parse_int(_req(args, "k", "--k"), "--k")
    m_flag = _get(args, "m")
    gamma = _get(args, "gamma")
    alpha = parse_fraction(_get(args, "alpha", "1"), "--alpha")
    beta = parse_fraction(_get(args, "beta", "1/2"), "--beta")
    allow_long = parse_bool(_get(args, "allow_long", "false"), "--allow-long")
    if gamma is not None:
        gamma = parse_fraction(gamma, "--gamma")
        if gamma < 0:
            raise CLIError("--gamma must be nonnegative")
    ms = [parse_int(m_flag, "--m")] if m_flag is not None else list(
        range(0, n + 1))
    if any(m < 0 or m > n for m in ms):
        raise CLIError(f"--m must lie in 0..{n}")
    runner = _Runner(args, "enum")
    budget = _resolve_budget(args)
    est = sum(comb(n, m) for m in ms) * (2 if gamma is not None else 1)
    if est > budget and not allow_long:
        raise CLIError(
            f"enumeration needs about {est} nodes, over the budget of "
            f"{budget}; raise APLAB_BUDGET_NODES or pass --allow-long")
    row_budget = 10 ** 18 if allow_long else budget
    budget_flags = ["allow-long"] if allow_long else []

    rows = []
    print(f"{'m':>4}  {'apfree':>12}  {'deficient':>12}  "
          f"{'beta^m C(n,m)':>14}")
    for m in ms:
        bound = beta ** m * comb(n, m)
        if gamma is not None and m >= 1:
            res = count_deficient_msets(n, k, m, gamma, alpha, beta,
                                        budget_nodes=row_budget)
            apfree, deficient = res.apfree_count, res.deficient_count
            threshold = res.threshold
        else:
            apfree = count_apfree_msets(n, k, m, budget_nodes=row_budget)
            deficient, threshold = None, None
        rows.append({"m": m, "apfree_count": apfree,
                     "deficient_count": deficient,
                     "threshold": threshold, "beta_bound": bound})
        dtxt = "-" if deficient is None else str(deficient)
        print(f"{m:>4}  {apfree:>12}  {dtxt:>12}  {float(bound):>14.6g}")
    params = {"n": n, "k": k,
              "m": None if m_flag is None else ms[0],
              "gamma": gamma, "alpha": alpha, "beta": beta,
              "allow_long": allow_long}
    runner.emit(params, {"rows": rows}, budget_flags)
    return 0


def cmd_sweep(args):
    n = parse_int(_req(args, "n", "--n"), "--n")
    k = parse_int(_req(args, "k", "--k"), "--k")
    alpha = parse_fraction(_req(args, "alpha", "--alpha"), "--alpha")
    c_grid = parse_fraction_list(_req(args, "c_grid", "--c-grid"),
                                 "--c-grid")
    trials = parse_int(_req(args, "trials", "--trials"), "--trials")
    seed = parse_int(_req(args, "seed", "--seed"), "--seed")
    threads = _get(args, "threads")
    threads = parse_int(threads, "--threads") if threads is not None else None
    budget = _resolve_budget(args, fallback=DEFAULT_TRIAL_BUDGET)
    csv_path = _get(args, "csv", f"sweep_n{n}_k{k}_seed{seed}.csv")
    try:
        config = SweepConfig(n=n, k=k, alpha=alpha, C_grid=tuple(c_grid),
                             trials=trials, seed=seed)
    except ValueError as exc:
        raise CLIError(str(exc)) from exc
    runner = _Runner(args, "sweep", seed=seed)
    result = threshold_sweep(config, budget_nodes=budget, threads=threads)

    lines = ["C,p,trials,successes,unresolved,wilson_lo,wilson_hi,"
             "mean_set_size"]
    for pt in result.points:
        lines.append(f"{pt.C},{pt.p!r},{pt.trials},{pt.successes},"
                     f"{pt.unresolved},{pt.wilson[0]!r},{pt.wilson[1]!r},"
                     f"{pt.mean_set_size}")
    Path(csv_path).write_text("\n".join(lines) + "\n", encoding="utf-8")

    for pt in result.points:
        print(f"C = {pt.C}: p = {pt.p:.6g}, {pt.successes}/{pt.trials} "
              f"successes, {pt.unresolved} unresolved, Wilson "
              f"[{pt.wilson[0]:.4f}, {pt.wilson[1]:.4f}], mean |S| = "
              f"{float(pt.mean_set_size):.2f}")
    print(f"curve written to {csv_path}")
    params = {"n": n, "k": k, "alpha": alpha,
              "c_grid": [str(c) for c in c_grid],
              "trials": trials, "seed": seed, "budget_nodes": budget,
              "csv": str(csv_path)}
    points = [{"C": pt.C, "p": pt.p, "trials": pt.trials,
               "successes": pt.successes, "unresolved": pt.unresolved,
               "wilson_lo": pt.wilson[0], "wilson_hi": pt.wilson[1],
               "mean_set_size": pt.mean_set_size}
              for pt in result.points]
    flags = (["unresolved-trials"] if result.total_unresolved else [])
    runner.emit(params, {"points": points,
                         "total_unresolved": result.total_unresolved,
                         "total_nodes": result.total_nodes}, flags)
    return 0


def _proof_derive(args):
    n = parse_int(_req(args, "n", "--n"), "--n")
    m = parse_int(_req(args, "m", "--m"), "--m")
    k = parse_int(_req(args, "k", "--k"), "--k")
    kp = parse_int(_req(args, "kprime", "--kprime"), "--kprime")
    alpha = parse_fraction(_get(args, "alpha", "1"), "--alpha")
    beta = parse_fraction(_get(args, "beta", "1/2"), "--beta")
    gp = parse_fraction(_req(args, "gamma_prime", "--gamma-prime"),
                        "--gamma-prime")
    xp = parse_fraction(_req(args, "xi_prime", "--xi-prime"), "--xi-prime")
    big_t = parse_fraction(_get(args, "big_t", "1"), "--big-t")
    try:
        base = ProblemParams(n=n, m=m, k=k, k_prime=kp, alpha=alpha,
                             beta=beta)
        pp = derive_proof_params(base, gp, xp, big_t)
    except (TypeError, ValueError) as exc:
        raise CLIError(str(exc)) from exc
    params = {"n": n, "m": m, "k": k, "kprime": kp, "alpha": alpha,
              "beta": beta, "gamma_prime": gp, "xi_prime": xp,
              "big_t": big_t}
    return pp, params


def cmd_proof_saturate(args):
    n = parse_int(_req(args, "n", "--n"), "--n")
    k = parse_int(_req(args, "k", "--k"), "--k")
    kp = parse_int(_req(args, "kprime", "--kprime"), "--kprime")
    threshold = parse_fraction(_req(args, "threshold", "--threshold"),
                               "--threshold")
    ground = _get(args, "ground_spec", "1..n")
    hat = _get(args, "hat_spec", "")
    runner = _Runner(args, "proof-saturate")
    D = parse_set_spec(ground, n)
    S_hat = parse_set_spec(hat, n)
    try:
        sat = saturated_set(S_hat, D, k, kp, threshold)
    except ValueError as exc:
        raise CLIError(str(exc)) from exc
    mem = [int(x) for x in sat.members()]
    print(f"|T| = {sat.size} of |D| = {D.size} at threshold {threshold}")
    print("members:", ",".join(str(x) for x in mem[:40])
          + (",..." if len(mem) > 40 else ""))
    params = {"n": n, "k": k, "kprime": kp, "threshold": threshold,
              "hat_spec": hat, "ground_spec": ground}
    runner.emit(params, {"size": sat.size, "members": mem})
    return 0


def cmd_proof_advancing(args):
    pp, params = _proof_derive(args)
    n = pp.n
    ground = _get(args, "ground_spec", "1..n")
    block = _req(args, "block_spec", "--block-spec")
    hat = _get(args, "hat_spec", "")
    mode = _get(args, "mode", "exact")
    if mode not in ("exact", "greedy"):
        raise CLIError(f"--mode must be exact or greedy, got '{mode}'")
    runner = _Runner(args, "proof-advancing")
    D = parse_set_spec(ground, n)
    S = parse_set_spec(block, n)
    S_hat = parse_set_spec(hat, n)
    budget = _resolve_budget(args)
    try:
        v = check_advancing(S, S_hat, D, pp, mode=mode, budget_nodes=budget)
    except ValueError as exc:
        raise CLIError(str(exc)) from exc
    verdict = "advancing" if v.advancing else "not advancing"
    tag = " (heuristic)" if v.heuristic else ""
    print(f"block is {verdict}{tag}; mode {v.mode}, tested {v.tested} "
          f"deletion sets" + (", downgraded from exact" if v.downgraded
                              else ""))
    if v.witness is not None:
        print("witness X =", ",".join(str(int(x))
                                      for x in v.witness.members()))
    params.update({"block_spec": block, "hat_spec": hat,
                   "ground_spec": ground, "mode": mode})
    results = {"advancing": v.advancing, "mode": v.mode,
               "downgraded": v.downgraded, "heuristic": v.heuristic,
               "tested": v.tested,
               "witness": None if v.witness is None else
               [int(x) for x in v.witness.members()]}
    flags = ["downgraded-to-greedy"] if v.downgraded else []
    runner.emit(params, results, flags)
    return 0


def cmd_proof_zbuild(args):
    pp, params = _proof_derive(args)
    n = pp.n
    ground = _get(args, "ground_spec", "1..n")
    blocks_spec = _req(args, "blocks_spec", "--blocks-spec")
    x_spec = _get(args, "x_spec", "")
    mode = _get(args, "mode", "exact")
    if mode not in ("exact", "greedy"):
        raise CLIError(f"--mode must be exact or greedy, got '{mode}'")
    runner = _Runner(args, "proof-zbuild")
    D = parse_set_spec(ground, n)
    block_specs = [s.strip() for s in blocks_spec.split(";")]
    blocks = tuple(parse_set_spec(s, n) for s in block_specs)
    if len(blocks) != 2 * pp.z:
        raise CLIError(f"need 2z = {2 * pp.z} blocks, got {len(blocks)}")
    X = parse_set_spec(x_spec, n)
    budget = _resolve_budget(args)
    try:
        res = sequential_Z_builder(blocks, D, pp, X, mode=mode,
                                   budget_nodes=budget)
    except ValueError as exc:
        raise CLIError(str(exc)) from exc
    print(f"Z = {list(res.Z)}; outcome {res.outcome}")
    for step in res.trace:
        line = (f"  block {step.i}: "
                f"{'advancing' if step.advancing else 'not advancing'}")
        if step.advancing:
            line += (f", clause A {step.clause_a}, clause B "
                     f"{step.clause_b}, |T| = {step.sat_size}, "
                     f"APs = {step.ap_count}")
        print(line)
    params.update({"blocks_spec": blocks_spec, "x_spec": x_spec,
                   "ground_spec": ground, "mode": mode})
    results = {
        "Z": list(res.Z),
        "outcome": res.outcome,
        "mode": mode,
        "deletions": {str(i): [int(x) for x in g.members()]
                      for i, g in sorted(res.deletions.items())},
        "trace": [{"i": s.i, "advancing": s.advancing,
                   "clause_a": s.clause_a, "clause_b": s.clause_b,
                   "sat_size": s.sat_size, "ap_count": s.ap_count}
                  for s in res.trace],
        "final_hat": [int(x) for x in res.final_hat.members()],
    }
    runner.emit(params, results)
    return 0


def cmd_proof_deletion(args):
    n = parse_int(_req(args, "n", "--n"), "--n")
    k = parse_int(_req(args, "k", "--k"), "--k")
    kp = parse_int(_req(args, "kprime", "--kprime"), "--kprime")
    runner = _Runner(args, "proof-deletion")
    budget = _resolve_budget(args)
    try:
        fam = build_deletion_families(n, k, kp, budget_nodes=budget)
    except ValueError as exc:
        raise CLIError(str(exc)) from exc
    sizes = {str(s): c for s, c in sorted(fam.B_union_sizes.items())}
    print(f"|B| = {len(fam.B)} k'-sets inside k-APs; K = {fam.K}")
    print(f"related pairs: {len(fam.B_related)}; union strata " +
          ", ".join(f"|B'_{s}| = {c}" for s, c in sizes.items()))
    params = {"n": n, "k": k, "kprime": kp}
    runner.emit(params, {"B_size": len(fam.B), "K": fam.K,
                         "related_pairs": len(fam.B_related),
                         "union_sizes": sizes})
    return 0


def cmd_proof_pz(args):
    n = parse_int(_req(args, "n", "--n"), "--n")
    k = parse_int(_req(args, "k", "--k"), "--k")
    kp = parse_int(_req(args, "kprime", "--kprime"), "--kprime")
    ground = _get(args, "ground_spec", "1..n")
    spec = _get(args, "set_spec", ground)
    runner = _Runner(args, "proof-pz")
    D = parse_set_spec(ground, n)
    S = parse_set_spec(spec, n)
    try:
        prof = degree_profile(S, D, kp, k)
    except ValueError as exc:
        raise CLIError(str(exc)) from exc
    rep = paley_zygmund_check(prof)
    if rep.degenerate:
        print("degenerate profile: first moment 0, bound holds vacuously")
    else:
        print(f"Pr[Y >= EY/2] = {rep.probability} >= "
              f"EY^2/(4 EY^2-moment) = {rep.bound}: "
              f"{'holds' if rep.holds else 'FAILS'}")
        print(f"ratio = {float(rep.ratio)}")
    params = {"n": n, "k": k, "kprime": kp, "set_spec": spec,
              "ground_spec": ground}
    results = {"probability": rep.probability, "bound": rep.bound,
               "first_moment": rep.first_moment,
               "second_moment": rep.second_moment,
               "holds": rep.holds, "degenerate": rep.degenerate,
               "ratio": None if rep.ratio is None else float(rep.ratio)}
    runner.emit(params, results)
    return 0


_DISPATCH = {
    "count": cmd_count,
    "enum": cmd_enum,
    "sweep": cmd_sweep,
    ("proof", "saturate"): cmd_proof_saturate,
    ("proof", "advancing"): cmd_proof_advancing,
    ("proof", "zbuild"): cmd_proof_zbuild,
    ("proof", "deletion"): cmd_proof_deletion,
    ("proof", "pz"): cmd_proof_pz,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return 2
    if args.command == "proof":
        if getattr(args, "proof_command", None) is None:
            print("aplab: proof needs a subcommand "
                  "(saturate|advancing|zbuild|deletion|pz)", file=sys.stderr)
            return 2
        handler = _DISPATCH[("proof", args.proof_command)]
    else:
        handler = _DISPATCH[args.command]
    try:
        _apply_config(args)
        return handler(args)
    except SpecError as exc:
        print(f"aplab: {exc}", file=sys.stderr)
        return 2
    except CLIError as exc:
        print(f"aplab: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"aplab: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
