"""Command line interface: build, verify, cert, gen and sweep.

Exit codes: 0 ok, 1 verification failure, 2 input error, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .graph import Setting
from .greedy import BudgetExceeded, build_ft_greedy, DEFAULT_MAX_NODES
from .io import ParseError, read_graph, serialize, write_graph
from .lowerbound import DensityExhausted, gen_ecft_lower, gen_list_lower, gen_mcft_lower, girth_base
from .modified import build_modified_greedy
from .oracle import build_certificate, verify_certificate, verify_ft_spanner
from .random_graphs import random_colored_graph, sweep_edge_prob

log = logging.getLogger("cftspan")

CSV_VERSION = "# cftspan-experiments v1"
COLUMNS = [
    "instance", "setting", "n", "m", "palette", "f", "k", "algo",
    "spanner_edges", "max_blame", "blocking_pairs", "time_ms", "verified",
]

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def record(instance, g, report, verified: str) -> dict:
    return {
        "instance": instance,
        "setting": g.setting.value,
        "n": g.n,
        "m": g.m,
        "palette": len(g.universe),
        "f": report.f,
        "k": report.k,
        "algo": report.algorithm,
        "spanner_edges": report.spanner.m,
        "max_blame": report.max_blame,
        "blocking_pairs": len(report.blocking),
        "time_ms": f"{report.stats.time_ms:.1f}",
        "verified": verified,
    }


def write_csv(rows, path) -> None:
    buf = io.StringIO()
    buf.write(CSV_VERSION + "\n")
    writer = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    if path in (None, "-"):
        sys.stdout.write(buf.getvalue())
    else:
        Path(path).write_text(buf.getvalue())


def run_build(g, algo: str, k: int, f: int, max_nodes=DEFAULT_MAX_NODES):
    if algo == "greedy":
        return build_ft_greedy(g, k, f, max_nodes=max_nodes)
    if algo == "modified":
        return build_modified_greedy(g, k, f)
    raise ValueError(f"unknown algorithm {algo!r}")


def verify_status(g, report, budget=None) -> str:
    try:
        ok = verify_ft_spanner(g, report.spanner, report.k, report.f, budget=budget).ok
    except BudgetExceeded:
        return "skipped"
    return "ok" if ok else "failed"


def _describe(g, outcome) -> str:
    faults = "{" + ", ".join(g.labels(outcome.faults)) + "}"
    u, v = outcome.pair
    return f"counterexample: F={faults} pair=({u}, {v}) dist_H={outcome.dist_h} dist_G={outcome.dist_g}"


# subcommands ----------------------------------------------------------------


def cmd_build(args) -> int:
    g = read_graph(args.graph)
    report = run_build(g, args.algo, args.k, args.f, args.max_nodes)
    verified = verify_status(g, report) if args.verify else "skipped"
    comment = f"spanner: algo={args.algo} k={args.k} f={args.f} source={args.graph}"
    if args.out:
        write_graph(report.spanner, args.out, comment)
    else:
        sys.stdout.write(serialize(report.spanner, comment))
    if args.report:
        write_csv([record(Path(args.graph).stem, g, report, verified)], args.report)
    if verified == "failed":
        return EXIT_VERIFY
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    h_file = read_graph(args.spanner)
    h = g.subgraph(e.id for e in h_file.edges)
    for e in h_file.edges:
        o = g.edge(e.id)
        if {o.u, o.v} != {e.u, e.v} or o.weight != e.weight:
            raise ParseError(f"spanner edge {e.id} does not match the graph's edge {e.id}")
    if args.cert:
        outcome = verify_certificate(g, h, args.lam)
    else:
        outcome = verify_ft_spanner(g, h, args.k, args.f)
    if outcome.ok:
        print("ok")
        return EXIT_OK
    print("FAILED")
    print(_describe(g, outcome))
    return EXIT_VERIFY


def cmd_cert(args) -> int:
    g = read_graph(args.graph)
    report = build_certificate(g, args.lam)
    verified = "skipped"
    if args.verify:
        try:
            verified = "ok" if verify_certificate(g, report.spanner, args.lam).ok else "failed"
        except BudgetExceeded:
            verified = "skipped"
    comment = f"certificate: lambda={args.lam} k={report.k} source={args.graph}"
    if args.out:
        write_graph(report.spanner, args.out, comment)
    else:
        sys.stdout.write(serialize(report.spanner, comment))
    if args.report:
        write_csv([record(Path(args.graph).stem, g, report, verified)], args.report)
    return EXIT_VERIFY if verified == "failed" else EXIT_OK


def generate(family: str, f: int, k: int, mu: int, nu: int, seed: int, n: int):
    base = girth_base(n, k, seed)
    if family == "ecft":
        return gen_ecft_lower(base, f, k, seed)
    if family == "mcft":
        return gen_mcft_lower(gen_ecft_lower(base, f, k, seed), f, seed)
    if family == "lists":
        return gen_list_lower(base, f, k, mu, nu, seed)
    raise ValueError(f"unknown family {family!r}")


def cmd_gen(args) -> int:
    g = generate(args.family, args.f, args.k, args.mu, args.nu, args.seed, args.n)
    comment = (
        f"generator: gen_{args.family}_lower f={args.f} k={args.k} mu={args.mu} nu={args.nu} "
        f"n_hint={args.n} seed={args.seed}"
    )
    if args.out:
        write_graph(g, args.out, comment)
    else:
        sys.stdout.write(serialize(g, comment))
    return EXIT_OK


def parse_range(text: str) -> list:
    """'1..4' -> [1, 2, 3, 4]; '1,3' -> [1, 3]; '2' -> [2]."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise ValueError(f"empty range {text!r}")
    return out


def sweep_instance(family, setting, n, k, f, seed, trial):
    if family == "random":
        g = random_colored_graph(n, sweep_edge_prob(n, k), setting, seed=seed * 1_000_003 + trial)
        return f"random-s{seed}-t{trial}", g
    g = gen_ecft_lower(girth_base(n, k, seed + trial), f, k, seed + trial)
    return f"lowerbound-s{seed}-t{trial}-f{f}", g


def sweep_task(task):
    family, setting, n, k, f, seed, trial, verify, budget = task
    rows = []
    try:
        name, g = sweep_instance(family, setting, n, k, f, seed, trial)
    except (DensityExhausted, RuntimeError) as exc:
        log.warning("instance f=%s trial=%s failed: %s", f, trial, exc)
        return [_failed_row(family, setting, n, f, k, algo) for algo in ("greedy", "modified")]
    for algo in ("greedy", "modified"):
        try:
            report = run_build(g, algo, k, f)
        except BudgetExceeded as exc:
            log.warning("%s f=%s trial=%s: %s", algo, f, trial, exc)
            rows.append(_failed_row(name, setting, n, f, k, algo, g))
            continue
        status = verify_status(g, report, budget) if verify else "skipped"
        rows.append(record(name, g, report, status))
    return rows


def _failed_row(name, setting, n, f, k, algo, g=None):
    row = dict.fromkeys(COLUMNS, "")
    row.update(instance=name, setting=Setting.parse(setting).value, n=n, f=f, k=k, algo=algo, verified="failed")
    if g is not None:
        row.update(m=g.m, palette=len(g.universe))
    return row


def run_sweep(family, setting, n, f_values, k, trials, seed, jobs=1, verify=True, budget=None) -> list:
    tasks = [
        (family, setting, n, k, f, seed, t, verify, budget)
        for f in f_values
        for t in range(trials)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(sweep_task, tasks))
    else:
        results = [sweep_task(t) for t in tasks]
    return [row for rows in results for row in rows]


def cmd_sweep(args) -> int:
    rows = run_sweep(
        args.family, args.setting, args.n, parse_range(args.f_range), args.k,
        args.trials, args.seed, args.jobs, not args.no_verify,
    )
    write_csv(rows, args.csv)
    if rows and all(r["verified"] == "failed" for r in rows):
        return EXIT_VERIFY
    return EXIT_OK


# argument parsing -----------------------------------------------------------


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _pos(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cftspan", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a fault-tolerant spanner")
    p.add_argument("graph")
    p.add_argument("--algo", choices=["greedy", "modified"], default="modified")
    p.add_argument("--k", type=_pos, default=2)
    p.add_argument("--f", type=_nonneg, default=1)
    p.add_argument("--out")
    p.add_argument("--report", help="write a one-row CSV report here")
    p.add_argument("--verify", action="store_true", help="run the brute-force verifier within budget")
    p.add_argument("--max-nodes", type=_pos, default=DEFAULT_MAX_NODES)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="check a spanner or certificate by brute force")
    p.add_argument("graph")
    p.add_argument("spanner")
    p.add_argument("--k", type=_pos, default=2)
    p.add_argument("--f", type=_nonneg, default=1)
    p.add_argument("--cert", action="store_true", help="check connectivity certificate instead")
    p.add_argument("--lambda", dest="lam", type=_nonneg, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cert", help="build a connectivity certificate")
    p.add_argument("graph")
    p.add_argument("--lambda", dest="lam", type=_pos, default=1)
    p.add_argument("--out")
    p.add_argument("--report")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_cert)

    p = sub.add_parser("gen", help="generate a lower-bound instance")
    p.add_argument("--family", choices=["ecft", "mcft", "lists"], required=True)
    p.add_argument("--f", type=_pos, default=1)
    p.add_argument("--k", type=_pos, default=2)
    p.add_argument("--mu", type=_nonneg, default=1)
    p.add_argument("--nu", type=_nonneg, default=0)
    p.add_argument("--n", type=_pos, default=14, help="vertex count hint for the base graph")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sweep", help="size experiments over f and trials")
    p.add_argument("--family", choices=["random", "lowerbound"], default="random")
    p.add_argument("--setting", choices=[s.value for s in Setting if s.colored], default="ecft")
    p.add_argument("--n", type=_pos, default=30)
    p.add_argument("--f-range", default="1..4")
    p.add_argument("--k", type=_pos, default=2)
    p.add_argument("--trials", type=_pos, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", default="-")
    p.add_argument("--jobs", type=_pos, default=1)
    p.add_argument("--no-verify", action="store_true")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (ParseError, FileNotFoundError, KeyError, ValueError, DensityExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
