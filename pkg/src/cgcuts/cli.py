"""Command-line front end: stats, strengthen, separate, oracle.

Exit codes for ``separate``: 0 when cuts were found, 1 when none, 2 on
errors (bad files, usage).  Cut and model payloads are byte-identical for
identical inputs and seed; the stats report includes wall-clock timing and
is exempt from that guarantee.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import oracle
from .bk import PIVOT_RULES, BkParams
from .cgraph import build
from .model import MilpInstance, ParseError, Row, parse_mps, read_point, write_mps
from .presolve import strengthen
from .sep_clique import separate_cliques, cut_to_row
from .sep_oddcycle import separate_odd_cycles, oddwheel_to_row


def _load_model(path: str) -> MilpInstance:
    with open(path, "r", encoding="utf-8") as f:
        return parse_mps(f.read())


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _format_coeff(a: float) -> str:
    return f"{a:g}"


def format_row(row: Row, instance: MilpInstance) -> str:
    parts = []
    for j, a in row.coeffs:
        name = instance.variables[j].name
        mag = abs(a)
        term = name if mag == 1.0 else f"{_format_coeff(mag)} {name}"
        if not parts:
            parts.append(term if a > 0 else f"- {term}")
        else:
            parts.append(f"+ {term}" if a > 0 else f"- {term}")
    expr = " ".join(parts) if parts else "0"
    return f"{expr} <= {_format_coeff(row.rhs)}"


def cmd_stats(args) -> int:
    instance = _load_model(args.model)
    t0 = time.perf_counter()
    g = build(instance, args.min_clq_size)
    elapsed = time.perf_counter() - t0
    n_bin = len(instance.binary_indices())
    n_int = sum(1 for v in instance.variables if v.is_integer and not v.is_binary)
    n_con = instance.n_vars - n_bin - n_int
    nz = sum(len(r.coeffs) for r in instance.rows)
    edges = g.edge_set()
    st = g.store
    stored_first = sum(st.first_stored)
    adj_entries = sum(len(a) for a in g.adjlist)
    mem = (
        sum(len(f) for f in st.first) * 8
        + len(st.addtl) * 24
        + adj_entries * 8
        + (sum(len(x) for x in st.adjfirst) + sum(len(x) for x in st.adjaddtl)) * 8
    )
    lines = [
        f"instance: {instance.name or args.model}",
        f"variables: {instance.n_vars} (binary {n_bin}, integer {n_int}, continuous {n_con})",
        f"rows: {len(instance.rows)}  nonzeros: {nz}",
        f"conflict graph: nodes {g.n_nodes}, edges {len(edges)}",
        f"cliques detected: {g.cliques_detected}",
        f"stored: first cliques {stored_first}, tuples {len(st.addtl)}, adjlist entries {adj_entries}",
        f"build time: {elapsed:.6f} s",
        f"memory estimate: {mem} bytes",
    ]
    text = "\n".join(lines) + "\n"
    if args.dump:
        text += g.dump(instance)
    _emit(text, args.out)
    return 0


def cmd_strengthen(args) -> int:
    instance = _load_model(args.model)
    g = build(instance, args.min_clq_size)
    report = strengthen(instance, g, args.alpha_max)
    _emit(write_mps(report.instance), args.out)
    added = sum(k for _, k in report.extended)
    print(
        f"rows extended: {len(report.extended)}  "
        f"rows removed: {len(report.removed_rows)}  "
        f"literals added: {added}",
        file=sys.stderr,
    )
    return 0


def cmd_separate(args) -> int:
    instance = _load_model(args.model)
    g = build(instance, args.min_clq_size)
    with open(args.point, "r", encoding="utf-8") as f:
        point = read_point(f.read(), instance)
    params = BkParams(max_calls=args.max_calls, pivot_rule=args.pivot,
                      rng_seed=args.seed)
    n = instance.n_vars
    lines = []
    if args.kind == "clique":
        cuts = separate_cliques(g, point, args.min_viol, params)
        for i, cut in enumerate(cuts):
            row = cut_to_row(cut, n, f"clique_{i}")
            if args.machine:
                terms = ",".join(f"{instance.variables[j].name}:{a:g}" for j, a in row.coeffs)
                lines.append(f"cut\t{row.name}\t{cut.violation:.9f}\t<=\t{row.rhs:g}\t{terms}")
            else:
                lines.append(f"{row.name}: {format_row(row, instance)}"
                             f"  # violation={cut.violation:.6f}")
    else:
        cuts = separate_odd_cycles(g, point)
        for i, cut in enumerate(cuts):
            row = oddwheel_to_row(cut, n, f"oddcycle_{i}")
            center = ",".join(instance.node_name(v) for v in sorted(cut.center))
            if args.machine:
                terms = ",".join(f"{instance.variables[j].name}:{a:g}" for j, a in row.coeffs)
                lines.append(f"cut\t{row.name}\t{cut.violation:.9f}\t<=\t{row.rhs:g}\t{terms}")
            else:
                annotation = f"  # violation={cut.violation:.6f}"
                if center:
                    annotation += f" center=[{center}]"
                lines.append(f"{row.name}: {format_row(row, instance)}{annotation}")
    _emit("\n".join(lines) + ("\n" if lines else ""), args.out)
    return 0 if cuts else 1


def cmd_oracle(args) -> int:
    instance = _load_model(args.model)
    if args.oracle_command == "probe":
        result = oracle.probe_pairs(instance)
        lines = sorted(
            " ".join(sorted(instance.node_name(v) for v in edge))
            for edge in result.edges
        )
        _emit("\n".join(lines) + ("\n" if lines else ""), args.out)
    else:
        points = sorted(oracle.enum_feasible(instance))
        _emit("\n".join("".join(str(b) for b in p) for p in points)
              + ("\n" if points else ""), args.out)
    return 0


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--min-clq-size", type=int, default=512,
                   help="cliques this small are stored pairwise (default 512)")
    p.add_argument("--out", default=None, help="output path (default stdout)")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="cgcuts",
        description="Conflict-graph presolve and cut separation for 0-1 programs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_stats = sub.add_parser("stats", help="model and conflict-graph statistics")
    p_stats.add_argument("model")
    p_stats.add_argument("--dump", action="store_true", help="append the graph dump")
    _add_common(p_stats)
    p_stats.set_defaults(func=cmd_stats)

    p_str = sub.add_parser("strengthen", help="clique-strengthen set-packing rows")
    p_str.add_argument("model")
    p_str.add_argument("--alpha-max", type=int, default=128,
                       help="only extend rows with at most this many variables")
    _add_common(p_str)
    p_str.set_defaults(func=cmd_strengthen)

    p_sep = sub.add_parser("separate", help="separate cuts against a point")
    p_sep.add_argument("kind", choices=("clique", "oddcycle"))
    p_sep.add_argument("model")
    p_sep.add_argument("point")
    p_sep.add_argument("--min-viol", type=float, default=0.02)
    p_sep.add_argument("--max-calls", type=int, default=100_000)
    p_sep.add_argument("--pivot", choices=PIVOT_RULES, default="wgt")
    p_sep.add_argument("--seed", type=int, default=0)
    p_sep.add_argument("--machine", action="store_true",
                       help="tab-separated machine-readable cut lines")
    _add_common(p_sep)
    p_sep.set_defaults(func=cmd_separate)

    p_or = sub.add_parser("oracle", help="brute-force references (debugging)")
    or_sub = p_or.add_subparsers(dest="oracle_command", required=True)
    for name in ("probe", "feasible"):
        q = or_sub.add_parser(name)
        q.add_argument("model")
        q.add_argument("--out", default=None)
    p_or.set_defaults(func=cmd_oracle)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
