"""Command-line surface: normality queries, stratum tables, lemma suites,
and dominance-poset exports.

Exit codes: 0 success, 1 a verification suite found a counterexample,
2 usage/parse/bound errors.  Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import verify
from .partitions import (
    dominance_covers,
    enumerate_partitions,
    format_partition,
    parse_partition,
)
from .strata import dim_orbit, lambda_bound, strata_report, strata_spec

POSET_BOUND = 20


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _fraction_str(value: Fraction) -> str:
    return str(value)


def _cmd_normal(args) -> int:
    lam = parse_partition(args.partition)
    certify = args.certify
    if certify and lam and sum(lam) > lambda_bound():
        print(
            f"note: |lambda| = {sum(lam)} exceeds the enumeration bound"
            f" {lambda_bound()}; no gap certificate",
            file=sys.stderr,
        )
        certify = False
    verdict = verify.is_normal(lam, certify=certify)
    if args.format == "json":
        payload = {
            "lambda": list(lam),
            "normal": verdict.normal,
            "witness": verdict.witness,
            "min_gap_num4": None
            if verdict.gap_certificate is None
            else int(verdict.gap_certificate * 4),
        }
        print(_dump(payload))
        return 0
    if verdict.normal:
        line = "normal"
    else:
        line = f"NOT normal (step at row {verdict.witness})"
    if verdict.gap_certificate is not None:
        line += f"; min gap {_fraction_str(verdict.gap_certificate)}"
    print(line)
    return 0


def _cmd_strata(args) -> int:
    lam = parse_partition(args.partition)
    report = strata_report(lam)
    if args.format == "json":
        print(_dump(report))
        return 0
    spec = strata_spec(lam)
    print(
        f"lambda={format_partition(lam)}  n={sum(lam)}  t={spec.t}"
        f"  dims={','.join(map(str, spec.dims))}"
        f"  dimM={report['dimM']}  dimN={report['dimN']}"
    )
    top_mu = list(lam)
    for row in report["strata"]:
        marker = "*" if row["mu"] == top_mu else " "
        tau_text = " | ".join(row["tau"])
        dim = Fraction(row["dim_num4"], 4)
        print(
            f" {marker} {tau_text}    mu={format_partition(tuple(row['mu']))}"
            f"  dim={_fraction_str(dim)}"
        )
    return 0


def _cmd_verify(args) -> int:
    if args.lemma == "all":
        reports = verify.run_all(
            args.max_n,
            max_counterexamples=10**9 if args.full_counterexamples else 10,
        )
    else:
        reports = [
            verify.run_suite(
                args.lemma,
                args.max_n,
                max_counterexamples=10**9 if args.full_counterexamples else 10,
            )
        ]
    if args.format == "json":
        print(_dump([r.to_dict() for r in reports]))
    else:
        for r in reports:
            status = "ok  " if r.ok else "FAIL"
            print(
                f"{status} {r.lemma_id:<15} n<={r.n_range[1]:<3}"
                f" instances={r.instances_checked:<9}"
                f" counterexamples={len(r.counterexamples)}"
                f" ({r.elapsed_s:.2f}s)"
            )
            for ce in r.counterexamples:
                print(f"      {json.dumps(ce, sort_keys=True)}")
    return 0 if all(r.ok for r in reports) else 1


def _poset_data(n: int) -> tuple[list[dict], list[tuple[str, str]]]:
    nodes = []
    for lam in enumerate_partitions(n):
        dim = dim_orbit(lam)
        nodes.append(
            {
                "partition": format_partition(lam),
                "normal": verify.is_normal(lam).normal,
                "dim_orbit": int(dim),
            }
        )
    edges = [
        (format_partition(lam), format_partition(mu))
        for lam, mu in dominance_covers(n)
    ]
    return nodes, edges


def _cmd_poset(args) -> int:
    n = args.n
    if n < 1 or n > POSET_BOUND:
        raise ValueError(f"poset size must be between 1 and {POSET_BOUND}")
    nodes, edges = _poset_data(n)
    if args.format == "json":
        print(_dump({"n": n, "nodes": nodes, "edges": [list(e) for e in edges]}))
        return 0
    if args.format == "dot":
        lines = [f'digraph "dominance_{n}" {{']
        for node in nodes:
            shape = "box" if node["normal"] else "ellipse"
            tag = "normal" if node["normal"] else "not normal"
            lines.append(
                f'  "{node["partition"]}" [shape={shape},'
                f' label="{node["partition"]}\\ndim={node["dim_orbit"]} {tag}"];'
            )
        for src, dst in edges:
            lines.append(f'  "{src}" -> "{dst}";')
        lines.append("}")
        print("\n".join(lines))
        return 0
    print(f"dominance order on partitions of {n}: {len(nodes)} nodes, {len(edges)} edges")
    for node in nodes:
        tag = "normal" if node["normal"] else "not normal"
        print(f"  {node['partition']:<12} dim={node['dim_orbit']:<4} {tag}")
    for src, dst in edges:
        print(f"  {src} > {dst}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symorbit",
        description="Nilpotent orbit closures in the orthogonal symmetric space:"
        " normality, stratum dimensions, and exhaustive lemma checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_normal = sub.add_parser("normal", help="decide normality of an orbit closure")
    p_normal.add_argument("partition", help="partition literal, e.g. 3,1 or [3,1]")
    p_normal.add_argument(
        "--certify",
        action="store_true",
        help="also compute the minimum stratum gap (small partitions only)",
    )
    p_normal.add_argument("--format", choices=("text", "json"), default="text")
    p_normal.set_defaults(func=_cmd_normal)

    p_strata = sub.add_parser("strata", help="list stratum labels and dimensions")
    p_strata.add_argument("partition")
    p_strata.add_argument("--format", choices=("text", "json"), default="text")
    p_strata.set_defaults(func=_cmd_strata)

    p_verify = sub.add_parser("verify", help="run exhaustive lemma suites")
    p_verify.add_argument(
        "lemma",
        help="a lemma id or 'all'; known ids: " + ", ".join(verify.SUITES),
    )
    p_verify.add_argument("--max-n", type=int, default=None, dest="max_n")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument(
        "--full-counterexamples",
        action="store_true",
        help="do not cap the counterexample list at 10 per suite",
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_poset = sub.add_parser("poset", help="export the dominance poset of P(n)")
    p_poset.add_argument("n", type=int)
    p_poset.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p_poset.set_defaults(func=_cmd_poset)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
