"""Command-line front end.

Usage::

    posetradius partition list.txt --algorithm ckk --json
    posetradius poset-radius poset.txt --anytime
    posetradius vector-radius poset.txt 001 --q 2
    posetradius code-radius poset.txt code.txt --no-prune-containment
    posetradius standard-form poset.txt
    posetradius check poset.txt --vector 011 --code code.txt

Exit status: 0 when the answer is proven optimal, 2 when a budget ran out
(best answer found is still printed), 1 on input errors, 3 when ``check``
finds a disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from . import io
from .codes import FieldVector, minimum_distance
from .differencing import brute_min_discordancy
from .errors import PosetRadiusError
from .oracle import (
    OracleReport,
    SPACE_LIMIT,
    ball_radius_oracle,
    code_radius_oracle,
    maxweight_oracle,
    partition_oracle,
)
from .partition import brute_partition, ckk, kk_ldm
from .poset import classify, standard_form
from .radius import PruneOptions, radius_of_code, radius_of_poset, radius_of_vector

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_DISAGREE = 0, 1, 2, 3

PRUNE_NAMES = ("support", "ideal", "containment", "size", "hierarchical", "bound")


class _Clock:
    def __init__(self):
        self.start = time.perf_counter()

    def ms(self) -> float:
        return round((time.perf_counter() - self.start) * 1000, 3)


def _emit(args, payload: dict, lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(lines))


def _anytime(args, clock: _Clock):
    if not args.anytime:
        return None

    def report(value, *rest):
        event = {"event": "incumbent", "value": value, "elapsed_ms": clock.ms()}
        if len(rest) == 2 and not isinstance(rest[0], int):
            event["partition"] = {"primary": sorted(rest[0]), "secondary": sorted(rest[1])}
        elif rest:
            event["nodes"] = rest[0]
        print(json.dumps(event, sort_keys=True), flush=True)

    return report


def _search_options(args, clock) -> dict:
    return {
        "node_budget": args.budget_nodes,
        "time_budget_ms": args.budget_ms,
        "prune": not args.no_prune_bound,
        "on_improve": _anytime(args, clock),
    }


def _prune_options(args) -> PruneOptions:
    return PruneOptions(
        support_dedup=not args.no_prune_support,
        ideal_dedup=not args.no_prune_ideal,
        containment=not args.no_prune_containment,
        size_bound=not args.no_prune_size,
        hierarchical=not args.no_prune_hierarchical,
    )


def cmd_partition(args) -> int:
    values = io.read_list(args.file)
    clock = _Clock()
    algorithm = args.algorithm if args.algorithm != "auto" else "ckk"
    if algorithm == "kk":
        res = kk_ldm(values)
    elif algorithm == "brute":
        res = brute_partition(values)
    elif algorithm == "ckk":
        res = ckk(values, args.budget_nodes, args.budget_ms, _anytime(args, clock))
    else:
        raise PosetRadiusError(f"algorithm {algorithm!r} does not apply to number lists")
    b1, b2 = res.block_values()
    payload = {
        "command": "partition",
        "radius": None,
        "delta_star": res.discrepancy if res.optimal else None,
        "discrepancy": res.discrepancy,
        "block1": b1,
        "block2": b2,
        "partition": {"primary": [i + 1 for i in res.block1], "secondary": [i + 1 for i in res.block2]},
        "optimal": res.optimal,
        "nodes": res.nodes_expanded,
        "elapsed_ms": clock.ms(),
        "strategy": algorithm,
    }
    lines = [
        f"discrepancy: {res.discrepancy}",
        f"blocks: {b1} | {b2}",
        f"optimal: {res.optimal}",
        f"nodes: {res.nodes_expanded}",
    ]
    if res.trace:
        lines.append("instances: " + " ".join(str(t) for t in res.trace))
        payload["trace"] = [list(t) for t in res.trace]
    _emit(args, payload, lines)
    # the heuristic is never "exhausted", so report success for it
    return EXIT_OK if res.optimal or algorithm == "kk" else EXIT_BUDGET


def _outcome_payload(command, out, clock, extra=None) -> dict:
    payload = {
        "command": command,
        "radius": out.radius,
        "lambda_star": out.discordancy,
        "partition": {"primary": sorted(out.primary_set), "secondary": sorted(out.secondary_set)},
        "optimal": out.optimal,
        "nodes": out.nodes_expanded,
        "elapsed_ms": clock.ms(),
        "strategy": out.strategy,
    }
    payload.update(extra or {})
    return payload


def _algorithm(args) -> str:
    alg = args.algorithm
    if alg in ("kk", "ckk"):
        raise PosetRadiusError(f"algorithm {alg!r} only applies to the partition command")
    return alg


def cmd_poset_radius(args) -> int:
    P = io.read_poset(args.file)
    clock = _Clock()
    trace = [] if args.trace else None
    opts = _search_options(args, clock)
    alg = _algorithm(args)
    opts["trace"] = trace
    out = radius_of_poset(P, alg, **opts) if alg != "brute" else radius_of_poset(P, "brute")
    info = classify(P)
    payload = _outcome_payload("poset-radius", out, clock, {"classification": vars(info)})
    lines = [
        f"R(P) = {out.radius}",
        f"Lambda* = {out.discordancy}",
        f"optimum partition: {sorted(out.primary_set)} | {sorted(out.secondary_set)}",
        "classification: " + ", ".join(k for k, v in vars(info).items() if v),
        f"strategy: {out.strategy}",
        f"nodes expanded: {out.nodes_expanded} (pruned {out.nodes_pruned})",
    ]
    if trace:
        lines += ["tree:"] + trace
        payload["tree"] = trace
    _emit(args, payload, lines)
    return EXIT_OK if out.optimal else EXIT_BUDGET


def cmd_vector_radius(args) -> int:
    P = io.read_poset(args.file)
    v = FieldVector.parse(args.vector, args.q)
    clock = _Clock()
    alg = _algorithm(args)
    opts = _search_options(args, clock) if alg != "brute" else {}
    out = radius_of_vector(P, v, alg, **opts)
    payload = _outcome_payload("vector-radius", out, clock, {"vector": str(v)})
    lines = [
        f"R({v}) = {out.radius}",
        f"Lambda* = {out.discordancy}",
        f"optimum partition: {sorted(out.primary_set)} | {sorted(out.secondary_set)}",
        f"strategy: {out.strategy}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK if out.optimal else EXIT_BUDGET


def cmd_code_radius(args) -> int:
    P = io.read_poset(args.poset)
    C = io.read_code(args.code)
    clock = _Clock()
    alg = _algorithm(args)
    opts = _search_options(args, clock) if alg != "brute" else {}
    opts.pop("on_improve", None)
    res = radius_of_code(P, C, _prune_options(args), args.cap, alg, **opts)
    table = [
        {
            "codeword": str(s.codeword),
            "support": sorted(s.support),
            "method": s.method,
            "radius": s.radius,
            "reason": s.reason,
        }
        for s in res.per_codeword_stats
    ]
    payload = {
        "command": "code-radius",
        "radius": res.radius,
        "minimum_distance": res.minimum_distance,
        "packing_vector": str(res.packing_vector),
        "partition": None,
        "optimal": res.optimal,
        "nodes": None,
        "elapsed_ms": clock.ms(),
        "strategy": alg,
        "pruned": res.prune_counts,
        "codewords": table,
    }
    lines = [
        f"minimum distance: {res.minimum_distance}",
        f"packing radius: {res.radius}",
        f"packing vector: {res.packing_vector}",
        "pruned: " + ", ".join(f"{k}={v}" for k, v in res.prune_counts.items()),
        "codeword  support  method  radius",
    ]
    for row in table:
        r = row["radius"] if row["radius"] is not None else "-"
        note = f" ({row['reason']})" if row["reason"] else ""
        lines.append(f"{row['codeword']}  {row['support']}  {row['method']}{note}  {r}")
    _emit(args, payload, lines)
    return EXIT_OK if res.optimal else EXIT_BUDGET


def cmd_standard_form(args) -> int:
    Q = standard_form(io.read_poset(args.file))
    text = io.format_poset_relations(Q) if args.format == "relations" else io.format_poset_matrix(Q)
    sys.stdout.write(text)
    return EXIT_OK


def cmd_check(args) -> int:
    P = io.read_poset(args.file)
    reports: list[OracleReport] = []
    label = args.file
    truth = partition_oracle(P)
    brute = brute_min_discordancy(P)
    for strategy in ("auto", "differencing"):
        out = radius_of_poset(P, strategy)
        reports.append(OracleReport(f"R(P) [{strategy}]", truth.radius, out.radius, label))
    unpruned = radius_of_poset(P, "differencing", prune=False)
    reports.append(OracleReport("Lambda*(P) [no prune]", brute.discordancy, unpruned.discordancy, label))
    reports.append(OracleReport("Lambda*(P)", brute.discordancy, radius_of_poset(P, "differencing").discordancy, label))
    if args.vector:
        v = FieldVector.parse(args.vector, args.q)
        engine = radius_of_vector(P, v).radius
        where = f"{label} v={v}"
        if v.q ** len(v) <= SPACE_LIMIT:
            reports.append(OracleReport("R(v) [balls]", ball_radius_oracle(P, v), engine, where))
            reports.append(OracleReport("R(v) [max weight]", maxweight_oracle(P, v)[0], engine, where))
    if args.code:
        C = io.read_code(args.code)
        where = f"{label} code={args.code}"
        fast = radius_of_code(P, C, cap=args.cap)
        slow = radius_of_code(P, C, PruneOptions.none(), cap=args.cap)
        reports.append(OracleReport("R(C) [no prune]", slow.radius, fast.radius, where))
        reports.append(OracleReport("d_P(C)", minimum_distance(P, C, args.cap), fast.minimum_distance, where))
        if C.q ** C.n <= SPACE_LIMIT:
            reports.append(OracleReport("R(C) [balls]", code_radius_oracle(P, C), fast.radius, where))
    for r in reports:
        print(json.dumps(r.to_json(), sort_keys=True))
    return EXIT_OK if all(r.agree for r in reports) else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algorithm", default="auto", choices=["auto", "brute", "kk", "ckk", "differencing"])
    common.add_argument("--budget-nodes", type=int, default=None, help="stop after this many search nodes")
    common.add_argument("--budget-ms", type=float, default=None, help="stop after this many milliseconds")
    common.add_argument("--json", action="store_true", help="print one JSON object")
    common.add_argument("--anytime", action="store_true", help="print every improving incumbent")
    common.add_argument("--threads", type=int, default=1, help="accepted for compatibility; search is sequential")
    common.add_argument("--cap", type=int, default=2**22, help="codeword enumeration cap")
    for name in PRUNE_NAMES:
        common.add_argument(f"--no-prune-{name}", action="store_true")

    parser = argparse.ArgumentParser(prog="posetradius", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", parents=[common], help="classic two-way number partition")
    p.add_argument("file")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("poset-radius", parents=[common], help="packing radius of a poset")
    p.add_argument("file")
    p.add_argument("--trace", action="store_true", help="dump the differencing tree")
    p.set_defaults(func=cmd_poset_radius)

    p = sub.add_parser("vector-radius", parents=[common], help="packing radius of a vector")
    p.add_argument("file")
    p.add_argument("vector")
    p.add_argument("--q", type=int, default=2)
    p.set_defaults(func=cmd_vector_radius)

    p = sub.add_parser("code-radius", parents=[common], help="packing radius of a linear code")
    p.add_argument("poset")
    p.add_argument("code")
    p.set_defaults(func=cmd_code_radius)

    p = sub.add_parser("standard-form", parents=[common], help="print the standard form of a poset")
    p.add_argument("file")
    p.add_argument("--format", choices=["matrix", "relations"], default="matrix")
    p.set_defaults(func=cmd_standard_form)

    p = sub.add_parser("check", parents=[common], help="compare engines against brute-force oracles")
    p.add_argument("file")
    p.add_argument("--vector")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--code")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("budget_nodes", "budget_ms", "cap", "threads"):
        value = getattr(args, name)
        if value is not None and value <= 0:
            print(f"error: --{name.replace('_', '-')} must be positive", file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.func(args)
    except (PosetRadiusError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
