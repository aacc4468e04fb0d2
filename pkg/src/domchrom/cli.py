"""Command-line interface.

Subcommands: solve, verify, sweep, family, formulas, invariants,
mine-discrepancy.  Exit codes: 0 success, 1 semantic failure (a
verification that finds violations, or an invariant undefined on the
instance), 2 usage or parse error, 3 size guard exceeded.

JSON output is a stable envelope {command, inputs, outputs}; keys
inside outputs are documented in the README.  CSV rows keep a fixed
column order.  Orientation codes print as bitstrings, first edge of
the base as the most significant bit.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Any

from .coloring import Coloring, DominationMode, verify
from .families import (
    FAMILY_KINDS,
    ConstructiveWitness,
    FamilySpec,
    cycle_min_formula,
    directed_cycle,
    directed_path,
    family_witness,
    path_min_formula,
    tilde_cycle,
)
from .formats import (
    FormatError,
    RunResult,
    emit_coloring,
    emit_csv,
    emit_digraph,
    emit_json,
    parse_base,
    parse_coloring,
    parse_digraph,
)
from .graphs import BaseGraph, cycle_base, path_base
from .invariants import dominator_discrepancy, dominator_gap, identity_embedding, orientation_gap
from .solver import GuardExceeded, dominator_chromatic_number, sweep

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


class SemanticFailure(Exception):
    """Raised by handlers when the computation is well-formed but the
    answer is a failure (undefined invariant, infeasible instance)."""


def _mode(args: argparse.Namespace) -> DominationMode:
    return DominationMode(args.mode)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _ms(t0: float) -> int:
    return int(round((time.perf_counter() - t0) * 1000))


def _print_result(args: argparse.Namespace, result: RunResult, text: str) -> None:
    if getattr(args, "json", False):
        sys.stdout.write(emit_json(result))
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- solve


def _cmd_solve(args: argparse.Namespace) -> int:
    mode = _mode(args)
    d = parse_digraph(_read(args.digraph))
    t0 = time.perf_counter()
    out = dominator_chromatic_number(d, mode)
    outputs: dict[str, Any] = {
        "value": out.value,
        "witness": list(out.witness.assignment) if out.witness else None,
        "mode": mode.value,
        "nodes_explored": out.nodes_explored,
        "elapsed_ms": _ms(t0),
    }
    result = RunResult("solve", {"digraph": args.digraph, "mode": mode.value}, outputs)
    if out.value is None:
        text = "value: infeasible\n"
    else:
        witness = " ".join(str(c) for c in out.witness.assignment)
        text = f"value: {out.value}\nwitness: {witness}\n"
    _print_result(args, result, text)
    return EXIT_OK


# ---------------------------------------------------------------- verify


def _cmd_verify(args: argparse.Namespace) -> int:
    mode = _mode(args)
    d = parse_digraph(_read(args.digraph))
    c = parse_coloring(_read(args.coloring))
    if c.n != d.n:
        raise FormatError(f"coloring covers {c.n} vertices, digraph has {d.n}")
    t0 = time.perf_counter()
    verdict = verify(d, c, mode)
    rows = []
    lines = []
    for v in verdict.violations:
        if v.kind == "properness":
            rows.append({"kind": v.kind, "arc": list(v.arc)})
            lines.append(f"improper arc {v.arc[0]} {v.arc[1]}")
        else:
            rows.append({"kind": v.kind, "vertex": v.vertex})
            lines.append(f"vertex {v.vertex} dominates no class")
    outputs = {
        "ok": verdict.ok,
        "violations": rows,
        "mode": mode.value,
        "elapsed_ms": _ms(t0),
    }
    result = RunResult(
        "verify",
        {"digraph": args.digraph, "coloring": args.coloring, "mode": mode.value},
        outputs,
    )
    text = "ok\n" if verdict.ok else "".join(f"{ln}\n" for ln in lines)
    _print_result(args, result, text)
    return EXIT_OK if verdict.ok else EXIT_FAILURE


# ---------------------------------------------------------------- sweep


def _sweep_base(kind: str, n: int) -> BaseGraph:
    if kind == "path":
        return path_base(n)
    if kind == "cycle":
        return cycle_base(n)
    if n < 1:
        raise FormatError("star needs at least one leaf")
    return BaseGraph(n + 1, [(0, i) for i in range(1, n + 1)])


def _sweep_formula(kind: str, n: int) -> int:
    if kind == "path":
        return path_min_formula(n)
    if kind == "cycle":
        return cycle_min_formula(n)
    return 2


def _range_from(args: argparse.Namespace) -> list[int]:
    if args.n is not None:
        if args.n_min is not None or args.n_max is not None:
            raise FormatError("give either --n or --n-min/--n-max, not both")
        return [args.n]
    if args.n_min is None or args.n_max is None:
        raise FormatError("need --n or both --n-min and --n-max")
    if args.n_min > args.n_max:
        raise FormatError("--n-min must not exceed --n-max")
    return list(range(args.n_min, args.n_max + 1))


def _cmd_sweep(args: argparse.Namespace) -> int:
    mode = _mode(args)
    ns = _range_from(args)
    t0 = time.perf_counter()
    rows = []
    for n in ns:
        base = _sweep_base(args.base, n)
        rep = sweep(base, mode, workers=args.workers)
        formula = _sweep_formula(args.base, n)
        rows.append(
            {
                "n": n,
                "orientations": rep.orientations,
                "distribution": {str(k): v for k, v in rep.distribution.items()},
                "infeasible_count": rep.infeasible_count,
                "min_value": rep.min_value,
                "max_value": rep.max_value,
                "argmin_codes": [c.bitstring for c in rep.argmin_codes],
                "argmax_codes": [c.bitstring for c in rep.argmax_codes],
                "argmin_overflow": rep.argmin_overflow,
                "argmax_overflow": rep.argmax_overflow,
                "formula": formula,
                "matches_formula": rep.min_value == formula,
            }
        )
    inputs = {"base": args.base, "n": ns, "mode": mode.value, "workers": args.workers}
    outputs = {"rows": rows, "mode": mode.value, "elapsed_ms": _ms(t0)}
    if args.csv:
        header = [
            "n",
            "min",
            "max",
            "formula",
            "matches_formula",
            "orientations",
            "infeasible",
        ]
        csv_rows = [
            [
                r["n"],
                r["min_value"],
                r["max_value"],
                r["formula"],
                r["matches_formula"],
                r["orientations"],
                r["infeasible_count"],
            ]
            for r in rows
        ]
        sys.stdout.write(emit_csv(header, csv_rows))
        return EXIT_OK
    text = "".join(
        f"n={r['n']} min={r['min_value']} max={r['max_value']} "
        f"formula={r['formula']} match={str(r['matches_formula']).lower()} "
        f"orientations={r['orientations']} infeasible={r['infeasible_count']}\n"
        for r in rows
    )
    _print_result(args, RunResult("sweep", inputs, outputs), text)
    return EXIT_OK


# ---------------------------------------------------------------- family


def _family_witness(args: argparse.Namespace) -> tuple[FamilySpec, ConstructiveWitness]:
    try:
        spec = FamilySpec(args.kind, tuple(args.params))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    if args.directed:
        if args.kind not in ("path", "cycle"):
            raise FormatError("--directed applies only to path and cycle")
        n = spec.params[0]
        d = directed_path(n) if args.kind == "path" else directed_cycle(n)
        return spec, ConstructiveWitness(d, Coloring(list(range(n)), n), n)
    return spec, family_witness(spec)


def _cmd_family(args: argparse.Namespace) -> int:
    spec, w = _family_witness(args)
    if args.emit_digraph or args.emit_witness:
        if args.emit_digraph:
            sys.stdout.write(emit_digraph(w.digraph))
        if args.emit_witness:
            sys.stdout.write(emit_coloring(w.coloring))
        return EXIT_OK
    outputs = {
        "kind": spec.kind,
        "params": list(spec.params),
        "n": w.digraph.n,
        "arcs": [list(a) for a in w.digraph.arcs],
        "witness": list(w.coloring.assignment),
        "claimed_value": w.claimed_value,
    }
    inputs = {"kind": spec.kind, "params": list(spec.params), "directed": args.directed}
    text = (
        f"family: {spec.kind} {list(spec.params)}\n"
        f"vertices: {w.digraph.n}, arcs: {len(w.digraph.arcs)}\n"
        f"claimed value: {w.claimed_value}\n"
        f"witness: {' '.join(str(c) for c in w.coloring.assignment)}\n"
    )
    _print_result(args, RunResult("family", inputs, outputs), text)
    return EXIT_OK


# ---------------------------------------------------------------- formulas


def _cmd_formulas(args: argparse.Namespace) -> int:
    ns = _range_from(args)
    fn = path_min_formula if args.base == "path" else cycle_min_formula
    try:
        rows = [{"n": n, "value": fn(n)} for n in ns]
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    if args.csv:
        sys.stdout.write(emit_csv(["n", "value"], [[r["n"], r["value"]] for r in rows]))
        return EXIT_OK
    inputs = {"base": args.base, "n_min": args.n_min, "n_max": args.n_max}
    outputs = {"rows": rows}
    text = "".join(f"n={r['n']} value={r['value']}\n" for r in rows)
    _print_result(args, RunResult("formulas", inputs, outputs), text)
    return EXIT_OK


# ---------------------------------------------------------------- invariants


def _cmd_invariants(args: argparse.Namespace) -> int:
    mode = _mode(args)
    if args.star:
        if args.base is None:
            raise FormatError("--star needs --base <base-file>")
        if args.digraph is not None:
            raise FormatError("give either a digraph file or --base, not both")
        base = parse_base(_read(args.base))
        t0 = time.perf_counter()
        try:
            rep = orientation_gap(base, mode)
        except ValueError as exc:
            if isinstance(exc, (GuardExceeded, FormatError)):
                raise
            raise SemanticFailure(str(exc)) from exc
        outputs = {
            "chromatic_value": rep.chromatic_value,
            "min_value": rep.min_dominator_value,
            "max_value": rep.max_dominator_value,
            "max_gap": rep.max_gap,
            "spread": rep.spread,
            "table_value": rep.table_value,
            "mode": mode.value,
            "elapsed_ms": _ms(t0),
        }
        result = RunResult(
            "invariants", {"base": args.base, "star": True, "mode": mode.value}, outputs
        )
        text = (
            f"chromatic value: {rep.chromatic_value}\n"
            f"min over orientations: {rep.min_dominator_value}\n"
            f"max over orientations: {rep.max_dominator_value}\n"
            f"max gap: {rep.max_gap}\n"
            f"spread: {rep.spread}\n"
            f"table value: {rep.table_value}\n"
        )
        _print_result(args, result, text)
        return EXIT_OK
    if args.digraph is None:
        raise FormatError("need a digraph file, or --base with --star")
    d = parse_digraph(_read(args.digraph))
    t0 = time.perf_counter()
    try:
        rep = dominator_gap(d, mode)
    except ValueError as exc:
        if isinstance(exc, (GuardExceeded, FormatError)):
            raise
        raise SemanticFailure(str(exc)) from exc
    outputs = {
        "dominator_value": rep.dominator_value,
        "chromatic_value": rep.chromatic_value,
        "gap": rep.gap,
        "mode": mode.value,
        "elapsed_ms": _ms(t0),
    }
    result = RunResult(
        "invariants", {"digraph": args.digraph, "mode": mode.value}, outputs
    )
    text = (
        f"dominator value: {rep.dominator_value}\n"
        f"chromatic value: {rep.chromatic_value}\n"
        f"gap: {rep.gap}\n"
    )
    _print_result(args, result, text)
    return EXIT_OK


# ---------------------------------------------------------------- mine-discrepancy


def _cmd_mine(args: argparse.Namespace) -> int:
    mode = _mode(args)
    ns = _range_from(args)
    if ns[0] < 3:
        raise FormatError("tilde-cycle needs n >= 3")
    t0 = time.perf_counter()
    rows = []
    for n in ns:
        host = tilde_cycle(n)
        sub = directed_cycle(n)
        try:
            delta = dominator_discrepancy(host, sub, identity_embedding(n), mode)
        except ValueError as exc:
            raise SemanticFailure(str(exc)) from exc
        host_value = dominator_chromatic_number(host, mode).value
        sub_value = dominator_chromatic_number(sub, mode).value
        rows.append(
            {
                "n": n,
                "host_value": host_value,
                "sub_value": sub_value,
                "discrepancy": delta,
            }
        )
    if args.csv:
        sys.stdout.write(
            emit_csv(
                ["n", "host_value", "sub_value", "discrepancy"],
                [[r["n"], r["host_value"], r["sub_value"], r["discrepancy"]] for r in rows],
            )
        )
        return EXIT_OK
    inputs = {
        "family": args.family,
        "n_min": args.n_min,
        "n_max": args.n_max,
        "mode": mode.value,
    }
    outputs = {"rows": rows, "mode": mode.value, "elapsed_ms": _ms(t0)}
    text = "".join(
        f"n={r['n']} host={r['host_value']} sub={r['sub_value']} "
        f"discrepancy={r['discrepancy']}\n"
        for r in rows
    )
    _print_result(args, RunResult("mine-discrepancy", inputs, outputs), text)
    return EXIT_OK


# ---------------------------------------------------------------- parser


def _add_mode(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--mode",
        choices=[m.value for m in DominationMode],
        default=DominationMode.SINK_EXEMPT.value,
        help="domination requirement (default: sink-exempt)",
    )


def _add_range(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, default=None, help="single size")
    p.add_argument("--n-min", type=int, default=None, help="range start")
    p.add_argument("--n-max", type=int, default=None, help="range end, inclusive")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domchrom",
        description="Exact dominator colorings of directed graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="dominator chromatic number of a digraph file")
    p.add_argument("digraph", help="digraph file")
    _add_mode(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("verify", help="check a coloring file against a digraph file")
    p.add_argument("digraph")
    p.add_argument("coloring")
    _add_mode(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("sweep", help="solve every orientation of a base graph")
    p.add_argument("base", choices=["path", "cycle", "star"])
    _add_range(p)
    _add_mode(p)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("family", help="emit a family member and its witness")
    p.add_argument("kind", choices=list(FAMILY_KINDS))
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--emit-digraph", action="store_true")
    p.add_argument("--emit-witness", action="store_true")
    p.add_argument(
        "--directed",
        action="store_true",
        help="use the consistently oriented path/cycle instead of the optimal orientation",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_family)

    p = sub.add_parser("formulas", help="closed-form minimum table")
    p.add_argument("base", choices=["path", "cycle"])
    _add_range(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(handler=_cmd_formulas)

    p = sub.add_parser("invariants", help="gap report for a digraph or a base graph")
    p.add_argument("digraph", nargs="?", default=None, help="digraph file")
    p.add_argument("--base", default=None, help="base graph file")
    p.add_argument(
        "--star",
        action="store_true",
        help="aggregate over all orientations of --base",
    )
    _add_mode(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_invariants)

    p = sub.add_parser(
        "mine-discrepancy", help="sub-digraph vs host dominator values by family"
    )
    p.add_argument("--family", choices=["tilde-cycle"], required=True)
    _add_range(p)
    _add_mode(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(handler=_cmd_mine)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.handler(args)
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except SemanticFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except (FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
