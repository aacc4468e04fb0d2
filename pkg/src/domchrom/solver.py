"""Exact solvers and orientation sweeps.

The dominator chromatic number of a digraph is found by trying class
budgets k in ascending order, starting at the chromatic number of the
underlying graph (a proper coloring can never use fewer classes) and
stopping at n (giving every vertex its own class always verifies under
the sink-exempt requirement).  Each budget runs the backtracking kernel
selected in the kernel module.

A sweep enumerates every orientation code of a base graph and solves
each orientation, aggregating the value distribution and the extremal
code sets.  Sweeps are embarrassingly parallel; with workers > 1 the
code space is split into contiguous chunks whose partial results merge
in code order, so the report never depends on scheduling.

Results are deterministic: fixed vertex order, ascending class trials,
ties between codes broken by ascending numeric value.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import kernel
from .coloring import Coloring, DominationMode, verify
from .graphs import BaseGraph, Digraph, OrientationCode, orient, underlying

DEFAULT_MAX_SWEEP_EDGES = 24
SWEEP_EDGES_ENV = "DOMCHROM_MAX_SWEEP_EDGES"
ORACLE_MAX_VERTICES = 10
KERNEL_MAX_VERTICES = 64


class GuardExceeded(ValueError):
    """An exhaustive computation was refused because it is too large."""


def _check_solvable_size(n: int) -> None:
    if n < 1:
        raise ValueError("need at least one vertex")
    if n > KERNEL_MAX_VERTICES:
        raise ValueError(f"kernels support at most {KERNEL_MAX_VERTICES} vertices")


def _adjacency_masks(n: int, pairs) -> list[int]:
    adj = [0] * n
    for u, v in pairs:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _out_masks(d: Digraph) -> list[int]:
    outs = [0] * d.n
    for u, v in d.arcs:
        outs[u] |= 1 << v
    return outs


def _required_vertices(n: int, outs: list[int], mode: DominationMode) -> list[int]:
    if mode is DominationMode.STRICT:
        return list(range(n))
    return [v for v in range(n) if outs[v]]


def chromatic_number(base: BaseGraph) -> int:
    """Exact chromatic number of an undirected graph, n >= 1."""
    _check_solvable_size(base.n)
    adj = _adjacency_masks(base.n, base.edges)
    for k in range(1, base.n + 1):
        if kernel.solve_fixed_k_proper(base.n, adj, k) is not None:
            return k
    raise AssertionError("unreachable: n classes always color n vertices")


@dataclass(frozen=True)
class SolveOutcome:
    """Result of one dominator-chromatic computation.

    value is None exactly when no class budget up to n admits a
    dominator coloring, which can happen only in STRICT mode.
    """

    value: int | None
    witness: Coloring | None
    nodes_explored: int
    mode: DominationMode

    @property
    def feasible(self) -> bool:
        return self.value is not None


def find_dominator_coloring(
    d: Digraph, k: int, mode: DominationMode = DominationMode.SINK_EXEMPT
) -> Coloring | None:
    """A dominator coloring of d using at most k classes, or None."""
    _check_solvable_size(d.n)
    if k < 1:
        raise ValueError("class budget must be positive")
    adj = _adjacency_masks(d.n, d.arcs)
    outs = _out_masks(d)
    required = _required_vertices(d.n, outs, mode)
    assignment, _ = kernel.solve_fixed_k_dominator(
        d.n, adj, outs, required, min(k, d.n)
    )
    if assignment is None:
        return None
    return Coloring(assignment, max(assignment) + 1)


def dominator_chromatic_number(
    d: Digraph, mode: DominationMode = DominationMode.SINK_EXEMPT
) -> SolveOutcome:
    """Exact dominator chromatic number with a witness coloring."""
    _check_solvable_size(d.n)
    adj = _adjacency_masks(d.n, d.arcs)
    outs = _out_masks(d)
    required = _required_vertices(d.n, outs, mode)
    lower = chromatic_number(underlying(d))
    total_nodes = 0
    for k in range(lower, d.n + 1):
        assignment, nodes = kernel.solve_fixed_k_dominator(
            d.n, adj, outs, required, k
        )
        total_nodes += nodes
        if assignment is not None:
            return SolveOutcome(k, Coloring(assignment, k), total_nodes, mode)
    return SolveOutcome(None, None, total_nodes, mode)


def _partitions_exact(n: int, k: int):
    """All canonical assignments of n vertices into exactly k classes."""
    a = [0] * n

    def rec(i: int, opened: int):
        if i == n:
            if opened == k:
                yield tuple(a)
            return
        if opened + (n - i) < k:
            return
        hi = min(opened, k - 1)
        for c in range(hi + 1):
            a[i] = c
            yield from rec(i + 1, opened + (1 if c == opened else 0))

    yield from rec(0, 0)


def dominator_chromatic_number_oracle(
    d: Digraph, mode: DominationMode = DominationMode.SINK_EXEMPT
) -> int | None:
    """Reference value by exhaustive partition enumeration.

    Deliberately shares nothing with the kernel search path: it walks
    every canonical partition for ascending class counts and accepts
    through the public verifier.  Guarded to n <= 10.
    """
    if d.n < 1:
        raise ValueError("need at least one vertex")
    if d.n > ORACLE_MAX_VERTICES:
        raise GuardExceeded(
            f"oracle is exhaustive and limited to n <= {ORACLE_MAX_VERTICES}"
        )
    for k in range(1, d.n + 1):
        for assignment in _partitions_exact(d.n, k):
            if verify(d, Coloring(assignment, k), mode).ok:
                return k
    return None


@dataclass(frozen=True)
class SweepReport:
    """Aggregate of dominator chromatic values over every orientation.

    distribution maps value to orientation count; together with
    infeasible_count it accounts for all 2^|edges| codes.  The extremal
    code lists are ascending by numeric value and capped, with overflow
    flags telling whether codes were dropped.
    """

    base: BaseGraph
    mode: DominationMode
    orientations: int
    distribution: dict[int, int]
    infeasible_count: int
    min_value: int | None
    max_value: int | None
    argmin_codes: tuple[OrientationCode, ...]
    argmax_codes: tuple[OrientationCode, ...]
    argmin_overflow: bool
    argmax_overflow: bool


def _sweep_chunk(
    base: BaseGraph,
    mode: DominationMode,
    start: int,
    stop: int,
    lower: int,
    arg_limit: int,
):
    n = base.n
    edges = base.edges
    m = len(edges)
    adj = _adjacency_masks(n, edges)
    strict = mode is DominationMode.STRICT
    solve = kernel.solve_fixed_k_dominator
    dist: dict[int, int] = {}
    infeasible = 0
    min_v: int | None = None
    max_v: int | None = None
    min_codes: list[int] = []
    max_codes: list[int] = []
    for code in range(start, stop):
        outs = [0] * n
        for i in range(m):
            u, v = edges[i]
            if (code >> (m - 1 - i)) & 1:
                outs[v] |= 1 << u
            else:
                outs[u] |= 1 << v
        required = (
            list(range(n)) if strict else [v for v in range(n) if outs[v]]
        )
        value: int | None = None
        for k in range(lower, n + 1):
            assignment, _ = solve(n, adj, outs, required, k)
            if assignment is not None:
                value = k
                break
        if value is None:
            infeasible += 1
            continue
        dist[value] = dist.get(value, 0) + 1
        if min_v is None or value < min_v:
            min_v = value
            min_codes = [code]
        elif value == min_v and len(min_codes) < arg_limit:
            min_codes.append(code)
        if max_v is None or value > max_v:
            max_v = value
            max_codes = [code]
        elif value == max_v and len(max_codes) < arg_limit:
            max_codes.append(code)
    return dist, infeasible, min_v, min_codes, max_v, max_codes


def _resolve_edge_guard(max_edges: int | None) -> int:
    if max_edges is not None:
        return max_edges
    raw = os.environ.get(SWEEP_EDGES_ENV)
    if raw is None:
        return DEFAULT_MAX_SWEEP_EDGES
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{SWEEP_EDGES_ENV} must be an integer, got {raw!r}")


def sweep(
    base: BaseGraph,
    mode: DominationMode = DominationMode.SINK_EXEMPT,
    *,
    max_edges: int | None = None,
    arg_limit: int = 64,
    workers: int = 1,
) -> SweepReport:
    """Solve every orientation of base and aggregate the results."""
    _check_solvable_size(base.n)
    if arg_limit < 1:
        raise ValueError("arg_limit must be positive")
    m = len(base.edges)
    guard = _resolve_edge_guard(max_edges)
    if m > guard:
        raise GuardExceeded(
            f"sweep over {m} edges exceeds the guard of {guard} "
            f"(raise via {SWEEP_EDGES_ENV} or max_edges)"
        )
    lower = chromatic_number(base)
    total = 1 << m

    if workers > 1 and total >= 2048:
        chunk = max(1, total // (workers * 8))
        bounds = list(range(0, total, chunk)) + [total]
        parts = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(
                    _sweep_chunk, base, mode, bounds[i], bounds[i + 1], lower, arg_limit
                )
                for i in range(len(bounds) - 1)
            ]
            parts = [f.result() for f in futures]
    else:
        parts = [_sweep_chunk(base, mode, 0, total, lower, arg_limit)]

    dist: dict[int, int] = {}
    infeasible = 0
    min_v: int | None = None
    max_v: int | None = None
    min_codes: list[int] = []
    max_codes: list[int] = []
    for p_dist, p_inf, p_min, p_min_codes, p_max, p_max_codes in parts:
        for value, count in p_dist.items():
            dist[value] = dist.get(value, 0) + count
        infeasible += p_inf
        if p_min is not None and (min_v is None or p_min < min_v):
            min_v = p_min
            min_codes = []
        if p_min is not None and p_min == min_v:
            min_codes.extend(p_min_codes[: arg_limit - len(min_codes)])
        if p_max is not None and (max_v is None or p_max > max_v):
            max_v = p_max
            max_codes = []
        if p_max is not None and p_max == max_v:
            max_codes.extend(p_max_codes[: arg_limit - len(max_codes)])

    return SweepReport(
        base=base,
        mode=mode,
        orientations=total,
        distribution=dict(sorted(dist.items())),
        infeasible_count=infeasible,
        min_value=min_v,
        max_value=max_v,
        argmin_codes=tuple(
            OrientationCode.from_value(base, c) for c in min_codes
        ),
        argmax_codes=tuple(
            OrientationCode.from_value(base, c) for c in max_codes
        ),
        argmin_overflow=min_v is not None and dist[min_v] > arg_limit,
        argmax_overflow=max_v is not None and dist[max_v] > arg_limit,
    )


def _extreme_over_orientations(
    base: BaseGraph, mode: DominationMode, max_edges: int | None, take_max: bool
) -> tuple[int, OrientationCode, Coloring]:
    report = sweep(base, mode, max_edges=max_edges)
    value = report.max_value if take_max else report.min_value
    if value is None:
        raise ValueError("no orientation is feasible under the strict requirement")
    code = (report.argmax_codes if take_max else report.argmin_codes)[0]
    outcome = dominator_chromatic_number(orient(code), mode)
    assert outcome.witness is not None
    return value, code, outcome.witness


def min_over_orientations(
    base: BaseGraph,
    mode: DominationMode = DominationMode.SINK_EXEMPT,
    *,
    max_edges: int | None = None,
) -> tuple[int, OrientationCode, Coloring]:
    """Smallest dominator chromatic value over all orientations, with
    the first achieving code (ascending) and its witness."""
    return _extreme_over_orientations(base, mode, max_edges, take_max=False)


def max_over_orientations(
    base: BaseGraph,
    mode: DominationMode = DominationMode.SINK_EXEMPT,
    *,
    max_edges: int | None = None,
) -> tuple[int, OrientationCode, Coloring]:
    """Largest dominator chromatic value over all orientations."""
    return _extreme_over_orientations(base, mode, max_edges, take_max=True)
