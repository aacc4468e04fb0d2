"""Backend benchmark: python -m domchrom.bench [--repeat N]

Times the pure-Python and compiled kernels on identical workloads and
prints a table with the speedup.  Workloads cover single solves and a
full orientation sweep; both backends must return identical values and
node counts, which the harness asserts before reporting.
"""

from __future__ import annotations

import argparse
import time

from . import kernel
from .coloring import DominationMode
from .families import fig4_digraph, tilde_cycle, tournament
from .graphs import cycle_base, path_base
from .solver import dominator_chromatic_number, sweep


def _workloads():
    yield "solve tournament n=9", lambda: dominator_chromatic_number(tournament(9, 5))
    yield "solve tilde-cycle n=12", lambda: dominator_chromatic_number(tilde_cycle(12))
    yield "solve fig4", lambda: dominator_chromatic_number(fig4_digraph())
    yield "sweep path n=10", lambda: sweep(path_base(10))
    yield "sweep cycle n=10", lambda: sweep(cycle_base(10))
    yield (
        "sweep cycle n=10 strict",
        lambda: sweep(cycle_base(10), DominationMode.STRICT),
    )


def _run_backend(name: str, repeat: int):
    kernel.use_backend(name)
    results = {}
    timings = {}
    for label, thunk in _workloads():
        best = float("inf")
        value = None
        for _ in range(repeat):
            t0 = time.perf_counter()
            value = thunk()
            best = min(best, time.perf_counter() - t0)
        results[label] = _fingerprint(value)
        timings[label] = best
    return results, timings


def _fingerprint(value):
    if hasattr(value, "distribution"):
        return (value.distribution, value.min_value, value.max_value)
    return (value.value, value.nodes_explored)


def main() -> None:
    parser = argparse.ArgumentParser(description="compare kernel backends")
    parser.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    args = parser.parse_args()

    available = kernel.available_backends()
    print(f"backends available: {', '.join(available)}")
    if "c" not in available:
        print("compiled kernel not built; benchmarking python only")

    per_backend = {}
    for name in available:
        per_backend[name] = _run_backend(name, args.repeat)
    kernel.use_backend(None)

    baseline_results, baseline_times = per_backend["python"]
    for name, (results, _) in per_backend.items():
        if results != baseline_results:
            raise AssertionError(f"backend {name} disagrees with python: {results}")

    width = max(len(label) for label, _ in _workloads())
    header = f"{'workload':<{width}}  " + "  ".join(f"{n:>10}" for n in available)
    if "c" in available:
        header += f"  {'speedup':>8}"
    print(header)
    for label, _ in _workloads():
        row = f"{label:<{width}}  "
        row += "  ".join(f"{per_backend[n][1][label] * 1000:>8.1f}ms" for n in available)
        if "c" in available:
            ratio = baseline_times[label] / per_backend["c"][1][label]
            row += f"  {ratio:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
