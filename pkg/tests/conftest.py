"""Shared fixtures.

Exhaustive orientation sweeps dominate the suite's runtime, so the two
sweep tables (paths n = 1..12, cycles n = 3..12) are computed once per
session and handed to every test that needs them, along with the wall
time the computation took.
"""

import random
import time
from typing import NamedTuple

import pytest
from hypothesis import settings

from domchrom import Digraph, cycle_base, is_connected, path_base, sweep, underlying

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")

PATH_NS = range(1, 13)
CYCLE_NS = range(3, 13)


class TimedSweeps(NamedTuple):
    by_n: dict
    elapsed_s: float


@pytest.fixture(scope="session")
def path_sweeps() -> TimedSweeps:
    t0 = time.perf_counter()
    by_n = {n: sweep(path_base(n)) for n in PATH_NS}
    return TimedSweeps(by_n, time.perf_counter() - t0)


@pytest.fixture(scope="session")
def cycle_sweeps() -> TimedSweeps:
    t0 = time.perf_counter()
    by_n = {n: sweep(cycle_base(n)) for n in CYCLE_NS}
    return TimedSweeps(by_n, time.perf_counter() - t0)


def random_connected_digraph(rng: random.Random, n: int, p: float = 0.5) -> Digraph:
    """Digon-free digraph on n vertices whose underlying graph is
    connected; each unordered pair carries an arc with probability p,
    directed by a fair coin.  Retries until connected."""
    while True:
        arcs = []
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    arcs.append((u, v) if rng.random() < 0.5 else (v, u))
        d = Digraph(n, arcs)
        if is_connected(underlying(d)):
            return d


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260819)
