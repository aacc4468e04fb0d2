"""Backend parity.

The compiled kernel and the pure-Python kernel implement the same
search with the same branching order, so they must agree not only on
values and witnesses but on the number of nodes explored.
"""

import os
import random
import subprocess
import sys

import pytest

from conftest import random_connected_digraph
from domchrom import DominationMode, dominator_chromatic_number, find_dominator_coloring
from domchrom import kernel


def test_python_backend_is_always_available():
    names = kernel.available_backends()
    assert names[0] == "python"
    assert kernel.backend_name in names


def test_unknown_backend_is_rejected():
    before = kernel.backend_name
    with pytest.raises(ValueError):
        kernel.load_backend("fortran")
    with pytest.raises(ValueError):
        kernel.use_backend("fortran")
    assert kernel.backend_name == before


@pytest.mark.skipif(
    "c" not in kernel.available_backends(), reason="compiled kernel not built"
)
def test_backends_agree_exactly():
    rng = random.Random(7)
    cases = [random_connected_digraph(rng, rng.randint(2, 7)) for _ in range(30)]
    results = {}
    for name in ("python", "c"):
        kernel.use_backend(name)
        try:
            per_backend = []
            for d in cases:
                for mode in DominationMode:
                    out = dominator_chromatic_number(d, mode)
                    witness = out.witness.assignment if out.witness else None
                    per_backend.append((out.value, witness, out.nodes_explored))
            results[name] = per_backend
        finally:
            kernel.use_backend(None)
    assert results["python"] == results["c"]


@pytest.mark.skipif(
    "c" not in kernel.available_backends(), reason="compiled kernel not built"
)
def test_backend_switch_affects_fixed_budget_search():
    d = random_connected_digraph(random.Random(11), 6)
    kernel.use_backend("python")
    try:
        a = find_dominator_coloring(d, 4)
    finally:
        kernel.use_backend(None)
    kernel.use_backend("c")
    try:
        b = find_dominator_coloring(d, 4)
    finally:
        kernel.use_backend(None)
    assert (a is None) == (b is None)
    if a is not None:
        assert a.assignment == b.assignment


def _backend_name_under_env(value: str) -> str:
    env = dict(os.environ, DOMCHROM_KERNEL=value)
    proc = subprocess.run(
        [sys.executable, "-c", "import domchrom.kernel as k; print(k.backend_name)"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0, proc.stderr
    return proc.stdout.strip()


def test_env_variable_forces_python_backend():
    assert _backend_name_under_env("python") == "python"


@pytest.mark.skipif(
    "c" not in kernel.available_backends(), reason="compiled kernel not built"
)
def test_env_variable_forces_compiled_backend():
    assert _backend_name_under_env("c") == "c"


def test_env_variable_with_bad_value_fails_loudly():
    proc = subprocess.run(
        [sys.executable, "-c", "import domchrom.kernel"],
        capture_output=True,
        text=True,
        env=dict(os.environ, DOMCHROM_KERNEL="fortran"),
    )
    assert proc.returncode != 0
    assert "fortran" in proc.stderr
