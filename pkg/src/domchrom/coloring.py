"""Vertex colorings and the dominator-coloring verifier.

A coloring is proper when no arc joins two vertices of the same class.
A vertex dominates a color class when the class is nonempty and lies
entirely inside the vertex's out-neighborhood.  A dominator coloring is
a proper coloring in which every vertex that carries the domination
requirement dominates at least one class.

Two requirement modes exist.  SINK_EXEMPT, the operative default,
requires domination only of vertices with at least one out-neighbor: a
sink has an empty out-neighborhood, which contains no nonempty class,
so a universal requirement would make every digraph with a sink
infeasible.  STRICT keeps the universal requirement and is retained for
comparison; under it, any digraph with a sink is infeasible.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .graphs import Digraph


class DominationMode(enum.Enum):
    SINK_EXEMPT = "sink-exempt"
    STRICT = "strict"


@dataclass(frozen=True)
class Coloring:
    """Surjective assignment of n vertices to k classes, in canonical
    form: the first occurrence of class j precedes the first occurrence
    of class j+1."""

    assignment: tuple[int, ...]
    k: int

    def __init__(self, assignment: Sequence[int], k: int):
        assignment = tuple(int(c) for c in assignment)
        if k < 0 or (len(assignment) > 0 and k < 1):
            raise ValueError("class count must be positive")
        used = set()
        next_new = 0
        for i, c in enumerate(assignment):
            if not (0 <= c < k):
                raise ValueError(f"class {c} at vertex {i} out of range for k={k}")
            if c not in used:
                if c != next_new:
                    raise ValueError(
                        f"non-canonical labels: class {c} first appears before class {next_new}"
                    )
                used.add(c)
                next_new += 1
        if len(used) != k:
            raise ValueError(f"only {len(used)} of {k} classes are nonempty")
        object.__setattr__(self, "assignment", assignment)
        object.__setattr__(self, "k", k)

    @property
    def n(self) -> int:
        return len(self.assignment)

    def class_members(self) -> tuple[frozenset[int], ...]:
        members: list[set[int]] = [set() for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            members[c].add(v)
        return tuple(frozenset(m) for m in members)


@dataclass(frozen=True)
class Violation:
    """One verification failure: an improper arc or an undominating vertex."""

    kind: str  # "properness" | "domination"
    arc: tuple[int, int] | None = None
    vertex: int | None = None


@dataclass(frozen=True)
class Verdict:
    ok: bool
    violations: tuple[Violation, ...]


def canonicalize(raw: Sequence[int]) -> Coloring:
    """Relabel classes by first occurrence, preserving the partition."""
    mapping: dict[int, int] = {}
    out = []
    for c in raw:
        if c not in mapping:
            mapping[c] = len(mapping)
        out.append(mapping[c])
    return Coloring(out, len(mapping))


def _check_size(d: Digraph, c: Coloring) -> None:
    if c.n != d.n:
        raise ValueError(f"coloring covers {c.n} vertices, digraph has {d.n}")


def is_proper(d: Digraph, c: Coloring) -> bool:
    _check_size(d, c)
    a = c.assignment
    return all(a[u] != a[v] for u, v in d.arcs)


def dominated_classes(d: Digraph, v: int, c: Coloring) -> set[int]:
    """Indices of classes contained in the out-neighborhood of v.

    Every class of a Coloring is nonempty, so an empty out-neighborhood
    dominates nothing.
    """
    _check_size(d, c)
    if not (0 <= v < d.n):
        raise ValueError(f"vertex {v} out of range")
    outs = {b for a, b in d.arcs if a == v}
    return {j for j, members in enumerate(c.class_members()) if members <= outs}


def verify(
    d: Digraph, c: Coloring, mode: DominationMode = DominationMode.SINK_EXEMPT
) -> Verdict:
    """Exhaustive check; collects every violation for diagnostics."""
    _check_size(d, c)
    a = c.assignment
    violations: list[Violation] = []
    for u, v in d.arcs:
        if a[u] == a[v]:
            violations.append(Violation("properness", arc=(u, v)))

    outs: list[set[int]] = [set() for _ in range(d.n)]
    for u, v in d.arcs:
        outs[u].add(v)
    members = c.class_members()
    for v in range(d.n):
        if mode is DominationMode.SINK_EXEMPT and not outs[v]:
            continue
        if not any(m <= outs[v] for m in members):
            violations.append(Violation("domination", vertex=v))
    return Verdict(ok=not violations, violations=tuple(violations))
