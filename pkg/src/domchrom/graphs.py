"""Small directed graphs as immutable values.

Vertices are the integers 0..n-1.  Digraphs are simple: no loops, no
parallel arcs, and no two vertices joined in both directions, so the
underlying undirected graph is simple as well.  A BaseGraph is such an
undirected substrate; an OrientationCode picks one direction per edge,
which is how the solver enumerates all orientations of a base.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class BaseGraph:
    """Undirected simple graph.  Edges are stored as (u, v) with u < v.

    Edge order is significant: orientation codes index bits by position
    in this edge list.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        normalized = []
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            normalized.append(e)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(normalized))


@dataclass(frozen=True)
class Digraph:
    """Directed simple graph without digons (no u->v together with v->u)."""

    n: int
    arcs: tuple[tuple[int, int], ...]

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        arcs = tuple((int(u), int(v)) for u, v in arcs)
        seen = set()
        for u, v in arcs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            if (u, v) in seen:
                raise ValueError(f"duplicate arc ({u}, {v})")
            if (v, u) in seen:
                raise ValueError(f"digon between {u} and {v}")
            seen.add((u, v))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", arcs)


@dataclass(frozen=True)
class OrientationCode:
    """One orientation of a base graph, as a bit per edge.

    Bit i refers to edge i = (u, v) with u < v of the base: 0 orients it
    u->v, 1 orients it v->u.  Rendered as a bitstring whose first
    character is edge 0; the numeric value of a code is that bitstring
    read as a binary number, which fixes the tie-break order used by
    sweep reports.
    """

    base: BaseGraph
    bits: tuple[int, ...]

    def __init__(self, base: BaseGraph, bits: Sequence[int]):
        bits = tuple(int(b) for b in bits)
        if len(bits) != len(base.edges):
            raise ValueError(
                f"code length {len(bits)} != edge count {len(base.edges)}"
            )
        if any(b not in (0, 1) for b in bits):
            raise ValueError("code bits must be 0 or 1")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_value(cls, base: BaseGraph, value: int) -> "OrientationCode":
        m = len(base.edges)
        if not (0 <= value < (1 << m)) and m > 0:
            raise ValueError(f"code value {value} out of range for {m} edges")
        if m == 0 and value != 0:
            raise ValueError("edgeless base admits only code 0")
        bits = tuple((value >> (m - 1 - i)) & 1 for i in range(m))
        return cls(base, bits)

    @property
    def bitstring(self) -> str:
        return "".join(str(b) for b in self.bits)

    @property
    def value(self) -> int:
        v = 0
        for b in self.bits:
            v = (v << 1) | b
        return v


def make_digraph(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Validated digraph constructor."""
    return Digraph(n, arcs)


def out_neighbors(d: Digraph, v: int) -> frozenset[int]:
    if not (0 <= v < d.n):
        raise ValueError(f"vertex {v} out of range")
    return frozenset(b for a, b in d.arcs if a == v)


def out_degree_sequence(d: Digraph) -> tuple[int, ...]:
    degs = [0] * d.n
    for a, _ in d.arcs:
        degs[a] += 1
    return tuple(degs)


def underlying(d: Digraph) -> BaseGraph:
    """Undirected substrate; edge order follows arc order."""
    return BaseGraph(d.n, d.arcs)


def orient(code: OrientationCode) -> Digraph:
    arcs = []
    for (u, v), b in zip(code.base.edges, code.bits):
        arcs.append((u, v) if b == 0 else (v, u))
    return Digraph(code.base.n, arcs)


def code_of(base: BaseGraph, d: Digraph) -> OrientationCode:
    """Inverse of orient: the code that produces d from base.

    Errors if d is not an orientation of base.
    """
    if d.n != base.n or len(d.arcs) != len(base.edges):
        raise ValueError("digraph is not an orientation of the base")
    arcset = set(d.arcs)
    bits = []
    for u, v in base.edges:
        if (u, v) in arcset:
            bits.append(0)
        elif (v, u) in arcset:
            bits.append(1)
        else:
            raise ValueError(f"base edge ({u}, {v}) is unoriented in the digraph")
    return OrientationCode(base, bits)


def reverse(d: Digraph) -> Digraph:
    """Reverse every arc."""
    return Digraph(d.n, tuple((v, u) for u, v in d.arcs))


def is_connected(base: BaseGraph) -> bool:
    """Connectivity of the undirected graph; 0 or 1 vertices count as connected."""
    if base.n <= 1:
        return True
    adj: list[list[int]] = [[] for _ in range(base.n)]
    for u, v in base.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == base.n


def path_base(n: int) -> BaseGraph:
    """Path on n vertices: edges (i, i+1) in index order."""
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return BaseGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_base(n: int) -> BaseGraph:
    """Cycle on n vertices: edges (i, i+1) then the closing edge {n-1, 0}."""
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return BaseGraph(n, [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)])


def _apply_vertex_map(d: Digraph, perm: Sequence[int]) -> Digraph:
    return Digraph(d.n, tuple((perm[u], perm[v]) for u, v in d.arcs))


def cycle_symmetry_classes(n: int) -> list[list[OrientationCode]]:
    """Partition all 2^n orientation codes of the n-cycle into classes
    equivalent under rotation and reflection of the cycle.

    Rotations preserve the traversal direction of arcs while reflections
    reverse it, so this is an orbit computation under the full vertex
    symmetry group of the cycle, acting on codes through relabeling.

    Classes are sorted by smallest member value; members sort ascending.
    """
    base = cycle_base(n)
    perms = []
    for j in range(n):
        perms.append(tuple((x + j) % n for x in range(n)))
        perms.append(tuple((j - x) % n for x in range(n)))

    total = 1 << n
    seen = [False] * total
    classes: list[list[OrientationCode]] = []
    for start in range(total):
        if seen[start]:
            continue
        orbit = set()
        frontier = [start]
        seen[start] = True
        while frontier:
            v = frontier.pop()
            orbit.add(v)
            d = orient(OrientationCode.from_value(base, v))
            for p in perms:
                w = code_of(base, _apply_vertex_map(d, p)).value
                if not seen[w]:
                    seen[w] = True
                    frontier.append(w)
        classes.append(
            [OrientationCode.from_value(base, v) for v in sorted(orbit)]
        )
    classes.sort(key=lambda cls: cls[0].value)
    return classes
