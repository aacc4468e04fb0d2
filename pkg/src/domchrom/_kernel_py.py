"""Pure-Python search kernels.

Both kernels run a backtracking search over canonical colorings: vertex
i is assigned a class from 0..min(opened, k-1), so each partition into
at most k classes is visited exactly once, in first-occurrence label
order.  Vertex order and class trial order are fixed, which makes every
witness deterministic.

The dominator kernel additionally prunes on the domination requirement.
A vertex v can still end up dominating a class only if either some
already-opened class lies fully inside its out-neighborhood, or a class
index is still free to open (opened < k) and v has an uncolored
out-neighbor to put there.  Classes only grow as the search deepens, so
once neither holds the branch is dead.

This module is the reference twin of the compiled kernel in
_kernel_c.pyx; the two must stay in lockstep, including node counts.
Masks are Python ints, so callers must keep n <= 64 for parity with the
compiled twin.
"""

from __future__ import annotations


def solve_fixed_k_proper(n: int, adj: list[int], k: int) -> list[int] | None:
    """Proper coloring with at most k classes, or None.

    adj[i] is the bitmask of vertices adjacent to i (either direction).
    """
    if n == 0:
        return []
    color = [-1] * n
    class_masks = [0] * k
    used_stack = [0] * (n + 1)
    trial = [0] * n
    i = 0
    while True:
        used = used_stack[i]
        limit = used if used < k else k - 1
        c = trial[i]
        am = adj[i]
        bit = 1 << i
        placed = False
        while c <= limit:
            if not (class_masks[c] & am):
                class_masks[c] |= bit
                color[i] = c
                trial[i] = c + 1
                used_stack[i + 1] = used + (1 if c == used else 0)
                placed = True
                break
            c += 1
        if placed:
            i += 1
            if i == n:
                return color
            trial[i] = 0
            continue
        i -= 1
        if i < 0:
            return None
        class_masks[color[i]] &= ~(1 << i)
        color[i] = -1


def solve_fixed_k_dominator(
    n: int,
    adj: list[int],
    outs: list[int],
    required: list[int],
    k: int,
) -> tuple[list[int] | None, int]:
    """Dominator coloring with at most k classes, plus nodes explored.

    adj[i]: undirected adjacency mask of i.  outs[v]: out-neighborhood
    mask of v.  required: ascending vertex indices that must dominate a
    class.  A node is counted for each tentative placement that passes
    the properness check.
    """
    if n == 0:
        return [], 0
    req = []
    for v in required:
        om = outs[v]
        req.append((om.bit_length() - 1, ~om))
    color = [-1] * n
    class_masks = [0] * k
    used_stack = [0] * (n + 1)
    trial = [0] * n
    nodes = 0
    i = 0
    while True:
        used = used_stack[i]
        limit = used if used < k else k - 1
        c = trial[i]
        am = adj[i]
        bit = 1 << i
        placed = False
        while c <= limit:
            cm = class_masks[c]
            if not (cm & am):
                nodes += 1
                class_masks[c] = cm | bit
                new_used = used + (1 if c == used else 0)
                feasible = True
                for maxout, not_out in req:
                    if maxout > i and new_used < k:
                        continue
                    for j in range(new_used):
                        if not (class_masks[j] & not_out):
                            break
                    else:
                        feasible = False
                        break
                if feasible:
                    color[i] = c
                    trial[i] = c + 1
                    used_stack[i + 1] = new_used
                    placed = True
                    break
                class_masks[c] = cm
            c += 1
        if placed:
            i += 1
            if i == n:
                return color, nodes
            trial[i] = 0
            continue
        i -= 1
        if i < 0:
            return None, nodes
        class_masks[color[i]] &= ~(1 << i)
        color[i] = -1
