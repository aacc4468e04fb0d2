# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled twin of _kernel_py.

Same contracts, same vertex and class trial order, same node counts.
Any change here must be mirrored in the pure-Python module and vice
versa; the test suite asserts that the two backends agree exactly.
Limited to 64 vertices by the u64 bitmask representation.
"""

ctypedef unsigned long long u64


cdef inline int _high_bit(u64 x):
    cdef int h = -1
    while x:
        x >>= 1
        h += 1
    return h


def solve_fixed_k_proper(int n, adj, int k):
    cdef u64 adj_c[64]
    cdef u64 class_masks[64]
    cdef int color[64]
    cdef int trial[64]
    cdef int used_stack[65]
    cdef int i, c, used, limit
    cdef u64 am, bit
    cdef bint placed

    if n == 0:
        return []
    if n > 64 or k > 64 or k < 1:
        raise ValueError("compiled kernel handles 1 <= k and n <= 64")
    for i in range(n):
        adj_c[i] = adj[i]
        color[i] = -1
        trial[i] = 0
    for i in range(k):
        class_masks[i] = 0
    used_stack[0] = 0

    i = 0
    while True:
        used = used_stack[i]
        limit = used if used < k else k - 1
        c = trial[i]
        am = adj_c[i]
        bit = (<u64>1) << i
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
                return [color[j] for j in range(n)]
            trial[i] = 0
            continue
        i -= 1
        if i < 0:
            return None
        class_masks[color[i]] &= ~((<u64>1) << i)
        color[i] = -1


def solve_fixed_k_dominator(int n, adj, outs, required, int k):
    cdef u64 adj_c[64]
    cdef u64 class_masks[64]
    cdef int req_maxout[64]
    cdef u64 req_notout[64]
    cdef int color[64]
    cdef int trial[64]
    cdef int used_stack[65]
    cdef int i, j, c, v, used, limit, new_used, nreq, r
    cdef u64 am, bit, cm, om
    cdef u64 nodes = 0
    cdef bint placed, feasible

    if n == 0:
        return [], 0
    if n > 64 or k > 64 or k < 1:
        raise ValueError("compiled kernel handles 1 <= k and n <= 64")
    for i in range(n):
        adj_c[i] = adj[i]
        color[i] = -1
        trial[i] = 0
    for i in range(k):
        class_masks[i] = 0
    used_stack[0] = 0
    nreq = len(required)
    for r in range(nreq):
        v = required[r]
        om = outs[v]
        req_maxout[r] = _high_bit(om)
        req_notout[r] = ~om

    i = 0
    while True:
        used = used_stack[i]
        limit = used if used < k else k - 1
        c = trial[i]
        am = adj_c[i]
        bit = (<u64>1) << i
        placed = False
        while c <= limit:
            cm = class_masks[c]
            if not (cm & am):
                nodes += 1
                class_masks[c] = cm | bit
                new_used = used + (1 if c == used else 0)
                feasible = True
                for r in range(nreq):
                    if req_maxout[r] > i and new_used < k:
                        continue
                    for j in range(new_used):
                        if not (class_masks[j] & req_notout[r]):
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
                return [color[j] for j in range(n)], nodes
            trial[i] = 0
            continue
        i -= 1
        if i < 0:
            return None, nodes
        class_masks[color[i]] &= ~((<u64>1) << i)
        color[i] = -1
