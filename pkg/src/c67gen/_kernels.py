"""Hot inner loops: bounded-depth cycle search and bitmask subset search.

Each kernel is written once in the numba-compatible subset of Python. With
numba importable and ``C67GEN_DISABLE_NUMBA`` unset (or ``0``) the compiled
versions are exported; otherwise the same functions run as plain Python over
numpy arrays. ``BACKEND`` records which path is live.
"""
from __future__ import annotations

import os

import numpy as np

_DISABLE = os.environ.get("C67GEN_DISABLE_NUMBA", "0").strip().lower() not in ("", "0", "false", "no")

try:
    if _DISABLE:
        raise ImportError
    from numba import njit as _njit
except ImportError:
    _njit = None

BACKEND = "numba" if _njit is not None else "python"


def _jit(fn):
    return _njit(cache=True, nogil=True)(fn) if _njit is not None else fn


def _find_cycle_from_root(indptr, indices, alive, root, k, path):
    """Write into ``path`` a ``k``-cycle whose smallest vertex is ``root``.

    Returns 1 when found, 0 otherwise. Only CSR slots with ``alive[j] != 0``
    are treated as edges. Neighbours are tried in CSR (ascending) order.
    """
    n = indptr.shape[0] - 1
    onpath = np.zeros(n, dtype=np.uint8)
    cursor = np.zeros(k, dtype=np.int64)
    path[0] = root
    onpath[root] = 1
    cursor[0] = indptr[root]
    depth = 1
    while depth > 0:
        u = path[depth - 1]
        if depth == k:
            closed = 0
            for j in range(indptr[u], indptr[u + 1]):
                if alive[j] != 0 and indices[j] == root:
                    closed = 1
                    break
            if closed == 1:
                return 1
            onpath[u] = 0
            depth -= 1
            continue
        advanced = 0
        while cursor[depth - 1] < indptr[u + 1]:
            j = cursor[depth - 1]
            cursor[depth - 1] = j + 1
            w = indices[j]
            if alive[j] == 0 or w <= root or onpath[w] != 0:
                continue
            path[depth] = w
            onpath[w] = 1
            cursor[depth] = indptr[w]
            depth += 1
            advanced = 1
            break
        if advanced == 0:
            onpath[u] = 0
            depth -= 1
    return 0


find_cycle_from_root = _jit(_find_cycle_from_root)


def _kill_edge_impl(indptr, indices, alive, u, v):
    for j in range(indptr[u], indptr[u + 1]):
        if indices[j] == v:
            alive[j] = 0
    for j in range(indptr[v], indptr[v + 1]):
        if indices[j] == u:
            alive[j] = 0


kill_edge = _jit(_kill_edge_impl)


def _prune_cycles(indptr, indices, alive, lengths, removed):
    """Delete edges until no cycle of any length in ``lengths`` survives.

    Roots are processed in ascending order; for each root the first cycle
    found (lengths tried in the given order) loses its lexicographically
    smallest edge, and the search repeats until that root is clean. Removed
    edges are written pairwise into ``removed``; the count is returned.
    """
    n = indptr.shape[0] - 1
    kmax = 0
    for t in range(lengths.shape[0]):
        if lengths[t] > kmax:
            kmax = lengths[t]
    path = np.zeros(kmax, dtype=np.int64)
    count = 0
    for root in range(n):
        while True:
            hit = 0
            k = 0
            for t in range(lengths.shape[0]):
                k = lengths[t]
                if find_cycle_from_root(indptr, indices, alive, root, k, path) == 1:
                    hit = 1
                    break
            if hit == 0:
                break
            bu = -1
            bv = -1
            for i in range(k):
                a = path[i]
                b = path[(i + 1) % k]
                if a > b:
                    a, b = b, a
                if bu < 0 or a < bu or (a == bu and b < bv):
                    bu = a
                    bv = b
            kill_edge(indptr, indices, alive, bu, bv)
            removed[2 * count] = bu
            removed[2 * count + 1] = bv
            count += 1
    return count


prune_cycles = _jit(_prune_cycles)


def _first_dominating_independent(closed, cand, target, out):
    """Lexicographically smallest independent subset of ``cand`` dominating ``target``.

    ``closed[v]`` is the closed-neighbourhood bitmask of local vertex ``v``;
    ``cand`` is sorted ascending; ``target`` is a bitmask. The subset is
    written into ``out`` and its size returned, or ``-1`` when none exists.
    The search is a preorder walk of the lexicographic subset tree, so the
    first hit is the smallest; subtrees whose remaining candidates cannot
    cover ``target`` are skipped.
    """
    k = cand.shape[0]
    if target == 0:
        return 0
    suffix = np.zeros(k + 1, dtype=np.int64)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] | closed[cand[i]]
    dom = np.zeros(k + 1, dtype=np.int64)
    nxt = np.zeros(k + 1, dtype=np.int64)
    sel = np.zeros(k + 1, dtype=np.int64)
    depth = 0
    while depth >= 0:
        i = nxt[depth]
        if i >= k or (target & ~(dom[depth] | suffix[i])) != 0:
            depth -= 1
            continue
        nxt[depth] = i + 1
        v = cand[i]
        if (dom[depth] >> v) & 1:
            continue
        newdom = dom[depth] | closed[v]
        sel[depth] = v
        if (target & ~newdom) == 0:
            for t in range(depth + 1):
                out[t] = sel[t]
            return depth + 1
        depth += 1
        dom[depth] = newdom
        nxt[depth] = i + 1
    return -1


first_dominating_independent = _jit(_first_dominating_independent)
