"""Detection of fixed-length (not necessarily induced) cycles."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import GraphInputError
from .graph import Graph

MIN_K, MAX_K = 3, 8


@dataclass(frozen=True)
class CycleReport:
    length: int
    cycle: tuple | None = None

    @property
    def found(self) -> bool:
        return self.cycle is not None


def is_valid_cycle(g: Graph, cycle, length: int) -> bool:
    cycle = list(cycle)
    if len(cycle) != length or len(set(cycle)) != length:
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % length]) for i in range(length))


def find_cycle_of_length(g: Graph, k: int) -> CycleReport:
    """Return a ``k``-cycle of ``g`` if one exists.

    Roots are scanned in ascending order and each search only visits vertices
    larger than its root, so the reported cycle starts at its smallest vertex
    and the lexicographically smallest starting edge is explored first.
    """
    if not isinstance(k, (int, np.integer)) or not MIN_K <= k <= MAX_K:
        raise GraphInputError(f"cycle length must be in {MIN_K}..{MAX_K}, got {k!r}")
    k = int(k)
    if g.n < k or g.m < k:
        return CycleReport(k)
    indptr, indices = g.csr
    alive = np.ones(indices.shape[0], dtype=np.uint8)
    path = np.zeros(k, dtype=np.int64)
    for root in range(g.n - k + 1):
        if g.degree(root) < 2:
            continue
        if _kernels.find_cycle_from_root(indptr, indices, alive, root, k, path):
            cyc = tuple(int(v) for v in path)
            assert is_valid_cycle(g, cyc, k)
            return CycleReport(k, cyc)
    return CycleReport(k)


def validate_c67_free(g: Graph) -> CycleReport | None:
    """``None`` when ``g`` has no 6- and no 7-cycle, else the offending cycle."""
    for k in (6, 7):
        rep = find_cycle_of_length(g, k)
        if rep.found:
            return rep
    return None


def prune_to_c67_free(g: Graph) -> tuple[Graph, list]:
    """Delete edges of ``g`` until it has no 6- or 7-cycle.

    Returns the pruned graph and the removed edges in deletion order.
    """
    indptr, indices = g.csr
    alive = np.ones(indices.shape[0], dtype=np.uint8)
    removed = np.zeros(2 * max(g.m, 1), dtype=np.int64)
    count = _kernels.prune_cycles(
        indptr, indices, alive, np.array([6, 7], dtype=np.int64), removed
    )
    gone = [(int(removed[2 * i]), int(removed[2 * i + 1])) for i in range(count)]
    dead = set(gone)
    pruned = Graph(g.n, [e for e in g.edges if e not in dead])
    return pruned, gone
