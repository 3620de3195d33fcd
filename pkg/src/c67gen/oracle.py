"""Exhaustive reference answers for small graphs.

These are exponential-time cross-checks for the polynomial recognisers:
subset search for extendability / relating / generating, maximal
independent set enumeration, well-coveredness, and the exact rational
weight space ``WCW(G)``. Every entry point enforces an explicit size guard
and raises :class:`CapacityError` instead of running for hours.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from .errors import CapacityError, GraphInputError
from .extendable import ExtendabilityResult
from .graph import (
    Graph,
    bipartite_violation,
    closed_neighborhood,
    is_independent,
    neighborhood_layers,
    vset,
)
from .results import BipartiteSpec, GeneratingResult, RelatingResult

SEARCH_LIMIT = 25   # candidate vertices of a witness search
MASK_LIMIT = 62     # local universe of one bitmask search
MIS_LIMIT = 25
WCW_LIMIT = 20


def _search(g: Graph, cand, target):
    """Smallest independent ``S ⊆ cand`` (tuple order) with ``target ⊆ N[S]``, else ``None``."""
    cand = vset(cand)
    if len(cand) > SEARCH_LIMIT:
        raise CapacityError(f"{len(cand)} candidate vertices exceed the oracle limit {SEARCH_LIMIT}")
    universe = vset(set(cand) | set(target))
    if len(universe) > MASK_LIMIT:
        raise CapacityError(f"{len(universe)} relevant vertices exceed the bitmask limit {MASK_LIMIT}")
    if not closed_neighborhood(g, cand) >= set(target):
        return None
    local = {v: i for i, v in enumerate(universe)}
    closed = np.zeros(len(universe), dtype=np.int64)
    for v in cand:
        mask = 1 << local[v]
        for w in g.adj[v]:
            if w in local:
                mask |= 1 << local[w]
        closed[local[v]] = mask
    tmask = 0
    for t in target:
        tmask |= 1 << local[t]
    out = np.zeros(len(cand) + 1, dtype=np.int64)
    size = _kernels.first_dominating_independent(
        closed, np.array([local[v] for v in cand], dtype=np.int64), np.int64(tmask), out
    )
    if size < 0:
        return None
    return vset(universe[int(i)] for i in out[:size])


def oracle_extendable(g: Graph, x: int) -> ExtendabilityResult:
    x = g.check_vertex(x)
    lv = neighborhood_layers(g, [x], 2)
    w = _search(g, lv.layers[2], lv.layers[1])
    return ExtendabilityResult.yes() if w is None else ExtendabilityResult.no(w)


def _check_edge(g: Graph, x: int, y: int) -> tuple[int, int]:
    x, y = g.check_vertex(x), g.check_vertex(y)
    if not g.has_edge(x, y):
        raise GraphInputError(f"({x}, {y}) is not an edge")
    return x, y


def _pair_search(g: Graph, side_a, side_b):
    """Smallest ``S`` with ``S ∪ A`` and ``S ∪ B`` both maximal independent."""
    na = closed_neighborhood(g, side_a)
    nb = closed_neighborhood(g, side_b)
    cand = [v for v in range(g.n) if v not in na and v not in nb]
    target = [v for v in range(g.n) if not (v in na and v in nb)]
    return _search(g, cand, target)


def oracle_relating(g: Graph, x: int, y: int) -> RelatingResult:
    x, y = _check_edge(g, x, y)
    w = _pair_search(g, [x], [y])
    return RelatingResult(w is not None, w)


def oracle_generating(g: Graph, b: BipartiteSpec) -> GeneratingResult:
    problem = bipartite_violation(g, b.bx, b.by)
    if problem:
        raise GraphInputError(f"not an induced complete bipartite subgraph: {problem}")
    w = _pair_search(g, b.bx, b.by)
    return GeneratingResult(w is not None, w, b)


@dataclass(frozen=True)
class MISList:
    sets: tuple
    complete: bool = True


def enumerate_mis(g: Graph) -> MISList:
    """All maximal independent sets, sorted lexicographically.

    Bron-Kerbosch with pivoting on the complement graph, over bitmasks.
    """
    if g.n > MIS_LIMIT:
        raise CapacityError(f"n = {g.n} exceeds the enumeration limit {MIS_LIMIT}")
    full = (1 << g.n) - 1
    # non-neighbours of v (excluding v): candidates compatible with v
    compat = []
    for v in range(g.n):
        m = full & ~(1 << v)
        for w in g.adj[v]:
            m &= ~(1 << w)
        compat.append(m)
    found = []

    def bits(m):
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def expand(r, p, x):
        if not p and not x:
            found.append(r)
            return
        pivot = max(bits(p | x), key=lambda u: bin(p & compat[u]).count("1"))
        for v in list(bits(p & ~compat[pivot])):
            expand(r | (1 << v), p & compat[v], x & compat[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n == 0:
        return MISList(((),))
    expand(0, full, 0)
    sets = sorted(tuple(bits(r)) for r in found)
    return MISList(tuple(sets))


def is_well_covered(g: Graph) -> bool:
    return len({len(s) for s in enumerate_mis(g).sets}) <= 1


@dataclass(frozen=True)
class WeightBasis:
    dimension: int
    basis: tuple    # tuples of Fraction, one entry per vertex

    def satisfies(self, left, right) -> bool:
        return all(sum(w[v] for v in left) == sum(w[v] for v in right) for w in self.basis)


def _rref_insert(rows: list, pivots: list, row: list) -> None:
    """Reduce ``row`` against a reduced echelon basis and add it if independent."""
    row = row[:]
    for prow, pc in zip(rows, pivots):
        if row[pc]:
            f = row[pc]
            row = [a - f * b for a, b in zip(row, prow)]
    lead = next((i for i, a in enumerate(row) if a), None)
    if lead is None:
        return
    inv = row[lead]
    row = [a / inv for a in row]
    for i, prow in enumerate(rows):
        if prow[lead]:
            f = prow[lead]
            rows[i] = [a - f * b for a, b in zip(prow, row)]
    at = next((i for i, pc in enumerate(pivots) if pc > lead), len(pivots))
    rows.insert(at, row)
    pivots.insert(at, lead)


def rational_nullspace(rows_in, ncols: int) -> tuple:
    """Nullspace basis of an exact matrix, one vector per free column (reduced echelon form)."""
    rows, pivots = [], []
    for r in rows_in:
        _rref_insert(rows, pivots, [Fraction(a) for a in r])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for prow, pc in zip(rows, pivots):
            vec[pc] = -prow[f]
        basis.append(tuple(vec))
    return tuple(basis)


def wcw_basis(g: Graph) -> WeightBasis:
    """Basis of the weight functions under which all maximal independent sets weigh the same."""
    if g.n > WCW_LIMIT:
        raise CapacityError(f"n = {g.n} exceeds the WCW limit {WCW_LIMIT}")
    sets = enumerate_mis(g).sets
    first = set(sets[0])
    rows = []
    for s in sets[1:]:
        s = set(s)
        rows.append([(v in s) - (v in first) for v in range(g.n)])
    basis = rational_nullspace(rows, g.n)
    return WeightBasis(len(basis), basis)


def enumerate_complete_bipartite(g: Graph, max_size: int) -> list:
    """Every induced complete bipartite subgraph with at most ``max_size`` vertices.

    Each appears once, with the lexicographically smaller side as ``bx``.
    """
    if max_size > 6:
        raise CapacityError("enumeration is limited to |V(B)| <= 6")
    out = []

    def independent_sets(pool, limit, start=()):
        pool = list(pool)

        def rec(i, cur):
            if cur:
                yield tuple(cur)
            if len(cur) == limit:
                return
            for j in range(i, len(pool)):
                v = pool[j]
                if all(not g.has_edge(v, u) for u in cur):
                    cur.append(v)
                    yield from rec(j + 1, cur)
                    cur.pop()

        yield from rec(0, list(start))

    for bx in independent_sets(range(g.n), max_size - 1):
        common = set(g.adj[bx[0]])
        for v in bx[1:]:
            common &= g.nbr_set(v)
        for by in independent_sets(sorted(common), max_size - len(bx)):
            if bx < by:
                out.append(BipartiteSpec(bx, by))
    return out


__all__ = [
    "MISList",
    "WeightBasis",
    "enumerate_complete_bipartite",
    "enumerate_mis",
    "is_independent",
    "is_well_covered",
    "oracle_extendable",
    "oracle_generating",
    "oracle_relating",
    "rational_nullspace",
    "wcw_basis",
]
