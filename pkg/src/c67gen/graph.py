"""Immutable simple graphs, BFS layers, induced subgraphs and set predicates.

Vertex ids are dense integers ``0..n-1`` and every vertex set handed back by
this module is a sorted tuple, so iteration order (and therefore every
witness derived from it) is reproducible.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import ContractViolation, GraphInputError

VertexSet = tuple  # sorted, duplicate-free tuple of ints


def vset(members: Iterable[int]) -> VertexSet:
    return tuple(sorted(set(int(v) for v in members)))


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored once as ``(u, v)`` with ``u < v``; ``adj[v]`` is the
    sorted neighbour tuple of ``v``.
    """

    __slots__ = ("n", "edges", "adj", "_nbr_sets", "__dict__")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        n = int(n)
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")
        seen = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphInputError(f"duplicate edge {key}")
            seen.add(key)
        self.n = n
        self.edges = tuple(sorted(seen))
        nbrs = [[] for _ in range(n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.adj = tuple(tuple(sorted(a)) for a in nbrs)
        self._nbr_sets = tuple(frozenset(a) for a in self.adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple:
        return self.adj[v]

    def nbr_set(self, v: int) -> frozenset:
        return self._nbr_sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)`` arrays for the numeric kernels."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        for v in range(self.n):
            indptr[v + 1] = indptr[v] + len(self.adj[v])
        indices = np.fromiter(
            (w for a in self.adj for w in a), dtype=np.int64, count=int(indptr[-1])
        )
        return indptr, indices

    def check_vertex(self, v: int) -> int:
        if not isinstance(v, (int, np.integer)) or not 0 <= v < self.n:
            raise GraphInputError(f"vertex {v!r} outside [0, {self.n})")
        return int(v)

    def check_set(self, vs: Iterable[int]) -> VertexSet:
        return vset(self.check_vertex(v) for v in vs)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class InducedSubgraph:
    """``parent[kept]`` with a local relabelling ``kept[i] <-> i``."""

    parent: Graph
    kept: VertexSet
    graph: Graph = field(repr=False)
    _local: dict = field(repr=False, compare=False)

    def to_parent(self, local: Iterable[int]) -> VertexSet:
        return vset(self.kept[i] for i in local)

    def to_local(self, vs: Iterable[int]) -> VertexSet:
        try:
            return vset(self._local[v] for v in vs)
        except KeyError as exc:
            raise GraphInputError(f"vertex {exc.args[0]} is not in the subgraph") from None

    def local_id(self, v: int) -> int:
        return self._local[v]

    def __contains__(self, v) -> bool:
        return v in self._local

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.kept)


GraphView = Union[Graph, InducedSubgraph]


def _base(host: GraphView) -> Graph:
    return host.graph if isinstance(host, InducedSubgraph) else host


def induced(parent: GraphView, kept: Iterable[int]) -> InducedSubgraph:
    """Induced subgraph of ``parent`` on ``kept``.

    Inducing from an :class:`InducedSubgraph` composes: ``kept`` is given in
    the ids of the original parent and the result hangs off that parent.
    """
    if isinstance(parent, InducedSubgraph):
        kept = vset(kept)
        missing = [v for v in kept if v not in parent]
        if missing:
            raise GraphInputError(f"vertex {missing[0]} is not in the subgraph")
        return induced(parent.parent, kept)
    kept = parent.check_set(kept)
    local = {v: i for i, v in enumerate(kept)}
    edges = []
    for u in kept:
        lu = local[u]
        for w in parent.adj[u]:
            if w > u and w in local:
                edges.append((lu, local[w]))
    return InducedSubgraph(parent, kept, Graph(len(kept), edges), local)


@dataclass(frozen=True)
class LayeredView:
    """``layers[i]`` holds the vertices at distance exactly ``i`` from ``seed``."""

    seed: VertexSet
    layers: tuple
    overflow: VertexSet

    def distance(self) -> dict:
        return {v: i for i, layer in enumerate(self.layers) for v in layer}

    def ball(self, radius: int) -> VertexSet:
        return vset(v for layer in self.layers[: radius + 1] for v in layer)


def neighborhood_layers(host: GraphView, seed: Iterable[int], depth: int) -> LayeredView:
    """Exact BFS layers ``N_0..N_depth`` of ``seed``; farther vertices go to overflow.

    For an :class:`InducedSubgraph` host, seed and results use parent ids.
    """
    if depth < 1:
        raise ContractViolation("depth must be at least 1")
    if isinstance(host, InducedSubgraph):
        lv = neighborhood_layers(host.graph, host.to_local(seed), depth)
        return LayeredView(
            host.to_parent(lv.seed),
            tuple(host.to_parent(layer) for layer in lv.layers),
            host.to_parent(lv.overflow),
        )
    seed = host.check_set(seed)
    if not seed:
        raise ContractViolation("seed must be non-empty")
    dist = {s: 0 for s in seed}
    frontier = list(seed)
    layers = [seed]
    for d in range(1, depth + 1):
        nxt = []
        for u in frontier:
            for w in host.adj[u]:
                if w not in dist:
                    dist[w] = d
                    nxt.append(w)
        layers.append(vset(nxt))
        frontier = nxt
    overflow = vset(v for v in range(host.n) if v not in dist)
    return LayeredView(seed, tuple(layers), overflow)


def bfs_distances(g: Graph, seed: Iterable[int]) -> list:
    """Distance from ``seed`` to every vertex, ``-1`` when unreachable."""
    dist = [-1] * g.n
    q = deque()
    for s in seed:
        dist[s] = 0
        q.append(s)
    while q:
        u = q.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def connected_components(host: GraphView, within: Iterable[int]) -> list:
    """Components of the subgraph induced on ``within``, ordered by smallest member."""
    g = _base(host)
    if isinstance(host, InducedSubgraph):
        comps = connected_components(g, host.to_local(within))
        return [host.to_parent(c) for c in comps]
    within = g.check_set(within)
    inside = set(within)
    seen = set()
    comps = []
    for s in within:
        if s in seen:
            continue
        seen.add(s)
        stack = [s]
        comp = []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if w in inside and w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(vset(comp))
    return comps


def closed_neighborhood(host: GraphView, s: Iterable[int]) -> frozenset:
    g = _base(host)
    if isinstance(host, InducedSubgraph):
        return frozenset(host.to_parent(closed_neighborhood(g, host.to_local(s))))
    out = set()
    for v in s:
        out.add(v)
        out.update(g.adj[v])
    return frozenset(out)


def open_neighborhood(host: GraphView, s: Iterable[int]) -> frozenset:
    """``N(S)``: vertices at distance exactly one from the set ``S``."""
    s = set(s)
    return closed_neighborhood(host, s) - s


def is_independent(host: GraphView, s: Iterable[int]) -> bool:
    g = _base(host)
    if isinstance(host, InducedSubgraph):
        s = host.to_local(s)
    members = set(s)
    return not any(w in members for v in members for w in g.adj[v])


def dominates(host: GraphView, s: Iterable[int], t: Iterable[int]) -> bool:
    """True iff ``T ⊆ N[S]``; the empty set dominates the empty set."""
    return set(t) <= closed_neighborhood(host, s)


def greedy_extend_to_maximal(
    host: GraphView, s: Iterable[int], forbidden: Iterable[int] = ()
) -> VertexSet:
    """Grow ``S`` to a maximal independent set of ``host - forbidden``.

    Vertices are scanned in ascending id, so the result is deterministic.
    """
    g = _base(host)
    if isinstance(host, InducedSubgraph):
        out = greedy_extend_to_maximal(g, host.to_local(s), host.to_local(forbidden))
        return host.to_parent(out)
    s = g.check_set(s)
    forbidden = set(g.check_set(forbidden))
    if not is_independent(g, s):
        raise ContractViolation("greedy_extend_to_maximal: S is not independent")
    if forbidden.intersection(s):
        raise ContractViolation("greedy_extend_to_maximal: S meets the forbidden set")
    blocked = set(forbidden) | set(closed_neighborhood(g, s))
    chosen = list(s)
    for v in range(g.n):
        if v not in blocked:
            chosen.append(v)
            blocked.add(v)
            blocked.update(g.adj[v])
    return vset(chosen)


def is_maximal_independent(host: GraphView, s: Iterable[int]) -> bool:
    s = set(s)
    universe = set(host.kept) if isinstance(host, InducedSubgraph) else set(range(host.n))
    return is_independent(host, s) and closed_neighborhood(host, s) == universe


def is_induced_complete_bipartite(g: GraphView, bx: Iterable[int], by: Iterable[int]) -> bool:
    return bipartite_violation(g, bx, by) is None


def bipartite_violation(g: GraphView, bx: Iterable[int], by: Iterable[int]) -> str | None:
    """Name the first violated condition of an induced complete bipartite pair."""
    bx, by = list(bx), list(by)
    host = _base(g)
    universe = set(g.kept) if isinstance(g, InducedSubgraph) else set(range(host.n))
    if not bx or not by:
        return "both sides must be non-empty"
    if len(set(bx)) != len(bx) or len(set(by)) != len(by):
        return "a side repeats a vertex"
    if not set(bx) <= universe or not set(by) <= universe:
        return "a vertex is outside the graph"
    if set(bx) & set(by):
        return "the sides are not disjoint"
    if not is_independent(g, bx):
        return "B_X is not independent"
    if not is_independent(g, by):
        return "B_Y is not independent"
    for u in bx:
        nu = closed_neighborhood(g, [u])
        for v in by:
            if v not in nu:
                return f"missing edge between {u} and {v}"
    return None
