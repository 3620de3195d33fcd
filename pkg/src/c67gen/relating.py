"""Relating-edge recognition for graphs without 6- and 7-cycles.

An edge ``xy`` is relating when some independent ``S`` makes both
``S ∪ {x}`` and ``S ∪ {y}`` maximal independent sets. Such an ``S`` exists
exactly when each endpoint is non-extendable in its *side subgraph*: the
endpoint, its neighbours that miss the other endpoint, and the vertices at
distance two from the endpoint that are not adjacent to the other one. The
two side witnesses cannot touch (any edge between them closes a 6-cycle),
so their union is grown greedily into the full witness.
"""
from __future__ import annotations

from .errors import GraphInputError, InvalidWitnessError, InvariantError
from .extendable import is_extendable
from .graph import (
    Graph,
    InducedSubgraph,
    closed_neighborhood,
    greedy_extend_to_maximal,
    induced,
    is_independent,
    is_maximal_independent,
    neighborhood_layers,
    vset,
)
from .results import RelatingResult


def _edge(g: Graph, x: int, y: int) -> tuple[int, int]:
    x, y = g.check_vertex(x), g.check_vertex(y)
    if not g.has_edge(x, y):
        raise GraphInputError(f"({x}, {y}) is not an edge")
    return x, y


def side_subgraph(g: Graph, x: int, y: int) -> InducedSubgraph:
    """``G[{x} ∪ (N(x) \\ N[y]) ∪ (N_2(x) \\ N(y))]``."""
    x, y = _edge(g, x, y)
    lv = neighborhood_layers(g, [x], 2)
    ny = g.nbr_set(y)
    kept = [x]
    kept += [v for v in lv.layers[1] if v != y and v not in ny]
    kept += [v for v in lv.layers[2] if v not in ny]
    return induced(g, kept)


def relating_witness_problem(g: Graph, x: int, y: int, w) -> str | None:
    w = set(w)
    if w & closed_neighborhood(g, [x, y]):
        return "witness meets N[{x, y}]"
    if not is_independent(g, w):
        return "witness is not independent"
    if not is_maximal_independent(g, w | {x}):
        return "witness ∪ {x} is not maximal independent"
    if not is_maximal_independent(g, w | {y}):
        return "witness ∪ {y} is not maximal independent"
    return None


def _side(g: Graph, x: int, y: int):
    """Side witness for ``x`` (``()`` when ``x`` has no private neighbour), or ``None`` if extendable."""
    if not any(v != y and not g.has_edge(v, y) for v in g.adj[x]):
        return ()
    res, _ = is_extendable(side_subgraph(g, x, y), x)
    return None if res.extendable else res.witness


def is_relating(g: Graph, x: int, y: int) -> RelatingResult:
    """Decide whether ``xy`` is relating; ``g`` is assumed free of 6- and 7-cycles."""
    x, y = _edge(g, x, y)
    a = _side(g, x, y)
    if a is None:
        return RelatingResult(False)
    b = _side(g, y, x)
    if b is None:
        return RelatingResult(False)
    merged = vset(set(a) | set(b))
    if not is_independent(g, merged):
        raise InvariantError(f"side witnesses of ({x}, {y}) are adjacent; is the graph C6/C7-free?")
    w = greedy_extend_to_maximal(g, merged, closed_neighborhood(g, [x, y]))
    problem = relating_witness_problem(g, x, y, w)
    if problem:
        raise InvalidWitnessError(f"edge ({x}, {y}): {problem}")
    return RelatingResult(True, w)
