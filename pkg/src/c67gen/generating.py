"""Generating-subgraph recognition for graphs without 6- and 7-cycles.

``B`` is generating iff every ``b ∈ V(B)`` is non-extendable in its local
graph ``G_b``; the per-vertex witnesses are pairwise non-adjacent and their
union grows into a witness for ``B``.
"""
from __future__ import annotations

from .errors import GraphInputError, InvalidWitnessError, InvariantError
from .extendable import is_extendable
from .graph import (
    Graph,
    InducedSubgraph,
    bipartite_violation,
    closed_neighborhood,
    greedy_extend_to_maximal,
    induced,
    is_independent,
    is_maximal_independent,
    neighborhood_layers,
    vset,
)
from .results import BipartiteSpec, GeneratingResult


def _checked(g: Graph, spec: BipartiteSpec) -> BipartiteSpec:
    problem = bipartite_violation(g, spec.bx, spec.by)
    if problem:
        raise GraphInputError(f"not an induced complete bipartite subgraph: {problem}")
    return spec


def build_gb(g: Graph, spec: BipartiteSpec, b: int) -> InducedSubgraph:
    """Local graph of ``b``: ``b``, its outside neighbours that miss the other side, and ``N_2(b) ∩ N_2(V(B))``.

    Neighbours of ``b`` adjacent to the opposite side are dominated in both
    maximal sets already, so they are left out.
    """
    if b in spec.bx:
        other = spec.by
    elif b in spec.by:
        other = spec.bx
    else:
        raise GraphInputError(f"vertex {b} is not in B")
    verts = spec.vertices
    around_b = neighborhood_layers(g, [b], 2)
    around_B = neighborhood_layers(g, verts, 2)
    far = set(around_B.layers[2])
    touched = closed_neighborhood(g, other)
    kept = [b]
    kept += [v for v in around_b.layers[1] if v not in verts and v not in touched]
    kept += [v for v in around_b.layers[2] if v in far]
    return induced(g, kept)


def generating_witness_problem(g: Graph, spec: BipartiteSpec, w) -> str | None:
    w = set(w)
    if w & closed_neighborhood(g, spec.vertices):
        return "witness meets N[V(B)]"
    if not is_independent(g, w):
        return "witness is not independent"
    if not is_maximal_independent(g, w | set(spec.bx)):
        return "witness ∪ B_X is not maximal independent"
    if not is_maximal_independent(g, w | set(spec.by)):
        return "witness ∪ B_Y is not maximal independent"
    return None


def is_generating(g: Graph, spec: BipartiteSpec) -> GeneratingResult:
    """Decide whether ``spec`` is generating; ``g`` is assumed free of 6- and 7-cycles."""
    spec = _checked(g, spec)
    parts = []
    for b in spec.vertices:
        res, _ = is_extendable(build_gb(g, spec, b), b)
        if res.extendable:
            return GeneratingResult(False, None, spec)
        parts.append(res.witness)
    merged = vset(v for part in parts for v in part)
    if not is_independent(g, merged):
        raise InvariantError("per-vertex witnesses are adjacent; is the graph C6/C7-free?")
    w = greedy_extend_to_maximal(g, merged, closed_neighborhood(g, spec.vertices))
    problem = generating_witness_problem(g, spec, w)
    if problem:
        raise InvalidWitnessError(problem)
    return GeneratingResult(True, w, spec)
