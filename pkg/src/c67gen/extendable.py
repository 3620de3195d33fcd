"""Extendable-vertex recognition for graphs without 6- and 7-cycles.

A vertex ``x`` is *extendable* when no independent subset of ``N_2(x)``
dominates ``N(x)``. The decision runs in four reductions:

1. every component ``A`` of ``G[N_2(x)]`` containing a vertex that alone sees
   all of ``N(x) ∩ N(V(A))`` is *forced*; its smallest such vertex joins the
   witness and ``N[V(A)]`` is deleted, giving ``H_x``;
2. inside ``H_x`` every layer-2 vertex with two or more layer-1 neighbours
   must be in any witness (the forced set ``S*``); if ``S*`` is not
   independent, ``x`` is extendable;
3. deleting ``N[S*]`` gives ``H*_x``, where each layer-2 vertex sees exactly
   one layer-1 vertex and each layer-2 component can cover at most one;
4. a unit-capacity gate network decides whether the layer-1 vertices of
   ``H*_x`` can all be covered.

Layers are recomputed inside each pruned host; vertices that drift beyond
distance two cannot dominate a layer-1 vertex and are ignored.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GraphInputError, InvalidWitnessError, InvariantError
from .flow import FlowNetwork, FlowResult, NodeKind, max_flow
from .graph import (
    Graph,
    GraphView,
    InducedSubgraph,
    closed_neighborhood,
    connected_components,
    dominates,
    induced,
    is_independent,
    neighborhood_layers,
    vset,
)

SINK_ARC_NOTE = "layer-1 arcs are directed into the sink t (the source cannot absorb flow)"


@dataclass(frozen=True)
class ExtendabilityResult:
    extendable: bool
    witness: tuple | None = None

    def __post_init__(self):
        if self.extendable != (self.witness is None):
            raise InvariantError("a witness is present exactly when x is not extendable")

    @property
    def outcome(self) -> str:
        return "extendable" if self.extendable else "not-extendable"

    @classmethod
    def yes(cls) -> "ExtendabilityResult":
        return cls(True, None)

    @classmethod
    def no(cls, witness) -> "ExtendabilityResult":
        return cls(False, vset(witness))


@dataclass
class ReductionTrace:
    """Intermediate objects of one extendability decision (ids of the queried host)."""

    x: int
    layer1: tuple = ()
    layer2: tuple = ()
    astar_components: tuple = ()
    astar_reps: tuple = ()
    hx: InducedSubgraph | None = None
    sstar: tuple = ()
    sstar_independent: bool = True
    hstarx: InducedSubgraph | None = None
    gate_components: tuple = ()
    network: FlowNetwork | None = None
    flow: FlowResult | None = None
    notes: tuple = field(default_factory=lambda: (SINK_ARC_NOTE,))

    def summary(self) -> dict:
        return {
            "astar": len(self.astar_components),
            "hx": len(self.hx.kept) if self.hx is not None else 0,
            "sstar": len(self.sstar),
            "hstarx": len(self.hstarx.kept) if self.hstarx is not None else 0,
            "flow": self.flow.value if self.flow is not None else None,
        }


def _nbrs_in(view: GraphView, v: int) -> frozenset:
    if isinstance(view, InducedSubgraph):
        return view.parent.nbr_set(v) & view.vertex_set
    return view.nbr_set(v)


def find_astar(host: Graph, x: int):
    """Forced components of ``G[N_2(x)]`` and their smallest qualifying vertices."""
    x = host.check_vertex(x)
    lv = neighborhood_layers(host, [x], 2)
    layer1 = frozenset(lv.layers[1])
    comps, reps = [], []
    for comp in connected_components(host, lv.layers[2]):
        seen = {a: host.nbr_set(a) & layer1 for a in comp}
        union = frozenset().union(*seen.values())
        qualifying = [a for a in comp if seen[a] == union]
        if qualifying:
            comps.append(comp)
            reps.append(qualifying[0])
    return tuple(comps), tuple(reps)


def build_hx(host: Graph, x: int) -> ReductionTrace:
    """Trace holding the forced components and ``H_x = G[N_2[x] \\ N[V(A*)]]``."""
    x = host.check_vertex(x)
    lv = neighborhood_layers(host, [x], 2)
    comps, reps = find_astar(host, x)
    removed = closed_neighborhood(host, (a for c in comps for a in c))
    if x in removed:
        raise InvariantError("x lies in the closed neighbourhood of a forced component")
    kept = [v for v in lv.ball(2) if v not in removed]
    return ReductionTrace(
        x=x,
        layer1=lv.layers[1],
        layer2=lv.layers[2],
        astar_components=comps,
        astar_reps=vset(reps),
        hx=induced(host, kept),
    )


def compute_sstar(hx: InducedSubgraph, x: int) -> tuple[tuple, bool]:
    """Layer-2 vertices of ``hx`` with at least two layer-1 neighbours, and whether they are independent."""
    lv = neighborhood_layers(hx, [x], 2)
    layer1 = frozenset(lv.layers[1])
    sstar = vset(a for a in lv.layers[2] if len(_nbrs_in(hx, a) & layer1) >= 2)
    return sstar, is_independent(hx, sstar)


def build_hstar(hx: InducedSubgraph, sstar, x: int) -> InducedSubgraph:
    if not is_independent(hx, sstar):
        raise InvariantError("build_hstar needs an independent forced set")
    gone = closed_neighborhood(hx, sstar)
    if x in gone:
        raise InvariantError("x lies in N[S*]")
    return induced(hx, [v for v in hx.kept if v not in gone])


def _gate_layout(hstarx: InducedSubgraph, x: int):
    lv = neighborhood_layers(hstarx, [x], 2)
    layer1 = frozenset(lv.layers[1])
    comps = tuple(connected_components(hstarx, lv.layers[2]))
    arcs = [(a, v) for a in lv.layers[2] for v in sorted(_nbrs_in(hstarx, a) & layer1)]
    return lv, comps, arcs


def build_fx(hstarx: InducedSubgraph, x: int) -> FlowNetwork:
    """Gate network: ``s -> z_i`` per layer-2 component, ``z_i -> a``, ``a -> v``, ``v -> t``."""
    lv, comps, arcs = _gate_layout(hstarx, x)
    return FlowNetwork.layered(comps, arcs, lv.layers[1])


def _check_flow_identity(net: FlowNetwork, res: FlowResult, hstarx, layer1) -> None:
    hit = set()
    for a in res.positive_layer2:
        hit |= _nbrs_in(hstarx, a) & set(layer1)
    counts = (res.value, len(res.positive_layer2), len(hit), len(res.layer1_with_inflow(net)))
    if len(set(counts)) != 1:
        raise InvariantError(f"flow identity |f| = |S| = |N(x) ∩ N(S)| failed: {counts}")
    if res.iterations > net.num_nodes:
        raise InvariantError("more augmenting iterations than network nodes")


def extendability_witness_problem(host: Graph, x: int, witness) -> str | None:
    """Why ``witness`` fails to certify that ``x`` is not extendable, or ``None``."""
    lv = neighborhood_layers(host, [x], 2)
    w = set(witness)
    if not w <= set(lv.layers[2]):
        return "witness leaves N_2(x)"
    if not is_independent(host, w):
        return "witness is not independent"
    if not dominates(host, w, lv.layers[1]):
        return "witness does not dominate N(x)"
    return None


def _on_graph(host: GraphView, x: int):
    if isinstance(host, InducedSubgraph):
        if x not in host:
            raise GraphInputError(f"vertex {x} is not in the subgraph")
        return host.graph, host.local_id(x), host
    return host, host.check_vertex(x), None


def is_extendable(host: GraphView, x: int) -> tuple[ExtendabilityResult, ReductionTrace]:
    """Decide whether ``x`` is extendable; the host is assumed free of 6- and 7-cycles.

    For an :class:`InducedSubgraph` host the result uses parent ids while the
    trace stays in the subgraph's local ids. A returned witness is always
    re-validated against the host, whatever the input class.
    """
    g, lx, sub = _on_graph(host, x)
    res, trace = _decide(g, lx)
    if sub is not None and res.witness is not None:
        res = ExtendabilityResult.no(sub.to_parent(res.witness))
    return res, trace


def _decide(g: Graph, x: int) -> tuple[ExtendabilityResult, ReductionTrace]:
    if not g.adj[x]:
        return ExtendabilityResult.no(()), ReductionTrace(x=x)
    trace = build_hx(g, x)
    sstar, independent = compute_sstar(trace.hx, x)
    trace.sstar, trace.sstar_independent = sstar, independent
    if not independent:
        return ExtendabilityResult.yes(), trace
    hstarx = build_hstar(trace.hx, sstar, x)
    lv, comps, arcs = _gate_layout(hstarx, x)
    net = FlowNetwork.layered(comps, arcs, lv.layers[1])
    res = max_flow(net)
    _check_flow_identity(net, res, hstarx, lv.layers[1])
    trace.hstarx, trace.gate_components, trace.network, trace.flow = hstarx, comps, net, res
    if not dominates(hstarx, res.positive_layer2, lv.layers[1]):
        return ExtendabilityResult.yes(), trace
    witness = vset(set(trace.astar_reps) | set(res.positive_layer2) | set(sstar))
    problem = extendability_witness_problem(g, x, witness)
    if problem:
        raise InvalidWitnessError(f"vertex {x}: {problem}")
    return ExtendabilityResult.no(witness), trace


def _is_star(sub: InducedSubgraph, comp) -> bool:
    comp = set(comp)
    deg = {v: len(_nbrs_in(sub, v) & comp) for v in comp}
    edges = sum(deg.values()) // 2
    return edges == len(comp) - 1 and max(deg.values()) == len(comp) - 1


def reduction_violations(host: Graph, trace: ReductionTrace) -> list:
    """Structural facts the reduction guarantees on graphs without 6- and 7-cycles.

    Checked: forced-component representatives, the vertex sets of ``H_x``
    and ``H*_x``, the definition of ``S*``, the adjacent-pair conditions on
    layer-2 of ``H_x``, and the gate structure of ``H*_x`` (one layer-1
    neighbour per layer-2 vertex; every non-singleton component a star
    attached to exactly two layer-1 vertices). Returns human-readable
    violations; empty means all hold.
    """
    out = []
    x = trace.x
    if trace.hx is None:
        return out
    layer1 = frozenset(trace.layer1)
    reps = set(trace.astar_reps)
    for comp in trace.astar_components:
        union = frozenset().union(*(host.nbr_set(a) & layer1 for a in comp))
        r = [a for a in comp if a in reps]
        if len(r) != 1 or host.nbr_set(r[0]) & layer1 != union:
            out.append(f"forced component {comp} lacks a full-view representative")
    forced = closed_neighborhood(host, (a for c in trace.astar_components for a in c))
    expect = {x} | set(trace.layer1) | set(trace.layer2)
    if set(trace.hx.kept) != expect - forced:
        out.append("H_x vertex set differs from N_2[x] minus N[V(A*)]")

    hx = trace.hx
    lv = neighborhood_layers(hx, [x], 2)
    l1 = frozenset(lv.layers[1])
    l2 = set(lv.layers[2])
    for a in sorted(l2):
        for b in sorted(_nbrs_in(hx, a) & l2):
            if b < a:
                continue
            na, nb = _nbrs_in(hx, a) & l1, _nbrs_in(hx, b) & l1
            if not (na - nb) or not (nb - na) or (na & nb):
                out.append(f"adjacent layer-2 pair ({a}, {b}) breaks the private/disjoint-neighbour conditions")
    expected_sstar = vset(a for a in l2 if len(_nbrs_in(hx, a) & l1) >= 2)
    if tuple(trace.sstar) != expected_sstar:
        out.append("S* differs from its definition")

    hs = trace.hstarx
    if hs is None:
        return out
    if set(hs.kept) != set(hx.kept) - closed_neighborhood(hx, trace.sstar):
        out.append("H*_x vertex set differs from V(H_x) minus N[S*]")
    lv = neighborhood_layers(hs, [x], 2)
    l1 = frozenset(lv.layers[1])
    for a in lv.layers[2]:
        if len(_nbrs_in(hs, a) & l1) != 1:
            out.append(f"layer-2 vertex {a} of H*_x has {len(_nbrs_in(hs, a) & l1)} layer-1 neighbours")
    for comp in trace.gate_components:
        seen = frozenset().union(*(_nbrs_in(hs, a) & l1 for a in comp))
        if len(comp) == 1:
            continue
        if not _is_star(hs, comp):
            out.append(f"layer-2 component {comp} of H*_x is not a star")
        if len(seen) != 2:
            out.append(f"layer-2 component {comp} of H*_x is attached to {len(seen)} layer-1 vertices")
    if trace.network is not None:
        gates = sum(1 for k in trace.network.kinds if k is NodeKind.GATE)
        if gates != len(trace.gate_components):
            out.append("gate count differs from the number of layer-2 components")
    return out


def singleton_gate_count(trace: ReductionTrace) -> int:
    """Layer-2 components of ``H*_x`` with one vertex (attached to one layer-1 vertex)."""
    return sum(1 for c in trace.gate_components if len(c) == 1)
