"""Unit-capacity max flow on the layered gate network used by the extendability test.

Node ids are assigned in the fixed order source, gates, layer-2 vertices,
layer-1 vertices, sink, and residual searches scan arcs in ascending node
id, so the positive-flow layer-2 set is reproducible.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .graph import vset


class FlowInputError(ValueError):
    """The network breaks the unit-capacity layered pattern."""


class NodeKind(str, Enum):
    SOURCE = "source"
    SINK = "sink"
    GATE = "gate"
    LAYER2 = "layer2"
    LAYER1 = "layer1"


_ALLOWED = {
    (NodeKind.SOURCE, NodeKind.GATE),
    (NodeKind.GATE, NodeKind.LAYER2),
    (NodeKind.LAYER2, NodeKind.LAYER1),
    (NodeKind.LAYER1, NodeKind.SINK),
}


@dataclass(frozen=True)
class FlowNetwork:
    kinds: tuple          # NodeKind per node id
    origin: tuple         # original graph vertex per node, -1 for s, t and gates
    arcs: tuple           # (tail, head) pairs
    capacities: tuple     # one per arc; must all be 1
    source: int
    sink: int

    @property
    def num_nodes(self) -> int:
        return len(self.kinds)

    @classmethod
    def layered(cls, components, layer2_to_layer1, layer1) -> "FlowNetwork":
        """Build ``s -> z_i -> a -> v -> t`` from gate components and layer edges.

        ``components`` lists the layer-2 vertex sets (one gate each),
        ``layer2_to_layer1`` the ``(a, v)`` edges and ``layer1`` every
        layer-1 vertex (each gets an arc to the sink).
        """
        layer2 = vset(a for comp in components for a in comp)
        layer1 = vset(layer1)
        kinds = [NodeKind.SOURCE]
        origin = [-1]
        gate_of = []
        for _ in components:
            gate_of.append(len(kinds))
            kinds.append(NodeKind.GATE)
            origin.append(-1)
        node2 = {}
        for a in layer2:
            node2[a] = len(kinds)
            kinds.append(NodeKind.LAYER2)
            origin.append(a)
        node1 = {}
        for v in layer1:
            node1[v] = len(kinds)
            kinds.append(NodeKind.LAYER1)
            origin.append(v)
        sink = len(kinds)
        kinds.append(NodeKind.SINK)
        origin.append(-1)
        arcs = [(0, z) for z in gate_of]
        for z, comp in zip(gate_of, components):
            arcs.extend((z, node2[a]) for a in sorted(comp))
        arcs.extend(sorted((node2[a], node1[v]) for a, v in layer2_to_layer1))
        arcs.extend((node1[v], sink) for v in layer1)
        return cls(tuple(kinds), tuple(origin), tuple(arcs), (1,) * len(arcs), 0, sink)

    def validate(self) -> None:
        if self.kinds[self.source] is not NodeKind.SOURCE or self.kinds[self.sink] is not NodeKind.SINK:
            raise FlowInputError("source/sink tags do not match their ids")
        if len(self.capacities) != len(self.arcs):
            raise FlowInputError("one capacity per arc is required")
        seen = set()
        for (u, v), c in zip(self.arcs, self.capacities):
            if c != 1:
                raise FlowInputError(f"arc ({u}, {v}) has capacity {c}, expected 1")
            if not (0 <= u < self.num_nodes and 0 <= v < self.num_nodes):
                raise FlowInputError(f"arc ({u}, {v}) references a missing node")
            if (self.kinds[u], self.kinds[v]) not in _ALLOWED:
                raise FlowInputError(
                    f"arc ({u}, {v}) goes {self.kinds[u].value} -> {self.kinds[v].value}"
                )
            if (u, v) in seen:
                raise FlowInputError(f"parallel arc ({u}, {v})")
            seen.add((u, v))


@dataclass(frozen=True)
class FlowResult:
    value: int
    arc_flows: tuple
    positive_layer2: tuple
    iterations: int

    def layer1_with_inflow(self, net: FlowNetwork) -> tuple:
        return vset(
            net.origin[v]
            for (u, v), f in zip(net.arcs, self.arc_flows)
            if f and net.kinds[v] is NodeKind.LAYER1
        )


def max_flow(net: FlowNetwork) -> FlowResult:
    """Edmonds-Karp: shortest augmenting paths found by BFS in the residual graph."""
    net.validate()
    n = net.num_nodes
    # residual adjacency: (head, arc index, +1 forward / -1 backward)
    out = [[] for _ in range(n)]
    for i, (u, v) in enumerate(net.arcs):
        out[u].append((v, i, 1))
        out[v].append((u, i, -1))
    for lst in out:
        lst.sort()
    flow = [0] * len(net.arcs)
    s, t = net.source, net.sink
    value = 0
    iterations = 0
    while True:
        parent = [None] * n
        parent[s] = (-1, -1, 0)
        q = deque([s])
        while q and parent[t] is None:
            u = q.popleft()
            for v, i, d in out[u]:
                if parent[v] is not None:
                    continue
                if (d == 1 and flow[i] == 0) or (d == -1 and flow[i] == 1):
                    parent[v] = (u, i, d)
                    q.append(v)
        if parent[t] is None:
            break
        v = t
        while v != s:
            u, i, d = parent[v]
            flow[i] += d
            v = u
        value += 1
        iterations += 1
    positive = vset(
        net.origin[v]
        for (u, v), f in zip(net.arcs, flow)
        if f and net.kinds[v] is NodeKind.LAYER2
    )
    return FlowResult(value, tuple(flow), positive, iterations)
