import itertools
import random

import pytest

from c67gen.flow import FlowInputError, FlowNetwork, NodeKind, max_flow


def min_cut(net):
    best = len(net.arcs)
    inner = [v for v in range(net.num_nodes) if v not in (net.source, net.sink)]
    for r in range(len(inner) + 1):
        for side in itertools.combinations(inner, r):
            s_side = set(side) | {net.source}
            cut = sum(1 for u, v in net.arcs if u in s_side and v not in s_side)
            best = min(best, cut)
    return best


def random_network(rng):
    layer1 = list(range(100, 100 + rng.randint(1, 3)))
    pool = list(range(rng.randint(1, 3)))
    rng.shuffle(pool)
    comps, i = [], 0
    while i < len(pool):
        size = rng.randint(1, len(pool) - i)
        comps.append(sorted(pool[i:i + size]))
        i += size
    edges = {(a, v) for a in pool for v in layer1 if rng.random() < 0.5}
    return FlowNetwork.layered(comps, sorted(edges), layer1)


def check_feasible(net, res):
    bal = [0] * net.num_nodes
    for (u, v), f in zip(net.arcs, res.arc_flows):
        assert f in (0, 1)
        bal[u] -= f
        bal[v] += f
    for v in range(net.num_nodes):
        if v == net.source:
            assert bal[v] == -res.value
        elif v == net.sink:
            assert bal[v] == res.value
        else:
            assert bal[v] == 0


def test_no_path():
    net = FlowNetwork.layered([], [], [7, 8])
    res = max_flow(net)
    assert res.value == 0 and res.positive_layer2 == ()


def test_single_chain():
    net = FlowNetwork.layered([[3]], [(3, 9)], [9])
    res = max_flow(net)
    assert res.value == 1
    assert res.positive_layer2 == (3,)
    assert res.layer1_with_inflow(net) == (9,)


def test_shared_layer1_vertex_saturates():
    net = FlowNetwork.layered([[1], [2]], [(1, 5), (2, 5)], [5])
    assert net.num_nodes == 7
    assert max_flow(net).value == 1


def test_gate_caps_a_component():
    net = FlowNetwork.layered([[1, 2]], [(1, 5), (2, 6)], [5, 6])
    res = max_flow(net)
    assert res.value == 1 and res.positive_layer2 == (1,)


def test_node_order():
    net = FlowNetwork.layered([[4]], [(4, 2)], [2])
    assert net.kinds == (NodeKind.SOURCE, NodeKind.GATE, NodeKind.LAYER2, NodeKind.LAYER1, NodeKind.SINK)
    assert net.origin == (-1, -1, 4, 2, -1)


@pytest.mark.parametrize(
    "change",
    [
        dict(capacities=(2, 1, 1, 1)),
        dict(arcs=((0, 1), (1, 2), (2, 3), (3, 0))),
        dict(arcs=((0, 1), (1, 2), (2, 3), (2, 3))),
        dict(arcs=((0, 1), (1, 2), (2, 3), (3, 9))),
        dict(source=1),
    ],
)
def test_malformed(change):
    net = FlowNetwork.layered([[4]], [(4, 2)], [2])
    bad = FlowNetwork(**{**net.__dict__, **change})
    with pytest.raises(FlowInputError):
        max_flow(bad)


def test_matches_min_cut():
    rng = random.Random(5)
    for _ in range(300):
        net = random_network(rng)
        assert net.num_nodes <= 12
        res = max_flow(net)
        check_feasible(net, res)
        assert res.value == min_cut(net)
        assert len(res.positive_layer2) == res.value
        assert len(res.layer1_with_inflow(net)) == res.value
