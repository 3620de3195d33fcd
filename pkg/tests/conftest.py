import itertools
import random

import pytest
from hypothesis import strategies as st

from c67gen import Graph, gen_random_c67_free, validate_c67_free


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(n, itertools.combinations(range(n), 2))


def star(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def c67_corpus(count, max_n, seed, min_n=1):
    """Seeded stream of certified C6/C7-free graphs with mixed sizes and densities."""
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(min_n, max_n)
        p = rng.choice([0.15, 0.25, 0.35, 0.5, 0.7])
        yield gen_random_c67_free(n, p, seed * 100003 + i)


def block_tree(n, seed, block_sizes=(5, 5, 5, 4, 3)):
    """Random tree of cliques glued at cut vertices.

    Every cycle lives inside one block of at most five vertices, so the
    graph has no 6- or 7-cycle; K5 blocks push ``m`` towards ``2.5 n``.
    """
    rng = random.Random(seed)
    edges, have = [], 1
    while have < n:
        size = min(rng.choice(block_sizes), n - have + 1)
        anchor = rng.randrange(have)
        block = [anchor] + list(range(have, have + size - 1))
        edges += list(itertools.combinations(block, 2))
        have += size - 1
    g = Graph(n, edges)
    assert validate_c67_free(g) is None
    return g


def quadrangle_incidence(q=5):
    """Point-line incidence graph of the symplectic quadrangle W(q), q prime.

    It is (q+1)-regular with girth 8, so ``m = (q+1) n / 2`` and there is
    no cycle of length 6 or 7.
    """
    def normal(v):
        lead = next(c for c in v if c)
        inv = pow(lead, q - 2, q)
        return tuple(c * inv % q for c in v)

    points = sorted({normal(v) for v in itertools.product(range(q), repeat=4) if any(v)})
    index = {p: i for i, p in enumerate(points)}

    def form(a, b):
        return (a[0] * b[1] - a[1] * b[0] + a[2] * b[3] - a[3] * b[2]) % q

    lines = set()
    for a, b in itertools.combinations(points, 2):
        if form(a, b) == 0:
            span = {normal(tuple((s * x + t * y) % q for x, y in zip(a, b)))
                    for s in range(q) for t in range(q) if s or t}
            lines.add(frozenset(index[p] for p in span))
    lines = sorted(sorted(line) for line in lines)
    np_ = len(points)
    edges = [(p, np_ + j) for j, line in enumerate(lines) for p in line]
    return Graph(np_ + len(lines), edges)


def quadrangle_tree(n, seed, q=5):
    """Copies of the W(q) incidence graph glued at cut vertices, cut to ``n`` vertices."""
    base = quadrangle_incidence(q)
    rng = random.Random(seed)
    edges, have = list(base.edges), base.n
    while have < n:
        anchor = rng.randrange(have)
        relabel = {0: anchor} | {v: have + v - 1 for v in range(1, base.n)}
        edges += [(relabel[u], relabel[v]) for u, v in base.edges]
        have += base.n - 1
    return Graph(n, [(u, v) for u, v in edges if u < n and v < n])


@st.composite
def any_graph(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def c67_free_graph(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    p = draw(st.sampled_from([0.2, 0.3, 0.45, 0.6]))
    return gen_random_c67_free(n, p, draw(st.integers(0, 2**31)))


@pytest.fixture
def p4():
    return path(4)


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def c5():
    return cycle(5)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
