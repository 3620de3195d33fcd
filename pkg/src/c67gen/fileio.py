"""DIMACS-style graph files, JSON query reports and random instance generation.

File grammar (ids are 1-based on disk, 0-based in memory)::

    c <comment>
    p edge <n> <m>
    e <u> <v>        (exactly m lines, after the p line)
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .cycles import prune_to_c67_free, validate_c67_free
from .errors import GraphInputError, InvariantError
from .graph import Graph


class ParseError(GraphInputError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MalformedLineError(ParseError):
    pass


class LoopError(ParseError):
    pass


class DuplicateEdgeError(ParseError):
    pass


class CountMismatchError(ParseError):
    pass


def _ints(tokens, line):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise MalformedLineError(line, f"expected integers, got {' '.join(tokens)!r}") from None


def parse_graph(text: str) -> Graph:
    n = m = None
    edges = []
    seen = set()
    last = 0
    for no, raw in enumerate(text.splitlines(), start=1):
        last = no
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "p":
            if n is not None:
                raise MalformedLineError(no, "second problem line")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise MalformedLineError(no, "problem line must read 'p edge <n> <m>'")
            n, m = _ints(tokens[2:], no)
            if n < 0 or m < 0:
                raise MalformedLineError(no, "negative count in problem line")
        elif head == "e":
            if n is None:
                raise MalformedLineError(no, "edge line before the problem line")
            if len(tokens) != 3:
                raise MalformedLineError(no, "edge line must read 'e <u> <v>'")
            u, v = _ints(tokens[1:], no)
            if not (1 <= u <= n and 1 <= v <= n):
                raise MalformedLineError(no, f"vertex outside 1..{n}")
            if u == v:
                raise LoopError(no, f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DuplicateEdgeError(no, f"duplicate edge {u} {v}")
            seen.add(key)
            edges.append((u - 1, v - 1))
        else:
            raise MalformedLineError(no, f"unknown line type {head!r}")
    if n is None:
        raise MalformedLineError(max(last, 1), "missing problem line")
    if len(edges) != m:
        raise CountMismatchError(last, f"problem line announces {m} edges, found {len(edges)}")
    return Graph(n, edges)


def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


@dataclass
class QueryReport:
    """One answered query; ``witness`` and ids in ``query`` are 0-based here."""

    kind: str
    args: dict
    outcome: str
    witness: tuple | None = None
    restriction: str | None = None
    trace: dict = field(default_factory=dict)
    validated: bool = False
    millis: float = 0.0


def emit_report(report: QueryReport) -> str:
    doc = {"query": {"kind": report.kind, **report.args}, "outcome": report.outcome}
    if report.witness is not None:
        doc["witness"] = sorted(v + 1 for v in report.witness)
    if report.restriction is not None:
        doc["restriction"] = report.restriction
    doc["trace"] = report.trace
    doc["validated"] = bool(report.validated)
    doc["millis"] = round(report.millis, 3)
    return json.dumps(doc)


def gen_random_c67_free(n: int, edge_probability: float, seed: int) -> Graph:
    """Seeded G(n, p) draw, then edges are deleted until no 6- or 7-cycle is left.

    Deletion visits roots in ascending order and removes the smallest edge of
    each cycle found, so a seed always reproduces the same graph.
    """
    if n < 0:
        raise GraphInputError("n must be non-negative")
    if not 0.0 <= edge_probability <= 1.0:
        raise GraphInputError("edge probability must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.shape[0]) < edge_probability
    drawn = Graph(n, zip(iu[keep].tolist(), ju[keep].tolist()))
    pruned, _ = prune_to_c67_free(drawn)
    if validate_c67_free(pruned) is not None:
        raise InvariantError("cycle pruning left a 6- or 7-cycle behind")
    return pruned
