"""Result and query types shared by the recognisers and their oracles."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantError
from .graph import vset


@dataclass(frozen=True)
class RelatingResult:
    relating: bool
    witness: tuple | None = None

    def __post_init__(self):
        if self.relating != (self.witness is not None):
            raise InvariantError("a witness is present exactly when the edge is relating")
        if self.witness is not None:
            object.__setattr__(self, "witness", vset(self.witness))

    @property
    def outcome(self) -> str:
        return "relating" if self.relating else "not-relating"


@dataclass(frozen=True)
class BipartiteSpec:
    """An induced complete bipartite subgraph given by its two sides."""

    bx: tuple
    by: tuple

    def __post_init__(self):
        object.__setattr__(self, "bx", vset(self.bx))
        object.__setattr__(self, "by", vset(self.by))

    @property
    def vertices(self) -> tuple:
        return vset(self.bx + self.by)


def format_restriction(bx, by, offset: int = 0) -> str:
    """``w({..}) = w({..})`` with ids shifted by ``offset`` (1 for file ids)."""
    left = ",".join(str(v + offset) for v in sorted(bx))
    right = ",".join(str(v + offset) for v in sorted(by))
    return f"w({{{left}}}) = w({{{right}}})"


@dataclass(frozen=True)
class GeneratingResult:
    generating: bool
    witness: tuple | None
    spec: BipartiteSpec

    def __post_init__(self):
        if self.generating != (self.witness is not None):
            raise InvariantError("a witness is present exactly when B is generating")
        if self.witness is not None:
            object.__setattr__(self, "witness", vset(self.witness))

    @property
    def outcome(self) -> str:
        return "generating" if self.generating else "not-generating"

    @property
    def restriction(self) -> str | None:
        """The produced equation, in 0-based ids; ``None`` unless generating."""
        if not self.generating:
            return None
        return format_restriction(self.spec.bx, self.spec.by)
