"""Strong bipartite spanning subdigraph certificates."""
from __future__ import annotations

from dataclasses import dataclass

from .digraph import (Arc, Digraph, VertexBipartition, is_bipartite_with, is_spanning,
                      is_strong)
from .errors import VerificationError


@dataclass(frozen=True)
class BipartiteSpanningCertificate:
    arcs: tuple[Arc, ...]
    parts: VertexBipartition
    route: str = ""

    def problems(self, D: Digraph) -> list[str]:
        """Which of spanning / strong / crossing fail (empty list when valid)."""
        bad = []
        if not self.parts.covers(D.n):
            bad.append("parts do not cover the vertex set")
        if not is_spanning(D.n, self.arcs):
            bad.append("not spanning")
        H = D.subdigraph(self.arcs)
        if not is_strong(H):
            bad.append("not strong")
        if self.parts.covers(D.n) and not is_bipartite_with(D, self.arcs, self.parts):
            bad.append("an arc does not cross the parts")
        return bad

    def is_valid(self, D: Digraph) -> bool:
        return not self.problems(D)

    def verified(self, D: Digraph) -> "BipartiteSpanningCertificate":
        bad = self.problems(D)
        if bad:
            raise VerificationError(f"certificate ({self.route}) invalid: {', '.join(bad)}")
        return self

    def subdigraph(self, D: Digraph) -> Digraph:
        return D.subdigraph(self.arcs)
