"""Linear-forest patterns (disjoint paths plus isolated vertices) and induced
containment testing.

Patterns are written "P5+2P1": components joined by '+', each an optional
copy count followed by P<order>. The induced search places path components
longest first and isolated vertices last, pruning on adjacency; path
reversal and equal-length component permutation symmetries are broken to
avoid duplicate work.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graphs import Graph, GraphError, disjoint_union, edgeless, path

_COMPONENT_RE = re.compile(r"^(\d*)P(\d+)$")


@dataclass(frozen=True)
class ForestPattern:
    paths: tuple  # path orders >= 2, sorted descending
    isolated: int  # number of P_1 components

    def __post_init__(self):
        if any(p < 2 for p in self.paths) or self.isolated < 0:
            raise GraphError("invalid forest pattern")
        object.__setattr__(self, "paths",
                           tuple(sorted(self.paths, reverse=True)))

    @property
    def order(self) -> int:
        return sum(self.paths) + self.isolated

    @classmethod
    def parse(cls, text: str) -> "ForestPattern":
        paths = []
        isolated = 0
        for token in text.replace(" ", "").split("+"):
            m = _COMPONENT_RE.match(token)
            if not m:
                raise GraphError(f"malformed pattern component {token!r}")
            count = int(m.group(1)) if m.group(1) else 1
            order = int(m.group(2))
            if order < 1 or count < 1:
                raise GraphError(f"malformed pattern component {token!r}")
            if order == 1:
                isolated += count
            else:
                paths.extend([order] * count)
        return cls(tuple(paths), isolated)

    def __str__(self):
        parts = [f"P{p}" for p in self.paths]
        if self.isolated == 1:
            parts.append("P1")
        elif self.isolated > 1:
            parts.append(f"{self.isolated}P1")
        return "+".join(parts) if parts else "P0"


def pattern_graph(p: ForestPattern) -> Graph:
    """The pattern as a graph: paths in descending order, then P_1's."""
    g = edgeless(0)
    for order in p.paths:
        g = disjoint_union(g, path(order))
    return disjoint_union(g, edgeless(p.isolated))


def find_induced(host: Graph, p: ForestPattern) -> tuple | None:
    """An induced embedding of the pattern, as a tuple of host vertices in
    pattern-vertex order (see pattern_graph), or None."""
    n = host.n
    if p.order > n:
        return None
    adj = host.adj
    paths = p.paths  # already sorted descending

    placed: list[int] = []

    def place_isolated(remaining: int, placed_mask: int, start: int) -> bool:
        if remaining == 0:
            return True
        for v in range(start, n):
            bit = 1 << v
            if placed_mask & bit or adj[v] & placed_mask:
                continue
            placed.append(v)
            if place_isolated(remaining - 1, placed_mask | bit, v + 1):
                return True
            placed.pop()
        return False

    def extend_path(need: int, seq_first: int, placed_mask: int,
                    pi: int) -> bool:
        """Grow the current path by ``need`` more vertices."""
        if need == 0:
            if seq_first > placed[-1]:
                return False  # path reversal symmetry: first endpoint smallest
            return place_component(pi + 1, placed_mask)
        last = placed[-1]
        # must touch the previous path vertex, nothing else already placed
        forbidden = placed_mask & ~(1 << last)
        for v in range(n):
            bit = 1 << v
            if placed_mask & bit:
                continue
            a = adj[v]
            if not (a >> last & 1) or a & forbidden:
                continue
            placed.append(v)
            if extend_path(need - 1, seq_first, placed_mask | bit, pi):
                return True
            placed.pop()
        return False

    def place_component(pi: int, placed_mask: int) -> bool:
        if pi == len(paths):
            return place_isolated(p.isolated, placed_mask, 0)
        order = paths[pi]
        # equal-length component permutation symmetry: increasing start vertex
        start = 0
        if pi > 0 and paths[pi - 1] == order:
            prev_start = placed[-order]
            start = prev_start + 1
        for v in range(start, n):
            bit = 1 << v
            if placed_mask & bit or adj[v] & placed_mask:
                continue
            placed.append(v)
            if extend_path(order - 1, v, placed_mask | bit, pi):
                return True
            placed.pop()
        return False

    if place_component(0, 0):
        return tuple(placed)
    return None


def is_free(host: Graph, p: ForestPattern) -> bool:
    """True iff the host contains no induced copy of the pattern."""
    return find_induced(host, p) is None


def verify_embedding(host: Graph, p: ForestPattern, embedding) -> bool:
    """Recheck the induced condition directly against the pattern graph."""
    pat = pattern_graph(p)
    if len(set(embedding)) != pat.n:
        return False
    for i in range(pat.n):
        for j in range(i + 1, pat.n):
            if pat.has_edge(i, j) != host.has_edge(embedding[i], embedding[j]):
                return False
    return True
