"""2-factor existence via the Tutte gadget reduction to perfect matching.

A 2-factor (spanning 2-regular subgraph) of G corresponds bijectively, on
host edges, to a perfect matching of the gadget graph: each host vertex v
contributes d(v) edge-slot vertices and d(v)-2 core vertices, joined
completely bipartitely; each host edge becomes a single gadget edge between
the slots it occupies at its two endpoints. Maximum matching is computed by
an unweighted Edmonds blossom search with a greedy initial matching.

``brute_force_two_factor`` is the independent oracle: exhaustive per-vertex
choice of 2 incident edges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, GraphError


@dataclass(frozen=True)
class Matching:
    """Pairwise vertex-disjoint edge set of a host graph."""
    edges: frozenset

    def covers(self, n: int) -> bool:
        return 2 * len(self.edges) == n


@dataclass(frozen=True)
class GadgetGraph:
    graph: Graph
    # gadget edge (sorted pair) -> host edge, for the host-edge images only
    edge_map: dict
    # per gadget vertex: (host vertex, "slot" | "core")
    vertex_origin: tuple


def build_gadget(g: Graph) -> GadgetGraph:
    degrees = [g.degree(v) for v in range(g.n)]
    for v, d in enumerate(degrees):
        if d < 2:
            raise GraphError(f"vertex {v} has degree {d} < 2; no gadget exists")
    slot_of = {}  # (v, index of incident edge at v) -> gadget vertex
    origin = []
    edges = []
    idx = 0
    incident_count = [0] * g.n
    for v in range(g.n):
        slots = []
        for i in range(degrees[v]):
            slot_of[(v, i)] = idx
            origin.append((v, "slot"))
            slots.append(idx)
            idx += 1
        for _ in range(degrees[v] - 2):
            origin.append((v, "core"))
            edges.extend((s, idx) for s in slots)
            idx += 1
    edge_map = {}
    for u, v in g.edges:
        a = slot_of[(u, incident_count[u])]
        b = slot_of[(v, incident_count[v])]
        incident_count[u] += 1
        incident_count[v] += 1
        key = (a, b) if a < b else (b, a)
        edges.append(key)
        edge_map[key] = (u, v)
    return GadgetGraph(Graph(idx, edges), edge_map, tuple(origin))


# Edmonds blossom maximum matching ------------------------------------------------

def _blossom_matching(n: int, adj: list[list[int]]) -> list[int]:
    """mate array of a maximum matching (-1 for exposed vertices)."""
    mate = [-1] * n
    for v in range(n):
        if mate[v] == -1:
            for u in adj[v]:
                if mate[u] == -1:
                    mate[v] = u
                    mate[u] = v
                    break

    parent = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, stem: int, child: int, in_blossom: list[bool]):
        while base[v] != stem:
            in_blossom[base[v]] = True
            in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def find_augmenting_path(root: int) -> bool:
        for i in range(n):
            parent[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    stem = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, stem, to, in_blossom)
                    mark_path(to, stem, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = stem
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        # augment along the alternating path back to root
                        u = to
                        while u != -1:
                            pv = parent[u]
                            nxt = mate[pv]
                            mate[u] = pv
                            mate[pv] = u
                            u = nxt
                        return True
                    used[mate[to]] = True
                    queue.append(mate[to])
        return False

    for v in range(n):
        if mate[v] == -1:
            find_augmenting_path(v)
    return mate


def max_matching(h: Graph) -> Matching:
    adj = [sorted(h.neighbors(v)) for v in range(h.n)]
    mate = _blossom_matching(h.n, adj)
    edges = frozenset((v, mate[v]) for v in range(h.n)
                      if mate[v] > v)
    return Matching(edges)


# 2-factors ------------------------------------------------------------------------

@dataclass(frozen=True)
class TwoFactor:
    """Edge set of a spanning 2-regular subgraph of the host graph."""
    edges: frozenset


@dataclass(frozen=True)
class TwoFactorResult:
    factor: TwoFactor | None
    barrier: "object | None" = None  # barriers.Barrier, attached on request

    @property
    def exists(self) -> bool:
        return self.factor is not None


def verify_two_factor(g: Graph, f: TwoFactor) -> bool:
    degree = [0] * g.n
    for u, v in f.edges:
        if not g.has_edge(u, v):
            raise GraphError(f"factor edge ({u},{v}) not in host graph")
        degree[u] += 1
        degree[v] += 1
    return g.n > 0 and all(d == 2 for d in degree)


BARRIER_CERTIFICATE_CAP = 14  # exhaustive (A,B) search is 3^n


def find_two_factor(g: Graph, certify: bool = False) -> TwoFactorResult:
    """Find a 2-factor or report none.

    With ``certify`` set and order within the exhaustive cap, a Tutte
    barrier is attached to negative answers as an independent certificate.
    """
    def negative() -> TwoFactorResult:
        barrier = None
        if certify and g.n <= BARRIER_CERTIFICATE_CAP:
            from .barriers import find_barrier
            barrier = find_barrier(g)
        return TwoFactorResult(None, barrier)

    if g.n == 0 or any(g.degree(v) < 2 for v in range(g.n)):
        return negative()
    gadget = build_gadget(g)
    matching = max_matching(gadget.graph)
    if not matching.covers(gadget.graph.n):
        return negative()
    host_edges = frozenset(gadget.edge_map[e] for e in matching.edges
                           if e in gadget.edge_map)
    factor = TwoFactor(host_edges)
    assert verify_two_factor(g, factor)
    return TwoFactorResult(factor)


BRUTE_FORCE_ORDER_CAP = 10
BRUTE_FORCE_EDGE_CAP = 20


def brute_force_two_factor(g: Graph) -> TwoFactor | None:
    """Ground-truth 2-factor search by per-vertex 2-subset composition."""
    if g.n > BRUTE_FORCE_ORDER_CAP and len(g.edges) > BRUTE_FORCE_EDGE_CAP:
        raise GraphError("instance too large for the brute-force oracle")
    if g.n == 0:
        return None
    n = g.n
    nbrs = [sorted(g.neighbors(v)) for v in range(n)]
    chosen_deg = [0] * n
    chosen: list[tuple[int, int]] = []

    def search(v: int):
        if v == n:
            return list(chosen)
        need = 2 - chosen_deg[v]
        if need < 0:
            return None
        later = [u for u in nbrs[v] if u > v and chosen_deg[u] < 2]
        if need > len(later):
            return None
        for combo in combinations(later, need):
            for u in combo:
                chosen_deg[u] += 1
                chosen.append((v, u))
            chosen_deg[v] += need
            result = search(v + 1)
            if result is not None:
                return result
            chosen_deg[v] -= need
            for u in combo:
                chosen_deg[u] -= 1
                chosen.pop()
        return None

    result = search(0)
    if result is None:
        return None
    return TwoFactor(frozenset(result))
