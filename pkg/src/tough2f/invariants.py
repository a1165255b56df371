"""Exact graph invariants: minimum degree, independence number, vertex
connectivity and toughness.

Toughness and the independence number are NP-hard in general; the searches
here are exact and exhaustive with pruning, practical up to roughly order 24
for toughness and order 40 for independence on sparse inputs. Connectivity
uses unit-capacity vertex-split maximum flow (Menger), so it scales further.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graphs import Graph, GraphError, _count_components, iter_bits
from .rationals import Rational


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("minimum degree of the empty graph is undefined")
    return min(g.degree(v) for v in range(g.n))


# Independence number -----------------------------------------------------------

def independence_number(g: Graph) -> tuple[int, frozenset]:
    """alpha(G) with a witnessing independent set.

    Branch and bound on the highest-degree remaining vertex, seeded with a
    greedy (min-degree-first) solution.
    """
    adj = g.adj
    full = g.full_mask

    def greedy(avail: int) -> int:
        chosen = 0
        while avail:
            v = min(iter_bits(avail), key=lambda u: (adj[u] & avail).bit_count())
            chosen |= 1 << v
            avail &= ~(adj[v] | 1 << v)
        return chosen

    best_set = greedy(full)
    best = best_set.bit_count()

    def expand(avail: int, chosen: int, size: int):
        nonlocal best, best_set
        count = avail.bit_count()
        if size + count <= best:
            return
        v = -1
        vdeg = -1
        for u in iter_bits(avail):
            d = (adj[u] & avail).bit_count()
            if d > vdeg:
                v, vdeg = u, d
        if vdeg == 0:
            # remaining vertices are pairwise non-adjacent
            best = size + count
            best_set = chosen | avail
            return
        expand(avail & ~(adj[v] | 1 << v), chosen | 1 << v, size + 1)
        expand(avail & ~(1 << v), chosen, size)

    expand(full, 0, 0)
    return best, frozenset(iter_bits(best_set))


# Vertex connectivity ------------------------------------------------------------

def _local_connectivity(g: Graph, s: int, t: int, cutoff: int) -> int:
    """Max number of internally vertex-disjoint s-t paths, capped at cutoff.

    Unit-capacity vertex splitting: v_in = 2v, v_out = 2v + 1.
    """
    cap: dict[tuple[int, int], int] = {}
    big = g.n + 1
    for v in range(g.n):
        cap[(2 * v, 2 * v + 1)] = big if v in (s, t) else 1
        cap[(2 * v + 1, 2 * v)] = 0
    for u, v in g.edges:
        for a, b in ((u, v), (v, u)):
            cap[(2 * a + 1, 2 * b)] = big
            cap.setdefault((2 * b, 2 * a + 1), 0)
    out_arcs: dict[int, list[int]] = {}
    for a, b in cap:
        out_arcs.setdefault(a, []).append(b)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cutoff:
        # BFS for an augmenting path
        parent = {source: source}
        queue = [source]
        while queue and sink not in parent:
            nxt = []
            for a in queue:
                for b in out_arcs.get(a, ()):
                    if b not in parent and cap[(a, b)] > 0:
                        parent[b] = a
                        nxt.append(b)
            queue = nxt
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow


def connectivity(g: Graph) -> int:
    """kappa(G); convention kappa(K_n) = n - 1, kappa(disconnected) = 0."""
    if g.n == 0:
        raise GraphError("connectivity of the empty graph is undefined")
    if g.is_complete():
        return g.n - 1
    if not g.is_connected():
        return 0
    best = min_degree(g)  # kappa <= delta for non-complete graphs
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if not g.has_edge(s, t):
                best = min(best, _local_connectivity(g, s, t, best))
                if best == 0:
                    return 0
    return best


# Toughness -----------------------------------------------------------------------

@dataclass(frozen=True)
class ToughnessResult:
    """Exact toughness with a witnessing cut set.

    ``witness`` is None for complete graphs (value infinity) and the empty
    set for disconnected graphs (value 0 by convention).
    """
    value: Rational
    witness: frozenset | None


def toughness(g: Graph) -> ToughnessResult:
    """min |S| / c(G - S) over all cut sets, as a reduced rational."""
    if g.is_complete():
        return ToughnessResult(Rational.infinity(), None)
    if not g.is_connected():
        return ToughnessResult(Rational(0), frozenset())
    n, adj, full = g.n, g.adj, g.full_mask
    best: Fraction | None = None
    best_set: tuple[int, ...] = ()
    for size in range(1, n - 1):
        # every cut of this size yields ratio >= size/(n-size)
        if best is not None and Fraction(size, n - size) >= best:
            break
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            comps = _count_components(adj, full & ~mask)
            if comps >= 2:
                ratio = Fraction(size, comps)
                if best is None or ratio < best:
                    best, best_set = ratio, combo
    assert best is not None  # non-complete connected graphs have a cut set
    return ToughnessResult(Rational.from_fraction(best), frozenset(best_set))


def is_t_tough(g: Graph, t) -> bool:
    """tau(G) >= t, terminating as soon as any cut certifies tau < t."""
    if isinstance(t, Rational):
        if t.is_infinite:
            return g.is_complete()
        t = t.as_fraction()
    else:
        t = Fraction(t)
    if t <= 0:
        raise GraphError("toughness threshold must be positive")
    if g.is_complete():
        return True
    if not g.is_connected():
        return False
    n, adj, full = g.n, g.adj, g.full_mask
    for size in range(1, n - 1):
        if Fraction(size, n - size) >= t:
            break
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            comps = _count_components(adj, full & ~mask)
            if comps >= 2 and Fraction(size, comps) < t:
                return False
    return True
