"""Tutte pairs: deficiency, odd-component bookkeeping, exhaustive barrier and
biased-barrier search, biased-barrier structure checks, and the cut-set
witness construction that turns a biased barrier into a toughness upper bound.

Notation, for disjoint A, B subseteq V(G):

    deficiency(A,B) = 2|A| - 2|B| + sum_{v in B} d_{G-A}(v) - o(A,B)

where o(A,B) counts the components H of G-(A u B) with e(H,B) odd. A pair
with deficiency <= -2 is a barrier; the graph has no 2-factor iff a barrier
exists. A biased barrier maximizes |A| and, subject to that, minimizes |B|.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError, component_masks, _count_components, iter_bits
from .invariants import is_t_tough
from .rationals import Rational

EXHAUSTIVE_BARRIER_CAP = 14  # the (A,B) search space is 3^n


@dataclass(frozen=True)
class Barrier:
    a: frozenset
    b: frozenset
    deficiency: int


@dataclass
class ComponentInfo:
    vertices: tuple
    edges_to_b: int

    @property
    def odd(self) -> bool:
        return self.edges_to_b % 2 == 1


@dataclass
class PerVertex:
    """Per-u annotations for u in B."""
    edges_per_component: tuple  # e(u, H) for each component, in order
    o: int  # odd components H with e(H,B) >= 3 and e(u,H) = 1
    h: int  # odd components H (any e(H,B) >= 1) with e(u,H) = 1


@dataclass
class BarrierDecomposition:
    components: list
    classes: dict          # s -> list of component indices with e(H,B) = s
    odd_count: int         # o(A,B)
    per_u: dict            # u in B -> PerVertex


def _mask_of(g: Graph, vertices) -> int:
    mask = 0
    for v in vertices:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} out of range")
        mask |= 1 << v
    return mask


def _deficiency_masks(g: Graph, a_mask: int, b_mask: int) -> int:
    adj = g.adj
    rest = g.full_mask & ~a_mask & ~b_mask
    degree_sum = 0
    for v in iter_bits(b_mask):
        degree_sum += (adj[v] & ~a_mask).bit_count()
    odd = 0
    for comp in component_masks(adj, rest):
        e_hb = 0
        for v in iter_bits(comp):
            e_hb += (adj[v] & b_mask).bit_count()
        odd += e_hb & 1
    return (2 * a_mask.bit_count() - 2 * b_mask.bit_count()
            + degree_sum - odd)


def deficiency(g: Graph, a, b) -> int:
    a_mask = _mask_of(g, a)
    b_mask = _mask_of(g, b)
    if a_mask & b_mask:
        raise GraphError("A and B must be disjoint")
    return _deficiency_masks(g, a_mask, b_mask)


def decompose(g: Graph, a, b) -> BarrierDecomposition:
    a_mask = _mask_of(g, a)
    b_mask = _mask_of(g, b)
    if a_mask & b_mask:
        raise GraphError("A and B must be disjoint")
    adj = g.adj
    rest = g.full_mask & ~a_mask & ~b_mask
    comps = []
    for comp in component_masks(adj, rest):
        e_hb = sum((adj[v] & b_mask).bit_count() for v in iter_bits(comp))
        comps.append(ComponentInfo(tuple(iter_bits(comp)), e_hb))
    classes: dict[int, list[int]] = {}
    for i, info in enumerate(comps):
        classes.setdefault(info.edges_to_b, []).append(i)
    odd_count = sum(1 for info in comps if info.odd)
    per_u = {}
    for u in iter_bits(b_mask):
        per_comp = []
        o = h = 0
        for info in comps:
            e_uh = sum(1 for v in info.vertices if adj[u] >> v & 1)
            per_comp.append(e_uh)
            if info.odd and e_uh == 1:
                h += 1
                if info.edges_to_b >= 3:
                    o += 1
        per_u[u] = PerVertex(tuple(per_comp), o, h)
    return BarrierDecomposition(comps, classes, odd_count, per_u)


# Exhaustive search ----------------------------------------------------------------

def _iter_pairs(n: int):
    """All (A,B) bitmask pairs of disjoint vertex subsets (3^n of them)."""
    for a_mask in range(1 << n):
        rest = ((1 << n) - 1) & ~a_mask
        b_mask = rest
        while True:
            yield a_mask, b_mask
            if b_mask == 0:
                break
            b_mask = (b_mask - 1) & rest


def _check_cap(g: Graph):
    if g.n > EXHAUSTIVE_BARRIER_CAP:
        raise GraphError(
            f"exhaustive barrier search capped at order {EXHAUSTIVE_BARRIER_CAP}")


def find_barrier(g: Graph) -> Barrier | None:
    """Some (A,B) with deficiency <= -2, or None (iff G has a 2-factor)."""
    _check_cap(g)
    for a_mask, b_mask in _iter_pairs(g.n):
        d = _deficiency_masks(g, a_mask, b_mask)
        if d <= -2:
            return Barrier(frozenset(iter_bits(a_mask)),
                           frozenset(iter_bits(b_mask)), d)
    return None


def find_biased_barrier(g: Graph) -> Barrier | None:
    """The barrier maximizing |A|, then minimizing |B|, ties broken by the
    smallest lexicographic (sorted A, sorted B) index encoding.

    The full 3^n space is searched; the independence of B (a theorem about
    biased barriers) is deliberately not used to prune, so structure checks
    against the result stay non-circular.
    """
    _check_cap(g)
    best_key = None
    best = None
    for a_mask, b_mask in _iter_pairs(g.n):
        d = _deficiency_masks(g, a_mask, b_mask)
        if d <= -2:
            a = tuple(iter_bits(a_mask))
            b = tuple(iter_bits(b_mask))
            key = (-len(a), len(b), a, b)
            if best_key is None or key < best_key:
                best_key = key
                best = Barrier(frozenset(a), frozenset(b), d)
    return best


# Biased barrier structure ----------------------------------------------------------

@dataclass
class BiasedBarrierReport:
    b_independent: bool
    even_components_isolated: bool        # even H have e(H,B) = 0
    b_edges_into_odd_simple: bool         # e(v,H) <= 1 for v in B, H odd
    odd_vertices_edges_to_b_simple: bool  # e(v,B) <= 1 for v in odd H
    counting_inequality: bool             # |B| >= |A| + sum t|C_{2t+1}| + 1
    big_odd_class_nonempty: bool          # union_{t>=1} C_{2t+1} != empty
    one_tough_applicable: bool            # tau >= 1 and order >= 3

    @property
    def all_hold(self) -> bool:
        core = (self.b_independent and self.even_components_isolated
                and self.b_edges_into_odd_simple
                and self.odd_vertices_edges_to_b_simple
                and self.counting_inequality)
        if self.one_tough_applicable:
            return core and self.big_odd_class_nonempty
        return core


def check_biased_properties(g: Graph, barrier: Barrier) -> BiasedBarrierReport:
    if deficiency(g, barrier.a, barrier.b) > -2:
        raise GraphError("pair is not a barrier")
    dec = decompose(g, barrier.a, barrier.b)
    adj = g.adj
    b_mask = _mask_of(g, barrier.b)
    b_independent = all((adj[u] & b_mask) == 0 for u in barrier.b)
    even_isolated = all(info.odd or info.edges_to_b == 0
                        for info in dec.components)
    edges_simple = all(
        e <= 1
        for u, pv in dec.per_u.items()
        for e, info in zip(pv.edges_per_component, dec.components)
        if info.odd)
    odd_vertices_simple = all(
        (adj[v] & b_mask).bit_count() <= 1
        for info in dec.components if info.odd
        for v in info.vertices)
    big_odd_weight = sum((s - 1) // 2 * len(idxs)
                         for s, idxs in dec.classes.items()
                         if s % 2 == 1 and s >= 3)
    counting = len(barrier.b) >= len(barrier.a) + big_odd_weight + 1
    big_odd_nonempty = big_odd_weight > 0
    applicable = g.n >= 3 and is_t_tough(g, 1)
    return BiasedBarrierReport(
        b_independent, even_isolated, edges_simple, odd_vertices_simple,
        counting, big_odd_nonempty, applicable)


# Cut-set witness construction --------------------------------------------------------

@dataclass(frozen=True)
class ToughnessWitness:
    w: frozenset
    ell: int
    ell_prime: int
    h_sum: int
    component_count: int
    ratio: Rational


def extract_witness(g: Graph, barrier: Barrier,
                    dec: BarrierDecomposition | None = None) -> ToughnessWitness:
    """Build the cut set W certifying a toughness upper bound.

    Two cases, by max_u h(u) over the biased barrier's B:
      - max h <= 1: W = A plus, from each odd component H with e(H,B) = 2t+1
        >= 3, the 2t lowest-index vertices of H with a neighbor in B;
        guarantees c(G-W) >= |B|.
      - max h >= 2: the iterative construction; at each step pick the
        lowest-index u in B maximizing h on the shrunken graph, collect
        W_j = {v in H_j : e(v,B) = 1, uv not an edge} from the components
        adjacent to u, delete those components, and add u itself to W while
        the maximum is >= 2. Guarantees
            |W| = |A| + ell' + sum_{t>=1} 2t |C_{2t+1}|
            c(G-W) >= |B| - ell' + sum_{i<=ell'} h_{G_i}(u_i).
    Both counting identities are recomputed and asserted before returning.
    """
    if deficiency(g, barrier.a, barrier.b) > -2:
        raise GraphError("pair is not a barrier")
    if dec is None:
        dec = decompose(g, barrier.a, barrier.b)
    adj = g.adj
    a_mask = _mask_of(g, barrier.a)
    b_mask = _mask_of(g, barrier.b)
    big_odd = [i for i, info in enumerate(dec.components)
               if info.odd and info.edges_to_b >= 3]
    big_odd_weight = sum((dec.components[i].edges_to_b - 1) // 2
                         for i in big_odd)
    h_max = max((pv.h for pv in dec.per_u.values()), default=0)
    if h_max <= 1 and not big_odd:
        raise GraphError(
            "witness construction needs max h >= 2 or an odd component "
            "with at least 3 edges into B")

    w_mask = a_mask
    ell = ell_prime = h_sum = 0

    if h_max <= 1:
        for i in big_odd:
            info = dec.components[i]
            with_b_neighbor = [v for v in info.vertices
                               if adj[v] & b_mask]
            # e(v,B) <= 1 on odd components, so there are e(H,B) of these
            assert len(with_b_neighbor) == info.edges_to_b
            for v in with_b_neighbor[:info.edges_to_b - 1]:
                w_mask |= 1 << v
    else:
        alive = [True] * len(dec.components)
        comp_masks = []
        for info in dec.components:
            m = 0
            for v in info.vertices:
                m |= 1 << v
            comp_masks.append(m)
        steps = 0
        seen_singleton_step = False
        while True:
            best_u = -1
            best_h = 0
            for u in sorted(barrier.b):
                h = sum(1 for i, info in enumerate(dec.components)
                        if alive[i] and info.odd
                        and (adj[u] & comp_masks[i]).bit_count() == 1)
                if h > best_h:
                    best_h, best_u = h, u
            if best_h == 0:
                break
            steps += 1
            assert steps <= len(barrier.b)
            ell += 1
            if best_h >= 2:
                # steps with maximum >= 2 must precede the singleton steps
                assert not seen_singleton_step
                ell_prime += 1
                h_sum += best_h
                w_mask |= 1 << best_u
            else:
                seen_singleton_step = True
            for i, info in enumerate(dec.components):
                if not alive[i]:
                    continue
                e_uh = (adj[best_u] & comp_masks[i]).bit_count()
                if e_uh == 0:
                    continue
                assert info.odd and e_uh == 1
                for v in info.vertices:
                    if (adj[v] & b_mask).bit_count() == 1 \
                            and not (adj[best_u] >> v & 1):
                        w_mask |= 1 << v
                alive[i] = False

    # counting identities from the construction
    assert w_mask.bit_count() == (a_mask.bit_count() + ell_prime
                                  + 2 * big_odd_weight)
    comp_count = _count_components(adj, g.full_mask & ~w_mask)
    assert comp_count >= len(barrier.b) - ell_prime + h_sum
    if h_max <= 1:
        assert comp_count >= len(barrier.b)
    assert comp_count >= 2 and w_mask != 0  # W is a cut set
    ratio = Rational(w_mask.bit_count(), comp_count)
    return ToughnessWitness(frozenset(iter_bits(w_mask)), ell, ell_prime,
                            h_sum, comp_count, ratio)
