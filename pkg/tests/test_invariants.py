"""Exact invariants against independent brute-force oracles and known values."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from tough2f import (
    Graph,
    GraphError,
    Rational,
    complete,
    connectivity,
    cycle,
    delete,
    disjoint_union,
    edgeless,
    independence_number,
    is_t_tough,
    min_degree,
    path,
    toughness,
)
from tough2f.families import build, FamilySpec
from tough2f.graphs import count_components

from conftest import random_graph


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


# Brute-force oracles ------------------------------------------------------------

def brute_alpha(g: Graph) -> int:
    best = 0
    for mask in range(1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if all(not g.has_edge(u, v) for u, v in combinations(vs, 2)):
            best = max(best, len(vs))
    return best


def brute_kappa(g: Graph) -> int:
    if g.is_complete():
        return g.n - 1
    best = g.n - 1
    for size in range(g.n - 1):
        for cut in combinations(range(g.n), size):
            if count_components(g, cut) >= 2:
                return size
    return best


def brute_toughness(g: Graph):
    best = None
    for size in range(1, g.n):
        for cut in combinations(range(g.n), size):
            comps = count_components(g, cut)
            if comps >= 2:
                ratio = Fraction(size, comps)
                if best is None or ratio < best:
                    best = ratio
    return best


# Known values -------------------------------------------------------------------

def test_min_degree():
    assert min_degree(path(4)) == 1
    assert min_degree(complete(5)) == 4
    with pytest.raises(GraphError):
        min_degree(edgeless(0))


def test_known_invariants():
    cases = [
        # graph, alpha, kappa, toughness
        (complete(4), 1, 3, Rational.infinity()),
        (path(3), 2, 1, Rational(1, 2)),
        (cycle(5), 2, 2, Rational(1)),
        (petersen(), 4, 3, Rational(4, 3)),
        (Graph(4, [(v, 3) for v in range(3)]), 3, 1, Rational(1, 3)),
    ]
    for g, alpha, kappa, tau in cases:
        assert independence_number(g)[0] == alpha
        assert connectivity(g) == kappa
        assert toughness(g).value == tau


def test_family_invariants():
    h1 = build(FamilySpec.parse("H:n=1")).graph
    assert min_degree(h1) == 2
    assert independence_number(h1)[0] == 3
    assert connectivity(h1) == 2
    assert toughness(h1).value == Rational(1)

    r = build(FamilySpec.parse("R:m=1,a=2,b=1,c=3")).graph
    assert r.n == 5
    assert min_degree(r) == 3
    assert independence_number(r)[0] == 2
    assert toughness(r).value == Rational(3, 2)


def test_toughness_conventions():
    assert toughness(complete(6)).witness is None
    disconnected = disjoint_union(cycle(3), cycle(3))
    result = toughness(disconnected)
    assert result.value == Rational(0) and result.witness == frozenset()
    assert toughness(edgeless(2)).value == 0


def test_toughness_witness_is_sound():
    rng = random.Random(7)
    for _ in range(30):
        g = random_graph(rng, rng.randint(3, 9), rng.uniform(0.2, 0.8))
        result = toughness(g)
        if result.value.is_infinite or result.value == 0:
            continue
        comps = count_components(g, result.witness)
        assert comps >= 2
        assert result.value == Rational(len(result.witness), comps)


def test_toughness_matches_oracle():
    rng = random.Random(11)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 8), rng.uniform(0.1, 0.9))
        expected = brute_toughness(g)
        got = toughness(g).value
        if expected is None:
            assert got.is_infinite == g.is_complete()
            if not g.is_complete():
                assert got == 0
        elif g.is_connected():
            assert got == expected


def test_chvatal_independence_bound():
    # tau <= (n - alpha) / alpha for non-complete connected graphs
    rng = random.Random(13)
    for _ in range(30):
        g = random_graph(rng, rng.randint(3, 9), rng.uniform(0.3, 0.8))
        if g.is_complete() or not g.is_connected():
            continue
        alpha = independence_number(g)[0]
        assert toughness(g).value <= Fraction(g.n - alpha, alpha)


def test_alpha_and_kappa_match_oracles():
    rng = random.Random(17)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 9), rng.uniform(0.0, 1.0))
        alpha, witness = independence_number(g)
        assert alpha == brute_alpha(g)
        assert len(witness) == alpha
        assert all(not g.has_edge(u, v) for u, v in combinations(witness, 2))
        if g.n >= 1:
            assert connectivity(g) == brute_kappa(g)


def test_connectivity_conventions():
    assert connectivity(complete(5)) == 4
    assert connectivity(complete(1)) == 0
    assert connectivity(disjoint_union(path(2), path(2))) == 0
    assert connectivity(petersen()) == 3
    with pytest.raises(GraphError):
        connectivity(edgeless(0))


def test_is_t_tough():
    assert is_t_tough(cycle(5), 1)
    assert not is_t_tough(cycle(5), Fraction(11, 10))
    assert is_t_tough(petersen(), Rational(4, 3))
    assert not is_t_tough(petersen(), Rational(7, 5))
    assert is_t_tough(complete(3), 100)
    assert is_t_tough(complete(3), Rational.infinity())
    assert not is_t_tough(cycle(5), Rational.infinity())
    assert not is_t_tough(disjoint_union(path(2), path(2)), 1)
    with pytest.raises(GraphError):
        is_t_tough(cycle(5), 0)


def test_is_t_tough_agrees_with_toughness():
    rng = random.Random(19)
    thresholds = [Fraction(1, 2), Fraction(1), Fraction(4, 3), Fraction(2)]
    for _ in range(25):
        g = random_graph(rng, rng.randint(3, 8), rng.uniform(0.2, 0.9))
        tau = toughness(g).value
        for t in thresholds:
            assert is_t_tough(g, t) == (tau >= t)
