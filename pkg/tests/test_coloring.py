import itertools
import random
from pathlib import Path

import pytest

from orthocolor.coloring import (
    Coloring,
    SizeMismatch,
    TooLarge,
    brute_force_chromatic,
    chromatic_number,
    dsatur,
    ks_check,
    ks_colorable,
    ks_search,
    validate_coloring,
)
from orthocolor.cli import parse_vectors
from orthocolor.exact import Vec
from orthocolor.graph import OrthoGraph, VectorConfig, build_graph, builtin_decorte13, greedy_clique

DATA = Path(__file__).parent / "data"

K3 = OrthoGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
C5 = OrthoGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
P4 = OrthoGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
EMPTY5 = OrthoGraph.from_edges(5, [])


def random_graph(rng, n, p=0.4):
    return OrthoGraph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def permuted(g, perm):
    return OrthoGraph.from_edges(g.n, [(perm[a], perm[b]) for a, b in g.edges])


@pytest.mark.parametrize("g, k", [(K3, 3), (C5, 3), (P4, 2), (EMPTY5, 1)])
def test_small_chromatic(g, k):
    res = chromatic_number(g)
    assert res.k == k
    assert validate_coloring(g, res.witness)
    assert brute_force_chromatic(g) == k


def test_decorte13_is_four_chromatic():
    g = build_graph(builtin_decorte13())
    res = chromatic_number(g)
    assert res.k == 4
    assert res.witness.k == 4
    assert validate_coloring(g, res.witness)
    assert res.lower_bound == 3 and res.upper_bound_initial >= 4
    assert brute_force_chromatic(OrthoGraph.from_edges(12, [e for e in g.edges if 12 not in e])) <= 4


def test_solver_matches_brute_force_on_random_graphs():
    rng = random.Random(20241016)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 10))
        res = chromatic_number(g)
        assert res.k == brute_force_chromatic(g)
        assert validate_coloring(g, res.witness)
        assert res.k >= len(greedy_clique(g))


def test_relabeling_invariance():
    g = build_graph(builtin_decorte13())
    rng = random.Random(7)
    for _ in range(10):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert chromatic_number(permuted(g, perm)).k == 4


def test_deterministic_result():
    g = build_graph(builtin_decorte13())
    assert chromatic_number(g) == chromatic_number(g)


def test_dsatur_is_proper():
    rng = random.Random(3)
    for _ in range(50):
        g = random_graph(rng, 12, 0.5)
        assert validate_coloring(g, [c + 1 for c in dsatur(g)])


def test_validate_examples():
    assert validate_coloring(K3, Coloring((1, 2, 3)))
    bad = validate_coloring(K3, [1, 1, 2])
    assert not bad and bad.edge == (0, 1)
    with pytest.raises(SizeMismatch):
        validate_coloring(K3, [1, 2])


def test_limits():
    with pytest.raises(TooLarge):
        brute_force_chromatic(OrthoGraph.from_edges(13, []))
    with pytest.raises(ValueError):
        chromatic_number(OrthoGraph.from_edges(0, []))
    with pytest.raises(TooLarge):
        ks_search(VectorConfig(tuple(Vec(1, k, 0) for k in range(41))))


def test_ks_basis():
    a = ks_colorable(VectorConfig.from_coords([(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert a is not None and sum(a.bits) == 1


def test_ks_empty():
    a = ks_colorable(VectorConfig(()))
    assert a is not None and a.bits == ()


def test_ks_parallel_vectors_share_bits():
    cfg = VectorConfig.from_coords([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-2, 0, 0)])
    a = ks_colorable(cfg)
    assert a.bits[0] == a.bits[3]


def test_ks_decorte13_against_exhaustive_oracle():
    cfg = builtin_decorte13()
    g = build_graph(cfg)
    oracle = [bits for bits in itertools.product((0, 1), repeat=13) if ks_check(g, bits)]
    res = ks_search(cfg)
    # the 13-vector set is 4-chromatic yet admits 010-colorings
    assert len(oracle) == 24
    assert res.colorable
    assert tuple(res.assignment.bits) in oracle
    assert res.triangles == 4


def naive_ks(g):
    """Index-order backtracking that only checks constraints already fully assigned."""
    tris = g.triangles()
    bits = [0] * g.n

    def ok(v):
        if bits[v] and any(bits[u] for u in g.adj[v] if u < v):
            return False
        return all(bits[a] + bits[b] + bits[c] == 1 for a, b, c in tris if c == v)

    def go(v):
        if v == g.n:
            return True
        for b in (0, 1):
            bits[v] = b
            if ok(v) and go(v + 1):
                return True
        return False

    return go(0)


def test_ks_uncolorable_39():
    cfg = parse_vectors((DATA / "ks39.txt").read_text())
    assert len(cfg) == 39
    res = ks_search(cfg)
    assert not res.colorable
    assert not naive_ks(build_graph(cfg))
    # dropping any vector makes it colorable again
    for i in range(len(cfg)):
        sub = VectorConfig(cfg.vectors[:i] + cfg.vectors[i + 1:])
        assert ks_search(sub).colorable


def test_ks_search_agrees_with_exhaustive_oracle():
    rng = random.Random(11)
    pool = [Vec(a, b, c) for a, b, c in itertools.product(range(-1, 2), repeat=3) if (a, b, c) != (0, 0, 0)]
    for _ in range(30):
        cfg = VectorConfig(tuple(rng.sample(pool, rng.randint(3, 12))))
        res = ks_search(cfg)
        reps = {}
        for v in cfg.vectors:
            reps.setdefault(tuple(v.scale(1 / next(c for c in v if c))), v)
        g = build_graph(VectorConfig(tuple(reps.values())))
        exists = any(ks_check(g, b) for b in itertools.product((0, 1), repeat=g.n))
        assert res.colorable == exists
