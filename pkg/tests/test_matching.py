import random

import pytest

from leafspan import MalformedInput, TooLarge, brute_force_matching, max_matching
from leafspan.matching import is_matching


def petersen_edges():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return outer + spokes + inner


def random_graph(rng, n, p):
    return [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]


def test_empty_graph():
    assert max_matching(0, []) == []
    assert max_matching(5, []) == []


def test_single_edge():
    assert brute_force_matching(2, [(0, 1)]) == [(0, 1)]
    assert max_matching(2, [(0, 1)]) == [(0, 1)]


def test_triangle():
    edges = [(0, 1), (1, 2), (0, 2)]
    assert len(max_matching(3, edges)) == 1
    assert len(brute_force_matching(3, edges)) == 1


def test_path_four_vertices():
    edges = [(0, 1), (1, 2), (2, 3)]
    assert len(brute_force_matching(4, edges)) == 2
    assert len(max_matching(4, edges)) == 2


def test_petersen_has_perfect_matching():
    m = max_matching(10, petersen_edges())
    assert len(m) == 5
    assert is_matching(m)
    assert len(brute_force_matching(10, petersen_edges())) == 5


def test_odd_cycles_and_blossoms():
    # two triangles joined by a bridge need blossom handling
    edges = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]
    assert len(max_matching(6, edges)) == 3


def test_rejects_bad_edges():
    with pytest.raises(MalformedInput):
        max_matching(3, [(0, 0)])
    with pytest.raises(MalformedInput):
        max_matching(3, [(0, 1), (1, 0)])
    with pytest.raises(MalformedInput):
        max_matching(3, [(0, 4)])


def test_brute_force_guard():
    edges = [(u, v) for u in range(8) for v in range(u + 1, 8)]
    assert len(edges) > 25
    with pytest.raises(TooLarge):
        brute_force_matching(8, edges)


def test_equals_brute_force_on_random_graphs():
    rng = random.Random(42)
    checked = 0
    while checked < 500:
        n = rng.randint(1, 12)
        edges = random_graph(rng, n, 0.35)
        if len(edges) > 25:
            continue
        got = max_matching(n, edges)
        assert is_matching(got)
        assert len(got) == len(brute_force_matching(n, edges))
        checked += 1


def test_cardinality_invariant_under_relabeling():
    rng = random.Random(99)
    for _ in range(60):
        n = rng.randint(2, 11)
        edges = random_graph(rng, n, 0.4)
        if len(edges) > 25:
            continue
        perm = list(range(n))
        rng.shuffle(perm)
        relabeled = [(perm[u], perm[v]) for u, v in edges]
        assert len(max_matching(n, edges)) == len(max_matching(n, relabeled))


def test_deterministic_output():
    edges = petersen_edges()
    assert max_matching(10, edges) == max_matching(10, list(reversed(edges)))
