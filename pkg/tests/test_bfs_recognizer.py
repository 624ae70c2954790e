"""BFS-graph recognition: direct validator, search, brute-force completeness."""

import itertools
import random

import pytest

from somborlab import (
    Graph,
    bfs_bicyclic,
    bfs_unicyclic,
    enumerate_gamma,
    generate_c_cyclic_sequences,
    greedy_tree,
    is_bfs_graph,
    is_special_extremal_bfs,
    parse_degree_sequence,
    witness_violation,
)
from somborlab.errors import DisconnectedError, MinDegreeNotOneError, TooLargeError


def spider(legs):
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def brute_force_witness(g, require_triangle=False):
    """Independent oracle: scan all n! orderings with the literal validator."""
    for perm in itertools.permutations(range(g.n)):
        if witness_violation(g, perm, require_triangle=require_triangle) is None:
            return perm
    return None


def test_validator_rejects_bad_orderings():
    p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert witness_violation(p4, (0, 1, 2, 3)) is not None       # leaf root
    assert witness_violation(p4, (1, 2, 0, 3)) is None           # internal root
    assert witness_violation(p4, (2, 1, 3, 0)) is None
    assert "permutation" in witness_violation(p4, (0, 0, 1, 2))


def test_paths_have_witnesses_rooted_at_center():
    for n in range(2, 9):
        g = Graph(n, [(i, i + 1) for i in range(n - 1)])
        w = is_bfs_graph(g)
        assert w is not None
        root = w.ordering[0]
        # the root must be a maximum-degree vertex; for paths, an inner vertex
        assert g.degree(root) == max(g.degrees)


def test_h1_is_bfs_h2_is_not():
    h1 = spider([3, 3, 3, 3])
    h2 = spider([2, 2, 4, 4])
    assert is_bfs_graph(h1, n_max=13) is not None
    assert is_bfs_graph(h2, n_max=13) is None
    with pytest.raises(TooLargeError):
        is_bfs_graph(h1)   # default cap is 12


def test_recognizer_requires_connected():
    with pytest.raises(DisconnectedError):
        is_bfs_graph(Graph(4, [(0, 1), (2, 3)]))


def test_special_needs_pendant_and_triangle():
    k3 = Graph(3, [(0, 1), (0, 2), (1, 2)])
    with pytest.raises(MinDegreeNotOneError):
        is_special_extremal_bfs(k3)
    um = bfs_unicyclic(parse_degree_sequence("3,2,2,2,1"))
    assert is_special_extremal_bfs(um.graph, 1) is not None
    bm = bfs_bicyclic(parse_degree_sequence("3,3,3,2,1"))
    assert is_special_extremal_bfs(bm.graph, 2) is not None


def test_special_absent_when_top_degrees_cannot_form_triangle():
    # C4 with a pendant path of length 2: the unique max-degree vertex is on the
    # cycle, but its two largest-degree companions are not mutually adjacent
    g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)])
    assert is_special_extremal_bfs(g, 1) is None
    assert brute_force_witness(g, require_triangle=True) is None


def test_constructions_pass_their_own_ordering():
    builders = {0: greedy_tree, 1: bfs_unicyclic, 2: bfs_bicyclic}
    for c, build in builders.items():
        for n in range(2, 8):
            for pi in generate_c_cyclic_sequences(n, c, require_pendant=True):
                r = build(pi)
                assert witness_violation(r.graph, r.ordering,
                                         require_triangle=(c >= 1)) is None
                found = is_special_extremal_bfs(r.graph, c) if c else is_bfs_graph(r.graph)
                assert found is not None


def test_greedy_tree_is_unique_bfs_tree():
    # every BFS-tree the recognizer accepts is isomorphic to the greedy tree
    from somborlab import canonical_code

    for n in range(2, 9):
        for pi in generate_c_cyclic_sequences(n, 0, require_pendant=True):
            target = canonical_code(greedy_tree(pi).graph)
            hits = [
                g for g in enumerate_gamma(pi) if is_bfs_graph(g) is not None
            ]
            assert hits, pi
            assert all(canonical_code(g) == target for g in hits)


def test_search_matches_brute_force_small():
    # completeness: exhaustive n <= 6, seeded sample at n = 7
    rng = random.Random(13)
    cases = []
    for c in (0, 1, 2):
        for n in range(3, 7):
            for pi in generate_c_cyclic_sequences(n, c, require_pendant=False):
                cases.extend(enumerate_gamma(pi))
    sample7 = []
    for c in (0, 1, 2):
        for pi in generate_c_cyclic_sequences(7, c, require_pendant=False):
            sample7.extend(enumerate_gamma(pi))
    cases.extend(rng.sample(sample7, 25))
    assert len(cases) > 80
    for g in cases:
        for triangle in (False, True):
            if triangle and (g.n < 3 or min(g.degrees) != 1):
                continue
            got = (is_special_extremal_bfs(g, g.m - g.n + 1)
                   if triangle else is_bfs_graph(g))
            brute = brute_force_witness(g, require_triangle=triangle and
                                        (g.m - g.n + 1) >= 1)
            assert (got is not None) == (brute is not None), (g.edges, triangle)
            if got is not None:
                assert witness_violation(
                    g, got.ordering,
                    require_triangle=triangle and (g.m - g.n + 1) >= 1) is None
