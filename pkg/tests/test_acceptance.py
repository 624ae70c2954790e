"""Acceptance suite: one test per criterion, at the stated scale and tolerance.

Run with `pytest tests/test_acceptance.py -v -s` to see one PASS line per
criterion. The exhaustive sweeps assume the compiled kernel; they still pass
on the pure backend, just slower.
"""

import itertools
import math
import time

from somborlab import (
    BivariateFunction,
    DegreeSequence,
    Graph,
    GridSpec,
    bfs_bicyclic,
    bfs_unicyclic,
    canonical_code,
    check_escalating,
    check_good_escalating,
    enumerate_gamma,
    format_graph6,
    generate_c_cyclic_sequences,
    greedy_tree,
    parse_degree_sequence,
    parse_graph6,
    sombor_general,
    verify_enumeration_cross_check,
    verify_special_bfs_existence,
    verify_theorem2,
    verify_theorem3,
    witness_violation,
)

GRID = GridSpec(20)


def _report(criterion, detail):
    print(f"PASS criterion {criterion}: {detail}")


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


def test_criterion_1_h1_h2_equality():
    t0 = time.time()
    pi2 = parse_degree_sequence("4,2^8,1^4")
    h1 = spider([3, 3, 3, 3])      # the unique BFS-tree of Gamma(pi2)
    h2 = spider([2, 2, 4, 4])
    assert canonical_code(greedy_tree(pi2).graph) == canonical_code(h1)
    for g in (h1, h2):
        assert g.n == 13
        assert sorted(g.degrees, reverse=True) == list(pi2.degrees)
    for alpha in (-2, -1, -0.5, 0.25, 0.5, 0.75, 1.5, 2, 3):
        a, b = sombor_general(h1, alpha), sombor_general(h2, alpha)
        assert math.isclose(a, b, rel_tol=1e-12), (alpha, a, b)
    assert canonical_code(h1) != canonical_code(h2)
    elapsed = time.time() - t0
    assert elapsed < 1.0
    _report(1, f"SO_alpha(H1) = SO_alpha(H2) over 9 alphas, codes differ "
               f"({elapsed:.2f}s)")


def test_criterion_2_theorem2_oracle_equivalence():
    t0 = time.time()
    alphas = (0.25, 0.5, 0.75, -1.0, -0.5, 1.5, 2.0, 3.0)
    sequences = 0
    checks = 0
    for c in (0, 1, 2):
        for n in range(2, 9):
            rep = verify_theorem2(n, c, alphas)
            assert rep.holds, rep.to_record()["violations"]
            sequences += len({ch.pi for ch in rep.checks})
            checks += len(rep.checks)
    _report(2, f"{sequences} pendant sequences (n <= 8, c in 0..2), "
               f"{checks} construction-vs-oracle checks at 1e-9 rel "
               f"({time.time() - t0:.1f}s)")


def test_criterion_3_theorem1_existence():
    t0 = time.time()
    checked = 0
    for c in (0, 1, 2, 3):
        for n in range(3, 8):
            for pi in generate_c_cyclic_sequences(n, c, require_pendant=True):
                for alpha in (0.5, 2.0):
                    rep = verify_special_bfs_existence(pi, alpha)
                    assert rep.holds, rep.to_record()
                    checked += 1
    _report(3, f"special extremal BFS witness found for {checked} "
               f"(sequence, alpha) instances (n <= 7, c <= 3) "
               f"({time.time() - t0:.1f}s)")


def test_criterion_4_theorem3_monotonicity():
    t0 = time.time()
    pairs = 0
    for c in (0, 1, 2):
        for n in range(2, 9):
            rep = verify_theorem3(n, c, (1.5, 2.0, 3.0), require_pendant=False)
            assert rep.holds, rep.to_record()["violations"]
            pairs += len(rep.pairs)
    assert pairs > 0
    _report(4, f"strict oracle-max inequality on {pairs} majorization "
               f"pair-alpha instances (n <= 8, c in 0..2) "
               f"({time.time() - t0:.1f}s)")


def test_criterion_5_proposition1_grid():
    t0 = time.time()
    for alpha in (0.1, 0.25, 0.5, 0.75, 0.9):
        rep = check_escalating(BivariateFunction.sombor(alpha), GRID)
        assert rep.verdict == "de-escalating" and not rep.counterexamples, alpha
    for alpha in (-3, -1, -0.1, 1.1, 2, 5):
        rep = check_escalating(BivariateFunction.sombor(alpha), GRID)
        assert rep.verdict == "escalating" and not rep.counterexamples, alpha
    rep = check_escalating(BivariateFunction.sombor(1), GRID)
    assert rep.max_abs_delta == 0.0
    elapsed = time.time() - t0
    assert elapsed < 1.0
    _report(5, f"grid B=20 certification for 12 alphas, exact zero at alpha=1 "
               f"({elapsed:.2f}s)")


def test_criterion_6_good_escalating():
    t0 = time.time()
    for alpha in (1.1, 1.5, 2, 3, 5):
        assert check_good_escalating(alpha, GRID).holds, alpha
    rep = check_good_escalating(0.5, GRID)
    assert not rep.holds
    elapsed = time.time() - t0
    assert elapsed < 1.0
    _report(6, f"good-escalating certified for alpha > 1 samples, "
               f"refuted for 0.5 ({elapsed:.2f}s)")


def _corpus_n7():
    for c in (0, 1, 2, 3):
        for n in range(2, 8):
            for pi in generate_c_cyclic_sequences(n, c, require_pendant=False):
                yield from enumerate_gamma(pi)


def test_criterion_7_structural_identities():
    t0 = time.time()
    count = 0
    for g in _corpus_n7():
        count += 1
        assert math.isclose(
            sombor_general(g, 1.0), sum(d ** 3 for d in g.degrees), rel_tol=1e-12
        )
        assert parse_graph6(format_graph6(g)) == g
    assert count > 500
    for c in (0, 1, 2, 3):
        for n in range(2, 8):
            if n + c - 1 > n * (n - 1) // 2:
                continue
            rep = verify_enumeration_cross_check(n, c)
            assert rep.holds, rep.to_record()
    _report(7, f"SO_1 identity + graph6 round trip on {count} graphs; "
               f"both enumeration strategies agree for n <= 7, c <= 3 "
               f"({time.time() - t0:.1f}s)")


def test_criterion_8_constructor_self_certification():
    t0 = time.time()
    builders = {0: greedy_tree, 1: bfs_unicyclic, 2: bfs_bicyclic}
    count = 0
    for c, build in builders.items():
        for n in range(2, 11):
            for pi in generate_c_cyclic_sequences(n, c, require_pendant=True):
                r = build(pi)
                reason = witness_violation(r.graph, r.ordering,
                                           require_triangle=(c >= 1))
                assert reason is None, (pi, reason)
                count += 1
    elapsed = time.time() - t0
    _report(8, f"{count} constructions (n <= 10, c in 0..2) validated against "
               f"their own ordering ({elapsed:.1f}s)")
