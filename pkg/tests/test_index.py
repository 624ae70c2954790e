"""SO_alpha evaluation and escalating/de-escalating certification."""

import math

import pytest

from somborlab import (
    AlphaRegime,
    BivariateFunction,
    Graph,
    GridSpec,
    check_escalating,
    check_good_escalating,
    classify_alpha,
    connectivity_function,
    enumerate_gamma,
    generate_c_cyclic_sequences,
    sombor_general,
)
from somborlab.errors import AlphaZeroError, DisconnectedError, ValidationError

K2 = Graph(2, [(0, 1)])
K3 = Graph(3, [(0, 1), (0, 2), (1, 2)])
P3 = Graph(3, [(0, 1), (1, 2)])
STAR4 = Graph(4, [(0, 1), (0, 2), (0, 3)])


def test_sombor_hand_values():
    assert math.isclose(sombor_general(K2, 0.5), math.sqrt(2), rel_tol=1e-12)
    assert math.isclose(sombor_general(STAR4, 0.5), 3 * math.sqrt(10), rel_tol=1e-12)
    assert sombor_general(K3, 1.0) == 24.0


def test_sombor_rejects_bad_inputs():
    with pytest.raises(AlphaZeroError):
        sombor_general(K3, 0.0)
    with pytest.raises(DisconnectedError):
        sombor_general(Graph(4, [(0, 1), (2, 3)]), 0.5)


def test_connectivity_function_examples():
    add = BivariateFunction.custom(lambda x, y: x + y, name="x+y")
    assert connectivity_function(K3, add) == 12.0
    mul = BivariateFunction.custom(lambda x, y: x * y, name="xy")
    assert connectivity_function(P3, mul) == 4.0
    h = BivariateFunction.sombor(0.5)
    assert connectivity_function(STAR4, h) == sombor_general(STAR4, 0.5)


def test_custom_function_symmetry_is_spot_checked():
    with pytest.raises(ValidationError):
        BivariateFunction.custom(lambda x, y: x - y, name="asym")


def test_classify_alpha():
    assert classify_alpha(0.5) is AlphaRegime.DE_ESCALATING
    assert classify_alpha(2) is AlphaRegime.ESCALATING
    assert classify_alpha(-1) is AlphaRegime.ESCALATING
    assert classify_alpha(1) is AlphaRegime.DEGENERATE
    with pytest.raises(AlphaZeroError):
        classify_alpha(0)


def test_delta_hand_cells():
    h2 = BivariateFunction.sombor(2)
    delta = h2(2, 2) + h2(1, 1) - h2(1, 2) - h2(2, 1)
    assert delta == 18.0
    h05 = BivariateFunction.sombor(0.5)
    delta = h05(2, 2) + h05(1, 1) - h05(1, 2) - h05(2, 1)
    assert math.isclose(delta, math.sqrt(8) + math.sqrt(2) - 2 * math.sqrt(5),
                        rel_tol=1e-12)
    assert delta < 0
    h1 = BivariateFunction.sombor(1)
    for cell in [(3, 1, 2, 1), (5, 2, 4, 3), (2, 2, 2, 2)]:
        x1, y1, x2, y2 = cell
        assert h1(x1, x2) + h1(y1, y2) - h1(y1, x2) - h1(x1, y2) == 0.0


def test_check_escalating_regimes_small_grid():
    grid = GridSpec(8)
    for a in (0.25, 0.5, 0.75):
        report = check_escalating(BivariateFunction.sombor(a), grid)
        assert report.verdict == "de-escalating" and not report.counterexamples
    for a in (-1, -0.5, 1.5, 2, 3):
        report = check_escalating(BivariateFunction.sombor(a), grid)
        assert report.verdict == "escalating" and not report.counterexamples
    report = check_escalating(BivariateFunction.sombor(1), grid)
    assert report.verdict == "neither"
    assert report.max_abs_delta == 0.0
    assert report.cells_checked == (8 * 9 // 2) ** 2


def test_check_escalating_neither_for_mixed_function():
    # x*y is escalating; a sign flip around a threshold breaks both verdicts
    f = BivariateFunction.custom(
        lambda x, y: (x * y) if (x + y) % 2 == 0 else -(x * y), name="mixed"
    )
    report = check_escalating(f, GridSpec(5))
    assert report.verdict == "neither"
    assert 0 < len(report.counterexamples) <= 10


def test_good_escalating():
    grid = GridSpec(8)
    assert check_good_escalating(2, grid).holds
    assert check_good_escalating(1.5, grid).holds
    bad = check_good_escalating(0.5, grid)
    assert not bad.holds and bad.failed_condition == "escalating"
    neg = check_good_escalating(-1, grid)
    assert not neg.holds and neg.failed_condition == "first-partial"


def test_three_term_hand_cell():
    # x1 = y1 = 2, x2 = y2 = 1 at alpha = 1.5
    h = BivariateFunction.sombor(1.5)
    lhs = h(3, 1) + h(3, 1) + h(3, 1)
    rhs = h(2, 1) + h(2, 1) + h(2, 2)
    assert math.isclose(lhs, 3 * 10 ** 1.5, rel_tol=1e-12)
    assert lhs > rhs


def test_forgotten_index_identity_small():
    for c in (0, 1, 2):
        for n in range(2, 7):
            for pi in generate_c_cyclic_sequences(n, c, require_pendant=False):
                for g in enumerate_gamma(pi):
                    assert math.isclose(
                        sombor_general(g, 1.0),
                        sum(d ** 3 for d in g.degrees),
                        rel_tol=1e-12,
                    )


def test_isomorphism_invariance_exact():
    import random

    rng = random.Random(1)
    g = Graph(7, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6)])
    for _ in range(50):
        perm = list(range(7))
        rng.shuffle(perm)
        for a in (-1, 0.5, 2, 3):
            # pair-multiset aggregation makes the sums bit-identical
            assert sombor_general(g.relabel(perm), a) == sombor_general(g, a)


def test_monotone_in_alpha():
    for g in (K3, STAR4, P3):
        values = [sombor_general(g, a) for a in (0.25, 0.5, 0.75, 1, 1.5, 2, 3)]
        assert all(values[i] < values[i + 1] for i in range(len(values) - 1))


def test_grid_spec_bounds():
    with pytest.raises(ValidationError):
        GridSpec(2)
