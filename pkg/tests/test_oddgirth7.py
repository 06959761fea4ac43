from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ogc import make_algorithm, play, replay
from ogc.graph import has_odd_cycle_shorter_than, odd_girth
from ogc.presenters import OddGirth7Presenter
from ogc.presenters.oddgirth7 import (WeightedTable, ceil_ln, fan_size, ln_lower, row_weight_bound,
                                      rule1_broken, rule3_interesting, split_groups, try_rule2,
                                      vertex_bound, weight_census)
from conftest import Balanced, PaletteRandom
from oracles import brute_odd_girth


def fill(table, row, col, n, start=1000):
    for i in range(n):
        table.put(start + i, row, col, Fraction(0), None)


def test_fan_sizes_and_bounds():
    assert fan_size(2) == 18
    assert fan_size(1) == 9
    assert [ceil_ln(x) for x in (1, 2, 3, 7, 8, 20, 21)] == [0, 1, 2, 2, 3, 3, 4]
    assert vertex_bound(2) == 27 * 8 * 3
    assert ln_lower(6) < Fraction(17918, 10000)
    assert row_weight_bound(2) < 36 * (1 + Fraction(17918, 10000))


def test_split_groups_examples():
    table = WeightedTable(2)
    assert split_groups(table, 0) == [[] for _ in range(6)]
    fill(table, 1, 1, 6, start=1)
    assert split_groups(table, 1) == [[v] for v in range(1, 7)]
    fill(table, 2, 1, 6, start=11)
    assert split_groups(table, 1) == [[v, v + 10] for v in range(1, 7)]
    # an available cell in the column contributes nothing
    fill(table, 1, 2, 3, start=21)
    assert split_groups(table, 2) == [[] for _ in range(6)]


def test_rule1_examples():
    table = WeightedTable(2)
    assert not rule1_broken(table, 0)
    table.row_for(1)
    for j in range(1, 6):
        fill(table, 1, j, 6, start=10 * j)
    assert rule1_broken(table, 0)
    # blocked at k as well: not available at k, so not broken
    table = WeightedTable(2)
    table.row_for(1)
    table.row_for(2)
    for j in range(0, 6):
        fill(table, 1, j, 6, start=10 * j)
    assert not rule1_broken(table, 0)


def test_rule2_examples():
    table = WeightedTable(2)
    fan = [(v, 1) for v in range(1, 19)]
    (cell, chosen) = try_rule2(table, fan, 0)
    assert cell == (1, 1) and chosen == list(range(1, 7))

    table = WeightedTable(2)
    table.row_for(1)
    fill(table, 1, 1, 5)
    cell, chosen = try_rule2(table, [(1, 1)], 0)
    assert cell == (1, 1) and chosen == [1]

    table = WeightedTable(2)
    assert try_rule2(table, [(v, 1 + v % 2) for v in range(1, 11)], 0) is None


def test_rule3_single_color():
    table = WeightedTable(2)
    table.row_for(1)
    # color 1 available in exactly five columns right of k=0
    fan = [(v, 1) for v in range(1, 6)]
    plan = rule3_interesting(table, fan, 0)
    assert plan.t == {1: 5}
    assert plan.weights == {1: Fraction(6, 5)}
    assert plan.column == 1
    assert [v for v, _ in plan.placements] == [1, 2, 3, 4, 5]
    assert plan.total_weight == len(fan) * 6
    assert plan.column_weight[1] >= len(fan)


@given(st.lists(st.integers(1, 3), min_size=1, max_size=30), st.data())
def test_rule3_identity_and_averaging(colors, data):
    c = 3
    table = WeightedTable(c)
    for color in sorted(set(colors)):
        row = table.row_for(color)
        # block a random set of columns right of 0, keeping at least one available
        blocked = data.draw(st.sets(st.integers(1, 3 * c - 1), max_size=3 * c - 2))
        for j in blocked:
            fill(table, row, j, 3 * c, start=1000 * row + 100 * j)
    fan = [(v, color) for v, color in enumerate(colors, start=1)]
    plan = rule3_interesting(table, fan, 0)
    assert not plan.anomalous
    assert plan.total_weight == len(fan) * 3 * c
    assert plan.column_weight[plan.column] >= len(fan)
    best = max(plan.column_weight.values())
    assert plan.column == min(j for j, w in plan.column_weight.items() if w == best)


def test_weight_census_examples():
    assert weight_census([Fraction(3)] * 3, 1)
    assert not weight_census([Fraction(3)] * 4, 1)
    assert weight_census([Fraction(3, 2)] * 6, 1)


def test_first_fit_c2_phase_zero():
    p = OddGirth7Presenter(2)
    outcome, t = play(p, make_algorithm("first-fit"), 2, 10_000)
    assert outcome.vertices == 91 <= vertex_bound(2)
    first = p.fans[0]
    assert first.R == () and first.disposition == "blocked"
    assert first.cell == (1, 1) and first.placed == list(range(1, 7))
    assert len(first.discarded) == 12
    assert t.rounds[0].annotation == "phase=0 group=1 fan=1 rule=2 col=1"
    assert outcome.strategy_stats["broken_phases"] == 1


def ledger_clean(stats, c):
    for key in ("weight_violations", "identity_violations", "overflow_violations",
                "row_weight_violations", "census_violations", "anomalies"):
        assert stats[key] == 0, key
    assert stats["broken_phases"] <= c


def check_game(p, outcome, t, c):
    assert outcome.distinct_colors == c
    assert outcome.vertices <= vertex_bound(c)
    ledger_clean(outcome.strategy_stats, c)
    g = replay(t)
    assert p.structural_check(g) == []
    for row in p.table.rows:
        ws = [w for (r, _), cell in p.table.cells.items() if r == row for _, w in cell]
        assert weight_census(ws, c)
        assert sum(ws, Fraction(0)) < p.row_bound
        for (r, _), cell in p.table.cells.items():
            if r == row:
                assert len(cell) <= 3 * c
    for fan in p.fans:
        vs = [v for v, _ in fan.vertices]
        assert not any(g.has_edge(u, w) for u in vs for w in vs)
        for v in vs:
            assert set(g.neighbors(v)) == set(fan.R) | {w for w in g.neighbors(v) if w > v}
    # discarded vertices never gain later neighbors
    assert all(u < d for d in p.discarded for u in g.neighbors(d))
    return g


@pytest.mark.parametrize("algorithm", ["first-fit", "cbip", "random", "fresh"])
@pytest.mark.parametrize("c", [1, 2, 3])
def test_named_algorithms_small(algorithm, c):
    p = OddGirth7Presenter(c, strict=True)
    outcome, t = play(p, make_algorithm(algorithm, seed=c), c, 10**6)
    g = check_game(p, outcome, t, c)
    assert not has_odd_cycle_shorter_than(g, 7)


def test_interesting_fans_keep_the_ledger():
    p = OddGirth7Presenter(6, strict=True)
    outcome, t = play(p, Balanced(5), 6, 10**6)
    check_game(p, outcome, t, 6)
    assert outcome.strategy_stats["interesting_fans"] >= 1
    for fan in p.fans:
        if fan.disposition == "interesting":
            assert fan.placed_weight >= len(fan.vertices)


@settings(max_examples=15)
@given(st.integers(2, 5), st.integers(2, 6), st.integers(0, 10**6))
def test_ledger_against_palette_random(c, palette, seed):
    p = OddGirth7Presenter(c, strict=True)
    outcome, t = play(p, PaletteRandom(palette, seed), c, 10**6)
    check_game(p, outcome, t, c)


@pytest.mark.parametrize("algorithm", ["first-fit", "cbip"])
def test_exact_odd_girth_c3(algorithm):
    _, t = play(OddGirth7Presenter(3), make_algorithm(algorithm), 3, 10**6)
    assert odd_girth(replay(t)) >= 7


def test_brute_force_agrees_on_a_truncated_game():
    # a short prefix of a stressed game, small enough to enumerate cycles
    p = OddGirth7Presenter(2)
    _, t = play(p, Balanced(1), 3, 11)
    g = replay(t)
    assert odd_girth(g) == brute_odd_girth(g.n, list(g.edges()))
