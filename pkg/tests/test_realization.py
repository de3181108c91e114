import itertools
import random

import pytest

from quasiline import (
    RealizationPlan,
    SequenceClass,
    classify,
    default_plan,
    is_lineal,
    move_elements,
    move_window_content,
    realize,
    topological_unwanted_bound,
    unwanted_crossing_count,
)
from quasiline.errors import PlanMismatch
from quasiline.sequences import pair_counts

from oracles import fano, random_structure, triangle, two_lines_three_points


def numbered(plan, point):
    number = {l: i + 1 for i, l in enumerate(plan.line_numbering)}
    return [number[l] for l in plan.point_line_orders[point]]


def test_default_plan_triangle():
    c = triangle()
    plan = default_plan(c)
    assert len(plan.point_order) == 3
    assert all(len(plan.point_line_orders[p]) == 2 for p in c.points)


def test_default_plan_fano_windows_of_three():
    c = fano()
    plan = default_plan(c)
    assert len(plan.point_order) == 7
    assert all(len(plan.point_line_orders[p]) == 3 for p in c.points)
    # unprescribed orders default to increasing line number
    number = {l: i + 1 for i, l in enumerate(plan.line_numbering)}
    for p in c.points:
        nums = [number[l] for l in plan.point_line_orders[p]]
        assert nums == sorted(nums)


def test_realize_triangle_is_pseudoline_arrangement():
    c = triangle()
    r = realize(c, default_plan(c))
    assert len(r.seq.moves) == 3
    assert r.seq.designated == frozenset({1, 2, 3})
    assert classify(r.seq) is SequenceClass.ALLOWABLE
    assert unwanted_crossing_count(r) == 0
    counts = pair_counts(r.seq)
    for pair in itertools.combinations(range(1, 4), 2):
        assert counts[frozenset(pair)] == 1


def test_realize_two_lines_three_points_default_plan():
    c = two_lines_three_points()
    r = realize(c, default_plan(c))
    assert classify(r.seq) is SequenceClass.GENERALIZED_ALLOWABLE
    assert len(r.seq.designated) == 3
    assert all(
        (m.start, m.length) == (1, 2)
        for i, m in enumerate(r.seq.moves, 1)
        if i in r.seq.designated
    )
    assert pair_counts(r.seq)[frozenset({1, 2})] == 5
    assert unwanted_crossing_count(r) == 2


def test_realize_two_lines_three_points_alternating_plan():
    c = two_lines_three_points()
    plan = RealizationPlan(
        ("A", "B"),
        ("p1", "p2", "p3"),
        {"p1": ("A", "B"), "p2": ("B", "A"), "p3": ("A", "B")},
    )
    r = realize(c, plan)
    assert [(m.start, m.length) for m in r.seq.moves] == [(1, 2)] * 3
    assert r.seq.designated == frozenset({1, 2, 3})
    assert unwanted_crossing_count(r) == 0
    assert pair_counts(r.seq)[frozenset({1, 2})] == 3
    assert classify(r.seq) is SequenceClass.GENERALIZED_ALLOWABLE


def test_realize_fano_default_plan():
    c = fano()
    r = realize(c, default_plan(c))
    assert classify(r.seq) is not SequenceClass.PARTIAL
    assert len(r.seq.designated) == 7
    counts = pair_counts(r.seq)
    for pair in itertools.combinations(range(1, 8), 2):
        assert counts[frozenset(pair)] % 2 == 1


def test_designated_window_matches_prescribed_order():
    rng = random.Random(41)
    for _ in range(40):
        c = random_structure(rng)
        plan = default_plan(c)
        r = realize(c, plan)
        number = {l: i + 1 for i, l in enumerate(plan.line_numbering)}
        for idx, point in r.point_of_move.items():
            expected = [number[l] for l in plan.point_line_orders[point]]
            assert list(move_window_content(r.seq, idx)) == expected
            assert move_elements(r.seq, idx) == frozenset(expected)


def test_realize_random_structures_generalized():
    rng = random.Random(43)
    for _ in range(60):
        c = random_structure(rng)
        r = realize(c, default_plan(c))
        assert classify(r.seq) is not SequenceClass.PARTIAL
        assert len(r.seq.designated) == len(c.points)
        # bridging moves are adjacent transpositions, never designated
        for i, m in enumerate(r.seq.moves, 1):
            if i not in r.seq.designated:
                assert m.length == 2


def test_wanted_pair_accounting_lineal():
    rng = random.Random(47)
    found = 0
    while found < 15:
        c = random_structure(rng, max_points=7, max_lines=6)
        if not is_lineal(c):
            continue
        found += 1
        plan = default_plan(c)
        r = realize(c, plan)
        number = {l: i + 1 for i, l in enumerate(plan.line_numbering)}
        counts = pair_counts(r.seq)
        for p in c.points:
            for l1, l2 in itertools.combinations(c.lines_of(p), 2):
                pair = frozenset({number[l1], number[l2]})
                assert counts[pair] % 2 == 1


def test_realize_deterministic():
    c = fano()
    r1 = realize(c, default_plan(c))
    r2 = realize(c, default_plan(c))
    assert r1 == r2


def test_plan_validation():
    c = triangle()
    plan = default_plan(c)
    bad = RealizationPlan(plan.line_numbering, plan.point_order[:-1], plan.point_line_orders)
    with pytest.raises(PlanMismatch):
        realize(c, bad)
    bad2 = RealizationPlan(
        plan.line_numbering,
        plan.point_order,
        {**plan.point_line_orders, "a": ("ab",)},
    )
    with pytest.raises(PlanMismatch):
        realize(c, bad2)


def test_unwanted_crossing_identity_fano():
    c = fano()
    r = realize(c, default_plan(c))
    counts = pair_counts(r.seq)
    total_pairs = sum(
        counts[frozenset(p)] for p in itertools.combinations(range(1, 8), 2)
    )
    assert unwanted_crossing_count(r) == total_pairs - 7 * 3


def test_topological_unwanted_bound():
    assert topological_unwanted_bound(9, 3) == 9
    assert topological_unwanted_bound(7, 3) == 0
    for n in range(2, 10):
        assert topological_unwanted_bound(n, 2) == n * (n - 1) // 2 - n
    with pytest.raises(ValueError):
        topological_unwanted_bound(2, 3)
