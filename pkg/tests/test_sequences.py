import itertools
import math
import random

import pytest

from quasiline import (
    Move,
    SequenceClass,
    classify,
    elementary_swap,
    is_equivalent_bounded,
    make_sequence,
    move_elements,
    move_window_content,
    pair_move_count,
    permutation_after,
    sequence_from_json,
    sequence_to_json,
)
from quasiline.errors import (
    BadElement,
    IndexOutOfRange,
    NotDisjoint,
    ValidationError,
)
from quasiline.sequences import pair_counts

from oracles import (
    random_allowable_sequence,
    random_generalized_sequence,
    random_partial_sequence,
)


def test_move_validation():
    with pytest.raises(ValidationError):
        Move(0, 2)
    with pytest.raises(ValidationError):
        Move(1, 1)
    with pytest.raises(ValidationError):
        make_sequence(3, [(3, 2)])  # window exceeds n


def test_permutation_after_three_swaps():
    seq = make_sequence(3, [(1, 2), (2, 2), (1, 2)])
    assert permutation_after(seq, 3) == (3, 2, 1)
    assert permutation_after(seq, 0) == (1, 2, 3)
    assert permutation_after(seq, 1) == (2, 1, 3)


def test_permutation_after_single_swap_n2():
    seq = make_sequence(2, [(1, 2)])
    assert permutation_after(seq, 1) == (2, 1)


def test_permutation_after_bounds():
    seq = make_sequence(3, [(1, 2)])
    with pytest.raises(IndexOutOfRange):
        permutation_after(seq, 2)
    with pytest.raises(IndexOutOfRange):
        permutation_after(seq, -1)


def test_move_elements():
    seq = make_sequence(3, [(1, 2), (2, 2)])
    assert move_elements(seq, 2) == frozenset({1, 3})
    assert move_elements(seq, 1) == frozenset({1, 2})
    full = make_sequence(4, [(1, 4)])
    assert move_elements(full, 1) == frozenset({1, 2, 3, 4})
    with pytest.raises(IndexOutOfRange):
        move_elements(seq, 3)


def test_classify_examples():
    assert classify(make_sequence(3, [(1, 2), (2, 2), (1, 2)])) is SequenceClass.ALLOWABLE
    assert (
        classify(make_sequence(2, [(1, 2), (1, 2), (1, 2)]))
        is SequenceClass.GENERALIZED_ALLOWABLE
    )
    assert classify(make_sequence(3, [(1, 2)])) is SequenceClass.PARTIAL


def test_pair_move_count():
    allow = make_sequence(3, [(1, 2), (2, 2), (1, 2)])
    for x, y in itertools.combinations(range(1, 4), 2):
        assert pair_move_count(allow, x, y) == 1
    triple = make_sequence(2, [(1, 2), (1, 2), (1, 2)])
    assert pair_move_count(triple, 1, 2) == 3
    partial = make_sequence(3, [(1, 2)])
    assert pair_move_count(partial, 1, 3) == 0
    with pytest.raises(BadElement):
        pair_move_count(partial, 1, 1)
    with pytest.raises(BadElement):
        pair_move_count(partial, 0, 2)


def test_allowable_implies_reverse_final_permutation():
    rng = random.Random(11)
    for _ in range(500):
        n = rng.randint(2, 8)
        seq = random_allowable_sequence(rng, n)
        assert classify(seq) is SequenceClass.ALLOWABLE
        assert permutation_after(seq, len(seq.moves)) == tuple(range(n, 0, -1))


def test_generalized_iff_all_pair_counts_odd():
    rng = random.Random(13)
    for _ in range(300):
        n = rng.randint(2, 8)
        seq = (
            random_generalized_sequence(rng, n)
            if rng.random() < 0.5
            else random_partial_sequence(rng, n, rng.randint(0, 6))
        )
        counts = pair_counts(seq)
        all_odd = all(
            counts[frozenset(p)] % 2 == 1
            for p in itertools.combinations(range(1, n + 1), 2)
        )
        final_reversed = permutation_after(seq, len(seq.moves)) == tuple(
            range(n, 0, -1)
        )
        assert all_odd == final_reversed
        assert (classify(seq) is not SequenceClass.PARTIAL) == all_odd


def test_pair_count_total_identity():
    rng = random.Random(17)
    for _ in range(100):
        n = rng.randint(2, 8)
        seq = random_partial_sequence(rng, n, rng.randint(0, 8))
        counts = pair_counts(seq)
        by_pairs = sum(
            counts[frozenset(p)] for p in itertools.combinations(range(1, n + 1), 2)
        )
        by_moves = sum(math.comb(m.length, 2) for m in seq.moves)
        assert by_pairs == by_moves


def test_elementary_swap_disjoint():
    seq = make_sequence(5, [(1, 2), (3, 2)], designated=[1])
    swapped = elementary_swap(seq, 1)
    assert [(m.start, m.length) for m in swapped.moves] == [(3, 2), (1, 2)]
    assert swapped.designated == frozenset({2})
    assert permutation_after(swapped, 2) == permutation_after(seq, 2)


def test_elementary_swap_not_disjoint():
    seq = make_sequence(3, [(1, 2), (2, 2)])
    with pytest.raises(NotDisjoint):
        elementary_swap(seq, 1)
    with pytest.raises(IndexOutOfRange):
        elementary_swap(seq, 2)


def test_elementary_swap_involution_and_invariants():
    rng = random.Random(23)
    checked = 0
    while checked < 50:
        n = rng.randint(4, 8)
        seq = random_generalized_sequence(rng, n, designate=True)
        sites = [
            i
            for i in range(1, len(seq.moves))
            if seq.moves[i - 1].disjoint_from(seq.moves[i])
        ]
        if not sites:
            continue
        i = rng.choice(sites)
        swapped = elementary_swap(seq, i)
        assert elementary_swap(swapped, i) == seq
        assert classify(swapped) == classify(seq)
        elems = sorted(
            (sorted(move_elements(seq, j)), j in seq.designated)
            for j in range(1, len(seq.moves) + 1)
        )
        elems2 = sorted(
            (sorted(move_elements(swapped, j)), j in swapped.designated)
            for j in range(1, len(swapped.moves) + 1)
        )
        assert elems == elems2
        checked += 1


def test_swap_preserves_allowable():
    rng = random.Random(29)
    for _ in range(30):
        seq = random_allowable_sequence(rng, 6)
        sites = [
            i
            for i in range(1, len(seq.moves))
            if seq.moves[i - 1].disjoint_from(seq.moves[i])
        ]
        for i in sites:
            assert classify(elementary_swap(seq, i)) is SequenceClass.ALLOWABLE


def test_is_equivalent_bounded_self():
    seq = make_sequence(4, [(1, 2), (3, 2)])
    assert is_equivalent_bounded(seq, seq, budget=10) == []


def test_is_equivalent_bounded_one_swap():
    a = make_sequence(4, [(1, 2), (3, 2)])
    b = make_sequence(4, [(3, 2), (1, 2)])
    chain = is_equivalent_bounded(a, b, budget=100)
    assert chain == [1]
    # replay the chain
    cur = a
    for i in chain:
        cur = elementary_swap(cur, i)
    assert cur == b


def test_is_equivalent_bounded_refutes_different_invariants():
    a = make_sequence(4, [(1, 2), (3, 2)])
    b = make_sequence(4, [(1, 2), (2, 2)])
    assert is_equivalent_bounded(a, b, budget=10**6) is None


def test_is_equivalent_bounded_longer_chain():
    a = make_sequence(6, [(1, 2), (3, 2), (5, 2)])
    b = make_sequence(6, [(5, 2), (3, 2), (1, 2)])
    chain = is_equivalent_bounded(a, b, budget=10000)
    assert chain is not None
    cur = a
    for i in chain:
        cur = elementary_swap(cur, i)
    assert cur == b


def test_json_roundtrip():
    rng = random.Random(31)
    for _ in range(20):
        seq = random_generalized_sequence(rng, rng.randint(2, 8), designate=True)
        assert sequence_from_json(sequence_to_json(seq)) == seq


def test_move_window_content_reads_top_to_bottom():
    seq = make_sequence(3, [(1, 2), (1, 3)])
    assert move_window_content(seq, 2) == (2, 1, 3)
