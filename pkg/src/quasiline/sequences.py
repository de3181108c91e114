"""Sequences of permutations generated by window reversals.

A sequence starts from the identity on {1..n}; each move reverses a
consecutive window of the current permutation.  A sequence is *allowable*
when every pair of elements is jointly reversed exactly once, and
*generalized allowable* when the final permutation is the full reversal,
which happens exactly when every pair is jointly reversed an odd number
of times.  Moves are stored positionally as (start, length) with 1-based
starts; the element sets they reverse are derived.

Some moves may be designated as carrying a structure point; designated
flags travel with their moves under elementary interchanges.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter, deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from .errors import (
    BadElement,
    IndexOutOfRange,
    NotDisjoint,
    ValidationError,
)


@dataclass(frozen=True, order=True)
class Move:
    """Reversal of ``length`` consecutive entries starting at 1-based ``start``."""

    start: int
    length: int

    def __post_init__(self):
        if self.start < 1:
            raise ValidationError(f"move start {self.start} must be >= 1")
        if self.length < 2:
            raise ValidationError(
                f"move length {self.length} must be >= 2 (a 1-window reversal is a no-op)"
            )

    @property
    def stop(self) -> int:
        """Last 1-based position covered by the window."""
        return self.start + self.length - 1

    def window(self) -> range:
        """0-based index range of the window."""
        return range(self.start - 1, self.start - 1 + self.length)

    def disjoint_from(self, other: "Move") -> bool:
        return self.stop < other.start or other.stop < self.start


class SequenceClass(Enum):
    PARTIAL = "partial"
    ALLOWABLE = "allowable"
    GENERALIZED_ALLOWABLE = "generalized-allowable"


@dataclass(frozen=True)
class PermSequence:
    """A partial sequence of window reversals on {1..n}.

    ``designated`` holds 1-based indices of moves flagged as structure
    points.  Permutations along the sequence are always derived, never
    stored.
    """

    n: int
    moves: tuple[Move, ...]
    designated: frozenset[int] = frozenset()

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError(f"n must be >= 1, got {self.n}")
        for i, move in enumerate(self.moves, start=1):
            if move.stop > self.n:
                raise ValidationError(
                    f"move {i} window [{move.start},{move.stop}] exceeds n={self.n}"
                )
        bad = [i for i in self.designated if not 1 <= i <= len(self.moves)]
        if bad:
            raise ValidationError(f"designated indices out of range: {sorted(bad)}")

    def __len__(self) -> int:
        return len(self.moves)


def make_sequence(
    n: int,
    moves: Iterable[tuple[int, int] | Move],
    designated: Iterable[int] = (),
) -> PermSequence:
    """Convenience constructor accepting (start, length) pairs."""
    ms = tuple(m if isinstance(m, Move) else Move(*m) for m in moves)
    return PermSequence(n, ms, frozenset(designated))


def permutation_after(seq: PermSequence, t: int) -> tuple[int, ...]:
    """The permutation after applying the first ``t`` moves to the identity."""
    if not 0 <= t <= len(seq.moves):
        raise IndexOutOfRange(f"t={t} not in [0, {len(seq.moves)}]")
    perm = list(range(1, seq.n + 1))
    for move in seq.moves[:t]:
        a, b = move.start - 1, move.stop
        perm[a:b] = perm[a:b][::-1]
    return tuple(perm)


def move_elements(seq: PermSequence, i: int) -> frozenset[int]:
    """The set of elements reversed by move ``i`` (1-based)."""
    if not 1 <= i <= len(seq.moves):
        raise IndexOutOfRange(f"move index {i} not in [1, {len(seq.moves)}]")
    perm = permutation_after(seq, i - 1)
    move = seq.moves[i - 1]
    return frozenset(perm[j] for j in move.window())


def move_window_content(seq: PermSequence, i: int) -> tuple[int, ...]:
    """Window content of move ``i`` read top to bottom just before the reversal."""
    if not 1 <= i <= len(seq.moves):
        raise IndexOutOfRange(f"move index {i} not in [1, {len(seq.moves)}]")
    perm = permutation_after(seq, i - 1)
    move = seq.moves[i - 1]
    return tuple(perm[j] for j in move.window())


def pair_counts(seq: PermSequence) -> Counter:
    """Counter mapping each unordered pair {x,y} to its joint move count."""
    counts: Counter = Counter()
    perm = list(range(1, seq.n + 1))
    for move in seq.moves:
        a, b = move.start - 1, move.stop
        window = perm[a:b]
        for x, y in itertools.combinations(window, 2):
            counts[frozenset((x, y))] += 1
        perm[a:b] = window[::-1]
    return counts


def pair_move_count(seq: PermSequence, x: int, y: int) -> int:
    """Number of moves jointly containing elements ``x`` and ``y``."""
    if x == y or not (1 <= x <= seq.n) or not (1 <= y <= seq.n):
        raise BadElement(f"need two distinct elements of 1..{seq.n}, got {x}, {y}")
    return pair_counts(seq)[frozenset((x, y))]


def classify(seq: PermSequence) -> SequenceClass:
    """Classify as allowable, generalized allowable, or merely partial.

    Allowable: every pair jointly reversed exactly once.  Generalized
    allowable: every pair jointly reversed an odd number of times, which
    is equivalent to the final permutation being the reverse permutation.
    """
    counts = pair_counts(seq)
    all_pairs = [
        counts[frozenset(p)] for p in itertools.combinations(range(1, seq.n + 1), 2)
    ]
    if all(c == 1 for c in all_pairs):
        return SequenceClass.ALLOWABLE
    if all(c % 2 == 1 for c in all_pairs):
        return SequenceClass.GENERALIZED_ALLOWABLE
    return SequenceClass.PARTIAL


def is_generalized(seq: PermSequence) -> bool:
    """True for allowable and generalized allowable sequences alike."""
    return classify(seq) is not SequenceClass.PARTIAL


def elementary_swap(seq: PermSequence, i: int) -> PermSequence:
    """Interchange moves ``i`` and ``i+1`` (1-based), which must have
    disjoint position windows.  Designated flags follow their moves."""
    if not 1 <= i <= len(seq.moves) - 1:
        raise IndexOutOfRange(f"swap index {i} not in [1, {len(seq.moves) - 1}]")
    a, b = seq.moves[i - 1], seq.moves[i]
    if not a.disjoint_from(b):
        raise NotDisjoint(
            f"moves {i} and {i + 1} overlap positionally "
            f"([{a.start},{a.stop}] vs [{b.start},{b.stop}])"
        )
    moves = list(seq.moves)
    moves[i - 1], moves[i] = moves[i], moves[i - 1]
    designated = set(seq.designated)
    flip = {i: i + 1, i + 1: i}
    designated = frozenset(flip.get(j, j) for j in designated)
    return PermSequence(seq.n, tuple(moves), designated)


def _swap_invariant(seq: PermSequence) -> Counter:
    # Multiset of (element set, designated?) pairs; preserved by swaps.
    inv: Counter = Counter()
    for i in range(1, len(seq.moves) + 1):
        inv[(move_elements(seq, i), i in seq.designated)] += 1
    return inv


def is_equivalent_bounded(
    seq1: PermSequence, seq2: PermSequence, budget: int
) -> Optional[list[int]]:
    """Breadth-first search for a chain of elementary swaps from seq1 to seq2.

    Returns the list of swap indices when found within ``budget`` node
    expansions; None means "not found within budget", not a disproof.
    Sequences whose swap invariants differ are refuted immediately.
    """
    if seq1.n != seq2.n or len(seq1.moves) != len(seq2.moves):
        return None
    if _swap_invariant(seq1) != _swap_invariant(seq2):
        return None
    key2 = (seq1.n, seq2.moves, seq2.designated)

    def key(s: PermSequence):
        return (s.n, s.moves, s.designated)

    start = key(seq1)
    if start == key2:
        return []
    parent: dict[tuple, tuple[tuple, int]] = {start: (start, 0)}
    queue = deque([seq1])
    expansions = 0
    while queue and expansions < budget:
        current = queue.popleft()
        expansions += 1
        for i in range(1, len(current.moves)):
            if not current.moves[i - 1].disjoint_from(current.moves[i]):
                continue
            nxt = elementary_swap(current, i)
            k = key(nxt)
            if k in parent:
                continue
            parent[k] = (key(current), i)
            if k == key2:
                chain: list[int] = []
                while k != start:
                    k, idx = parent[k]
                    chain.append(idx)
                chain.reverse()
                return chain
            queue.append(nxt)
    return None


def sequence_to_json_dict(seq: PermSequence) -> dict:
    return {
        "n": seq.n,
        "moves": [[m.start, m.length] for m in seq.moves],
        "designated": sorted(seq.designated),
    }


def sequence_from_json_dict(data: dict) -> PermSequence:
    try:
        n = int(data["n"])
        moves = [Move(int(s), int(l)) for s, l in data["moves"]]
        designated = [int(i) for i in data.get("designated", [])]
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed sequence JSON: {exc}") from exc
    return make_sequence(n, moves, designated)


def sequence_to_json(seq: PermSequence) -> str:
    return json.dumps(sequence_to_json_dict(seq), sort_keys=True)


def sequence_from_json(text: str) -> PermSequence:
    return sequence_from_json_dict(json.loads(text))
