"""Generalized wiring diagrams and their sweep structure.

A generalized wiring diagram draws n x-monotone wires entering on the
left in order 1..n (top to bottom); at each event a window of adjacent
wires crosses transversally, reversing its top-to-bottom order.  Every
pair of wires must cross an odd number of times, so the right-hand order
is the full reversal and the closed-up picture (a disk with antipodal
boundary points identified) is a monotone quasiline arrangement.

Events may carry a designated point label, marking crossings that belong
to an incidence structure.  The induced move sequence, the per-wire
crossing orders, the sweep digraph, and abstract boundary data for
monotonicity tests are all derived here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Mapping, Optional

from ..errors import (
    CyclicInput,
    DuplicateId,
    NotGeneralized,
    ValidationError,
)
from ..realization import Realization
from ..sequences import (
    Move,
    PermSequence,
    SequenceClass,
    classify,
    pair_counts,
)

Label = Hashable


@dataclass(frozen=True)
class Event:
    """One crossing: the window [start, start+length-1] of tracks reverses."""

    start: int
    length: int
    point: Optional[Label] = None

    def __post_init__(self):
        if self.start < 1:
            raise ValidationError(f"event start {self.start} must be >= 1")
        if self.length < 2:
            raise ValidationError(f"event length {self.length} must be >= 2")

    @property
    def stop(self) -> int:
        return self.start + self.length - 1

    def move(self) -> Move:
        return Move(self.start, self.length)


@dataclass(frozen=True)
class GeneralizedWiringDiagram:
    n: int
    events: tuple[Event, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValidationError("an arrangement needs at least 2 wires")
        for i, ev in enumerate(self.events):
            if ev.stop > self.n:
                raise ValidationError(
                    f"event {i} window [{ev.start},{ev.stop}] exceeds n={self.n}"
                )
        labels = [ev.point for ev in self.events if ev.point is not None]
        if len(labels) != len(set(labels)):
            raise DuplicateId("designated point labels must be distinct")
        counts = pair_counts(self.sequence())
        for x, y in itertools.combinations(range(1, self.n + 1), 2):
            if counts[frozenset((x, y))] % 2 == 0:
                raise NotGeneralized(
                    f"wires {x} and {y} cross {counts[frozenset((x, y))]} times; "
                    "every pair must cross an odd number of times"
                )

    def sequence(self) -> PermSequence:
        """The induced move sequence; designated flags become move indices."""
        moves = tuple(ev.move() for ev in self.events)
        designated = frozenset(
            i for i, ev in enumerate(self.events, start=1) if ev.point is not None
        )
        return PermSequence(self.n, moves, designated)

    @cached_property
    def permutations(self) -> tuple[tuple[int, ...], ...]:
        """Permutation before event i at index i; index r is the final one."""
        perm = list(range(1, self.n + 1))
        out = [tuple(perm)]
        for ev in self.events:
            a, b = ev.start - 1, ev.stop
            perm[a:b] = perm[a:b][::-1]
            out.append(tuple(perm))
        return tuple(out)

    def permutation_before(self, i: int) -> tuple[int, ...]:
        return self.permutations[i]

    @cached_property
    def window_wires_table(self) -> tuple[tuple[int, ...], ...]:
        """Per event, the wires in its window read top to bottom just before."""
        out = []
        for i, ev in enumerate(self.events):
            perm = self.permutations[i]
            out.append(tuple(perm[ev.start - 1 : ev.stop]))
        return tuple(out)

    def window_wires(self, i: int) -> tuple[int, ...]:
        return self.window_wires_table[i]

    @cached_property
    def wire_event_table(self) -> dict[int, tuple[int, ...]]:
        table: dict[int, list[int]] = {w: [] for w in range(1, self.n + 1)}
        for i, wires in enumerate(self.window_wires_table):
            for w in wires:
                table[w].append(i)
        return {w: tuple(evs) for w, evs in table.items()}

    def wire_events(self, wire: int) -> tuple[int, ...]:
        """Indices of the events on ``wire``, left to right."""
        return self.wire_event_table[wire]

    def designated_events(self) -> tuple[int, ...]:
        return tuple(i for i, ev in enumerate(self.events) if ev.point is not None)

    @property
    def event_count(self) -> int:
        return len(self.events)


def diagram_from_sequence(
    seq: PermSequence, labels: Optional[Mapping[int, Label]] = None
) -> GeneralizedWiringDiagram:
    """Turn a generalized allowable sequence into a wiring diagram.

    Events mirror moves one to one.  Designated moves become designated
    events; ``labels`` maps move indices to point labels, defaulting to
    p1, p2, ... in move order.
    """
    if classify(seq) is SequenceClass.PARTIAL:
        raise NotGeneralized("sequence does not end in the reverse permutation")
    if labels is None:
        labels = {
            idx: f"p{k}" for k, idx in enumerate(sorted(seq.designated), start=1)
        }
    events = []
    for i, move in enumerate(seq.moves, start=1):
        point = labels.get(i) if i in seq.designated else None
        if i in seq.designated and point is None:
            raise ValidationError(f"designated move {i} lacks a point label")
        events.append(Event(move.start, move.length, point))
    return GeneralizedWiringDiagram(seq.n, tuple(events))


def diagram_from_realization(realization: Realization) -> GeneralizedWiringDiagram:
    """Diagram of a realization, keeping the structure's point labels."""
    return diagram_from_sequence(realization.seq, dict(realization.point_of_move))


def sequence_from_diagram(diagram: GeneralizedWiringDiagram) -> PermSequence:
    """Exact inverse of :func:`diagram_from_sequence` (labels drop away)."""
    return diagram.sequence()


# -- sweep digraphs ---------------------------------------------------------


@dataclass(frozen=True)
class SweepDigraph:
    """Crossing-adjacency digraph: one arc per pair of crossings that are
    consecutive along a wire, oriented left to right (arcs never follow a
    wire through infinity)."""

    vertices: tuple[Hashable, ...]
    arcs: tuple[tuple[Hashable, Hashable], ...]

    @cached_property
    def successors(self) -> dict[Hashable, tuple[Hashable, ...]]:
        table: dict[Hashable, list[Hashable]] = {v: [] for v in self.vertices}
        for u, v in self.arcs:
            table[u].append(v)
        return {u: tuple(vs) for u, vs in table.items()}


def sweep_digraph(diagram: GeneralizedWiringDiagram) -> SweepDigraph:
    arcs = set()
    for w in range(1, diagram.n + 1):
        evs = diagram.wire_events(w)
        for u, v in zip(evs, evs[1:]):
            arcs.add((u, v))
    return SweepDigraph(tuple(range(diagram.event_count)), tuple(sorted(arcs)))


def is_acyclic(digraph: SweepDigraph) -> bool:
    try:
        topological_order(digraph)
        return True
    except CyclicInput:
        return False


def topological_order(digraph: SweepDigraph) -> list[Hashable]:
    """Kahn's algorithm with smallest-vertex tie-breaking; raises
    ``CyclicInput`` on a directed cycle."""
    indeg = {v: 0 for v in digraph.vertices}
    for _, v in digraph.arcs:
        indeg[v] += 1
    import heapq

    ready = [v for v in digraph.vertices if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for u in digraph.successors[v]:
            indeg[u] -= 1
            if indeg[u] == 0:
                heapq.heappush(ready, u)
    if len(order) != len(digraph.vertices):
        raise CyclicInput("digraph contains a directed cycle")
    return order


def topological_sweep(diagram: GeneralizedWiringDiagram) -> list[int]:
    """A sweep order of the crossings: each prefix cuts every wire's event
    list in a prefix, so consecutive sweep curves separate one vertex."""
    return topological_order(sweep_digraph(diagram))


# -- abstract arrangements and monotone markings -----------------------------


@dataclass(frozen=True)
class AbstractArrangement:
    """Boundary endpoint order plus per-line crossing orders.

    ``boundary`` lists 2n tokens (line, end) in cyclic order around the
    disk; the token at position i and the one at position i+n must be the
    two ends of the same line (antipodal identification).  ``crossings``
    holds, per line (1-based), the vertex ids met walking from end 0 to
    end 1.
    """

    n: int
    boundary: tuple[tuple[int, int], ...]
    crossings: tuple[tuple[Hashable, ...], ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValidationError("an arrangement needs at least 2 lines")
        if len(self.boundary) != 2 * self.n:
            raise ValidationError("boundary must list exactly 2n endpoint tokens")
        if sorted(self.boundary) != sorted(
            (l, e) for l in range(1, self.n + 1) for e in (0, 1)
        ):
            raise ValidationError("boundary must contain each (line, end) once")
        for i in range(self.n):
            a, b = self.boundary[i], self.boundary[i + self.n]
            if a[0] != b[0] or a[1] == b[1]:
                raise ValidationError(
                    "boundary tokens at antipodal positions must be the two ends "
                    "of one line"
                )
        if len(self.crossings) != self.n:
            raise ValidationError("need one crossing list per line")
        for l, row in enumerate(self.crossings, start=1):
            if len(set(row)) != len(row):
                raise ValidationError(f"line {l} lists a vertex twice")
        for v, lines in self.vertex_lines.items():
            if len(lines) < 2:
                raise ValidationError(f"vertex {v!r} lies on fewer than 2 lines")

    @cached_property
    def vertex_lines(self) -> dict[Hashable, frozenset[int]]:
        table: dict[Hashable, set[int]] = {}
        for l, row in enumerate(self.crossings, start=1):
            for v in row:
                table.setdefault(v, set()).add(l)
        return {v: frozenset(ls) for v, ls in table.items()}


def arrangement_from_diagram(
    diagram: GeneralizedWiringDiagram,
) -> AbstractArrangement:
    """Boundary and crossing orders induced by the disk model of a diagram.

    Left endpoints come first (wires 1..n top to bottom), then the right
    endpoints; the marking gap immediately before wire 1's left endpoint
    is gap 0.
    """
    boundary = tuple((w, 0) for w in range(1, diagram.n + 1)) + tuple(
        (w, 1) for w in range(1, diagram.n + 1)
    )
    crossings = tuple(diagram.wire_events(w) for w in range(1, diagram.n + 1))
    return AbstractArrangement(diagram.n, boundary, crossings)


def _orientations_from_gap(
    arrangement: AbstractArrangement, gap: int
) -> dict[int, bool]:
    """For each line, True when the marking orients it from end 0 to end 1."""
    size = 2 * arrangement.n
    forward: dict[int, bool] = {}
    for k in range(size):
        line, end = arrangement.boundary[(gap + k) % size]
        if line not in forward:
            forward[line] = end == 0
    return forward


def is_proper_marking(arrangement: AbstractArrangement, gap: int) -> bool:
    """True when, oriented from the given boundary gap, every pair of
    lines meets its shared crossings in the same order on both."""
    if not 0 <= gap < 2 * arrangement.n:
        raise ValidationError(f"gap {gap} not in [0, {2 * arrangement.n - 1}]")
    forward = _orientations_from_gap(arrangement, gap)
    oriented = {
        l: (row if forward[l] else row[::-1])
        for l, row in zip(range(1, arrangement.n + 1), arrangement.crossings)
    }
    for l1, l2 in itertools.combinations(range(1, arrangement.n + 1), 2):
        set1, set2 = set(oriented[l1]), set(oriented[l2])
        shared = set1 & set2
        if len(shared) <= 1:
            continue
        order1 = [v for v in oriented[l1] if v in shared]
        order2 = [v for v in oriented[l2] if v in shared]
        if order1 != order2:
            return False
    return True


def find_monotone_marking(arrangement: AbstractArrangement) -> Optional[int]:
    """First boundary gap that yields a proper marking, or None."""
    for gap in range(2 * arrangement.n):
        if is_proper_marking(arrangement, gap):
            return gap
    return None


# -- JSON -------------------------------------------------------------------


def diagram_to_json_dict(diagram: GeneralizedWiringDiagram) -> dict:
    return {
        "n": diagram.n,
        "events": [
            [ev.start, ev.length, None if ev.point is None else str(ev.point)]
            for ev in diagram.events
        ],
    }


def diagram_from_json_dict(data: dict) -> GeneralizedWiringDiagram:
    try:
        n = int(data["n"])
        events = tuple(
            Event(int(s), int(l), p if p is None else str(p))
            for s, l, p in data["events"]
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed diagram JSON: {exc}") from exc
    return GeneralizedWiringDiagram(n, events)
