"""Combinatorial incidence structures and their Levi graphs.

An incidence structure is a triple (points, lines, flags) where the flags
are point-line pairs, every point lies on at least two lines, and every
line carries at least two points.  The Levi graph is the bipartite
point/line incidence graph.  A structure is *lineal* when no two points
share more than one line, which is the same as the Levi graph having
girth at least six.

Labels are opaque tokens; internally everything is mapped to dense
integer indices through stable lookup tables so that derived data is
deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Optional

from .errors import DegreeTooLow, DuplicateId, ParseError, UnknownId

Label = Hashable


@dataclass(frozen=True)
class IncidenceStructure:
    """A validated incidence structure; use :func:`build` to construct one."""

    points: tuple[Label, ...]
    lines: tuple[Label, ...]
    flags: frozenset[tuple[Label, Label]]

    @cached_property
    def point_index(self) -> dict[Label, int]:
        return {p: i for i, p in enumerate(self.points)}

    @cached_property
    def line_index(self) -> dict[Label, int]:
        return {l: i for i, l in enumerate(self.lines)}

    @cached_property
    def _lines_of(self) -> dict[Label, tuple[Label, ...]]:
        table: dict[Label, list[Label]] = {p: [] for p in self.points}
        for l in self.lines:
            for p in self.points_of(l):
                table[p].append(l)
        return {p: tuple(ls) for p, ls in table.items()}

    @cached_property
    def _points_of(self) -> dict[Label, tuple[Label, ...]]:
        table: dict[Label, list[Label]] = {l: [] for l in self.lines}
        flagged = self.flags
        for l in self.lines:
            table[l] = [p for p in self.points if (p, l) in flagged]
        return {l: tuple(ps) for l, ps in table.items()}

    def lines_of(self, point: Label) -> tuple[Label, ...]:
        """Lines through ``point``, in line declaration order."""
        return self._lines_of[point]

    def points_of(self, line: Label) -> tuple[Label, ...]:
        """Points on ``line``, in point declaration order."""
        return self._points_of[line]

    def point_degree(self, point: Label) -> int:
        return len(self.lines_of(point))

    def line_degree(self, line: Label) -> int:
        return len(self.points_of(line))


def build(
    points: Iterable[Label],
    lines: Iterable[Label],
    flags: Iterable[tuple[Label, Label]],
) -> IncidenceStructure:
    """Validate and construct an incidence structure.

    Flags supplied with duplicates are deduplicated silently (the
    incidence relation is a set).  Raises ``DuplicateId`` for repeated or
    clashing labels, ``UnknownId`` for flags that reference undeclared
    ids, and ``DegreeTooLow`` when a point or line lies in fewer than two
    flags.
    """
    point_list = tuple(points)
    line_list = tuple(lines)
    if len(set(point_list)) != len(point_list):
        raise DuplicateId("duplicate point label")
    if len(set(line_list)) != len(line_list):
        raise DuplicateId("duplicate line label")
    overlap = set(point_list) & set(line_list)
    if overlap:
        raise DuplicateId(f"labels used both as point and line: {sorted(map(repr, overlap))}")
    point_set, line_set = set(point_list), set(line_list)
    flag_set = frozenset(flags)
    for p, l in flag_set:
        if p not in point_set:
            raise UnknownId(f"flag references unknown point {p!r}")
        if l not in line_set:
            raise UnknownId(f"flag references unknown line {l!r}")
    pdeg = {p: 0 for p in point_list}
    ldeg = {l: 0 for l in line_list}
    for p, l in flag_set:
        pdeg[p] += 1
        ldeg[l] += 1
    for p in point_list:
        if pdeg[p] < 2:
            raise DegreeTooLow(p, pdeg[p])
    for l in line_list:
        if ldeg[l] < 2:
            raise DegreeTooLow(l, ldeg[l])
    return IncidenceStructure(point_list, line_list, flag_set)


@dataclass(frozen=True)
class LeviGraph:
    """Bipartite incidence graph: black vertices are points, white are lines."""

    black: tuple[Label, ...]
    white: tuple[Label, ...]
    edges: frozenset[tuple[Label, Label]]

    @cached_property
    def adjacency(self) -> dict[Label, tuple[Label, ...]]:
        table: dict[Label, list[Label]] = {v: [] for v in self.black + self.white}
        for p in self.black:
            for l in self.white:
                if (p, l) in self.edges:
                    table[p].append(l)
                    table[l].append(p)
        return {v: tuple(ns) for v, ns in table.items()}

    def degree(self, vertex: Label) -> int:
        return len(self.adjacency[vertex])

    @property
    def vertex_count(self) -> int:
        return len(self.black) + len(self.white)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def levi_graph(structure: IncidenceStructure) -> LeviGraph:
    """The Levi graph of a structure; one edge per flag."""
    return LeviGraph(structure.points, structure.lines, structure.flags)


def is_lineal(structure: IncidenceStructure) -> bool:
    """True iff no two points are incident with two common lines."""
    for p, q in itertools.combinations(structure.points, 2):
        common = set(structure.lines_of(p)) & set(structure.lines_of(q))
        if len(common) >= 2:
            return False
    return True


def configuration_signature(
    structure: IncidenceStructure,
) -> Optional[tuple[int, int, int, int]]:
    """Return (v, r, b, k) when point and line degrees are constant, else None."""
    pdegs = {structure.point_degree(p) for p in structure.points}
    ldegs = {structure.line_degree(l) for l in structure.lines}
    if len(pdegs) != 1 or len(ldegs) != 1:
        return None
    return (len(structure.points), pdegs.pop(), len(structure.lines), ldegs.pop())


def _refine_colors(levi: LeviGraph) -> dict[Label, int]:
    # Iterated neighborhood refinement; the initial color separates the
    # two sides of the bipartition and the degrees.
    color: dict[Label, int] = {}
    seed: dict[tuple, int] = {}
    for v in levi.black + levi.white:
        key = (v in set(levi.black), levi.degree(v))
        color[v] = seed.setdefault(key, len(seed))
    while True:
        fresh: dict[tuple, int] = {}
        new_color: dict[Label, int] = {}
        for v in levi.black + levi.white:
            key = (color[v], tuple(sorted(color[u] for u in levi.adjacency[v])))
            new_color[v] = fresh.setdefault(key, len(fresh))
        if len(set(new_color.values())) == len(set(color.values())):
            return new_color
        color = new_color


def are_isomorphic(
    c1: IncidenceStructure, c2: IncidenceStructure
) -> Optional[dict[Label, Label]]:
    """Search for an incidence-preserving bijection from ``c1`` onto ``c2``.

    Points map to points and lines to lines.  Returns the combined label
    mapping, or None when no isomorphism exists.  Backtracking with
    degree-and-neighborhood refinement; intended for desk-scale inputs.
    """
    if len(c1.points) != len(c2.points) or len(c1.lines) != len(c2.lines):
        return None
    if len(c1.flags) != len(c2.flags):
        return None
    g1, g2 = levi_graph(c1), levi_graph(c2)
    col1, col2 = _refine_colors(g1), _refine_colors(g2)

    def class_sizes(col):
        sizes: dict[int, int] = {}
        for c in col.values():
            sizes[c] = sizes.get(c, 0) + 1
        return sizes

    if sorted(class_sizes(col1).values()) != sorted(class_sizes(col2).values()):
        return None

    verts1 = sorted(g1.black + g1.white, key=lambda v: (class_sizes(col1)[col1[v]], str(v)))
    adj1 = {v: set(g1.adjacency[v]) for v in g1.black + g1.white}
    adj2 = {v: set(g2.adjacency[v]) for v in g2.black + g2.white}
    black1, black2 = set(g1.black), set(g2.black)

    def candidates(v):
        side = v in black1
        return [
            w
            for w in (g2.black if side else g2.white)
            if g2.degree(w) == g1.degree(v)
        ]

    mapping: dict[Label, Label] = {}
    used: set[Label] = set()

    def extend(i: int) -> bool:
        if i == len(verts1):
            return True
        v = verts1[i]
        for w in candidates(v):
            if w in used:
                continue
            ok = True
            for u, x in mapping.items():
                if (u in adj1[v]) != (x in adj2[w]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    if extend(0):
        return dict(mapping)
    return None


def parse_lines_text(text: str) -> IncidenceStructure:
    """Parse the "lines-of-points" text format.

    One structure line per row as whitespace-separated point labels.  A
    leading ``name:`` token names the line; otherwise lines are
    auto-labelled L1..Lb.  ``#`` starts a comment.
    """
    points: list[str] = []
    seen_points: set[str] = set()
    lines: list[str] = []
    flags: list[tuple[str, str]] = []
    auto = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        row = raw.split("#", 1)[0]
        tokens = row.split()
        if not tokens:
            continue
        if tokens[0].endswith(":"):
            name = tokens[0][:-1]
            if not name:
                raise ParseError("empty line name before ':'", lineno, 1)
            members = tokens[1:]
            if not members:
                raise ParseError(f"line {name!r} lists no points", lineno)
        else:
            auto += 1
            name = f"L{auto}"
            members = tokens
        lines.append(name)
        for tok in members:
            if tok not in seen_points:
                seen_points.add(tok)
                points.append(tok)
            flags.append((tok, name))
    if not lines:
        raise ParseError("no structure lines found", max(1, text.count("\n") + 1))
    return build(points, lines, flags)


def format_lines_text(structure: IncidenceStructure) -> str:
    rows = []
    for l in structure.lines:
        members = " ".join(str(p) for p in structure.points_of(l))
        rows.append(f"{l}: {members}")
    return "\n".join(rows) + "\n"
