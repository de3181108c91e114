"""Maps on closed surfaces induced by designated crossings.

Keeping only the designated crossings of a wiring diagram and joining
consecutive ones along each wire (one closing edge per wire runs through
the line at infinity) yields a graph embedded on a closed surface via a
rotation system and an edge signature: rotations are read counter-
clockwise in the disk, and an edge is negative exactly when its arc
crosses the disk boundary.  The surface is always nonorientable for
diagram-derived schemes, because each wire closes up through infinity
with an odd number of negative edges.

Straight-ahead walks (leave every vertex by the dart opposite the entry
dart) recover the wires; Euler characteristic and genus classify the
surface; a canonical fingerprint, invariant under relabelling,
regauging, and reflection, distinguishes mutation classes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Mapping, Optional, Sequence

from .errors import (
    DisconnectedScheme,
    ValidationError,
    WireWithoutPoint,
)
from .rotmaps import Dart, RotationMap
from .wiring.diagram import GeneralizedWiringDiagram

Label = Hashable


@dataclass(frozen=True)
class EmbeddingScheme:
    """A graph with rotation system, signature and opposite-dart pairing.

    Vertex degrees are even and at least four (every line contributes two
    darts at each of its points); the opposite pairing marks same-line
    continuation and always sits deg/2 apart in the rotation.  ``lines``
    optionally tags each edge with the line it belongs to.
    """

    vertices: tuple[Label, ...]
    edges: tuple[tuple[Label, Label], ...]
    rotations: Mapping[Label, tuple[Dart, ...]]
    signature: tuple[int, ...]
    lines: tuple[Optional[Label], ...]

    def __post_init__(self):
        rm = self.rotmap
        if not rm.is_connected():
            raise DisconnectedScheme("embedding schemes must be connected")
        for v in self.vertices:
            deg = rm.degree(v)
            if deg < 4 or deg % 2 != 0:
                raise ValidationError(
                    f"vertex {v!r} has degree {deg}; even degree >= 4 required"
                )
        if len(self.lines) != len(self.edges):
            raise ValidationError("need one line tag (or None) per edge")

    @cached_property
    def rotmap(self) -> RotationMap:
        return RotationMap(self.vertices, self.edges, self.rotations, self.signature)

    @cached_property
    def opposite(self) -> dict[Dart, Dart]:
        """Same-line continuation: the dart deg/2 places along the rotation."""
        table: dict[Dart, Dart] = {}
        for v in self.vertices:
            rot = self.rotations[v]
            half = len(rot) // 2
            for i, d in enumerate(rot):
                table[d] = rot[(i + half) % len(rot)]
        return table

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def make_scheme(
    vertices: Sequence[Label],
    edges: Sequence[tuple[Label, Label]],
    rotations: Mapping[Label, Sequence[Dart]],
    signature: Sequence[int],
    lines: Optional[Sequence[Optional[Label]]] = None,
) -> EmbeddingScheme:
    if lines is None:
        lines = [None] * len(edges)
    return EmbeddingScheme(
        tuple(vertices),
        tuple((u, v) for u, v in edges),
        {v: tuple(r) for v, r in rotations.items()},
        tuple(signature),
        tuple(lines),
    )


def scheme_from_realization(diagram: GeneralizedWiringDiagram) -> EmbeddingScheme:
    """The surface map of a diagram's designated points.

    Vertices are the designated points; edges join points consecutive
    along a wire (non-designated crossings are skipped), with the closing
    edge of each wire carrying signature -1.  Raises
    ``WireWithoutPoint`` when some wire has no designated crossing.
    """
    designated = diagram.designated_events()
    designated_set = set(designated)
    label = {i: diagram.events[i].point for i in designated}
    vertices = tuple(label[i] for i in designated)

    wire_points: dict[int, list[int]] = {}
    for w in range(1, diagram.n + 1):
        pts = [i for i in diagram.wire_events(w) if i in designated_set]
        if not pts:
            raise WireWithoutPoint(f"wire {w} carries no designated point")
        wire_points[w] = pts

    edges: list[tuple[Label, Label]] = []
    signature: list[int] = []
    lines: list[Optional[Label]] = []
    edge_id: dict[tuple[int, int], int] = {}
    for w in range(1, diagram.n + 1):
        pts = wire_points[w]
        m = len(pts)
        for j in range(m):
            edge_id[(w, j)] = len(edges)
            edges.append((label[pts[j]], label[pts[(j + 1) % m]]))
            signature.append(-1 if j == m - 1 else 1)
            lines.append(w)

    def out_dart(w: int, event: int) -> Dart:
        j = wire_points[w].index(event)
        return (edge_id[(w, j)], 0)

    def in_dart(w: int, event: int) -> Dart:
        pts = wire_points[w]
        j = pts.index(event)
        return (edge_id[(w, (j - 1) % len(pts))], 1)

    rotations: dict[Label, tuple[Dart, ...]] = {}
    for i in designated:
        wires = diagram.window_wires(i)
        rotations[label[i]] = tuple(out_dart(w, i) for w in wires) + tuple(
            in_dart(w, i) for w in wires
        )
    return make_scheme(vertices, edges, rotations, signature, lines)


# -- analysis -----------------------------------------------------------------


@dataclass(frozen=True)
class MapSummary:
    V: int
    E: int
    F: int
    euler: int
    orientable: bool
    genus: int
    face_vector: tuple[int, ...]
    fingerprint: str


def fingerprint(scheme: EmbeddingScheme) -> str:
    """Canonical text encoding; equal for schemes related by vertex
    relabelling, regauging of local orientations, and global reflection."""
    code = scheme.rotmap.canonical_encoding()
    return "m" + ",".join(str(x) for x in code)


def trace_and_summarize(scheme: EmbeddingScheme) -> MapSummary:
    rm = scheme.rotmap
    faces = rm.faces
    V, E, F = len(rm.vertices), len(rm.edges), len(faces)
    euler = V - E + F
    orientable = rm.is_orientable()
    if orientable:
        if euler % 2 != 0:
            raise ValidationError("orientable map with odd Euler characteristic")
        genus = (2 - euler) // 2
    else:
        genus = 2 - euler
    return MapSummary(
        V=V,
        E=E,
        F=F,
        euler=euler,
        orientable=orientable,
        genus=genus,
        face_vector=rm.face_lengths(),
        fingerprint=fingerprint(scheme),
    )


@dataclass(frozen=True)
class StraightAheadWalk:
    """A closed walk leaving every vertex opposite to its entry dart."""

    line: Optional[Label]
    vertices: tuple[Label, ...]
    edge_indices: tuple[int, ...]
    negative_count: int

    def __len__(self) -> int:
        return len(self.edge_indices)

    @property
    def is_closed(self) -> bool:
        return True

    @property
    def is_simple(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)


def straight_ahead_walks(scheme: EmbeddingScheme) -> tuple[StraightAheadWalk, ...]:
    """One walk per line; together they partition the edge set."""
    rm = scheme.rotmap
    opposite = scheme.opposite

    def step(d: Dart) -> Dart:
        return opposite[rm.rev(d)]

    remaining = set(rm.darts())
    walks = []
    while remaining:
        start = min(remaining)
        orbit = [start]
        d = step(start)
        while d != start:
            orbit.append(d)
            d = step(d)
        reverse = {rm.rev(d) for d in orbit}
        if reverse & set(orbit):
            raise ValidationError("straight-ahead walk retraces an edge")
        remaining.difference_update(orbit)
        remaining.difference_update(reverse)
        edge_indices = tuple(d[0] for d in orbit)
        line_tags = {scheme.lines[e] for e in edge_indices}
        line = line_tags.pop() if len(line_tags) == 1 else None
        walks.append(
            StraightAheadWalk(
                line=line,
                vertices=tuple(rm.attach(d) for d in orbit),
                edge_indices=edge_indices,
                negative_count=sum(
                    1 for e in edge_indices if scheme.signature[e] == -1
                ),
            )
        )
    return tuple(walks)


# -- serialization ------------------------------------------------------------


def scheme_to_json_dict(scheme: EmbeddingScheme) -> dict:
    vindex = {v: i for i, v in enumerate(scheme.vertices)}
    return {
        "vertices": [str(v) for v in scheme.vertices],
        "edges": [[vindex[u], vindex[v]] for u, v in scheme.edges],
        "rotations": [
            [[e, end] for e, end in scheme.rotations[v]] for v in scheme.vertices
        ],
        "signature": list(scheme.signature),
        "lines": [None if l is None else str(l) for l in scheme.lines],
    }


def scheme_from_json_dict(data: dict) -> EmbeddingScheme:
    try:
        vertices = [str(v) for v in data["vertices"]]
        edges = [(vertices[u], vertices[v]) for u, v in data["edges"]]
        rotations = {
            vertices[i]: tuple((int(e), int(end)) for e, end in rot)
            for i, rot in enumerate(data["rotations"])
        }
        signature = [int(s) for s in data["signature"]]
        lines = data.get("lines") or [None] * len(edges)
    except (KeyError, TypeError, IndexError) as exc:
        raise ValidationError(f"malformed scheme JSON: {exc}") from exc
    return make_scheme(vertices, edges, rotations, signature, lines)


def summary_to_json_dict(summary: MapSummary) -> dict:
    return {
        "V": summary.V,
        "E": summary.E,
        "F": summary.F,
        "euler": summary.euler,
        "orientable": summary.orientable,
        "genus": summary.genus,
        "face_vector": list(summary.face_vector),
        "fingerprint": summary.fingerprint,
    }


def summary_to_json(summary: MapSummary) -> str:
    return json.dumps(summary_to_json_dict(summary), sort_keys=True)
