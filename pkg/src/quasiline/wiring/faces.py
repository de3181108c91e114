"""Cell complex of a wiring diagram in the projective plane.

The crossings of a diagram cut every wire into arcs; exactly one arc per
wire runs through the line at infinity (the antipodal boundary of the
disk model).  Vertices, arcs and the faces traced from the rotation
system form the arrangement's cell complex on the projective plane, so
V - E + F = 1 always holds.  Digons (2-sided faces) are the obstruction
to bend-free straightening.
"""

from __future__ import annotations

from dataclasses import dataclass
from ..rotmaps import RotationMap
from .diagram import GeneralizedWiringDiagram

ArcId = tuple[int, int]  # (wire, arc index along the wire); the last arc closes
                         # through infinity


def arrangement_map(diagram: GeneralizedWiringDiagram) -> RotationMap:
    """The diagram's cell complex as a signed rotation map.

    Vertices are event indices.  Wire w with k events contributes k
    edges; edge (w, j) joins its j-th and (j+1)-th events and the wrap
    edge (w, k-1) carries signature -1 because it crosses the boundary.
    Rotations follow the drawing counterclockwise: at an event with
    window wires w_1..w_l (top to bottom) the order is
    out(w_1)..out(w_l), in(w_1)..in(w_l).
    """
    edge_ids: dict[ArcId, int] = {}
    edges: list[tuple[int, int]] = []
    signature: list[int] = []
    for w in range(1, diagram.n + 1):
        evs = diagram.wire_events(w)
        k = len(evs)
        for j in range(k):
            edge_ids[(w, j)] = len(edges)
            edges.append((evs[j], evs[(j + 1) % k]))
            signature.append(-1 if j == k - 1 else 1)

    def out_dart(wire: int, event: int):
        j = diagram.wire_events(wire).index(event)
        return (edge_ids[(wire, j)], 0)

    def in_dart(wire: int, event: int):
        evs = diagram.wire_events(wire)
        j = evs.index(event)
        return (edge_ids[(wire, (j - 1) % len(evs))], 1)

    rotations = {}
    for i in range(diagram.event_count):
        wires = diagram.window_wires(i)
        rotations[i] = tuple(out_dart(w, i) for w in wires) + tuple(
            in_dart(w, i) for w in wires
        )
    return RotationMap(
        tuple(range(diagram.event_count)), tuple(edges), rotations, tuple(signature)
    )


def arc_of_edge(diagram: GeneralizedWiringDiagram, edge_index: int) -> ArcId:
    """Inverse of the edge numbering used by :func:`arrangement_map`."""
    count = 0
    for w in range(1, diagram.n + 1):
        k = len(diagram.wire_events(w))
        if edge_index < count + k:
            return (w, edge_index - count)
        count += k
    raise IndexError(edge_index)


@dataclass(frozen=True)
class ArrangementFace:
    """A face of the cell complex, as the cyclic list of arc sides walked."""

    sides: tuple[ArcId, ...]

    def __len__(self) -> int:
        return len(self.sides)


def trace_faces_disk(diagram: GeneralizedWiringDiagram) -> tuple[ArrangementFace, ...]:
    """All faces of the arrangement, infinity arcs included."""
    rm = arrangement_map(diagram)
    faces = []
    for orbit in rm.faces:
        sides = tuple(arc_of_edge(diagram, dart[0]) for dart, _ in orbit)
        faces.append(ArrangementFace(sides))
    return tuple(sorted(faces, key=lambda f: (len(f), f.sides)))


def detect_digons(diagram: GeneralizedWiringDiagram) -> tuple[ArrangementFace, ...]:
    """Faces bounded by exactly two arcs."""
    return tuple(f for f in trace_faces_disk(diagram) if len(f) == 2)


def euler_characteristic(diagram: GeneralizedWiringDiagram) -> int:
    rm = arrangement_map(diagram)
    return rm.euler_characteristic()
