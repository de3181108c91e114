"""Bend-free straight-line drawings of digon-free diagrams.

The crossing graph of a digon-free monotone arrangement (crossings as
vertices, finite wire arcs as edges) is simple and 2-connected, so it
admits an embedding-preserving straight-line drawing whose outer cycle
sits on a convex polygon.  Each wire then closes up through infinity
along the straight line spanned by its first and last crossing, taken
outside the polygon.  Every breakpoint of every wire is a crossing, so
the drawing has no bends.

Coordinates are exact rationals throughout: the outer polygon vertices
are rational points on the unit circle, interior vertices solve the
barycentric (Tutte) system exactly, and the final drawing is audited
with exact predicates (distinctness, pairwise segment disjointness,
angular rotation orders, chord-line behavior).  The audit never passes
a degenerate drawing; on failure the polygon parameters are re-chosen.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Hashable, Sequence

from ..errors import HasDigons, NotTwoConnected, QuasilineError
from ..rotmaps import RotationMap
from .diagram import GeneralizedWiringDiagram
from .faces import arrangement_map, arc_of_edge, detect_digons

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class StraightDrawing:
    """Exact straight-line drawing of a diagram.

    ``positions`` gives one point per event; ``outer_cycle`` lists the
    convex-polygon events counterclockwise; ``chords`` holds, per wire,
    the pair (first event, last event) spanning its line through
    infinity; ``wire_paths`` lists each wire's events left to right.
    """

    n: int
    positions: tuple[Point, ...]
    outer_cycle: tuple[int, ...]
    chords: tuple[tuple[int, int], ...]
    wire_paths: tuple[tuple[int, ...], ...]


# -- exact geometric predicates ----------------------------------------------


def _sub(p: Point, q: Point) -> Point:
    return (p[0] - q[0], p[1] - q[1])


def _cross(p: Point, q: Point) -> Fraction:
    return p[0] * q[1] - p[1] * q[0]


def _orient(a: Point, b: Point, c: Point) -> int:
    v = _cross(_sub(b, a), _sub(c, a))
    return (v > 0) - (v < 0)


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    """p lies on the closed segment [a, b] (collinearity included)."""
    if _orient(a, b, p) != 0:
        return False
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def _segments_share_point(a: Point, b: Point, c: Point, d: Point) -> bool:
    o1, o2 = _orient(a, b, c), _orient(a, b, d)
    o3, o4 = _orient(c, d, a), _orient(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    return (
        _on_segment(a, b, c)
        or _on_segment(a, b, d)
        or _on_segment(c, d, a)
        or _on_segment(c, d, b)
    )


def _direction_cmp(u: Point, v: Point) -> int:
    """Counterclockwise comparison of direction vectors starting at the
    positive x-axis; ties mean equal directions."""

    def half(w: Point) -> int:
        if w[1] > 0 or (w[1] == 0 and w[0] > 0):
            return 0
        return 1

    hu, hv = half(u), half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    c = _cross(u, v)
    return 0 if c == 0 else (-1 if c > 0 else 1)


def _line_intersection(a1: Point, b1: Point, a2: Point, b2: Point) -> Point | None:
    d1, d2 = _sub(b1, a1), _sub(b2, a2)
    denom = _cross(d1, d2)
    if denom == 0:
        return None
    s = _cross(_sub(a2, a1), d2) / denom
    return (a1[0] + s * d1[0], a1[1] + s * d1[1])


def _strictly_inside_convex(polygon: Sequence[Point], p: Point) -> bool:
    k = len(polygon)
    return all(
        _orient(polygon[i], polygon[(i + 1) % k], p) > 0 for i in range(k)
    )


# -- crossing graph -----------------------------------------------------------


def _finite_graph(diagram: GeneralizedWiringDiagram):
    """G: events as vertices, finite arcs as edges.  Returns the rotation
    map of G (closing darts dropped) and the list of (wire, arc) keys."""
    full = arrangement_map(diagram)
    finite_ids = [e for e, s in enumerate(full.signature) if s == 1]
    renumber = {e: i for i, e in enumerate(finite_ids)}
    edges = tuple(full.edges[e] for e in finite_ids)
    rotations = {
        v: tuple((renumber[e], end) for e, end in full.rotations[v] if e in renumber)
        for v in full.vertices
    }
    gmap = RotationMap(full.vertices, edges, rotations, (1,) * len(edges))
    arcs = tuple(arc_of_edge(diagram, e) for e in finite_ids)
    return gmap, arcs


def _check_two_connected(gmap: RotationMap) -> None:
    pairs = [tuple(sorted(e, key=str)) for e in gmap.edges]
    if len(set(pairs)) != len(pairs) or any(u == v for u, v in gmap.edges):
        raise NotTwoConnected("crossing graph is not simple")
    vertices = gmap.vertices
    if len(vertices) < 3:
        raise NotTwoConnected("crossing graph has fewer than 3 vertices")
    adjacency: dict[Hashable, list[Hashable]] = {v: [] for v in vertices}
    for u, v in gmap.edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    # Iterative articulation-point search (Hopcroft-Tarjan).
    index = {v: i for i, v in enumerate(vertices)}
    disc = [0] * len(vertices)
    low = [0] * len(vertices)
    visited = [False] * len(vertices)
    parent = [-1] * len(vertices)
    timer = 1
    root = index[vertices[0]]
    stack = [(root, iter(adjacency[vertices[root]]))]
    visited[root] = True
    disc[root] = low[root] = timer
    root_children = 0
    while stack:
        v, it = stack[-1]
        advanced = False
        for u_label in it:
            u = index[u_label]
            if not visited[u]:
                visited[u] = True
                timer += 1
                disc[u] = low[u] = timer
                parent[u] = v
                if v == root:
                    root_children += 1
                stack.append((u, iter(adjacency[u_label])))
                advanced = True
                break
            elif u != parent[v]:
                low[v] = min(low[v], disc[u])
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if parent[v] == p and p != root and low[v] >= disc[p]:
                    raise NotTwoConnected(
                        f"crossing {gmap.vertices[p]!r} is a cutvertex"
                    )
    if not all(visited):
        raise NotTwoConnected("crossing graph is disconnected")
    if root_children > 1:
        raise NotTwoConnected(f"crossing {gmap.vertices[root]!r} is a cutvertex")


def _outer_orbit(
    diagram: GeneralizedWiringDiagram, gmap: RotationMap, arcs
) -> tuple:
    """The face orbit of G that walks the outer boundary.

    The globally first event is the leftmost vertex of G; the corner
    between the out-darts of its window's bottom and top wires opens
    toward the outer region, so the orbit arriving there is the outer
    face walk.
    """
    wires = diagram.window_wires(0)
    top_exit = wires[-1]
    gid = arcs.index((top_exit, 0))
    target = ((gid, 1), 1)
    for orbit in gmap.face_orbits:
        if target in orbit:
            return orbit
    raise QuasilineError("outer face identification failed")


def _face_vertex_cycles(gmap: RotationMap, outer) -> tuple[list, list]:
    """Vertex cycles of internal faces (one per face) and the outer cycle."""
    orbit_index: dict = {}
    for i, orbit in enumerate(gmap.face_orbits):
        for state in orbit:
            orbit_index[state] = i
    outer_i = orbit_index[outer[0]]
    outer_rev = orbit_index[gmap._reverse_state(outer[0])]
    internal = []
    seen = {outer_i, outer_rev}
    for i, orbit in enumerate(gmap.face_orbits):
        if i in seen:
            continue
        j = orbit_index[gmap._reverse_state(orbit[0])]
        seen.update((i, j))
        internal.append([gmap.attach(d) for d, _ in orbit])
    outer_cycle = [gmap.attach(d) for d, _ in outer]
    return internal, outer_cycle


# -- outer polygon ------------------------------------------------------------


def _circle_points(k: int, attempt: int) -> list[Point]:
    """k distinct rational points on the unit circle in counterclockwise
    order (tangent half-angle parametrization)."""
    denom = 64 << attempt
    offset = math.pi / (7 * k) * attempt
    ts: list[Fraction] = []
    for i in range(k):
        theta = -math.pi + (2 * i + 1) * math.pi / k + offset
        t = Fraction(round(math.tan(theta / 2) * denom), denom)
        ts.append(t)
    if len(set(ts)) != k or sorted(ts) != ts:
        return _circle_points(k, attempt + 7)
    return [
        ((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)) for t in ts
    ]


# -- Tutte system -------------------------------------------------------------


def _solve_fraction_system(
    matrix: list[list[Fraction]], rhs: list[list[Fraction]]
) -> list[list[Fraction]]:
    """Gaussian elimination over the rationals; rhs holds one column per
    coordinate."""
    m = len(matrix)
    a = [row[:] + r[:] for row, r in zip(matrix, rhs)]
    cols = len(a[0])
    for col in range(m):
        pivot = next((r for r in range(col, m) if a[r][col] != 0), None)
        if pivot is None:
            raise QuasilineError("singular barycentric system")
        a[col], a[pivot] = a[pivot], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(m):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[m:cols] for row in a]


def _tutte_positions(
    adjacency: dict, boundary: dict, interior: list
) -> dict:
    if not interior:
        return dict(boundary)
    index = {v: i for i, v in enumerate(interior)}
    m = len(interior)
    matrix = [[Fraction(0)] * m for _ in range(m)]
    rhs = [[Fraction(0), Fraction(0)] for _ in range(m)]
    for v in interior:
        i = index[v]
        matrix[i][i] = Fraction(len(adjacency[v]))
        for u in adjacency[v]:
            if u in index:
                matrix[i][index[u]] -= 1
            else:
                rhs[i][0] += boundary[u][0]
                rhs[i][1] += boundary[u][1]
    solution = _solve_fraction_system(matrix, rhs)
    out = dict(boundary)
    for v, i in index.items():
        out[v] = (solution[i][0], solution[i][1])
    return out


# -- audit --------------------------------------------------------------------


def _chord_direction(
    positions: Sequence[Point], first: int, last: int, at_last: bool
) -> Point:
    d = _sub(positions[last], positions[first])
    return d if at_last else (-d[0], -d[1])


def _audit(
    diagram: GeneralizedWiringDiagram,
    positions: list[Point],
    outer_cycle: list[int],
    chords: list[tuple[int, int]],
) -> bool:
    if len(set(positions)) != len(positions):
        return False
    polygon = [positions[v] for v in outer_cycle]

    full = arrangement_map(diagram)
    # Segment audit: finite arcs must be pairwise disjoint except at a
    # shared crossing.
    finite = [
        (e, uv) for e, uv in enumerate(full.edges) if full.signature[e] == 1
    ]
    for (e1, (u1, v1)), (e2, (u2, v2)) in itertools.combinations(finite, 2):
        shared = {u1, v1} & {u2, v2}
        a, b = positions[u1], positions[v1]
        c, d = positions[u2], positions[v2]
        if not shared:
            if _segments_share_point(a, b, c, d):
                return False
        else:
            p = positions[next(iter(shared))]
            for q in (a, b):
                if q != p and _on_segment(c, d, q):
                    return False
            for q in (c, d):
                if q != p and _on_segment(a, b, q):
                    return False

    # Rotation audit: at every crossing the drawn counterclockwise order
    # of darts (chord rays included) must equal the stored rotation.
    wire_first_last = {w + 1: (path[0], path[-1]) for w, path in enumerate(
        tuple(diagram.wire_events(w + 1) for w in range(diagram.n))
    )}
    for v in range(diagram.event_count):
        rotation = full.rotations[v]
        directions = []
        for dart in rotation:
            e, end = dart
            if full.signature[e] == 1:
                other = full.edges[e][1 - end]
                directions.append(_sub(positions[other], positions[v]))
            else:
                wire = arc_of_edge(diagram, e)[0]
                first, last = wire_first_last[wire]
                directions.append(
                    _chord_direction(positions, first, last, at_last=end == 0)
                )
        for d1, d2 in itertools.combinations(directions, 2):
            if _direction_cmp(d1, d2) == 0:
                return False
        order = sorted(range(len(directions)), key=cmp_to_key(
            lambda i, j: _direction_cmp(directions[i], directions[j])
        ))
        k = len(order)
        shift = order.index(0)
        if [order[(shift + i) % k] for i in range(k)] != list(range(k)):
            return False

    # Chord audit: pairwise non-parallel; crossings confined to the
    # polygon's interior or to a shared crossing vertex.
    for (w1, (f1, l1)), (w2, (f2, l2)) in itertools.combinations(
        list(enumerate(chords, start=1)), 2
    ):
        z = _line_intersection(positions[f1], positions[l1], positions[f2], positions[l2])
        if z is None:
            return False
        shared = {f1, l1} & {f2, l2}
        if shared:
            if len(shared) != 1 or z != positions[next(iter(shared))]:
                return False
        elif not _strictly_inside_convex(polygon, z):
            return False
    return True


# -- main entry ---------------------------------------------------------------

_MAX_ATTEMPTS = 6


def straighten(diagram: GeneralizedWiringDiagram) -> StraightDrawing:
    """Embedding-preserving straight-line drawing with zero bends.

    Requires a digon-free diagram (``HasDigons`` otherwise).  The finite
    crossing graph is verified simple and 2-connected
    (``NotTwoConnected`` signals an internal invariant violation).
    """
    digons = detect_digons(diagram)
    if digons:
        raise HasDigons(
            f"{len(digons)} digon(s) found; straightening needs a digon-free diagram"
        )
    gmap, arcs = _finite_graph(diagram)
    _check_two_connected(gmap)

    wire_paths = tuple(diagram.wire_events(w) for w in range(1, diagram.n + 1))
    for w, path in enumerate(wire_paths, start=1):
        if len(path) < 2:
            raise NotTwoConnected(
                f"wire {w} has a single crossing; impossible without digons"
            )
    chords = [(path[0], path[-1]) for path in wire_paths]

    outer = _outer_orbit(diagram, gmap, arcs)
    internal_faces, outer_walk = _face_vertex_cycles(gmap, outer)
    if len(set(outer_walk)) != len(outer_walk):
        raise NotTwoConnected("outer boundary is not a simple cycle")
    for w, (first, last) in enumerate(chords, start=1):
        if first not in set(outer_walk) or last not in set(outer_walk):
            raise QuasilineError(
                f"wire {w} does not reach the outer boundary; identification failed"
            )
    outer_ccw = list(reversed(outer_walk))

    adjacency: dict = {v: [] for v in gmap.vertices}
    for u, v in gmap.edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    for s, cycle in enumerate(internal_faces):
        star = ("star", s)
        adjacency[star] = []
        for v in cycle:
            adjacency[star].append(v)
            adjacency[v].append(star)

    interior = [v for v in adjacency if v not in set(outer_ccw)]
    for attempt in range(_MAX_ATTEMPTS):
        polygon = _circle_points(len(outer_ccw), attempt)
        boundary = {v: polygon[i] for i, v in enumerate(outer_ccw)}
        placed = _tutte_positions(adjacency, boundary, interior)
        positions = [placed[v] for v in range(diagram.event_count)]
        candidates = [positions]
        mirrored = [(x, -y) for x, y in positions]
        candidates.append(mirrored)
        for pts in candidates:
            cycle = outer_ccw if pts is positions else list(reversed(outer_ccw))
            if _audit(diagram, pts, cycle, chords):
                return StraightDrawing(
                    diagram.n,
                    tuple(pts),
                    tuple(cycle),
                    tuple(chords),
                    wire_paths,
                )
    raise QuasilineError("straightening audit failed for all polygon parameters")


# -- serialization ------------------------------------------------------------


def _fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def drawing_to_json_dict(drawing: StraightDrawing) -> dict:
    return {
        "n": drawing.n,
        "positions": [
            [_fraction_str(x), _fraction_str(y)] for x, y in drawing.positions
        ],
        "outer_cycle": list(drawing.outer_cycle),
        "chords": [list(c) for c in drawing.chords],
        "wire_paths": [list(p) for p in drawing.wire_paths],
    }


def drawing_from_json_dict(data: dict) -> StraightDrawing:
    positions = tuple(
        (Fraction(x), Fraction(y)) for x, y in data["positions"]
    )
    return StraightDrawing(
        int(data["n"]),
        positions,
        tuple(int(v) for v in data["outer_cycle"]),
        tuple((int(a), int(b)) for a, b in data["chords"]),
        tuple(tuple(int(v) for v in p) for p in data["wire_paths"]),
    )
