"""Wiring diagrams: construction, sweeps, faces, local moves, straightening."""

from .diagram import (
    AbstractArrangement,
    Event,
    GeneralizedWiringDiagram,
    SweepDigraph,
    arrangement_from_diagram,
    diagram_from_json_dict,
    diagram_from_realization,
    diagram_from_sequence,
    diagram_to_json_dict,
    find_monotone_marking,
    is_acyclic,
    is_proper_marking,
    sequence_from_diagram,
    sweep_digraph,
    topological_order,
    topological_sweep,
)
from .euclid import diagram_from_lines
from .faces import (
    ArrangementFace,
    arrangement_map,
    detect_digons,
    euler_characteristic,
    trace_faces_disk,
)
from .mutations import (
    apply_digon_move,
    apply_triangle_move,
    insert_digon,
    remove_digon,
    removable_digons,
    triangle_moves,
)
from .straighten import (
    StraightDrawing,
    drawing_from_json_dict,
    drawing_to_json_dict,
    straighten,
)

__all__ = [
    "AbstractArrangement",
    "ArrangementFace",
    "Event",
    "GeneralizedWiringDiagram",
    "StraightDrawing",
    "SweepDigraph",
    "apply_digon_move",
    "apply_triangle_move",
    "arrangement_from_diagram",
    "arrangement_map",
    "detect_digons",
    "diagram_from_json_dict",
    "diagram_from_lines",
    "diagram_from_realization",
    "diagram_from_sequence",
    "diagram_to_json_dict",
    "drawing_from_json_dict",
    "drawing_to_json_dict",
    "euler_characteristic",
    "find_monotone_marking",
    "insert_digon",
    "is_acyclic",
    "is_proper_marking",
    "removable_digons",
    "remove_digon",
    "sequence_from_diagram",
    "straighten",
    "sweep_digraph",
    "topological_order",
    "topological_sweep",
    "trace_faces_disk",
    "triangle_moves",
]
