"""Command line front end: validation, realization, wiring diagrams,
sweeps, surface maps, straightening, and SVG figure emission.

One binary with subcommands; all outputs are deterministic for a fixed
seed (JSON keys sorted, SVG attributes emitted in fixed order).  Exit
codes: 0 ok, 2 validation failure, 3 parse error, 4 precondition error,
1 internal error.

File formats: ``*.lines`` incidence text, ``*.seq.json`` move sequences,
``*.wd.json`` wiring diagrams, ``*.euclid.json`` Euclidean line input,
``*.map.json`` surface map summaries, ``*.drawing.json`` straight-line
drawings, ``*.svg`` figures.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence
from xml.etree import ElementTree as ET

from .errors import (
    ParseError,
    PreconditionError,
    QuasilineError,
    ValidationError,
)
from .incidence import (
    IncidenceStructure,
    configuration_signature,
    is_lineal,
    levi_graph,
    parse_lines_text,
)
from .realization import RealizationPlan, default_plan, realize, unwanted_crossing_count
from .sequences import sequence_from_json_dict, sequence_to_json_dict
from .surface import (
    fingerprint,
    scheme_from_realization,
    scheme_to_json_dict,
    summary_to_json_dict,
    trace_and_summarize,
)
from .wiring import (
    GeneralizedWiringDiagram,
    diagram_from_json_dict,
    diagram_from_lines,
    diagram_from_realization,
    diagram_from_sequence,
    diagram_to_json_dict,
    drawing_to_json_dict,
    straighten,
    sweep_digraph,
    topological_sweep,
)
from .wiring.straighten import StraightDrawing

DEFAULT_SEED = 20141007


@dataclass
class JobConfig:
    subcommand: str
    inputs: list[str]
    output: Optional[str] = None
    format: str = "json"
    seed: int = DEFAULT_SEED
    plan_path: Optional[str] = None


# -- input loading -------------------------------------------------------------


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc


def load_structure(path: str) -> IncidenceStructure:
    return parse_lines_text(Path(path).read_text())


def _plan_from_json(structure: IncidenceStructure, data: dict) -> RealizationPlan:
    base = default_plan(structure)
    numbering = tuple(data.get("line_numbering", base.line_numbering))
    order = tuple(data.get("point_order", base.point_order))
    orders = dict(base.point_line_orders)
    for p, ls in data.get("point_line_orders", {}).items():
        orders[p] = tuple(ls)
    return RealizationPlan(numbering, order, orders)


def load_plan(structure: IncidenceStructure, path: Optional[str]) -> RealizationPlan:
    if path is None:
        return default_plan(structure)
    return _plan_from_json(structure, _load_json(path))


def _euclid_from_json(data: dict) -> GeneralizedWiringDiagram:
    try:
        lines = [tuple(Fraction(str(x)) for x in row) for row in data["lines"]]
        points = [
            tuple(Fraction(str(x)) for x in row) for row in data.get("points", [])
        ]
        labels = data.get("point_labels")
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed euclidean JSON: {exc}") from exc
    return diagram_from_lines(lines, points, labels)


def load_diagram(path: str, plan_path: Optional[str] = None) -> GeneralizedWiringDiagram:
    """Accept incidence text, sequence JSON, diagram JSON, or Euclidean JSON."""
    name = Path(path).name
    if name.endswith(".lines"):
        structure = load_structure(path)
        return diagram_from_realization(realize(structure, load_plan(structure, plan_path)))
    data = _load_json(path)
    # outputs of other subcommands are accepted back as inputs
    if "diagram" in data:
        data = data["diagram"]
    elif "sequence" in data:
        data = data["sequence"]
    if name.endswith(".seq.json") or "moves" in data:
        return diagram_from_sequence(sequence_from_json_dict(data))
    if name.endswith(".euclid.json") or ("lines" in data and "events" not in data):
        return _euclid_from_json(data)
    return diagram_from_json_dict(data)


# -- output --------------------------------------------------------------------


def _emit(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _emit_json(payload: dict, config: JobConfig) -> None:
    payload = {"seed": config.seed, **payload}
    _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", config.output)


# -- SVG -----------------------------------------------------------------------


def _fmt(x: float) -> str:
    return f"{x:.3f}".rstrip("0").rstrip(".")


def diagram_svg(diagram: GeneralizedWiringDiagram) -> str:
    """Schematic wiring figure: wires as polylines, designated crossings
    as filled disks, unwanted crossings as open circles."""
    sx, sy, margin = 60.0, 36.0, 24.0
    width = margin * 2 + sx * (diagram.event_count + 1)
    height = margin * 2 + sy * (diagram.n - 1)

    def y_of(track: int) -> float:
        return margin + sy * (track - 1)

    def x_of(slot: int) -> float:
        return margin + sx * (slot + 0.5)

    svg = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "width": _fmt(width),
            "height": _fmt(height),
            "viewBox": f"0 0 {_fmt(width)} {_fmt(height)}",
            "data-kind": "wiring-diagram",
        },
    )
    palette = [
        "#1b6ca8", "#c0392b", "#1e8449", "#8e44ad", "#d68910",
        "#17a589", "#7b241c", "#2e4053", "#a04000", "#5d6d7e",
    ]
    for w in range(1, diagram.n + 1):
        track = w
        pts = [(margin * 0.3, y_of(track))]
        for i in diagram.wire_events(w):
            ev = diagram.events[i]
            perm = diagram.permutation_before(i)
            before = perm.index(w) + 1
            after = ev.start + ev.stop - before
            pts.append((x_of(i) - sx * 0.3, y_of(before)))
            pts.append((x_of(i) + sx * 0.3, y_of(after)))
            track = after
        pts.append((width - margin * 0.3, y_of(track)))
        ET.SubElement(
            svg,
            "polyline",
            {
                "points": " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts),
                "fill": "none",
                "stroke": palette[(w - 1) % len(palette)],
                "stroke-width": "2",
            },
        )
    for i, ev in enumerate(diagram.events):
        cy = (y_of(ev.start) + y_of(ev.stop)) / 2
        common = {"cx": _fmt(x_of(i)), "cy": _fmt(cy), "r": "5"}
        if ev.point is not None:
            ET.SubElement(svg, "circle", {**common, "fill": "#111111"})
            ET.SubElement(
                svg,
                "text",
                {"x": _fmt(x_of(i) + 7), "y": _fmt(cy - 7), "font-size": "11"},
            ).text = str(ev.point)
        else:
            ET.SubElement(
                svg,
                "circle",
                {**common, "fill": "white", "stroke": "#111111", "stroke-width": "1.5"},
            )
    return ET.tostring(svg, encoding="unicode") + "\n"


DRAWING_SCALE = 200.0


def drawing_svg(drawing: StraightDrawing) -> str:
    """Straight-line figure: crossing graph edges plus chord rays, scaled
    from the exact rational drawing by the recorded factor."""
    scale = DRAWING_SCALE
    pts = [(float(x) * scale, -float(y) * scale) for x, y in drawing.positions]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    ray = span * 0.18
    margin = ray + 20.0
    x0, y0 = min(xs) - margin, min(ys) - margin
    width = (max(xs) - min(xs)) + 2 * margin
    height = (max(ys) - min(ys)) + 2 * margin

    svg = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "width": _fmt(width),
            "height": _fmt(height),
            "viewBox": f"{_fmt(x0)} {_fmt(y0)} {_fmt(width)} {_fmt(height)}",
            "data-kind": "straight-drawing",
            "data-scale": _fmt(scale),
        },
    )

    def seg(a, b, color, dashed=False):
        attrs = {
            "x1": _fmt(a[0]),
            "y1": _fmt(a[1]),
            "x2": _fmt(b[0]),
            "y2": _fmt(b[1]),
            "stroke": color,
            "stroke-width": "1.6",
        }
        if dashed:
            attrs["stroke-dasharray"] = "6 4"
        ET.SubElement(svg, "line", attrs)

    palette = [
        "#1b6ca8", "#c0392b", "#1e8449", "#8e44ad", "#d68910",
        "#17a589", "#7b241c", "#2e4053", "#a04000", "#5d6d7e",
    ]
    for w, path in enumerate(drawing.wire_paths, start=1):
        color = palette[(w - 1) % len(palette)]
        for u, v in zip(path, path[1:]):
            seg(pts[u], pts[v], color)
        first, last = drawing.chords[w - 1]
        fx, fy = pts[first]
        lx, ly = pts[last]
        dx, dy = lx - fx, ly - fy
        norm = (dx * dx + dy * dy) ** 0.5 or 1.0
        dx, dy = dx / norm, dy / norm
        seg((lx, ly), (lx + dx * ray, ly + dy * ray), color, dashed=True)
        seg((fx, fy), (fx - dx * ray, fy - dy * ray), color, dashed=True)
    for v, p in enumerate(pts):
        ET.SubElement(
            svg,
            "circle",
            {"cx": _fmt(p[0]), "cy": _fmt(p[1]), "r": "3.2", "fill": "#111111"},
        )
    return ET.tostring(svg, encoding="unicode") + "\n"


# -- subcommands -----------------------------------------------------------------


def cmd_validate(config: JobConfig) -> int:
    structure = load_structure(config.inputs[0])
    levi = levi_graph(structure)
    signature = configuration_signature(structure)
    lineal = is_lineal(structure)
    payload = {
        "points": len(structure.points),
        "lines": len(structure.lines),
        "flags": len(structure.flags),
        "lineal": lineal,
        "signature": list(signature) if signature else None,
        "levi": {
            "vertices": levi.vertex_count,
            "edges": levi.edge_count,
        },
    }
    if config.format == "json":
        _emit_json(payload, config)
    else:
        sig = ""
        if signature:
            v, r, b, k = signature
            sig = f"({v}_{r})" if (v, r) == (b, k) else f"({v}_{r}, {b}_{k})"
        verdict = "lineal" if lineal else "not lineal"
        text = f"{verdict}{', ' + sig if sig else ''}\n" + (
            f"points={payload['points']} lines={payload['lines']} flags={payload['flags']} "
            f"levi: {levi.vertex_count} vertices, {levi.edge_count} edges\n"
        )
        _emit(text, config.output)
    return 0


def cmd_realize(config: JobConfig) -> int:
    structure = load_structure(config.inputs[0])
    plan = load_plan(structure, config.plan_path)
    r = realize(structure, plan)
    payload = {
        "sequence": sequence_to_json_dict(r.seq),
        "points": {str(i): str(p) for i, p in sorted(r.point_of_move.items())},
        "line_numbering": [str(l) for l in r.line_numbering],
        "unwanted_crossings": unwanted_crossing_count(r),
    }
    _emit_json(payload, config)
    return 0


def cmd_wiring(config: JobConfig) -> int:
    diagram = load_diagram(config.inputs[0], config.plan_path)
    if config.format == "svg":
        _emit(diagram_svg(diagram), config.output)
    else:
        _emit_json({"diagram": diagram_to_json_dict(diagram)}, config)
    return 0


def cmd_sweep(config: JobConfig) -> int:
    diagram = load_diagram(config.inputs[0], config.plan_path)
    order = topological_sweep(diagram)
    digraph = sweep_digraph(diagram)
    payload = {
        "order": order,
        "vertices": len(digraph.vertices),
        "arcs": [list(a) for a in digraph.arcs],
    }
    if config.format == "text":
        _emit(" ".join(str(v) for v in order) + "\n", config.output)
    else:
        _emit_json(payload, config)
    return 0


def cmd_map(config: JobConfig) -> int:
    diagram = load_diagram(config.inputs[0], config.plan_path)
    scheme = scheme_from_realization(diagram)
    summary = trace_and_summarize(scheme)
    payload = {
        "summary": summary_to_json_dict(summary),
        "scheme": scheme_to_json_dict(scheme),
    }
    _emit_json(payload, config)
    return 0


def cmd_straighten(config: JobConfig) -> int:
    diagram = load_diagram(config.inputs[0], config.plan_path)
    drawing = straighten(diagram)
    if config.format == "svg":
        _emit(drawing_svg(drawing), config.output)
    else:
        _emit_json({"drawing": drawing_to_json_dict(drawing)}, config)
    return 0


def cmd_compare(config: JobConfig) -> int:
    fps = []
    for path in config.inputs:
        diagram = load_diagram(path, config.plan_path)
        fps.append(fingerprint(scheme_from_realization(diagram)))
    equal = fps[0] == fps[1]
    if config.format == "text":
        _emit(("equal" if equal else "distinct") + "\n", config.output)
    else:
        _emit_json({"equal": equal, "fingerprints": fps}, config)
    return 0


COMMANDS = {
    "validate": (cmd_validate, 1),
    "realize": (cmd_realize, 1),
    "wiring": (cmd_wiring, 1),
    "sweep": (cmd_sweep, 1),
    "map": (cmd_map, 1),
    "straighten": (cmd_straighten, 1),
    "compare": (cmd_compare, 2),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasiline",
        description="Incidence structures as monotone quasiline arrangements.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    help_texts = {
        "validate": "check an incidence file and report lineality and signature",
        "realize": "realize an incidence structure as a move sequence",
        "wiring": "produce a generalized wiring diagram (JSON or SVG)",
        "sweep": "topologically sweep a diagram's crossings",
        "map": "compute the surface map summary of a diagram",
        "straighten": "bend-free straight-line drawing of a digon-free diagram",
        "compare": "compare the surface-map fingerprints of two inputs",
    }
    for name, help_text in help_texts.items():
        p = sub.add_parser(name, help=help_text)
        nargs = COMMANDS[name][1]
        p.add_argument("inputs", nargs=nargs, metavar="input")
        p.add_argument("-o", "--output", default=None)
        p.add_argument(
            "--format",
            choices=("json", "svg", "text"),
            default="json",
        )
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--plan", dest="plan_path", default=None)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    config = JobConfig(
        subcommand=args.subcommand,
        inputs=list(args.inputs),
        output=args.output,
        format=args.format,
        seed=args.seed,
        plan_path=args.plan_path,
    )
    handler, _ = COMMANDS[config.subcommand]
    try:
        return handler(config)
    except FileNotFoundError as exc:
        print(f"{config.subcommand}: cannot read {exc.filename}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"{config.subcommand}: parse error: {exc}", file=sys.stderr)
        return 3
    except PreconditionError as exc:
        print(f"{config.subcommand}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 4
    except ValidationError as exc:
        print(f"{config.subcommand}: invalid input: {exc}", file=sys.stderr)
        return 2
    except QuasilineError as exc:
        print(f"{config.subcommand}: internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
