import json
from xml.etree import ElementTree as ET

import pytest

from quasiline.cli import main
from quasiline.sequences import sequence_from_json_dict
from quasiline.wiring import diagram_from_json_dict
from quasiline.wiring.straighten import drawing_from_json_dict

from oracles import (
    PAPPUS_EUCLIDEAN_LINES,
    PAPPUS_LABELS,
    PAPPUS_POINTS,
    FANO_LINES,
)

FANO_TEXT = "".join(" ".join(line) + "\n" for line in FANO_LINES)
TRIANGLE_TEXT = "ab: a b\nbc: b c\nca: c a\n"
DIGON_TEXT = "A: p q r\nB: p q r\n"


@pytest.fixture
def workdir(tmp_path):
    (tmp_path / "fano.lines").write_text(FANO_TEXT)
    (tmp_path / "triangle.lines").write_text(TRIANGLE_TEXT)
    (tmp_path / "digon.lines").write_text(DIGON_TEXT)
    (tmp_path / "pappus.euclid.json").write_text(
        json.dumps(
            {
                "lines": [[str(x) for x in row] for row in PAPPUS_EUCLIDEAN_LINES],
                "points": [[str(x) for x in p] for p in PAPPUS_POINTS],
                "point_labels": PAPPUS_LABELS,
            }
        )
    )
    return tmp_path


def test_validate_fano(workdir, capsys):
    assert main(["validate", str(workdir / "fano.lines"), "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "lineal" in out and "(7_3)" in out


def test_validate_triangle(workdir, capsys):
    assert main(["validate", str(workdir / "triangle.lines"), "--format", "text"]) == 0
    assert "(3_2)" in capsys.readouterr().out


def test_validate_malformed_is_parse_error(workdir):
    bad = workdir / "bad.lines"
    bad.write_text("name:\n")
    assert main(["validate", str(bad)]) == 3


def test_validate_degree_failure_exit_2(workdir):
    bad = workdir / "deg.lines"
    bad.write_text("l: a b\nm: a c\n")  # b and c lie on one line each
    assert main(["validate", str(bad)]) == 2


def test_missing_file_exit_2(workdir):
    assert main(["validate", str(workdir / "nope.lines")]) == 2


def test_realize_emits_sequence_and_points(workdir):
    out = workdir / "fano.seq.json"
    assert main(["realize", str(workdir / "fano.lines"), "-o", str(out)]) == 0
    data = json.loads(out.read_text())
    seq = sequence_from_json_dict(data["sequence"])
    assert seq.n == 7
    assert len(data["points"]) == 7
    assert data["seed"] == 20141007


def test_wiring_json_roundtrips(workdir):
    out = workdir / "fano.wd.json"
    assert main(["wiring", str(workdir / "fano.lines"), "-o", str(out)]) == 0
    data = json.loads(out.read_text())
    d = diagram_from_json_dict(data["diagram"])
    assert d.n == 7
    # a diagram JSON is accepted back as input
    out2 = workdir / "sweep.json"
    assert main(["sweep", str(out), "-o", str(out2)]) == 0
    order = json.loads(out2.read_text())["order"]
    assert sorted(order) == list(range(d.event_count))


def test_wiring_svg_well_formed(workdir):
    out = workdir / "fano.svg"
    assert main(["wiring", str(workdir / "fano.lines"), "--format", "svg", "-o", str(out)]) == 0
    root = ET.fromstring(out.read_text())
    assert root.tag.endswith("svg")
    polylines = [e for e in root.iter() if e.tag.endswith("polyline")]
    assert len(polylines) == 7
    circles = [e for e in root.iter() if e.tag.endswith("circle")]
    filled = [c for c in circles if c.get("fill") == "#111111"]
    open_ = [c for c in circles if c.get("fill") == "white"]
    assert len(filled) == 7 and len(open_) >= 1


def test_map_fano(workdir):
    out = workdir / "fano.map.json"
    assert main(["map", str(workdir / "fano.lines"), "-o", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["summary"]["V"] == 7
    assert data["summary"]["E"] == 21
    assert not data["summary"]["orientable"]


def test_straighten_json_and_svg(workdir):
    out = workdir / "pappus.drawing.json"
    assert main(["straighten", str(workdir / "pappus.euclid.json"), "-o", str(out)]) == 0
    drawing = drawing_from_json_dict(json.loads(out.read_text())["drawing"])
    assert drawing.n == 9
    svg = workdir / "pappus.svg"
    assert main(
        ["straighten", str(workdir / "pappus.euclid.json"), "--format", "svg", "-o", str(svg)]
    ) == 0
    root = ET.fromstring(svg.read_text())
    assert root.get("data-scale") is not None


def test_straighten_digons_exit_4(workdir, capsys):
    code = main(["straighten", str(workdir / "digon.lines")])
    assert code == 4
    assert "digon" in capsys.readouterr().err.lower()


def test_svg_geometry_matches_rational_drawing(workdir):
    from quasiline.cli import DRAWING_SCALE, load_diagram
    from quasiline.wiring import straighten

    svg_path = workdir / "tri.svg"
    assert main(
        ["straighten", str(workdir / "triangle.lines"), "--format", "svg", "-o", str(svg_path)]
    ) == 0
    drawing = straighten(load_diagram(str(workdir / "triangle.lines")))
    root = ET.fromstring(svg_path.read_text())
    assert float(root.get("data-scale")) == DRAWING_SCALE
    circles = [e for e in root.iter() if e.tag.endswith("circle")]
    got = sorted((float(c.get("cx")), float(c.get("cy"))) for c in circles)
    want = sorted(
        (float(x) * DRAWING_SCALE, -float(y) * DRAWING_SCALE) for x, y in drawing.positions
    )
    for (gx, gy), (wx, wy) in zip(got, want):
        assert abs(gx - wx) <= 0.005 * max(1.0, abs(wx))
        assert abs(gy - wy) <= 0.005 * max(1.0, abs(wy))


def test_compare_digon_variant_equal(workdir, capsys):
    base = workdir / "fano.wd.json"
    assert main(["wiring", str(workdir / "fano.lines"), "-o", str(base)]) == 0
    data = json.loads(base.read_text())["diagram"]
    from quasiline.wiring import diagram_to_json_dict, insert_digon

    d = diagram_from_json_dict(data)
    moved = insert_digon(d, (1, 2), 0)
    variant = workdir / "variant.wd.json"
    variant.write_text(json.dumps(diagram_to_json_dict(moved)))
    assert main(["compare", str(base), str(variant), "--format", "text"]) == 0
    assert capsys.readouterr().out.strip() == "equal"


def test_outputs_byte_identical(workdir):
    a, b = workdir / "a.json", workdir / "b.json"
    for out in (a, b):
        assert main(["realize", str(workdir / "fano.lines"), "-o", str(out)]) == 0
    assert a.read_bytes() == b.read_bytes()
    s1, s2 = workdir / "a.svg", workdir / "b.svg"
    for out in (s1, s2):
        assert main(["wiring", str(workdir / "fano.lines"), "--format", "svg", "-o", str(out)]) == 0
    assert s1.read_bytes() == s2.read_bytes()


def test_plan_override(workdir):
    plan = workdir / "plan.json"
    plan.write_text(
        json.dumps(
            {
                "point_order": ["p", "q", "r"],
                "point_line_orders": {"q": ["B", "A"]},
            }
        )
    )
    out = workdir / "digon.seq.json"
    assert main(
        ["realize", str(workdir / "digon.lines"), "--plan", str(plan), "-o", str(out)]
    ) == 0
    data = json.loads(out.read_text())
    assert data["unwanted_crossings"] == 0
