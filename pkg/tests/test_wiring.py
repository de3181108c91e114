import itertools
import random

import pytest

from quasiline import (
    default_plan,
    make_sequence,
    realize,
)
from quasiline.errors import CyclicInput, NotGeneralized, ValidationError
from quasiline.sequences import pair_counts
from quasiline.wiring import (
    AbstractArrangement,
    GeneralizedWiringDiagram,
    SweepDigraph,
    arrangement_from_diagram,
    arrangement_map,
    detect_digons,
    diagram_from_json_dict,
    diagram_from_realization,
    diagram_from_sequence,
    diagram_to_json_dict,
    euler_characteristic,
    find_monotone_marking,
    is_acyclic,
    is_proper_marking,
    sequence_from_diagram,
    sweep_digraph,
    topological_order,
    topological_sweep,
    trace_faces_disk,
)

from oracles import (
    fano,
    random_generalized_sequence,
    sweep_cut_ok,
    triangle,
    two_lines_three_points,
)


def triangle_diagram():
    return diagram_from_realization(realize(triangle(), default_plan(triangle())))


def fano_diagram():
    return diagram_from_realization(realize(fano(), default_plan(fano())))


def digon_diagram():
    c = two_lines_three_points()
    return diagram_from_realization(realize(c, default_plan(c)))


def random_diagrams(count, seed=61, n_max=8):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, n_max)
        seq = random_generalized_sequence(rng, n, designate=True)
        out.append(diagram_from_sequence(seq))
    return out


# -- construction and conversion ----------------------------------------------


def test_diagram_requires_two_wires():
    with pytest.raises(ValidationError):
        GeneralizedWiringDiagram(1, ())


def test_diagram_requires_odd_crossings():
    with pytest.raises(NotGeneralized):
        GeneralizedWiringDiagram(2, ())
    with pytest.raises(NotGeneralized):
        diagram_from_sequence(make_sequence(3, [(1, 2)]))


def test_triangle_diagram_three_crossings():
    d = triangle_diagram()
    assert d.n == 3
    assert d.event_count == 3


def test_n2_triple_crossing_diagram():
    seq = make_sequence(2, [(1, 2), (1, 2), (1, 2)])
    d = diagram_from_sequence(seq)
    assert d.n == 2 and d.event_count == 3


def test_fano_diagram_designated_triples():
    d = fano_diagram()
    assert d.n == 7
    designated = d.designated_events()
    assert len(designated) == 7
    assert all(d.events[i].length == 3 for i in designated)


def test_roundtrip_sequence_diagram():
    rng = random.Random(67)
    for _ in range(100):
        n = rng.randint(2, 8)
        seq = random_generalized_sequence(rng, n, designate=True)
        d = diagram_from_sequence(seq)
        assert sequence_from_diagram(d) == seq


def test_roundtrip_fano():
    d = fano_diagram()
    seq = sequence_from_diagram(d)
    assert diagram_from_sequence(seq, {i: d.events[j].point for i, j in
                                       zip(sorted(seq.designated), d.designated_events())}) == d


def test_diagram_json_roundtrip():
    for d in (triangle_diagram(), fano_diagram()) + tuple(random_diagrams(10)):
        assert diagram_from_json_dict(diagram_to_json_dict(d)) == d


# -- sweeps --------------------------------------------------------------------


def test_triangle_sweep_digraph():
    d = triangle_diagram()
    g = sweep_digraph(d)
    assert len(g.vertices) == 3
    assert is_acyclic(g)


def test_single_event_sweep():
    d = diagram_from_sequence(make_sequence(2, [(1, 2)]))
    g = sweep_digraph(d)
    assert len(g.vertices) == 1 and len(g.arcs) == 0


def test_hand_built_cycle_rejected():
    g = SweepDigraph((0, 1), ((0, 1), (1, 0)))
    assert not is_acyclic(g)
    with pytest.raises(CyclicInput):
        topological_order(g)


def test_left_to_right_is_topological():
    for d in random_diagrams(50):
        g = sweep_digraph(d)
        order = list(range(d.event_count))
        position = {v: i for i, v in enumerate(order)}
        assert all(position[u] < position[v] for u, v in g.arcs)


def test_sweeps_acyclic_and_cut_valid():
    diagrams = random_diagrams(200) + [triangle_diagram(), fano_diagram(), digon_diagram()]
    for d in diagrams:
        assert is_acyclic(sweep_digraph(d))
        order = topological_sweep(d)
        assert sweep_cut_ok(d, order)


# -- markings -------------------------------------------------------------------


def test_diagram_induced_marking_is_proper_at_gap_zero():
    for d in [triangle_diagram(), fano_diagram(), digon_diagram()] + random_diagrams(30):
        a = arrangement_from_diagram(d)
        assert is_proper_marking(a, 0)
        assert find_monotone_marking(a) is not None


def test_pseudoline_arrangement_proper_at_every_gap():
    # pairwise single crossings impose no order constraints
    d = triangle_diagram()
    a = arrangement_from_diagram(d)
    for gap in range(2 * a.n):
        assert is_proper_marking(a, gap)


def _two_line_arrangement(order2):
    boundary = ((1, 0), (2, 0), (1, 1), (2, 1))
    return AbstractArrangement(2, boundary, (("u", "v", "w"), order2))


def test_non_monotone_witness_found_by_brute_force():
    # all ways a second line can meet the same three crossings
    witnesses = []
    for order2 in itertools.permutations(("u", "v", "w")):
        a = _two_line_arrangement(order2)
        if find_monotone_marking(a) is None:
            witnesses.append(order2)
    assert witnesses, "brute force found no non-monotone arrangement"
    # and the monotone ones are exactly the equal or reversed orders
    assert set(itertools.permutations(("u", "v", "w"))) - set(witnesses) == {
        ("u", "v", "w"),
        ("w", "v", "u"),
    }


def test_orientation_consistent_but_not_monotone():
    """Three lines whose pairwise orders force alternating orientations.

    Pairs (1,2) and (2,3) agree only when the two lines are oriented
    oppositely, pair (1,3) only when equally; the consistent assignments
    are exactly the alternating ones, which no boundary gap produces, so
    the arrangement is orientation-consistent but not monotone.
    """
    u = ("u1", "u2", "u3")
    v = ("v1", "v2", "v3")
    w = ("w1", "w2", "w3")
    rows = (
        u + v,                 # line 1
        u[::-1] + w,           # line 2
        v + w[::-1],           # line 3
    )
    boundary = ((1, 0), (2, 0), (3, 0), (1, 1), (2, 1), (3, 1))
    a = AbstractArrangement(3, boundary, rows)

    def consistent(assignment):
        oriented = [
            row if keep else row[::-1] for row, keep in zip(rows, assignment)
        ]
        for i, j in itertools.combinations(range(3), 2):
            shared = set(oriented[i]) & set(oriented[j])
            s1 = [x for x in oriented[i] if x in shared]
            s2 = [x for x in oriented[j] if x in shared]
            if s1 != s2:
                return False
        return True

    feasible = [
        bits for bits in itertools.product((True, False), repeat=3) if consistent(bits)
    ]
    assert feasible == [(True, False, True), (False, True, False)]
    assert find_monotone_marking(a) is None


def test_brute_force_none_instance_small():
    # exhaustive scan over two-line arrangements with shared crossings
    # ordered every possible way: non-monotone instances exist
    nones = 0
    for order2 in itertools.permutations(("u", "v", "w")):
        if find_monotone_marking(_two_line_arrangement(order2)) is None:
            nones += 1
    assert nones == 4


# -- faces ----------------------------------------------------------------------


def test_triangle_faces():
    d = triangle_diagram()
    faces = trace_faces_disk(d)
    assert len(faces) == 4
    rm = arrangement_map(d)
    assert len(rm.vertices) == 3 and len(rm.edges) == 6
    assert euler_characteristic(d) == 1
    assert not detect_digons(d)


def test_digon_example_faces():
    d = digon_diagram()
    faces = trace_faces_disk(d)
    digons = detect_digons(d)
    assert len(digons) >= 2
    assert euler_characteristic(d) == 1
    assert sum(len(f) for f in faces) == 2 * len(arrangement_map(d).edges)


def test_euler_and_handshake_on_corpus():
    diagrams = random_diagrams(120) + [triangle_diagram(), fano_diagram(), digon_diagram()]
    for d in diagrams:
        rm = arrangement_map(d)
        faces = trace_faces_disk(d)
        assert len(rm.vertices) - len(rm.edges) + len(faces) == 1
        assert sum(len(f) for f in faces) == 2 * len(rm.edges)


def test_crossing_number_identity():
    import math

    for d in random_diagrams(60):
        seq = sequence_from_diagram(d)
        counts = pair_counts(seq)
        by_pairs = sum(
            counts[frozenset(p)]
            for p in itertools.combinations(range(1, d.n + 1), 2)
        )
        by_events = sum(math.comb(ev.length, 2) for ev in d.events)
        assert by_pairs == by_events
