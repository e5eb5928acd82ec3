import math

import pytest

from conftest import complete_graph, cycle_graph, graph
from hamcircle.graphs import GraphError, canon_edge, enumerate_hamilton_cycles
from hamcircle.outerplanar import (
    check_quotient_two_connected,
    check_struct1,
    chords_cross,
    contraction_quotient,
    disk_layout,
    layout_to_svg,
    two_contractible_edges,
    unique_hamilton_cycle_outerplanar,
)


def diamond():
    return graph([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")])


def fan5():
    return graph(
        [("a", "b"), ("b", "c"), ("c", "d"), ("h", "a"), ("h", "b"), ("h", "c"), ("h", "d")]
    )


def test_two_contractible_c5():
    c5 = cycle_graph(5)
    assert two_contractible_edges(c5) == c5.edges


def test_two_contractible_diamond():
    got = two_contractible_edges(diamond())
    expect = {
        canon_edge("a", "b"),
        canon_edge("b", "c"),
        canon_edge("c", "d"),
        canon_edge("d", "a"),
    }
    assert got == frozenset(expect)


def test_two_contractible_triangle_empty():
    assert two_contractible_edges(cycle_graph(3)) == frozenset()


def test_two_contractible_requires_two_connected():
    with pytest.raises(GraphError):
        two_contractible_edges(graph([("a", "b"), ("b", "c")]))


def test_unique_cycle_triangle_exception():
    c3 = cycle_graph(3)
    assert unique_hamilton_cycle_outerplanar(c3) == c3.edges


def test_unique_cycle_diamond_and_fan():
    for g in (diamond(), fan5(), cycle_graph(6)):
        got = frozenset(unique_hamilton_cycle_outerplanar(g))
        cycles = enumerate_hamilton_cycles(g)
        assert len(cycles) == 1
        assert cycles[0] == got


def test_contraction_quotient_examples():
    c6 = cycle_graph(6)
    q = contraction_quotient(c6, {"v0", "v1", "v2"})
    assert len(q.vertices) == 4 and len(q.edges) == 4
    assert contraction_quotient(c6, c6.vertices) == c6
    # chord endpoints: b and d become singleton components, diamond returns
    d = diamond()
    q2 = contraction_quotient(d, {"a", "c"})
    assert len(q2.vertices) == 4 and len(q2.edges) == 5


def test_quotient_two_connected_examples():
    assert check_quotient_two_connected(cycle_graph(6), {"v0", "v1", "v2"})
    assert check_quotient_two_connected(complete_graph(4), {"v0", "v1", "v2"})
    with pytest.raises(GraphError):
        check_quotient_two_connected(cycle_graph(6), {"v0", "v2", "v4"})


def test_struct1_examples():
    assert check_struct1(cycle_graph(8), {"v0"}) == []
    assert check_struct1(diamond(), {"c"}) == []
    k23 = graph([(a, b) for a in ("a1", "a2") for b in ("b1", "b2", "b3")])
    with pytest.raises(GraphError):
        check_struct1(k23, {"a1"})


def test_disk_layout_c4():
    layout = disk_layout(cycle_graph(4))
    assert len(layout.chords) == 0
    assert len(layout.boundary) == 4


def test_disk_layout_diamond_and_fan():
    lay = disk_layout(diamond())
    assert len(lay.chords) == 1
    lay2 = disk_layout(fan5())
    assert len(lay2.chords) == 2
    # angles strictly increasing and uniform
    angles = [a for _, a in lay2.placements]
    assert all(b > a for a, b in zip(angles, angles[1:]))
    step = 2 * math.pi / len(angles)
    assert all(abs(a - i * step) < 1e-9 for i, a in enumerate(angles))


def test_chords_do_not_cross():
    lay = disk_layout(fan5())
    order = [v for v, _ in lay.placements]
    for i, e in enumerate(lay.chords):
        for f in lay.chords[i + 1 :]:
            assert not chords_cross(order, e, f)


def test_svg_output():
    svg = layout_to_svg(disk_layout(diamond()))
    assert svg.startswith("<svg") or "<svg" in svg
    assert "512" in svg and "line" in svg
