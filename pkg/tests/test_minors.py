import itertools

import pytest

from conftest import complete_graph, cycle_graph, graph, path_graph
from hamcircle.graphs import GraphError
from hamcircle.minors import (
    circular_ordering_oracle,
    find_k4_subgraph,
    find_minor,
    has_k23_minor,
    internally_disjoint_paths,
    is_outerplanar,
    k4_minor_equals_subgraph,
    validate_witness,
)


def k23():
    return graph([(a, b) for a in ("a1", "a2") for b in ("b1", "b2", "b3")])


def k4_subdivided():
    # subdivide one edge of K4
    g = [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]
    return graph(g + [("c", "m"), ("m", "d")])


def test_k4_subgraph_detection():
    assert find_k4_subgraph(complete_graph(4)) is not None
    assert find_k4_subgraph(cycle_graph(6)) is None
    assert find_k4_subgraph(k23()) is None


def test_disjoint_paths_menger():
    three = internally_disjoint_paths(k23(), "a1", "a2", 3)
    assert len(three) == 3
    interiors = [frozenset(p[1:-1]) for p in three]
    assert len(set(interiors)) == 3
    # C5 separates v0 and v2 by two vertices, so the packing stops at 2
    assert len(internally_disjoint_paths(cycle_graph(5), "v0", "v2", 3)) == 2


def test_k23_minor_detection():
    assert has_k23_minor(k23())
    assert has_k23_minor(complete_graph(5))
    assert not has_k23_minor(complete_graph(4))
    assert not has_k23_minor(cycle_graph(8))
    # subdividing a K4 edge creates a K2,3 (hubs = the other two vertices)
    assert has_k23_minor(k4_subdivided())


def test_minor_witnesses_validate():
    for g, pattern in [
        (complete_graph(4), "K4"),
        (k4_subdivided(), "K4"),
        (k23(), "K23"),
        (complete_graph(5), "K23"),
    ]:
        w = find_minor(g, pattern)
        assert w is not None
        validate_witness(g, w)


def test_k4_minor_without_subgraph():
    g = k4_subdivided()
    assert find_k4_subgraph(g) is None
    assert find_minor(g, "K4") is not None


def test_minor_equivalence_runner():
    assert k4_minor_equals_subgraph(complete_graph(4))
    with pytest.raises(GraphError):
        k4_minor_equals_subgraph(k23())


def test_outerplanarity_basics():
    assert is_outerplanar(cycle_graph(7))
    assert is_outerplanar(path_graph(5))
    assert not is_outerplanar(complete_graph(4))
    assert not is_outerplanar(k23())


def test_circular_oracle_matches():
    for g in (cycle_graph(6), complete_graph(4), k23(), path_graph(4)):
        assert (circular_ordering_oracle(g) is not None) == is_outerplanar(g)


def test_circular_oracle_order_is_valid():
    diamond = graph([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")])
    order = circular_ordering_oracle(diamond)
    assert order is not None
    pos = {v: i for i, v in enumerate(order)}
    chords = [tuple(sorted((pos[a], pos[b]))) for a, b in diamond.edges]
    for (i, j), (p, q) in itertools.combinations(chords, 2):
        assert not (i < p < j < q or p < i < q < j)


def test_oracle_size_limit():
    big = cycle_graph(11)
    with pytest.raises(GraphError):
        circular_ordering_oracle(big)
