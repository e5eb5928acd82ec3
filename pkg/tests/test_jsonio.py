import pytest

from conftest import cycle_graph, multigraph
from hamcircle.graphs import GraphError, MultiGraph
from hamcircle.jsonio import dump_graph, graph_from_obj, graph_to_obj, load_graph


def test_simple_roundtrip(tmp_path):
    g = cycle_graph(5)
    p = tmp_path / "g.json"
    dump_graph(g, p)
    assert load_graph(p) == g


def test_multigraph_roundtrip(tmp_path):
    m = multigraph([(0, "a", "b"), (1, "a", "b"), (2, "b", "c")])
    p = tmp_path / "m.json"
    dump_graph(m, p)
    back = load_graph(p)
    assert isinstance(back, MultiGraph)
    assert set(back.edges) == set(m.edges)


def test_unknown_field_rejected():
    with pytest.raises(GraphError):
        graph_from_obj({"multi": False, "vertices": ["a"], "edges": [], "color": 1})


def test_missing_vertex_rejected():
    with pytest.raises(GraphError):
        graph_from_obj({"multi": False, "vertices": ["a"], "edges": [["a", "b"]]})


def test_obj_is_deterministic():
    g = cycle_graph(4)
    assert graph_to_obj(g) == graph_to_obj(g)
    assert graph_to_obj(g)["vertices"] == sorted(graph_to_obj(g)["vertices"])
