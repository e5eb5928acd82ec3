import pytest

from hamcircle.fragment import (
    audit_tree,
    build_gn,
    fragment_t_minus_l_count,
    load_tutte_fragment,
    section5_graph,
)
from hamcircle.graphs import GraphError, canon_edge, cut_edges, enumerate_hamilton_paths
from hamcircle.lazy import deep_components, end_degree_bound, end_nesting


def test_fragment_loads_and_validates():
    f = load_tutte_fragment()
    assert f.graph.degree(f.roles["u"]) == 1
    assert f.graph.degree(f.roles["c"]) == 3
    assert len(f.graph.vertices) == 18


def test_fragment_defining_counts():
    f = load_tutte_fragment()
    g = f.graph
    assert enumerate_hamilton_paths(g.without_vertex(f.roles["u"])) == []
    minus_r = enumerate_hamilton_paths(g.without_vertex(f.roles["r"]))
    assert len(minus_r) == 2
    pu, pl = f.pendant_edge("u"), f.pendant_edge("l")
    for p in minus_r:
        es = {canon_edge(a, b) for a, b in zip(p, p[1:])}
        assert pu in es and pl in es


def test_missing_l_count_is_computed():
    # this count is derived, never hard-wired into the logic
    assert fragment_t_minus_l_count(load_tutte_fragment()) == 4


def test_level_sizes_and_audits():
    expected = {0: 16, 1: 44, 2: 100, 3: 212}
    for n, size in expected.items():
        g, ft = build_gn(n)
        assert len(g.vertices) == size
        audit_tree(ft)


def test_all_degrees_three():
    g, _ = build_gn(3)
    assert all(g.degree(v) == 3 for v in g.vertices)


def test_marked_subtree_cuts_are_three():
    g, ft = build_gn(2)
    for path in ft.marked:
        assert len(cut_edges(g, ft.subtree_vertices(path))) == 3


def test_level_cap():
    with pytest.raises(GraphError):
        build_gn(99)


def test_limit_oracle_matches_finite_builds():
    lg = section5_graph()
    g2, _ = build_gn(2)
    # depth <= 0 vertices already have their final adjacency at level 2
    for v in g2.vertices:
        depth = 0 if v == "Z" else len(v.split(":", 2)[1])
        if depth == 0:
            assert set(lg.neighbors(v)) == g2.adj[v]


def test_limit_deep_components():
    lg = section5_graph()
    comps = deep_components(lg, 1)
    assert len(comps) == 4
    assert sorted(c.comp_id for c in comps) == ["cc", "cv", "vc", "vv"]
    for c in comps:
        assert len(c.cut_edges) == 3


def test_limit_nesting():
    lg = section5_graph()
    mapping = end_nesting(lg, 1, 2)
    assert len(mapping) == 8
    for deep, shallow in mapping.items():
        assert deep.comp_id.startswith(shallow.comp_id)


def test_limit_end_degree_bounds():
    lg = section5_graph()
    c = deep_components(lg, 1)[0]
    assert end_degree_bound(lg, c, "vertex", depth=6) == (3, 3)
    assert end_degree_bound(lg, c, "edge", depth=6) == (3, 3)
