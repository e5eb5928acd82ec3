import itertools

import pytest

from hamcircle.graphs import FiniteGraph, MultiGraph


def graph(edges, extra_vertices=()):
    vs = set(extra_vertices)
    for a, b in edges:
        vs |= {a, b}
    return FiniteGraph.build(vs, edges)


def path_graph(n):
    return graph([(f"v{i}", f"v{i+1}") for i in range(n - 1)])


def cycle_graph(n):
    return graph([(f"v{i}", f"v{(i+1) % n}") for i in range(n)])


def complete_graph(n):
    vs = [f"v{i}" for i in range(n)]
    return graph(list(itertools.combinations(vs, 2)))


def multigraph(edges, extra_vertices=()):
    vs = set(extra_vertices)
    for _, a, b in edges:
        vs |= {a, b}
    return MultiGraph.build(vs, edges)


@pytest.fixture
def diamond():
    return graph([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")])


@pytest.fixture
def petersen():
    outer = [(f"o{i}", f"o{(i+1) % 5}") for i in range(5)]
    inner = [(f"i{i}", f"i{(i+2) % 5}") for i in range(5)]
    spokes = [(f"o{i}", f"i{i}") for i in range(5)]
    return graph(outer + inner + spokes)
