"""Finite simple graphs and multigraphs.

Everything downstream (minor detection, caterpillar squares, the fragment
construction) works on these two immutable types.  Vertex ids are opaque
hashable tokens, canonically short strings; all orderings are by ``str`` of
the id so results are reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional


def vkey(v):
    return str(v)


def ekey(e):
    a, b = e
    return tuple(sorted((vkey(a), vkey(b))))


def canon_edge(a, b):
    """Order an endpoint pair canonically."""
    if vkey(a) <= vkey(b):
        return (a, b)
    return (b, a)


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGraph:
    """An undirected simple graph without loops."""

    vertices: frozenset
    edges: frozenset  # of canonical 2-tuples

    @staticmethod
    def build(vertices: Iterable, edges: Iterable) -> "FiniteGraph":
        vs = frozenset(vertices)
        es = set()
        for a, b in edges:
            if a == b:
                raise GraphError(f"loop at {a!r}")
            if a not in vs or b not in vs:
                raise GraphError(f"edge ({a!r}, {b!r}) has endpoint outside vertex set")
            es.add(canon_edge(a, b))
        return FiniteGraph(vs, frozenset(es))

    @cached_property
    def adj(self) -> dict:
        a = {v: set() for v in self.vertices}
        for x, y in self.edges:
            a[x].add(y)
            a[y].add(x)
        return a

    def sorted_vertices(self):
        return sorted(self.vertices, key=vkey)

    def sorted_edges(self):
        return sorted(self.edges, key=ekey)

    def degree(self, v) -> int:
        return len(self.adj[v])

    def has_edge(self, a, b) -> bool:
        return canon_edge(a, b) in self.edges

    def neighbors(self, v):
        return sorted(self.adj[v], key=vkey)

    def subgraph(self, keep) -> "FiniteGraph":
        keep = frozenset(keep)
        return FiniteGraph(
            keep,
            frozenset(e for e in self.edges if e[0] in keep and e[1] in keep),
        )

    def without_vertex(self, v) -> "FiniteGraph":
        return self.subgraph(self.vertices - {v})

    def components(self):
        """Connected components as a sorted list of frozensets."""
        seen = set()
        out = []
        for s in self.sorted_vertices():
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            out.append(frozenset(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def distances_from(self, src, limit=None):
        """BFS distance map from src, optionally cut off at `limit`."""
        dist = {src: 0}
        frontier = [src]
        d = 0
        while frontier:
            if limit is not None and d >= limit:
                break
            d += 1
            nxt = []
            for x in frontier:
                for y in self.adj[x]:
                    if y not in dist:
                        dist[y] = d
                        nxt.append(y)
            frontier = nxt
        return dist


@dataclass(frozen=True)
class MultiGraph:
    """Undirected multigraph; parallel edges distinguished by integer edge id."""

    vertices: frozenset
    edges: tuple  # of (edge_id, a, b), sorted by edge id

    @staticmethod
    def build(vertices: Iterable, edges: Iterable) -> "MultiGraph":
        vs = frozenset(vertices)
        es = []
        ids = set()
        for eid, a, b in edges:
            if a == b:
                raise GraphError(f"loop at {a!r}")
            if a not in vs or b not in vs:
                raise GraphError(f"edge {eid} has endpoint outside vertex set")
            if eid in ids:
                raise GraphError(f"duplicate edge id {eid}")
            ids.add(eid)
            x, y = canon_edge(a, b)
            es.append((eid, x, y))
        es.sort(key=lambda t: t[0])
        return MultiGraph(vs, tuple(es))

    @staticmethod
    def from_simple(g: FiniteGraph) -> "MultiGraph":
        return MultiGraph.build(
            g.vertices, [(i, a, b) for i, (a, b) in enumerate(g.sorted_edges())]
        )

    @cached_property
    def incidence(self) -> dict:
        inc = {v: [] for v in self.vertices}
        for eid, a, b in self.edges:
            inc[a].append((eid, b))
            inc[b].append((eid, a))
        return inc

    def degree(self, v) -> int:
        return len(self.incidence[v])

    def sorted_vertices(self):
        return sorted(self.vertices, key=vkey)

    def edge_by_id(self, eid):
        for e in self.edges:
            if e[0] == eid:
                return e
        raise KeyError(eid)

    def is_connected_on_support(self) -> bool:
        support = sorted((v for v in self.vertices if self.degree(v) > 0), key=vkey)
        if not support:
            return True
        seen = {support[0]}
        stack = [support[0]]
        while stack:
            x = stack.pop()
            for _, y in self.incidence[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return all(v in seen for v in support)


@dataclass(frozen=True)
class VSplitResult:
    """Outcome of splitting a vertex into two replacement vertices."""

    multigraph: MultiGraph
    v1: object
    v2: object
    e1: frozenset  # edge ids routed to v1
    e2: frozenset


# ---------------------------------------------------------------------------
# basic operations


def kth_power(g: FiniteGraph, k: int) -> FiniteGraph:
    """Add an edge between every pair of vertices at distance 2..k."""
    if k < 1:
        raise GraphError("k must be positive")
    if k == 1:
        return g
    new_edges = set(g.edges)
    for v in g.vertices:
        dist = g.distances_from(v, limit=k)
        for w, d in dist.items():
            if 1 < d <= k:
                new_edges.add(canon_edge(v, w))
    return FiniteGraph(g.vertices, frozenset(new_edges))


def is_two_connected(g: FiniteGraph) -> bool:
    if len(g.vertices) < 3:
        return False
    if not g.is_connected():
        return False
    for v in g.vertices:
        if not g.without_vertex(v).is_connected():
            return False
    return True


def cut_edges(g: FiniteGraph, s) -> frozenset:
    """Edges with exactly one endpoint in s."""
    s = set(s)
    if not s <= g.vertices:
        raise GraphError("cut side contains non-vertices")
    return frozenset(e for e in g.edges if (e[0] in s) != (e[1] in s))


def is_even_cut_parity(g: FiniteGraph, d) -> bool:
    """True iff every vertex has even degree in the edge subset d.

    For finite graphs this is equivalent to d meeting every cut in an even
    number of edges (the tests exercise that equivalence by enumerating
    cuts exhaustively on small instances).
    """
    d = frozenset(canon_edge(a, b) for a, b in d)
    if not d <= g.edges:
        raise GraphError("subset contains non-edges")
    cnt = {v: 0 for v in g.vertices}
    for a, b in d:
        cnt[a] += 1
        cnt[b] += 1
    return all(c % 2 == 0 for c in cnt.values())


def contract_subgraph(g: FiniteGraph, h) -> FiniteGraph:
    """Contract a connected vertex set to a single fresh vertex.

    The fresh vertex is named ``comp:<m>`` where m is the canonically
    smallest member of h.
    """
    h = frozenset(h)
    if not h:
        raise GraphError("empty contraction set")
    if not h <= g.vertices:
        raise GraphError("contraction set contains non-vertices")
    if not g.subgraph(h).is_connected():
        raise GraphError("contraction set induces a disconnected subgraph")
    z = "comp:" + vkey(min(h, key=vkey))
    if z in g.vertices:
        raise GraphError(f"fresh vertex name {z!r} collides")
    vs = (g.vertices - h) | {z}
    es = set()
    for a, b in g.edges:
        aa = z if a in h else a
        bb = z if b in h else b
        if aa != bb:
            es.add(canon_edge(aa, bb))
    return FiniteGraph(vs, frozenset(es))


def is_eulerian(m: MultiGraph) -> bool:
    if any(m.degree(v) % 2 for v in m.vertices):
        return False
    return m.is_connected_on_support()


def _fresh_pair(m: MultiGraph, v):
    base = vkey(v)
    i = 0
    while True:
        a, b = f"{base}/s{i}a", f"{base}/s{i}b"
        if a not in m.vertices and b not in m.vertices:
            return a, b
        i += 1


def v_split(m: MultiGraph, v, e1_ids, e2_ids) -> VSplitResult:
    """Replace v by two replacement vertices, partitioning its edges."""
    inc_ids = {eid for eid, _ in m.incidence[v]}
    e1_ids, e2_ids = frozenset(e1_ids), frozenset(e2_ids)
    if e1_ids | e2_ids != inc_ids or e1_ids & e2_ids or not e1_ids or not e2_ids:
        raise GraphError("edge sets do not partition the star at v")
    v1, v2 = _fresh_pair(m, v)
    vs = (m.vertices - {v}) | {v1, v2}
    es = []
    for eid, a, b in m.edges:
        if eid in e1_ids:
            a, b = (v1 if a == v else a), (v1 if b == v else b)
        elif eid in e2_ids:
            a, b = (v2 if a == v else a), (v2 if b == v else b)
        es.append((eid, a, b))
    return VSplitResult(MultiGraph.build(vs, es), v1, v2, e1_ids, e2_ids)


def eulerian_v_splits(m: MultiGraph, v):
    """The Eulerian splits of a degree-4 vertex, of the three 2+2 pairings.

    Returns between 2 and 3 results; fewer than 2 would contradict the
    splitting lemma for Eulerian multigraphs and is asserted against.
    """
    if not is_eulerian(m):
        raise GraphError("multigraph is not Eulerian")
    if m.degree(v) != 4:
        raise GraphError(f"degree of {v!r} is {m.degree(v)}, need 4")
    ids = sorted(eid for eid, _ in m.incidence[v])
    a, b, c, d = ids
    pairings = [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))]
    out = []
    for e1, e2 in pairings:
        res = v_split(m, v, e1, e2)
        if is_eulerian(res.multigraph):
            out.append(res)
    return out


# ---------------------------------------------------------------------------
# Hamilton search
#
# One backtracking kernel serves paths and cycles, for simple graphs and
# multigraphs alike.  Cycles are found edge-wise with unit propagation:
# once a vertex has two chosen edges its remaining edges are excluded, a
# vertex with only two live edges has both forced, and an edge closing a
# premature cycle is excluded.  All instances here are small (at most a
# couple hundred vertices with strong cut structure), so the propagation
# does the heavy lifting.


def enumerate_hamilton_paths(g: FiniteGraph):
    """All spanning paths, each once (a path equals its reverse)."""
    vs = g.sorted_vertices()
    n = len(vs)
    if n == 0:
        raise GraphError("empty graph")
    if n == 1:
        return [tuple(vs)]
    deg1 = [v for v in vs if g.degree(v) <= 1]
    if len(deg1) > 2:
        return []  # more than two forced endpoints
    found = set()
    adj = g.adj

    def extend(path, used):
        last = path[-1]
        if len(path) == n:
            rev = tuple(reversed(path))
            fwd = tuple(path)
            found.add(min(fwd, rev, key=lambda p: [vkey(v) for v in p]))
            return
        # a degree-1 vertex that is neither the start nor still available
        # as the final endpoint makes the extension hopeless
        pending = sum(1 for v in deg1 if v not in used)
        if pending > 1:
            return
        for y in sorted(adj[last], key=vkey):
            if y not in used:
                path.append(y)
                used.add(y)
                extend(path, used)
                path.pop()
                used.remove(y)

    # every Hamilton path ends in all degree-1 vertices, so one such vertex
    # (when present) is a complete set of start points
    starts = [deg1[0]] if deg1 else vs
    for s in starts:
        extend([s], {s})
    return sorted(found, key=lambda p: [vkey(v) for v in p])


class _CycleSearch:
    """Edge-state backtracking for Hamilton cycles of a multigraph."""

    UNDEC, IN, OUT = 0, 1, 2

    def __init__(self, m: MultiGraph, forced_in=(), forced_out=()):
        self.m = m
        self.n = len(m.vertices)
        self.eids = [e[0] for e in m.edges]
        self.ends = {eid: (a, b) for eid, a, b in m.edges}
        self.vedges = {v: sorted(eid for eid, _ in m.incidence[v]) for v in m.vertices}
        self.forced_in = list(forced_in)
        self.forced_out = list(forced_out)
        self.solutions = []

    def run(self):
        if self.n == 2:
            return self._run_digon()
        if self.n < 2:
            raise GraphError("need at least 2 vertices")
        state = {eid: self.UNDEC for eid in self.eids}
        chosen = {v: 0 for v in self.m.vertices}
        # path-end map: for a vertex that is the end of a forced segment,
        # the other end of that segment; isolated vertices map to themselves
        pend = {v: v for v in self.m.vertices}
        in_count = [0]
        ok = True
        for eid in self.forced_in:
            ok = ok and self._set_in(eid, state, chosen, pend, in_count)
        for eid in self.forced_out:
            ok = ok and self._set_out(eid, state, chosen, pend, in_count)
        if ok:
            ok = self._propagate(state, chosen, pend, in_count)
        if ok:
            self._search(state, chosen, pend, in_count)
        sols = sorted(set(frozenset(s) for s in self.solutions), key=sorted)
        return sols

    def _run_digon(self):
        # two vertices: a spanning cycle is any pair of parallel edges
        import itertools

        out = []
        banned = set(self.forced_out)
        need = set(self.forced_in)
        for pair in itertools.combinations(self.eids, 2):
            if set(pair) & banned or not need <= set(pair):
                continue
            out.append(frozenset(pair))
        return sorted(set(out), key=sorted)

    def _set_in(self, eid, state, chosen, pend, in_count):
        if state[eid] == self.IN:
            return True
        if state[eid] == self.OUT:
            return False
        a, b = self.ends[eid]
        if chosen[a] >= 2 or chosen[b] >= 2:
            return False
        ea, eb = pend[a], pend[b]
        if ea == b:
            # would close a cycle: only allowed if it is spanning
            if in_count[0] + 1 != self.n:
                return False
        state[eid] = self.IN
        chosen[a] += 1
        chosen[b] += 1
        in_count[0] += 1
        if ea != b:
            pend[ea] = eb
            pend[eb] = ea
        return True

    def _set_out(self, eid, state, chosen, pend, in_count):
        if state[eid] == self.OUT:
            return True
        if state[eid] == self.IN:
            return False
        state[eid] = self.OUT
        return True

    def _propagate(self, state, chosen, pend, in_count):
        changed = True
        while changed:
            changed = False
            for v in self.m.vertices:
                live = [e for e in self.vedges[v] if state[e] != self.OUT]
                cin = chosen[v]
                if cin > 2:
                    return False
                if cin == 2:
                    for e in self.vedges[v]:
                        if state[e] == self.UNDEC:
                            state[e] = self.OUT
                            changed = True
                    continue
                if len(live) < 2:
                    return False
                if len(live) == 2:
                    for e in live:
                        if state[e] == self.UNDEC:
                            if not self._set_in(e, state, chosen, pend, in_count):
                                return False
                            changed = True
            # exclude edges that would close a short cycle
            for eid in self.eids:
                if state[eid] != self.UNDEC:
                    continue
                a, b = self.ends[eid]
                if pend[a] == b and pend[b] == a and in_count[0] + 1 != self.n:
                    if chosen[a] > 0 or chosen[b] > 0:
                        state[eid] = self.OUT
                        changed = True
        return True

    def _search(self, state, chosen, pend, in_count):
        if in_count[0] == self.n:
            if all(chosen[v] == 2 for v in self.m.vertices):
                self.solutions.append(
                    [e for e in self.eids if state[e] == self.IN]
                )
            return
        # branch on an undecided edge at the most constrained touched vertex
        pick = None
        for v in self.m.sorted_vertices():
            if chosen[v] == 1:
                for e in self.vedges[v]:
                    if state[e] == self.UNDEC:
                        pick = e
                        break
                if pick is not None:
                    break
        if pick is None:
            for e in self.eids:
                if state[e] == self.UNDEC:
                    pick = e
                    break
        if pick is None:
            return
        for setter in (self._set_in, self._set_out):
            st = dict(state)
            ch = dict(chosen)
            pe = dict(pend)
            ic = [in_count[0]]
            if setter(pick, st, ch, pe, ic) and self._propagate(st, ch, pe, ic):
                self._search(st, ch, pe, ic)


def enumerate_hamilton_cycles(g, forced_in=(), forced_out=()):
    """Every spanning cycle as an edge set, each exactly once.

    For a FiniteGraph the result is a sorted list of frozensets of
    endpoint pairs; for a MultiGraph, frozensets of edge ids.
    """
    if isinstance(g, FiniteGraph):
        m = MultiGraph.from_simple(g)
        id2e = {eid: canon_edge(a, b) for eid, a, b in m.edges}
        e2id = {e: eid for eid, e in id2e.items()}
        try:
            fin = [e2id[canon_edge(*e)] for e in forced_in]
            fout = [e2id[canon_edge(*e)] for e in forced_out]
        except KeyError as missing:
            raise GraphError(f"forced edge {missing} not in the graph")
        sols = _CycleSearch(m, fin, fout).run()
        out = [frozenset(id2e[i] for i in s) for s in sols]
        out.sort(key=lambda s: sorted(ekey(e) for e in s))
        return out
    return _CycleSearch(g, forced_in, forced_out).run()
