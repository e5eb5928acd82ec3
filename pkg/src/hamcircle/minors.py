"""Forbidden-substructure detection: K4 subgraphs, K4 and K2,3 minors,
and outerplanarity recognition with an independent circular-ordering oracle.

Both patterns have maximum degree 3, so containing one as a minor is the
same as containing a subdivision.  The searches below therefore place the
branch vertices and route internally disjoint paths, which is much faster
than enumerating branch-set assignments and still yields a branch-set
witness (path interiors are absorbed into one endpoint's branch set).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import FiniteGraph, GraphError, canon_edge, vkey


@dataclass(frozen=True)
class MinorWitness:
    pattern: str  # "K4" or "K23"
    branch_sets: dict  # pattern vertex -> frozenset of host vertices
    edges: dict  # pattern edge (tuple of pattern vertices) -> host edge

    def to_obj(self):
        return {
            "pattern": self.pattern,
            "branch_sets": {
                k: sorted(v, key=vkey) for k, v in sorted(self.branch_sets.items())
            },
            "edges": [
                {"pattern_edge": list(pe), "host_edge": list(he)}
                for pe, he in sorted(self.edges.items())
            ],
        }


_PATTERNS = {
    "K4": (["a", "b", "c", "d"], list(itertools.combinations(["a", "b", "c", "d"], 2))),
    "K23": (
        ["a1", "a2", "b1", "b2", "b3"],
        [(x, y) for x in ("a1", "a2") for y in ("b1", "b2", "b3")],
    ),
}


def validate_witness(g: FiniteGraph, w: MinorWitness):
    """Raise if the witness violates its own invariants."""
    pverts, pedges = _PATTERNS[w.pattern]
    if set(w.branch_sets) != set(pverts):
        raise GraphError("witness branch sets do not match the pattern")
    seen = set()
    for pv in pverts:
        bs = w.branch_sets[pv]
        if not bs or not bs <= g.vertices:
            raise GraphError(f"branch set for {pv} empty or outside the host")
        if bs & seen:
            raise GraphError("branch sets overlap")
        seen |= bs
        if not g.subgraph(bs).is_connected():
            raise GraphError(f"branch set for {pv} is disconnected")
    for pe in pedges:
        key = tuple(sorted(pe))
        if key not in w.edges:
            raise GraphError(f"missing host edge for pattern edge {pe}")
        a, b = w.edges[key]
        if not g.has_edge(a, b):
            raise GraphError(f"host edge {a}-{b} not in graph")
        x, y = sorted(pe)
        if not (
            (a in w.branch_sets[x] and b in w.branch_sets[y])
            or (a in w.branch_sets[y] and b in w.branch_sets[x])
        ):
            raise GraphError(f"host edge {a}-{b} does not join the right branch sets")


def find_k4_subgraph(g: FiniteGraph):
    """First 4-clique in canonical order, or None."""
    vs = g.sorted_vertices()
    for quad in itertools.combinations(vs, 4):
        if all(g.has_edge(a, b) for a, b in itertools.combinations(quad, 2)):
            return frozenset(quad)
    return None


# -- internally disjoint path packing (Menger via unit-capacity flow) -------


def internally_disjoint_paths(g: FiniteGraph, a, b, need, forbid_edge_ab=False):
    """Up to `need` a-b paths, pairwise disjoint except at the ends.

    Unit-capacity augmenting paths on the vertex-split digraph: every
    vertex other than a, b becomes an in/out arc of capacity one, so flow
    value equals the largest internally vertex-disjoint packing (Menger).
    Returns a list of vertex sequences; length < need means no larger
    packing exists.
    """
    cap = {}
    for v in g.vertices:
        if v not in (a, b):
            cap[(("i", v), ("o", v))] = 1
    for x, y in g.edges:
        if forbid_edge_ab and {x, y} == {a, b}:
            continue
        for u, w in ((x, y), (y, x)):
            if w == a or u == b:
                continue
            cap[(("o", u), ("i", w))] = 1
    src, snk = ("o", a), ("i", b)
    out_arcs = {}
    for (u, v) in cap:
        out_arcs.setdefault(u, set()).add(v)
        out_arcs.setdefault(v, set()).add(u)  # residual direction
    flow = {}

    def residual(u, v):
        return cap.get((u, v), 0) - flow.get((u, v), 0) + flow.get((v, u), 0)

    value = 0
    while value < need:
        prev = {src: None}
        queue = [src]
        found = False
        while queue and not found:
            nxt = []
            for u in queue:
                for v in sorted(out_arcs.get(u, ()), key=str):
                    if v not in prev and residual(u, v) > 0:
                        prev[v] = u
                        if v == snk:
                            found = True
                            break
                        nxt.append(v)
                if found:
                    break
            queue = nxt
        if not found:
            break
        v = snk
        while prev[v] is not None:
            u = prev[v]
            if cap.get((u, v), 0) > flow.get((u, v), 0):
                flow[(u, v)] = flow.get((u, v), 0) + 1
            else:
                flow[(v, u)] = flow.get((v, u), 0) - 1
            v = u
        value += 1
    # decompose the integral flow into vertex paths
    nxt_of = {}
    for (u, v), f in flow.items():
        if f > 0 and u[0] == "o" and v[0] == "i":
            nxt_of.setdefault(u[1], []).append(v[1])
    for k in nxt_of:
        nxt_of[k].sort(key=vkey)
    paths = []
    for _ in range(value):
        path = [a]
        while path[-1] != b:
            path.append(nxt_of[path[-1]].pop(0))
        paths.append(path)
    return paths


def _k23_minor(g: FiniteGraph):
    """A K2,3 minor witness via two hub vertices joined by three
    internally disjoint paths of length at least 2, or None."""
    vs = g.sorted_vertices()
    for a, b in itertools.combinations(vs, 2):
        paths = internally_disjoint_paths(g, a, b, 3, forbid_edge_ab=True)
        if len(paths) >= 3:
            branch = {"a1": frozenset([a]), "a2": frozenset([b])}
            edges = {}
            for i, p in enumerate(paths[:3]):
                mid = p[1:-1]
                branch[f"b{i + 1}"] = frozenset(mid)
                edges[tuple(sorted(("a1", f"b{i + 1}")))] = canon_edge(p[0], p[1])
                edges[tuple(sorted(("a2", f"b{i + 1}")))] = canon_edge(p[-2], p[-1])
            w = MinorWitness("K23", branch, edges)
            validate_witness(g, w)
            return w
    return None


def has_k23_minor(g: FiniteGraph) -> bool:
    return _k23_minor(g) is not None


def _route_paths(g, branch, pedges, used, idx, routes):
    """Backtracking router: realize pattern edges by internally disjoint
    host paths avoiding other branch vertices."""
    if idx == len(pedges):
        return True
    x, y = pedges[idx]
    a, b = branch[x], branch[y]
    blocked = (set(branch.values()) - {a, b}) | used

    def dfs(path):
        last = path[-1]
        for nb in g.neighbors(last):
            if nb == b and len(path) >= 1:
                routes[idx] = path + [b]
                newly = set(path[1:])
                used.update(newly)
                if _route_paths(g, branch, pedges, used, idx + 1, routes):
                    return True
                used.difference_update(newly)
                routes[idx] = None
            elif nb not in blocked and nb not in path and nb != a:
                if dfs(path + [nb]):
                    return True
        return False

    return dfs([a])


def _k4_minor(g: FiniteGraph):
    sub = find_k4_subgraph(g)
    if sub is not None:
        quad = sorted(sub, key=vkey)
        names = ["a", "b", "c", "d"]
        branch = {n: frozenset([v]) for n, v in zip(names, quad)}
        edges = {
            tuple(sorted((names[i], names[j]))): canon_edge(quad[i], quad[j])
            for i, j in itertools.combinations(range(4), 2)
        }
        w = MinorWitness("K4", branch, edges)
        validate_witness(g, w)
        return w
    vs = [v for v in g.sorted_vertices() if g.degree(v) >= 3]
    pedges = list(itertools.combinations(["a", "b", "c", "d"], 2))
    for quad in itertools.combinations(vs, 4):
        branch = dict(zip(["a", "b", "c", "d"], quad))
        routes = [None] * len(pedges)
        if _route_paths(g, branch, pedges, set(), 0, routes):
            bsets = {n: {v} for n, v in branch.items()}
            edges = {}
            for (x, y), path in zip(pedges, routes):
                interior = path[1:-1]
                bsets[x].update(interior)
                edges[tuple(sorted((x, y)))] = canon_edge(path[-2], path[-1])
            w = MinorWitness("K4", {k: frozenset(v) for k, v in bsets.items()}, edges)
            validate_witness(g, w)
            return w
    return None


def find_minor(g: FiniteGraph, pattern: str):
    if pattern == "K4":
        return _k4_minor(g)
    if pattern == "K23":
        return _k23_minor(g)
    raise GraphError(f"unknown pattern {pattern!r}")


def is_outerplanar(g: FiniteGraph) -> bool:
    """No K4 subgraph and no K2,3 minor.

    (For K4 the subgraph check suffices: in a K2,3-minor-free graph a K4
    minor forces a K4 subgraph, and a graph with a K4 minor but no K4
    subgraph contains a K2,3 minor anyway.)
    """
    return find_k4_subgraph(g) is None and not has_k23_minor(g)


def k4_minor_equals_subgraph(g: FiniteGraph) -> bool:
    """Property runner: under no-K2,3-minor, K4 minor iff K4 subgraph."""
    if has_k23_minor(g):
        raise GraphError("graph has a K2,3 minor; equivalence premise violated")
    return (find_minor(g, "K4") is not None) == (find_k4_subgraph(g) is not None)


def circular_ordering_oracle(g: FiniteGraph):
    """A cyclic vertex order with no two crossing chords, or None.

    Brute-force placement search, limited to 10 vertices.
    """
    vs = g.sorted_vertices()
    n = len(vs)
    if n > 10:
        raise GraphError("circular ordering oracle limited to 10 vertices")
    if n <= 3:
        return list(vs)
    first = vs[0]

    def place(order, pos):
        if len(order) == n:
            return list(order)
        for v in vs:
            if v in pos:
                continue
            p = len(order)
            ok = True
            # new chords (q, p) for q a placed neighbor of v must not cross
            # any existing chord (i, j) with i < q < j
            qs = [pos[u] for u in g.adj[v] if u in pos]
            for q in qs:
                for x, y in g.edges:
                    if x in pos and y in pos and v not in (x, y):
                        i, j = sorted((pos[x], pos[y]))
                        if i < q < j:
                            # (q,p) crosses (i,j): p > j always here
                            ok = False
                            break
                if not ok:
                    break
            if ok:
                order.append(v)
                pos[v] = p
                res = place(order, pos)
                if res is not None:
                    return res
                order.pop()
                del pos[v]
        return None

    return place([first], {first: 0})
