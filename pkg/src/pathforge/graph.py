"""Immutable simple-graph core and the basic structural queries.

Vertices are opaque non-negative integers.  A :class:`Graph` value never
changes after construction; every structural operation returns a new graph
(plus a name map where identifiers move).  Identifiers are stable under
deletion of other vertices, so certificates that reference them stay valid.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class Graph:
    """Undirected simple graph: no loops, no parallel edges."""

    __slots__ = ("_adj", "_m", "_verts")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {int(v): set() for v in vertices}
        m = 0
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in adj:
                adj[u] = set()
            if v not in adj:
                adj[v] = set()
            if v not in adj[u]:
                adj[u].add(v)
                adj[v].add(u)
                m += 1
        self._adj = {v: frozenset(nbrs) for v, nbrs in adj.items()}
        self._m = m
        self._verts = tuple(sorted(self._adj))

    @property
    def n(self) -> int:
        return len(self._verts)

    @property
    def m(self) -> int:
        return self._m

    @property
    def vertices(self) -> tuple[int, ...]:
        """All vertices in ascending order."""
        return self._verts

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self._verts)

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self._adj.get(u)
        return nbrs is not None and v in nbrs

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def sorted_neighbors(self, v: int) -> list[int]:
        return sorted(self._adj[v])

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(s) for s in self._adj.values()), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, ascending."""
        out = []
        for u in self._verts:
            for v in self._adj[u]:
                if u < v:
                    out.append((u, v))
        out.sort()
        return out

    def fresh_vertex(self) -> int:
        """An identifier not used by this graph."""
        return self._verts[-1] + 1 if self._verts else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __contains__(self, v: int) -> bool:
        return v in self._adj


@dataclass(frozen=True)
class Layering:
    """Vertex layers by distance from a root; layer 0 is the root alone."""

    root: int
    layers: tuple[frozenset[int], ...]

    def index_of(self, v: int) -> int:
        for i, layer in enumerate(self.layers):
            if v in layer:
                return i
        raise KeyError(v)

    def as_index_map(self) -> dict[int, int]:
        return {v: i for i, layer in enumerate(self.layers) for v in layer}


class RootedTree:
    """A tree plus a designated root, with parent/child/depth structure."""

    __slots__ = ("graph", "root", "_parent", "_children", "_depth")

    def __init__(self, graph: Graph, root: int):
        if not graph.has_vertex(root):
            raise ValueError(f"root {root} not in tree")
        if not is_tree(graph):
            raise ValueError("graph is not a tree")
        self.graph = graph
        self.root = root
        parent: dict[int, int | None] = {root: None}
        depth = {root: 0}
        children: dict[int, list[int]] = {v: [] for v in graph.vertices}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in graph.sorted_neighbors(u):
                if w not in parent:
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    children[u].append(w)
                    queue.append(w)
        self._parent = parent
        self._children = children
        self._depth = depth

    def parent(self, v: int) -> int | None:
        return self._parent[v]

    def children(self, v: int) -> list[int]:
        """Children in ascending identifier order (first child = left child)."""
        return self._children[v]

    def depth(self, v: int) -> int:
        return self._depth[v]

    @property
    def height(self) -> int:
        return max(self._depth.values())

    def vertices_at_depth(self, d: int) -> list[int]:
        return sorted(v for v, dep in self._depth.items() if dep == d)

    def leaves(self) -> list[int]:
        return sorted(v for v in self.graph.vertices if not self._children[v])

    def is_ancestor(self, u: int, v: int) -> bool:
        """True if u lies on the path from v to the root (u = v included)."""
        w: int | None = v
        while w is not None:
            if w == u:
                return True
            w = self._parent[w]
        return False

    def path_to_root(self, v: int) -> list[int]:
        out = [v]
        while self._parent[out[-1]] is not None:
            out.append(self._parent[out[-1]])
        return out

    def tree_path(self, u: int, v: int) -> list[int]:
        """The unique u-v path in the tree."""
        up, vp = self.path_to_root(u), self.path_to_root(v)
        useen = {x: i for i, x in enumerate(up)}
        for j, x in enumerate(vp):
            if x in useen:
                return up[: useen[x]] + vp[j::-1]
        raise ValueError("vertices in different trees")

    def subtree_vertices(self, v: int) -> frozenset[int]:
        out = []
        stack = [v]
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(self._children[u])
        return frozenset(out)

    def descendants_at_depth(self, v: int, d: int) -> list[int]:
        """Descendants of v (v excluded unless depth matches) at absolute depth d."""
        return sorted(u for u in self.subtree_vertices(v) if self._depth[u] == d)


# ---------------------------------------------------------------------------
# traversal helpers


def bfs_distances(g: Graph, source: int, cutoff: int | None = None,
                  within: frozenset[int] | None = None) -> dict[int, int]:
    """Distances from source; restricted to `within` if given, truncated at cutoff."""
    if within is not None and source not in within:
        return {}
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if cutoff is not None and dist[u] >= cutoff:
            continue
        for w in g.neighbors(u):
            if w not in dist and (within is None or w in within):
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def shortest_path(g: Graph, sources: Iterable[int], targets: Iterable[int],
                  allowed: frozenset[int] | None = None) -> list[int] | None:
    """Shortest path from any source to any target, vertices restricted to `allowed`.

    Multi-source BFS with ascending-identifier tie-breaking, so the result is
    deterministic.  Returns None when no path exists.
    """
    target_set = set(targets)
    parent: dict[int, int | None] = {}
    frontier = []
    for s in sorted(set(sources)):
        if allowed is not None and s not in allowed:
            continue
        parent[s] = None
        if s in target_set:
            return [s]
        frontier.append(s)
    while frontier:
        nxt = []
        for u in frontier:
            for w in g.sorted_neighbors(u):
                if w in parent or (allowed is not None and w not in allowed):
                    continue
                parent[w] = u
                if w in target_set:
                    path = [w]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return path
                nxt.append(w)
        frontier = nxt
    return None


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, sorted by their minimum vertex."""
    seen: set[int] = set()
    comps = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = bfs_distances(g, v)
        seen.update(comp)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(bfs_distances(g, g.vertices[0])) == g.n


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_forest(g: Graph) -> bool:
    return all(len(c) - 1 == _edge_count_within(g, c) for c in components(g))


def _edge_count_within(g: Graph, s: frozenset[int]) -> int:
    return sum(1 for v in s for w in g.neighbors(v) if w in s and v < w)


# ---------------------------------------------------------------------------
# core operations


def bfs_layering(g: Graph, root: int, require_connected: bool = False) -> Layering:
    """Layer the component of `root` by distance from it.

    With require_connected=True, a graph whose root component misses vertices
    is rejected instead of silently layering the component alone.
    """
    if not g.has_vertex(root):
        raise ValueError(f"unknown root identifier {root}")
    dist = bfs_distances(g, root)
    if require_connected and len(dist) != g.n:
        raise ValueError("graph is not connected")
    depth = max(dist.values())
    layers = [set() for _ in range(depth + 1)]
    for v, d in dist.items():
        layers[d].add(v)
    return Layering(root=root, layers=tuple(frozenset(s) for s in layers))


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle; math.inf for forests.

    One BFS per start vertex; a non-tree edge between vertices at depths
    d1, d2 witnesses a cycle of length d1 + d2 + 1 through the start.
    """
    best: int | float = math.inf
    for s in g.vertices:
        dist = {s: 0}
        parent = {s: s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best - 1:
                break
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    cyc = dist[u] + dist[w] + 1
                    if cyc < best:
                        best = cyc
    return best


def line_graph(g: Graph) -> tuple[Graph, dict[tuple[int, int], int]]:
    """The line graph, plus the map from original edges to its vertices.

    Edge (u, v), u < v, becomes vertex i by ascending edge order; two vertices
    are adjacent iff the edges share an endpoint.
    """
    edge_list = g.edges()
    name = {e: i for i, e in enumerate(edge_list)}
    incident: dict[int, list[int]] = {v: [] for v in g.vertices}
    for e, i in name.items():
        incident[e[0]].append(i)
        incident[e[1]].append(i)
    new_edges = []
    for ids in incident.values():
        ids.sort()
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                new_edges.append((ids[a], ids[b]))
    return Graph(range(len(edge_list)), new_edges), name


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """The subgraph induced on s, identifiers preserved."""
    keep = set(s)
    unknown = keep - set(g.vertices)
    if unknown:
        raise ValueError(f"unknown identifiers {sorted(unknown)}")
    edges = [(u, v) for u in keep for v in g.neighbors(u) if v in keep and u < v]
    return Graph(keep, edges)


def contract_sets(g: Graph, parts: Sequence[Iterable[int]]) -> tuple[Graph, dict[frozenset[int], int]]:
    """Contract each part to a single fresh vertex; unlisted vertices persist.

    Parts must be pairwise disjoint and each must induce a connected
    subgraph.  Parallel edges merge and loops vanish, so the result is again
    simple.  Returns the contracted graph and the part -> new-vertex map.
    """
    frozen = [frozenset(p) for p in parts]
    seen: set[int] = set()
    for p in frozen:
        if not p:
            raise ValueError("empty part")
        if p & seen:
            raise ValueError("overlapping parts")
        seen |= p
        missing = p - set(g.vertices)
        if missing:
            raise ValueError(f"unknown identifiers {sorted(missing)}")
        if len(bfs_distances(g, min(p), within=p)) != len(p):
            raise ValueError(f"part {sorted(p)} is not connected")
    name: dict[frozenset[int], int] = {}
    owner: dict[int, int] = {}
    nxt = g.fresh_vertex()
    for p in sorted(frozen, key=min):
        name[p] = nxt
        for v in p:
            owner[v] = nxt
        nxt += 1
    vertices = [owner.get(v, v) for v in g.vertices]
    edges = []
    for u, v in g.edges():
        cu, cv = owner.get(u, u), owner.get(v, v)
        if cu != cv:
            edges.append((cu, cv))
    return Graph(set(vertices), edges), name


# ---------------------------------------------------------------------------
# small constructors used throughout the tests and the CLI


def path_graph(n: int, start: int = 0) -> Graph:
    return Graph(range(start, start + n), [(start + i, start + i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(range(a + b), [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(m: int) -> Graph:
    """K_{1,m} with the center at 0."""
    return Graph(range(m + 1), [(0, i) for i in range(1, m + 1)])
