"""Generators for the named graph families, each with a structure certificate.

Complete binary trees use heap identifiers (children of i are 2i+1 and 2i+2),
so the embedded height-k tree inside ``binary_tree_plus(k)`` is exactly the
identifier range of ``complete_binary_tree(k)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    Graph,
    Layering,
    RootedTree,
    bfs_layering,
    bfs_distances,
)


@dataclass(frozen=True)
class SubdivisionCert:
    """Witness that `host` is exactly a subdivision of `base`.

    Original vertices keep their identifiers; ``path_map[(u, v)]`` is the
    replacement path from u to v (endpoints included).  Replacement paths are
    internally disjoint, and contracting each one back to an edge recovers
    the base graph.
    """

    base: Graph
    host: Graph
    original_vertices: frozenset[int]
    path_map: dict[tuple[int, int], tuple[int, ...]]


@dataclass(frozen=True)
class WattleCertificate:
    """A wattle: a subdivision of a complete binary tree with a net-graph
    replacement performed at each vertex of `triangles` and nowhere else.

    ``branch_map`` sends each base vertex to its host structure: a single
    host vertex, or a frozenset of three host vertices forming a triangle.
    ``path_map`` is keyed by (parent, child) base edges; each path runs from
    a vertex of the parent structure to a vertex of the child structure, and
    every triangle vertex is the attachment point of exactly one of the three
    incident paths.
    """

    base: RootedTree
    triangles: frozenset[int]
    host: Graph
    branch_map: dict[int, int | frozenset[int]]
    path_map: dict[tuple[int, int], tuple[int, ...]]

    def structure(self, v: int) -> frozenset[int]:
        img = self.branch_map[v]
        return img if isinstance(img, frozenset) else frozenset((img,))

    def used_vertices(self) -> frozenset[int]:
        used: set[int] = set()
        for v in self.base.graph.vertices:
            used |= self.structure(v)
        for path in self.path_map.values():
            used.update(path)
        return frozenset(used)


def complete_binary_tree(k: int) -> RootedTree:
    """The complete binary tree of height k, rooted at 0; 2^(k+1) - 1 vertices."""
    if k < 0:
        raise ValueError("height must be non-negative")
    n = 2 ** (k + 1) - 1
    edges = [(i, c) for i in range((n - 1) // 2) for c in (2 * i + 1, 2 * i + 2)]
    return RootedTree(Graph(range(n), edges), 0)


def binary_tree_plus(k: int) -> RootedTree:
    """T_{k+1} with one extra leaf attached to the root.

    Every vertex of the embedded height-k tree (identifiers < 2^(k+1) - 1)
    has degree at least 3 in the result.
    """
    if k < 0:
        raise ValueError("height must be non-negative")
    inner = complete_binary_tree(k + 1)
    pendant = inner.graph.fresh_vertex()
    g = Graph(range(pendant + 1), inner.graph.edges() + [(0, pendant)])
    return RootedTree(g, 0)


def k_ary_tree(k: int) -> RootedTree:
    """Height-k tree where every non-leaf has k children and all leaves sit at depth k."""
    if k < 1:
        raise ValueError("k must be at least 1")
    edges = []
    level = [0]
    nxt = 1
    for _ in range(k):
        new_level = []
        for v in level:
            for _ in range(k):
                edges.append((v, nxt))
                new_level.append(nxt)
                nxt += 1
        level = new_level
    return RootedTree(Graph(range(nxt), edges), 0)


def _normalize_lengths(g: Graph, lengths) -> dict[tuple[int, int], int]:
    edges = g.edges()
    if lengths is None:
        return {e: 1 for e in edges}
    if isinstance(lengths, int):
        if lengths < 1:
            raise ValueError("subdivision lengths must be >= 1")
        return {e: lengths for e in edges}
    table = {}
    for e in edges:
        u, v = e
        if (u, v) in lengths:
            val = lengths[(u, v)]
        elif (v, u) in lengths:
            val = lengths[(v, u)]
        else:
            raise ValueError(f"missing length for edge {e}")
        if val < 1:
            raise ValueError("subdivision lengths must be >= 1")
        table[e] = val
    return table


def subdivide(g: Graph, lengths=None) -> tuple[Graph, SubdivisionCert]:
    """Replace each edge uv by a path of the given length (edge count).

    `lengths` may be None (all 1, an isomorphic copy), a single int, or a
    dict from edges to ints >= 1.  Original identifiers are preserved and the
    internal path vertices are fresh.
    """
    table = _normalize_lengths(g, lengths)
    nxt = g.fresh_vertex()
    new_edges: list[tuple[int, int]] = []
    path_map: dict[tuple[int, int], tuple[int, ...]] = {}
    for (u, v), length in sorted(table.items()):
        path = [u]
        for _ in range(length - 1):
            path.append(nxt)
            nxt += 1
        path.append(v)
        new_edges.extend((path[i], path[i + 1]) for i in range(len(path) - 1))
        path_map[(u, v)] = tuple(path)
    host = Graph(set(g.vertices) | set(range(g.fresh_vertex(), nxt)), new_edges)
    cert = SubdivisionCert(base=g, host=host,
                           original_vertices=g.vertex_set(), path_map=path_map)
    return host, cert


def net_graph_replacement(g: Graph, v: int) -> tuple[Graph, dict]:
    """Replace degree-3 vertex v by a triangle, one new vertex per old neighbour.

    New triangle vertices x, y, z attach to the old neighbours in ascending
    identifier order.  Returns the new graph and a map describing the
    triangle and its attachments.
    """
    if not g.has_vertex(v):
        raise ValueError(f"unknown vertex {v}")
    if g.degree(v) != 3:
        raise ValueError(f"vertex {v} has degree {g.degree(v)}, need 3")
    a, b, c = g.sorted_neighbors(v)
    base = g.fresh_vertex()
    x, y, z = base, base + 1, base + 2
    edges = [e for e in g.edges() if v not in e]
    edges += [(x, y), (y, z), (x, z), (x, a), (y, b), (z, c)]
    vertices = (set(g.vertices) - {v}) | {x, y, z}
    info = {"replaced": v, "triangle": (x, y, z), "attachments": {x: a, y: b, z: c}}
    return Graph(vertices, edges), info


def wattle(k: int, lengths=None, triangles=()) -> tuple[Graph, WattleCertificate]:
    """Build a wattle: subdivide the height-k complete binary tree, then do a
    net-graph replacement at every listed degree-3 base vertex."""
    base = complete_binary_tree(k)
    tri = frozenset(int(v) for v in triangles)
    internal = {v for v in base.graph.vertices
                if base.graph.degree(v) == 3}
    bad = tri - internal
    if bad:
        raise ValueError(f"not degree-3 base vertices: {sorted(bad)}")
    host, sub = subdivide(base.graph, lengths)
    # rekey paths by (parent, child), oriented away from the root
    path_map: dict[tuple[int, int], list[int]] = {}
    for (u, v), path in sub.path_map.items():
        if base.parent(v) == u:
            path_map[(u, v)] = list(path)
        else:
            path_map[(v, u)] = list(reversed(path))
    branch_map: dict[int, int | frozenset[int]] = {v: v for v in base.graph.vertices}
    for v in sorted(tri):
        host, info = net_graph_replacement(host, v)
        attach_of = {old: new for new, old in info["attachments"].items()}
        for key, path in path_map.items():
            if path[-1] == v:
                path[-1] = attach_of[path[-2]]
            elif path[0] == v:
                path[0] = attach_of[path[1]]
        branch_map[v] = frozenset(info["triangle"])
    cert = WattleCertificate(base=base, triangles=tri, host=host,
                             branch_map=branch_map,
                             path_map={e: tuple(p) for e, p in path_map.items()})
    return host, cert


def hat_tree(k: int) -> tuple[Graph, frozenset[int], Layering, SubdivisionCert]:
    """Layered subdivision of the height-2k tree plus within-layer edges.

    Branch vertex v sits at layer 3 * (its preorder index), so branch layers
    are distinct, congruent 0 mod 3, and pairwise at least 3 apart.  Each
    branch vertex is then joined to every other vertex in its layer.  Returns
    the graph, the branch-vertex set, the layering from the root, and the
    subdivision certificate for the tree subgraph.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    base = complete_binary_tree(2 * k)
    order: dict[int, int] = {}
    stack = [0]
    while stack:  # preorder, left child first
        v = stack.pop()
        order[v] = len(order)
        stack.extend(reversed(base.children(v)))
    lengths = {}
    for u, v in base.graph.edges():
        p, c = (u, v) if base.parent(v) == u else (v, u)
        lengths[(u, v)] = 3 * (order[c] - order[p])
    tstar, cert = subdivide(base.graph, lengths)
    layering = bfs_layering(tstar, base.root)
    layer_index = layering.as_index_map()
    extra = []
    branch = base.graph.vertex_set()
    for u in sorted(branch):
        for y in layering.layers[layer_index[u]]:
            if y != u:
                extra.append((u, y))
    hat = Graph(tstar.vertices, tstar.edges() + extra)
    return hat, branch, bfs_layering(hat, base.root), cert


# ---------------------------------------------------------------------------
# certificate validators


def validate_subdivision(cert: SubdivisionCert) -> list[str]:
    """All violated subdivision-certificate conditions (empty list = valid)."""
    errs: list[str] = []
    base, host = cert.base, cert.host
    if cert.original_vertices != base.vertex_set():
        errs.append("original vertices differ from the base vertex set")
    if set(cert.path_map) != set(base.edges()):
        errs.append("path map keys differ from the base edge set")
        return errs
    seen_interior: set[int] = set()
    expected_edges: set[tuple[int, int]] = set()
    for (u, v), path in sorted(cert.path_map.items()):
        if len(path) < 2 or path[0] != u or path[-1] != v:
            errs.append(f"path for edge ({u}, {v}) does not join its endpoints")
            continue
        interior = path[1:-1]
        if set(interior) & cert.original_vertices:
            errs.append(f"path for edge ({u}, {v}) passes through an original vertex")
        if set(interior) & seen_interior or len(set(interior)) != len(interior):
            errs.append(f"path for edge ({u}, {v}) shares internal vertices")
        seen_interior.update(interior)
        for i in range(len(path) - 1):
            a, b = path[i], path[i + 1]
            if not host.has_edge(a, b):
                errs.append(f"missing host edge ({a}, {b}) on path ({u}, {v})")
            expected_edges.add((min(a, b), max(a, b)))
    if host.vertex_set() != cert.original_vertices | seen_interior:
        errs.append("host has vertices outside the subdivision")
    if set(host.edges()) != expected_edges:
        errs.append("host edge set differs from the union of replacement paths")
    return errs


def _is_complete_binary(tree: RootedTree) -> bool:
    h = tree.height
    for v in tree.graph.vertices:
        kids = tree.children(v)
        if kids and len(kids) != 2:
            return False
        if not kids and tree.depth(v) != h:
            return False
    return True


def validate_wattle(cert: WattleCertificate) -> list[str]:
    """All violated wattle-certificate conditions (empty list = valid).

    Checks the structure maps and that the used host vertices induce exactly
    the wattle's edges, so it also certifies induced embeddings in a larger
    host graph.
    """
    errs: list[str] = []
    base, host = cert.base, cert.host
    if not _is_complete_binary(base):
        errs.append("base is not a complete binary tree")
    internal = {v for v in base.graph.vertices if base.graph.degree(v) == 3}
    if not cert.triangles <= internal:
        errs.append("triangle set contains a non-degree-3 base vertex")
    structures: dict[int, frozenset[int]] = {}
    claimed: set[int] = set()
    for v in base.graph.vertices:
        img = cert.branch_map.get(v)
        if v in cert.triangles:
            if not isinstance(img, frozenset) or len(img) != 3:
                errs.append(f"branch vertex {v} should map to a triangle")
                return errs
            x, y, z = sorted(img)
            if not (host.has_edge(x, y) and host.has_edge(y, z) and host.has_edge(x, z)):
                errs.append(f"image of {v} is not a triangle in the host")
        else:
            if not isinstance(img, int):
                errs.append(f"branch vertex {v} should map to a single host vertex")
                return errs
        s = cert.structure(v)
        if s & claimed:
            errs.append(f"structure of {v} overlaps another structure")
        claimed |= s
        structures[v] = s
    base_edges = {(u, v) if base.parent(v) == u else (v, u)
                  for u, v in base.graph.edges()}
    if set(cert.path_map) != base_edges:
        errs.append("path map keys differ from the base (parent, child) edges")
        return errs
    interiors: set[int] = set()
    attach_count = {v: {x: 0 for x in structures[v]} for v in cert.triangles}
    expected: set[tuple[int, int]] = set()
    for v in cert.triangles:
        for x, y in ((a, b) for a in structures[v] for b in structures[v] if a < b):
            expected.add((x, y))
    for (u, v), path in sorted(cert.path_map.items()):
        if len(path) < 2:
            errs.append(f"path ({u}, {v}) too short")
            continue
        if path[0] not in structures[u] or path[-1] not in structures[v]:
            errs.append(f"path ({u}, {v}) does not join the two structures")
        if u in cert.triangles:
            attach_count[u][path[0]] += 1
        if v in cert.triangles:
            attach_count[v][path[-1]] += 1
        mid = path[1:-1]
        if set(mid) & claimed or set(mid) & interiors or len(set(mid)) != len(mid):
            errs.append(f"path ({u}, {v}) interior is not private")
        interiors.update(mid)
        for i in range(len(path) - 1):
            a, b = path[i], path[i + 1]
            if not host.has_edge(a, b):
                errs.append(f"missing host edge ({a}, {b}) on path ({u}, {v})")
            expected.add((min(a, b), max(a, b)))
    for v, counts in attach_count.items():
        if sorted(counts.values()) != [1, 1, 1]:
            errs.append(f"triangle at {v} does not attach one path per corner")
    used = cert.used_vertices()
    induced = {(a, b) for a in used for b in host.neighbors(a) if b in used and a < b}
    if induced != expected:
        extra = sorted(induced - expected)
        missing = sorted(expected - induced)
        if extra:
            errs.append(f"host induces unexpected edges {extra[:5]}")
        if missing:
            errs.append(f"host misses wattle edges {missing[:5]}")
    return errs
