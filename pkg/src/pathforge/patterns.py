"""Induced-subgraph search and structure recognizers.

The searches are deterministic backtrackers: pattern vertices are tried in
descending-degree order and host candidates in ascending identifier order, so
identical inputs give identical embeddings.  A ``None`` result is an
exhaustive negative; running out of steps raises ``BudgetExhausted`` instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .budget import Budget
from .graph import (
    Graph,
    RootedTree,
    components,
    contract_sets,
    is_connected,
    is_forest,
    is_tree,
)
from .generators import complete_binary_tree, k_ary_tree
from .graph import complete_graph, complete_bipartite_graph


@dataclass(frozen=True)
class Embedding:
    """An injective pattern -> host map; `induced` means non-edges map to non-edges."""

    pattern: Graph
    host: Graph
    mapping: dict[int, int]
    induced: bool = True


def validate_embedding(emb: Embedding) -> list[str]:
    errs = []
    img = list(emb.mapping.values())
    if len(set(img)) != len(img):
        errs.append("mapping is not injective")
    if set(emb.mapping) != set(emb.pattern.vertices):
        errs.append("mapping does not cover the pattern")
        return errs
    for p, q in combinations(emb.pattern.vertices, 2):
        host_edge = emb.host.has_edge(emb.mapping[p], emb.mapping[q])
        if emb.pattern.has_edge(p, q) and not host_edge:
            errs.append(f"pattern edge ({p}, {q}) not realized")
        if emb.induced and host_edge and not emb.pattern.has_edge(p, q):
            errs.append(f"pattern non-edge ({p}, {q}) realized as a host edge")
    return errs


def find_induced_subgraph(host: Graph, pattern: Graph,
                          budget: Budget | int | None = None) -> Embedding | None:
    """First induced copy of `pattern` in `host` in deterministic search order,
    or None after an exhaustive search."""
    budget = Budget.coerce(budget)
    if pattern.n > host.n:
        return None
    order = sorted(pattern.vertices, key=lambda v: (-pattern.degree(v), v))
    host_vs = host.vertices
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        budget.tick()
        if i == len(order):
            return True
        p = order[i]
        pdeg = pattern.degree(p)
        for h in host_vs:
            if h in used or host.degree(h) < pdeg:
                continue
            ok = True
            for q, hq in mapping.items():
                if pattern.has_edge(p, q) != host.has_edge(h, hq):
                    ok = False
                    break
            if not ok:
                continue
            mapping[p] = h
            used.add(h)
            if extend(i + 1):
                return True
            del mapping[p]
            used.discard(h)
        return False

    if extend(0):
        return Embedding(pattern=pattern, host=host, mapping=dict(mapping), induced=True)
    return None


# ---------------------------------------------------------------------------
# subdivisions embedded in a host


@dataclass(frozen=True)
class SubdivisionEmbedding:
    """A subdivision of `base` inside `host`: branch images plus one host path
    per base edge, internally disjoint.  When `induced`, the image vertex set
    induces exactly the subdivision's edges."""

    base: Graph
    host: Graph
    branch_map: dict[int, int]
    path_map: dict[tuple[int, int], tuple[int, ...]]
    induced: bool = True

    def image_vertices(self) -> frozenset[int]:
        used = set(self.branch_map.values())
        for path in self.path_map.values():
            used.update(path)
        return frozenset(used)


def validate_subdivision_embedding(emb: SubdivisionEmbedding) -> list[str]:
    errs = []
    img = list(emb.branch_map.values())
    if len(set(img)) != len(img):
        errs.append("branch map is not injective")
    if set(emb.branch_map) != set(emb.base.vertices):
        errs.append("branch map does not cover the base")
        return errs
    if set(emb.path_map) != set(emb.base.edges()):
        errs.append("path map keys differ from the base edges")
        return errs
    branch_images = set(img)
    interiors: set[int] = set()
    expected: set[tuple[int, int]] = set()
    for (u, v), path in sorted(emb.path_map.items()):
        if len(path) < 2 or path[0] != emb.branch_map[u] or path[-1] != emb.branch_map[v]:
            errs.append(f"path ({u}, {v}) does not join the branch images")
            continue
        mid = path[1:-1]
        if set(mid) & branch_images or set(mid) & interiors or len(set(mid)) != len(mid):
            errs.append(f"path ({u}, {v}) interior is not private")
        interiors.update(mid)
        for i in range(len(path) - 1):
            a, b = path[i], path[i + 1]
            if not emb.host.has_edge(a, b):
                errs.append(f"missing host edge ({a}, {b}) on path ({u}, {v})")
            expected.add((min(a, b), max(a, b)))
    if emb.induced:
        used = emb.image_vertices()
        induced_edges = {(a, b) for a in used for b in emb.host.neighbors(a)
                         if b in used and a < b}
        if induced_edges != expected:
            errs.append("image does not induce exactly the subdivision edges")
    return errs


def find_induced_subdivision(host: Graph, base: Graph, min_length=None,
                             induced: bool = True,
                             budget: Budget | int | None = None) -> SubdivisionEmbedding | None:
    """Search for a subdivision of `base` in `host` (induced by default).

    Branch images are fixed first; each base edge is then routed as a path
    whose interior stays disjoint from everything placed, with non-adjacency
    to the rest of the image enforced incrementally in the induced case.
    """
    budget = Budget.coerce(budget)
    if base.n == 0:
        return SubdivisionEmbedding(base, host, {}, {}, induced)
    if not is_connected(base):
        raise ValueError("base must be connected")
    min_len = {e: 1 for e in base.edges()}
    if isinstance(min_length, int):
        min_len = {e: min_length for e in base.edges()}
    elif min_length:
        for e, val in min_length.items():
            key = (min(e), max(e))
            min_len[key] = val
    need = base.n + sum(val - 1 for val in min_len.values())
    if host.n < need:
        return None

    border = sorted(base.vertices, key=lambda v: (-base.degree(v), v))
    edges = sorted(base.edges())
    branch: dict[int, int] = {}
    used: set[int] = set()
    paths: dict[tuple[int, int], tuple[int, ...]] = {}

    def images_ok(p: int, h: int) -> bool:
        for q, hq in branch.items():
            if host.has_edge(h, hq) and not base.has_edge(p, q) and induced:
                return False
        return True

    def route(ei: int) -> bool:
        budget.tick()
        if ei == len(edges):
            return True
        u, v = edges[ei]
        src, dst = branch[u], branch[v]
        lo = min_len[(u, v)]

        def walk(path: list[int]) -> bool:
            budget.tick()
            end = path[-1]
            length = len(path) - 1
            can_close = host.has_edge(end, dst)
            if can_close and length + 1 >= lo:
                # interiors next to dst must be the last ones; a chord between
                # the branch images rules out any indirect route
                if not (induced and length >= 1 and host.has_edge(src, dst)):
                    paths[(u, v)] = tuple(path) + (dst,)
                    used.update(path[1:])
                    if route(ei + 1):
                        return True
                    used.difference_update(path[1:])
                    del paths[(u, v)]
            if induced and can_close:
                return False
            for x in host.sorted_neighbors(end):
                if x in used or x == dst or x in path:
                    continue
                if induced:
                    bad = any(host.has_edge(x, y) for y in used
                              if y != end and y != dst)
                    if not bad:
                        bad = any(host.has_edge(x, y) for y in path if y != end)
                    if bad:
                        continue
                path.append(x)
                if walk(path):
                    return True
                path.pop()
            return False

        return walk([src])

    def place(i: int) -> bool:
        budget.tick()
        if i == len(border):
            return route(0)
        p = border[i]
        pdeg = base.degree(p)
        for h in host.vertices:
            if h in used or host.degree(h) < pdeg:
                continue
            if not images_ok(p, h):
                continue
            branch[p] = h
            used.add(h)
            if place(i + 1):
                return True
            del branch[p]
            used.discard(h)
        return False

    if place(0):
        return SubdivisionEmbedding(base=base, host=host, branch_map=dict(branch),
                                    path_map=dict(paths), induced=induced)
    return None


@dataclass(frozen=True)
class LineGraphEmbedding:
    """An induced copy of the line graph of a subdivision of `base`.

    `subdivision` is the abstract subdivided tree S; `edge_map` sends each of
    its edges to a host vertex so that two host images are adjacent exactly
    when the two S-edges share an endpoint.
    """

    base: Graph
    host: Graph
    subdivision: Graph
    subdivision_paths: dict[tuple[int, int], tuple[int, ...]]
    edge_map: dict[tuple[int, int], int]

    def image_vertices(self) -> frozenset[int]:
        return frozenset(self.edge_map.values())


def line_graph_embedding_as_embedding(emb: LineGraphEmbedding) -> Embedding:
    """Flatten a line-graph certificate into a plain induced embedding whose
    pattern is the line graph of the subdivision (for serialization)."""
    from .graph import line_graph

    lg, name = line_graph(emb.subdivision)
    mapping = {name[e]: emb.edge_map[e] for e in emb.edge_map}
    return Embedding(pattern=lg, host=emb.host, mapping=mapping, induced=True)


def validate_line_graph_embedding(emb: LineGraphEmbedding) -> list[str]:
    errs = []
    s_edges = emb.subdivision.edges()
    if set(emb.edge_map) != set(s_edges):
        errs.append("edge map keys differ from the subdivision edges")
        return errs
    img = list(emb.edge_map.values())
    if len(set(img)) != len(img):
        errs.append("edge map is not injective")
    for e, f in combinations(s_edges, 2):
        share = bool(set(e) & set(f))
        host_edge = emb.host.has_edge(emb.edge_map[e], emb.edge_map[f])
        if share and not host_edge:
            errs.append(f"incident subdivision edges {e}, {f} map to non-adjacent hosts")
        if not share and host_edge:
            errs.append(f"disjoint subdivision edges {e}, {f} map to adjacent hosts")
    if set(emb.subdivision_paths) != set(emb.base.edges()):
        errs.append("subdivision paths do not cover the base edges")
        return errs
    seen: set[int] = set()
    for (u, v), path in sorted(emb.subdivision_paths.items()):
        if len(path) < 2 or path[0] != u or path[-1] != v:
            errs.append(f"subdivision path ({u}, {v}) does not join its endpoints")
            continue
        mid = set(path[1:-1])
        if mid & set(emb.base.vertices) or mid & seen:
            errs.append(f"subdivision path ({u}, {v}) is not private")
        seen |= mid
        for i in range(len(path) - 1):
            if not emb.subdivision.has_edge(path[i], path[i + 1]):
                errs.append(f"subdivision misses edge on path ({u}, {v})")
    return errs


# ---------------------------------------------------------------------------
# shape recognizers

SHAPES = ("complete", "complete-bipartite", "claw", "fork", "semi-fork",
          "net", "tripod", "semi-tripod")


def _path_witness(g: Graph) -> dict | None:
    if g.n == 0 or not is_connected(g):
        return None
    if g.n == 1:
        return {"order": (g.vertices[0],)}
    if g.m != g.n - 1 or g.max_degree() > 2:
        return None
    ends = [v for v in g.vertices if g.degree(v) == 1]
    order = [ends[0]]
    prev = None
    while len(order) < g.n:
        nxt = next(w for w in g.sorted_neighbors(order[-1]) if w != prev)
        prev = order[-1]
        order.append(nxt)
    return {"order": tuple(order)}


def _fork_witness(g: Graph) -> dict | None:
    """Strict fork: a tree with one degree-3 centre and three pendant arms."""
    if not is_tree(g) or g.n < 4:
        return None
    degs = sorted(g.degree(v) for v in g.vertices)
    if degs[-1] != 3 or degs[-2] > 2:
        return None
    center = next(v for v in g.vertices if g.degree(v) == 3)
    arms = []
    for first in g.sorted_neighbors(center):
        arm = [center, first]
        while g.degree(arm[-1]) == 2:
            arm.append(next(w for w in g.sorted_neighbors(arm[-1]) if w != arm[-2]))
        arms.append(tuple(arm))
    return {"center": center, "arms": tuple(arms)}


def _triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for u, v in g.edges():
        for w in g.sorted_neighbors(u):
            if w > v and g.has_edge(v, w):
                out.append((u, v, w))
    return out


def _semi_fork_witness(g: Graph) -> dict | None:
    """Strict semi-fork: one triangle with a pendant path (length >= 0) per corner;
    exactly the line graphs of forks."""
    tris = _triangles(g)
    if len(tris) != 1 or not is_connected(g):
        return None
    corners = tris[0]
    rest = set(g.vertices) - set(corners)
    if any(g.degree(v) > 2 for v in rest):
        return None
    if any(g.degree(c) > 3 for c in corners):
        return None
    paths: dict[int, tuple[int, ...]] = {}
    seen: set[int] = set()
    for c in corners:
        outside = [w for w in g.sorted_neighbors(c) if w not in corners]
        if len(outside) > 1:
            return None
        if not outside:
            paths[c] = ()
            continue
        arm = [outside[0]]
        prev = c
        while True:
            nxt = [w for w in g.sorted_neighbors(arm[-1]) if w != prev]
            if not nxt:
                break
            if len(nxt) > 1 or nxt[0] in corners or nxt[0] in arm:
                return None
            prev = arm[-1]
            arm.append(nxt[0])
        paths[c] = tuple(arm)
        seen.update(arm)
    if seen | set(corners) != set(g.vertices):
        return None
    return {"triangle": corners, "paths": paths}


def recognize(g: Graph, shape: str, strictness: str = "strict") -> tuple[bool, dict | None]:
    """Decide whether g itself has the given shape; returns (verdict, witness).

    Strict mode follows the structural definitions exactly (a fork has a real
    degree-3 centre, a semi-fork a real triangle).  Inclusive mode also
    accepts paths as degenerate forks and semi-forks, which keeps the
    bounded-pathwidth decision procedure coherent for path-like obstructions.
    """
    if strictness not in ("strict", "inclusive"):
        raise ValueError(f"unknown strictness {strictness!r}")
    if shape not in SHAPES:
        raise ValueError(f"unknown shape {shape!r}")
    inclusive = strictness == "inclusive"
    if g.n == 0:
        return False, None

    if shape == "complete":
        ok = g.m == g.n * (g.n - 1) // 2
        return ok, ({"order": g.vertices} if ok else None)

    if shape == "complete-bipartite":
        if not is_connected(g):
            return False, None
        color = {g.vertices[0]: 0}
        queue = [g.vertices[0]]
        while queue:
            u = queue.pop()
            for w in g.neighbors(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False, None
        part = (tuple(sorted(v for v in g.vertices if color[v] == 0)),
                tuple(sorted(v for v in g.vertices if color[v] == 1)))
        if g.m == len(part[0]) * len(part[1]):
            return True, {"parts": part}
        return False, None

    if shape == "claw":
        ok = g.n == 4 and g.m == 3 and sorted(g.degree(v) for v in g.vertices) == [1, 1, 1, 3]
        if not ok:
            return False, None
        center = next(v for v in g.vertices if g.degree(v) == 3)
        return True, {"center": center, "leaves": tuple(g.sorted_neighbors(center))}

    if shape == "fork":
        w = _fork_witness(g)
        if w is None and inclusive:
            w = _path_witness(g)
        return w is not None, w

    if shape == "semi-fork":
        w = _semi_fork_witness(g)
        if w is None and inclusive:
            w = _path_witness(g)
        return w is not None, w

    if shape == "net":
        w = _semi_fork_witness(g)
        if w is not None and all(len(p) == 1 for p in w["paths"].values()):
            return True, w
        return False, None

    if shape == "tripod":
        if not is_forest(g):
            return False, None
        parts = []
        for comp in components(g):
            sub = _component_graph(g, comp)
            ok, w = recognize(sub, "fork", strictness)
            if not ok:
                return False, None
            parts.append(w)
        return True, {"components": tuple(parts)}

    if shape == "semi-tripod":
        parts = []
        for comp in components(g):
            sub = _component_graph(g, comp)
            ok, w = recognize(sub, "semi-fork", strictness)
            if not ok:
                return False, None
            parts.append(w)
        return True, {"components": tuple(parts)}

    raise AssertionError(shape)


def _component_graph(g: Graph, comp: frozenset[int]) -> Graph:
    return Graph(comp, [(u, v) for u in comp for v in g.neighbors(u) if v in comp and u < v])


# ---------------------------------------------------------------------------
# subdivision shape families (whole-graph membership)


def is_cbt_subdivision(g: Graph, k: int) -> bool:
    """Is g (as a bare graph) a subdivision of the height-k complete binary tree?"""
    if k == 0:
        return g.n == 1
    if k == 1:
        return g.n >= 3 and _path_witness(g) is not None
    if not is_tree(g) or g.max_degree() > 3:
        return False
    leaves = sum(1 for v in g.vertices if g.degree(v) == 1)
    branch = sum(1 for v in g.vertices if g.degree(v) == 3)
    if leaves != 2 ** k or branch != 2 ** k - 2:
        return False

    def limb_height(start: int, prev: int) -> int | None:
        """Structure height hanging below the edge (prev -> start); None on mismatch."""
        cur, back = start, prev
        while g.degree(cur) == 2:
            cur, back = next(w for w in g.sorted_neighbors(cur) if w != back), cur
        if g.degree(cur) == 1:
            return 0
        hs = [limb_height(w, cur) for w in g.sorted_neighbors(cur) if w != back]
        if None in hs or hs[0] != hs[1]:
            return None
        return hs[0] + 1

    for r in g.vertices:
        if g.degree(r) != 2:
            continue
        a, b = g.sorted_neighbors(r)
        if limb_height(a, r) == k - 1 and limb_height(b, r) == k - 1:
            return True
    return False


def is_cbt_subdivision_line_graph(g: Graph, k: int) -> bool:
    """Is g the line graph of some subdivision of the height-k complete binary tree?"""
    if k == 0:
        return g.n == 0
    if k == 1:
        return g.n >= 2 and _path_witness(g) is not None
    tris = _triangles(g)
    if len(tris) != 2 ** k - 2:
        return False
    in_tri: set[int] = set()
    for t in tris:
        if in_tri & set(t):
            return False
        in_tri |= set(t)
    if any(g.degree(v) > 2 for v in set(g.vertices) - in_tri):
        return False
    for t in tris:
        out = [w for c in t for w in g.neighbors(c) if w not in t]
        if len(out) != 3 or any(len([w for w in g.neighbors(c) if w not in t]) > 1 for c in t):
            return False
    quotient, _ = contract_sets(g, [set(t) for t in tris])
    return is_tree(quotient) and is_cbt_subdivision(quotient, k)


# ---------------------------------------------------------------------------
# unavoidable-structure detection


def ramsey_detect(g: Graph, n: int, budget: Budget | int | None = None):
    """Look for a complete K_n, a biclique K_{n,n}, or an induced height-n
    k-ary tree; returns (tag, Embedding) or None when none is present."""
    if n < 1:
        raise ValueError("n must be positive")
    budget = Budget.coerce(budget)
    emb = find_induced_subgraph(g, complete_graph(n), budget)
    if emb is not None:
        return "complete", emb
    emb = find_induced_subgraph(g, complete_bipartite_graph(n, n), budget)
    if emb is not None:
        return "biclique", emb
    emb = find_induced_subgraph(g, k_ary_tree(n).graph, budget)
    if emb is not None:
        return "ktree", emb
    return None
