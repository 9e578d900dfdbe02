"""Shared random generators, independent oracles, and instance builders."""

from __future__ import annotations

import itertools
import random

import pytest

from pathforge.graph import Graph, bfs_distances, induced_subgraph
from pathforge.generators import binary_tree_plus, subdivide
from pathforge.minors import MinorModel


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running end-to-end checks")


# ---------------------------------------------------------------------------
# random instances


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph(range(n), edges)


def random_tree(rng: random.Random, n: int) -> Graph:
    return Graph(range(n), [(i, rng.randrange(i)) for i in range(1, n)])


def random_connected_graph(rng: random.Random, n: int, extra: float = 0.2) -> Graph:
    tree = random_tree(rng, n)
    edges = set(tree.edges())
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < extra:
                edges.add((i, j))
    return Graph(range(n), edges)


def random_max_deg3_graph(rng: random.Random, n: int, tries: int = 0) -> Graph:
    tries = tries or 3 * n
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for _ in range(tries):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v and v not in adj[u] and len(adj[u]) < 3 and len(adj[v]) < 3:
            adj[u].add(v)
            adj[v].add(u)
    return Graph(range(n), [(u, v) for u in adj for v in adj[u] if u < v])


# ---------------------------------------------------------------------------
# independent oracles


def oracle_pathwidth(g: Graph) -> int:
    """Vertex-separation by brute force over all orderings (n <= 8)."""
    vs = g.vertices
    if not vs:
        return -1
    best = len(vs)
    for order in itertools.permutations(vs):
        worst = 0
        placed: set[int] = set()
        for v in order:
            placed.add(v)
            boundary = sum(1 for u in placed if any(w not in placed for w in g.neighbors(u)))
            worst = max(worst, boundary)
            if worst >= best:
                break
        best = min(best, worst)
    return best


def oracle_girth(g: Graph, cap: int | None = None) -> float:
    """Shortest cycle by DFS enumeration of closed walks anchored at their
    minimum vertex; independent of the BFS-based production code."""
    best = float("inf")
    limit = cap if cap is not None else g.n + 1

    def walk(anchor: int, path: list[int]) -> None:
        nonlocal best
        if len(path) >= best or len(path) >= limit:
            return
        for w in g.sorted_neighbors(path[-1]):
            if w == anchor and len(path) >= 3:
                best = min(best, len(path))
            elif w > anchor and w not in path:
                path.append(w)
                walk(anchor, path)
                path.pop()

    for anchor in g.vertices:
        walk(anchor, [anchor])
    return best


def brute_force_induced_subgraph(host: Graph, pattern: Graph) -> bool:
    """All injections, checked against the definition."""
    pv = pattern.vertices
    for image in itertools.permutations(host.vertices, len(pv)):
        m = dict(zip(pv, image))
        if all(host.has_edge(m[a], m[b]) == pattern.has_edge(a, b)
               for a, b in itertools.combinations(pv, 2)):
            return True
    return False


def oracle_three_vertex_path_induced_minor(g: Graph) -> bool:
    """Existence of an induced three-vertex-path minor, exhaustively.

    Any model yields a non-adjacent pair joined through the middle branch set,
    and conversely the interior of a shortest path between a non-adjacent pair
    is a valid middle set, so scanning all pairs is exhaustive.
    """
    for u in g.vertices:
        dist = bfs_distances(g, u)
        for v, d in dist.items():
            if d >= 2:
                return True
    return False


# ---------------------------------------------------------------------------
# planted sparsifiable repair instances


def build_sparsifiable_instance(rng: random.Random, small: bool = False):
    """A sparsifiable host with a planted model of the augmented height-1 tree.

    Violations are edges between the two child branch sets: a triangle chord
    between the first interiors of the two root-child paths, and (in the large
    variant) a pendant tail assigned into one child set whose tip reaches a
    deep interior of the other.  All planted degrees keep every vertex
    sparsifiable.  Returns (host, model, core).
    """
    plus = binary_tree_plus(1)  # ids 0..7; core tree = {0, 1, 2}
    plant_root = rng.random() < 0.75
    plant_tail = (not small) and rng.random() < 0.5
    lengths = {e: (1 if small else rng.randint(1, 2)) for e in plus.graph.edges()}
    # adjacent degree-3 branch vertices are never sparsifiable, so the two
    # root-child edges always get subdivided
    lengths[(0, 1)] = max(lengths[(0, 1)], 2)
    lengths[(0, 2)] = max(lengths[(0, 2)], 2)
    if plant_root:
        lengths[(0, 1)] = max(lengths[(0, 1)], 3)
        lengths[(0, 2)] = max(lengths[(0, 2)], 3)
    if plant_tail:
        lengths[(0, 1)] = max(lengths[(0, 1)], 5)
        lengths[(0, 2)] = max(lengths[(0, 2)], 5)
    host, cert = subdivide(plus.graph, lengths)
    edges = list(host.edges())
    vertices = set(host.vertices)

    sets: dict[int, set[int]] = {v: {v} for v in plus.graph.vertices}
    for (u, v), path in cert.path_map.items():
        interior = list(path[1:-1])
        if not interior:
            continue
        child = v if plus.parent(v) == u else u
        if child in (1, 2) and (plant_root or plant_tail):
            sets[child].update(interior)
            continue
        parent = u if child == v else v
        cut = rng.randint(0, len(interior))
        along = interior if path[0] == parent else list(reversed(interior))
        sets[parent].update(along[:cut])
        sets[child].update(along[cut:])

    path_a, path_b = cert.path_map[(0, 1)], cert.path_map[(0, 2)]
    if plant_root:
        edges.append((path_a[1], path_b[1]))
    if plant_tail:
        # tail hangs at path_a[3], its tip touches path_b[3]; both keep all
        # their neighbours at degree <= 2, so the host stays sparsifiable
        tip = max(vertices) + 1
        vertices.add(tip)
        edges.append((path_a[3], tip))
        edges.append((tip, path_b[3]))
        sets[1].add(tip)
    g = Graph(vertices, edges)
    model = MinorModel(pattern=plus.graph, host=g,
                       branch_sets={v: frozenset(s) for v, s in sets.items()},
                       induced=False)
    core = induced_subgraph(plus.graph, [0, 1, 2])
    return g, model, core
