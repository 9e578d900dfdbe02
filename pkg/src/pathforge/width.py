"""Exact pathwidth with certificates, plus pathwidth lower bounds.

``pathwidth_exact`` searches vertex orderings: the best achievable maximum
boundary size over prefixes (the vertex separation number) equals pathwidth,
and an optimal ordering converts directly into an optimal path decomposition.
``tree_pathwidth`` computes the same value on forests through the branching
recursion: a tree needs width k+1 exactly when some vertex has three branches
needing width k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .budget import Budget, BudgetExhausted
from .graph import (
    Graph,
    bfs_distances,
    components,
    induced_subgraph,
    is_forest,
)


@dataclass(frozen=True)
class PathDecomposition:
    """A sequence of bags; width is the largest bag size minus one."""

    bags: tuple[frozenset[int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


def validate_path_decomposition(g: Graph, pd: PathDecomposition) -> list[str]:
    """All violated decomposition conditions (empty list = valid for g)."""
    errs = []
    vset = g.vertex_set()
    for i, bag in enumerate(pd.bags):
        if not bag <= vset:
            errs.append(f"bag {i} contains unknown vertices")
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for i, bag in enumerate(pd.bags):
        for v in bag:
            first.setdefault(v, i)
            last[v] = i
    for v in g.vertices:
        if v not in first:
            errs.append(f"vertex {v} is in no bag")
    for v, i in first.items():
        for j in range(i, last[v] + 1):
            if v not in pd.bags[j]:
                errs.append(f"vertex {v} has a non-contiguous bag interval")
                break
    for u, v in g.edges():
        if not any(u in bag and v in bag for bag in pd.bags):
            errs.append(f"edge ({u}, {v}) is in no bag")
    return errs


# ---------------------------------------------------------------------------
# exact solver: optimal vertex orderings by iterative deepening


def _order_to_bags(vs: list[int], adj: list[int], order: list[int]) -> list[frozenset[int]]:
    bags = []
    placed = 0
    boundary = 0
    for i in order:
        bag = boundary | (1 << i)
        bags.append(frozenset(vs[j] for j in range(len(vs)) if bag >> j & 1))
        placed |= 1 << i
        boundary |= 1 << i
        for j in range(len(vs)):
            if boundary >> j & 1 and adj[j] & ~placed == 0:
                boundary &= ~(1 << j)
    return bags


def _component_order(g: Graph, comp: frozenset[int], budget: Budget) -> tuple[int, list[int], list[int]]:
    """Optimal ordering of one component; returns (width, vertices, order indices)."""
    vs = sorted(comp)
    n = len(vs)
    idx = {v: i for i, v in enumerate(vs)}
    adj = [0] * n
    for i, v in enumerate(vs):
        for w in g.neighbors(v):
            if w in idx:
                adj[i] |= 1 << idx[w]
    full = (1 << n) - 1
    has_edge = any(adj)

    def place(placed: int, boundary: int, i: int) -> tuple[int, int]:
        placed |= 1 << i
        boundary |= 1 << i
        for j in range(n):
            if boundary >> j & 1 and adj[j] & ~placed == 0:
                boundary &= ~(1 << j)
        return placed, boundary

    def attempt(k: int) -> list[int] | None:
        failed: set[int] = set()

        def dfs(placed: int, boundary: int) -> list[int] | None:
            budget.tick()
            if placed == full:
                return []
            if placed in failed:
                return None
            # settled vertices (all neighbours placed) can always go next
            for i in range(n):
                if not placed >> i & 1 and adj[i] & ~placed == 0:
                    np, nb = place(placed, boundary, i)
                    rest = dfs(np, nb)
                    if rest is not None:
                        return [i] + rest
                    failed.add(placed)
                    return None
            for i in range(n):
                if placed >> i & 1:
                    continue
                np, nb = place(placed, boundary, i)
                if nb.bit_count() > k:
                    continue
                rest = dfs(np, nb)
                if rest is not None:
                    return [i] + rest
            failed.add(placed)
            return None

        return dfs(0, 0)

    for k in range(0 if not has_edge else 1, n + 1):
        order = attempt(k)
        if order is not None:
            return k, vs, order
    raise AssertionError("ordering search must terminate")


def pathwidth_exact(g: Graph, max_vertices: int = 22,
                    budget: Budget | int | None = None) -> tuple[int, PathDecomposition]:
    """Exact pathwidth and an optimal decomposition.

    Inputs above `max_vertices` vertices are rejected: the search keeps a
    failed-state set per width guess, which can grow towards 2^n.
    """
    if g.n > max_vertices:
        raise ValueError(f"graph has {g.n} vertices, above the bound {max_vertices}")
    budget = Budget.coerce(budget)
    if g.n == 0:
        return -1, PathDecomposition(())
    all_bags: list[frozenset[int]] = []
    width = 0
    for comp in components(g):
        k, vs, order = _component_order(g, comp, budget)
        width = max(width, k)
        all_bags.extend(_order_to_bags(vs, _masks(g, vs), order))
    return width, PathDecomposition(tuple(all_bags))


def _masks(g: Graph, vs: list[int]) -> list[int]:
    idx = {v: i for i, v in enumerate(vs)}
    adj = [0] * len(vs)
    for i, v in enumerate(vs):
        for w in g.neighbors(v):
            if w in idx:
                adj[i] |= 1 << idx[w]
    return adj


# ---------------------------------------------------------------------------
# trees: branching recursion with canonical-form memoisation


_MIN_TREE_SIZE = [1, 2, 7]  # fewest vertices a tree of pathwidth >= t can have
while _MIN_TREE_SIZE[-1] < 10 ** 9:
    _MIN_TREE_SIZE.append(3 * _MIN_TREE_SIZE[-1] + 1)


class _TreeSolver:
    """Pathwidth of subtrees through the branching rule: width reaches t
    exactly when some vertex has three branches of width at least t - 1.

    Decisions at t <= 2 are local degree tests; deeper levels recurse on
    components, memoised under a canonical (isomorphism-invariant) key.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.memo: dict[tuple, bool] = {}
        self.codes: dict[tuple, int] = {}
        self.canon_cache: dict[frozenset[int], tuple] = {}

    def _split(self, vertices: frozenset[int], v: int) -> list[frozenset[int]]:
        rest = vertices - {v}
        out = []
        seen: set[int] = set()
        for w in sorted(self.g.neighbors(v)):
            if w in rest and w not in seen:
                comp = frozenset(bfs_distances(self.g, w, within=rest))
                seen |= comp
                out.append(comp)
        return out

    def _canon(self, vertices: frozenset[int]) -> tuple:
        """Isomorphism-invariant key: size plus the rooted code at the centres."""
        hit = self.canon_cache.get(vertices)
        if hit is not None:
            return hit
        key = self._canon_compute(vertices)
        self.canon_cache[vertices] = key
        return key

    def _canon_compute(self, vertices: frozenset[int]) -> tuple:
        if len(vertices) <= 2:
            return (len(vertices),)
        deg = {v: sum(1 for w in self.g.neighbors(v) if w in vertices) for v in vertices}
        level = sorted(v for v in vertices if deg[v] <= 1)
        remaining = len(vertices)
        removed = {}
        rounds = 0
        while remaining > 2:
            rounds += 1
            nxt = []
            for v in level:
                removed[v] = rounds
                remaining -= 1
                for w in self.g.neighbors(v):
                    if w in vertices and w not in removed:
                        deg[w] -= 1
                        if deg[w] == 1:
                            nxt.append(w)
            level = sorted(nxt)
        centers = [v for v in vertices if v not in removed]

        def rooted_code(root: int) -> int:
            code: dict[int, int] = {}
            stack: list[tuple[int, int | None, bool]] = [(root, None, False)]
            while stack:
                v, par, done = stack.pop()
                if done:
                    kids = tuple(sorted(code[w] for w in self.g.neighbors(v)
                                        if w in vertices and w != par))
                    code[v] = self.codes.setdefault(kids, len(self.codes))
                else:
                    stack.append((v, par, True))
                    for w in self.g.neighbors(v):
                        if w in vertices and w != par:
                            stack.append((w, v, False))
            return code[root]

        return (len(vertices), min(rooted_code(c) for c in centers))

    def _deg_within(self, vertices: frozenset[int]) -> dict[int, int]:
        return {v: sum(1 for w in self.g.neighbors(v) if w in vertices)
                for v in vertices}

    def width_at_least(self, vertices: frozenset[int], t: int) -> bool:
        if t <= 0:
            return bool(vertices)
        if len(vertices) < _MIN_TREE_SIZE[min(t, len(_MIN_TREE_SIZE) - 1)]:
            return False
        deg = self._deg_within(vertices)
        if t == 1:
            return any(d > 0 for d in deg.values())
        if t == 2:
            # some vertex with three branches that each contain an edge
            for v in vertices:
                if deg[v] >= 3:
                    busy = sum(1 for w in self.g.neighbors(v)
                               if w in vertices and deg[w] >= 2)
                    if busy >= 3:
                        return True
            return False
        if max(deg.values()) <= 2:
            return False
        key = (self._canon(vertices), t)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        answer = False
        for v in sorted(vertices):
            if deg[v] < 3:
                continue
            heavy = 0
            for comp in self._split(vertices, v):
                if self.width_at_least(comp, t - 1):
                    heavy += 1
                    if heavy == 3:
                        break
            if heavy == 3:
                answer = True
                break
        self.memo[key] = answer
        return answer

    def value(self, vertices: frozenset[int]) -> int:
        if len(vertices) <= 1:
            return 0
        t = 1
        while self.width_at_least(vertices, t + 1):
            t += 1
        return t

    def _heavy_hanging(self, vertices: frozenset[int], path: list[int],
                       end: int, k: int) -> list[frozenset[int]]:
        rest = vertices - set(path)
        out = []
        seen: set[int] = set()
        for w in sorted(self.g.neighbors(end)):
            if w in rest and w not in seen:
                comp = frozenset(bfs_distances(self.g, w, within=rest))
                seen |= comp
                if self.width_at_least(comp, k):
                    out.append(comp)
        return out

    def _main_path(self, vertices: frozenset[int], k: int) -> list[int]:
        """A path whose removal leaves only components of width below k."""
        spine = []
        for v in sorted(vertices):
            heavy = sum(1 for c in self._split(vertices, v)
                        if self.width_at_least(c, k))
            if heavy >= 2:
                spine.append(v)
        if spine:
            src = spine[0]
            dist = bfs_distances(self.g, src, within=vertices)
            far = max(spine, key=lambda v: (dist[v], v))
            dist2 = bfs_distances(self.g, far, within=vertices)
            far2 = max(spine, key=lambda v: (dist2[v], v))
            path = self._tree_path(vertices, far, far2)
        else:
            prev = None
            cur = min(vertices)
            while True:
                nxt = None
                for comp in self._split(vertices, cur):
                    if self.width_at_least(comp, k):
                        entry = next(w for w in sorted(self.g.neighbors(cur)) if w in comp)
                        nxt = entry
                        break
                if nxt is None:
                    path = [cur]
                    break
                if nxt == prev:
                    path = [prev, cur]
                    break
                prev, cur = cur, nxt
        while True:
            grew = False
            for end_at_front in (True, False):
                end = path[0] if end_at_front else path[-1]
                heavy = self._heavy_hanging(vertices, path, end, k)
                if len(heavy) > 1 and len(path) > 1:
                    raise AssertionError("more than one heavy branch at a path end")
                if heavy:
                    entry = next(w for w in sorted(self.g.neighbors(end)) if w in heavy[0])
                    path = [entry] + path if end_at_front else path + [entry]
                    grew = True
            if not grew:
                return path

    def _tree_path(self, vertices: frozenset[int], u: int, v: int) -> list[int]:
        parent: dict[int, int | None] = {u: None}
        queue = [u]
        while queue:
            nxt = []
            for x in queue:
                for w in sorted(self.g.neighbors(x)):
                    if w in vertices and w not in parent:
                        parent[w] = x
                        nxt.append(w)
            queue = nxt
        path = [v]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        path.reverse()
        return path

    def decompose(self, vertices: frozenset[int]) -> list[frozenset[int]]:
        n = len(vertices)
        if n == 1:
            return [frozenset(vertices)]
        k = self.value(vertices)
        path = self._main_path(vertices, k)
        rest = vertices - set(path)
        hang: dict[int, list[frozenset[int]]] = {p: [] for p in path}
        seen: set[int] = set()
        for p in path:
            for w in sorted(self.g.neighbors(p)):
                if w in rest and w not in seen:
                    comp = frozenset(bfs_distances(self.g, w, within=rest))
                    seen |= comp
                    hang[p].append(comp)
        bags: list[frozenset[int]] = []
        for i, p in enumerate(path):
            blocks = [self.decompose(c) for c in sorted(hang[p], key=min)]
            if not blocks and (len(path) == 1):
                bags.append(frozenset((p,)))
            for block in blocks:
                bags.extend(b | {p} for b in block)
            if i + 1 < len(path):
                bags.append(frozenset((p, path[i + 1])))
        return bags

def tree_pathwidth(g: Graph) -> tuple[int, PathDecomposition]:
    """Exact pathwidth of a forest, with an optimal decomposition."""
    if not is_forest(g):
        raise ValueError("input is not a forest")
    if g.n == 0:
        return -1, PathDecomposition(())
    solver = _TreeSolver(g)
    width = 0
    bags: list[frozenset[int]] = []
    for comp in components(g):
        width = max(width, solver.value(comp))
        bags.extend(solver.decompose(comp))
    pd = PathDecomposition(tuple(bags))
    errs = validate_path_decomposition(g, pd)
    if errs or pd.width != width:
        raise AssertionError(f"tree decomposition construction failed: {errs}")
    return width, pd


# ---------------------------------------------------------------------------
# lower bounds and bounded-degree subgraphs


def pathwidth_lower_bound_by_minor(g: Graph, model, pattern_width: int) -> int:
    """Certified lower bound: pathwidth is minor-monotone, so a valid model of a
    pattern with pathwidth `pattern_width` bounds the host from below."""
    from .minors import validate_model

    if model.host is not g:
        if model.host != g:
            raise ValueError("model host differs from the given graph")
    errs = validate_model(model)
    if errs:
        raise ValueError("invalid minor model: " + "; ".join(errs))
    return pattern_width


@dataclass(frozen=True)
class Deg3Evidence:
    """A max-degree-3 subgraph with a certified pathwidth lower bound."""

    subgraph: Graph
    width_bound: int
    decomposition: PathDecomposition | None


def _certify_width(h: Graph, max_exact: int, budget: Budget) -> tuple[int, PathDecomposition] | None:
    if is_forest(h):
        return tree_pathwidth(h)
    if h.n <= max_exact:
        return pathwidth_exact(h, max_vertices=max_exact, budget=budget)
    return None


def _greedy_trim(g: Graph) -> Graph:
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    while True:
        v = max(adj, key=lambda x: (len(adj[x]), -x))
        if len(adj[v]) <= 3:
            break
        w = max(adj[v], key=lambda x: (len(adj[x]), -x))
        adj[v].discard(w)
        adj[w].discard(v)
    return Graph(adj, [(u, w) for u in adj for w in adj[u] if u < w])


def find_deg3_subgraph(g: Graph, k: int, budget: Budget | int | None = None,
                       max_exact: int = 22) -> Deg3Evidence | None:
    """Search for a subgraph of maximum degree 3 with certified pathwidth >= k.

    Best-effort: a None return means the search space was used up without a
    certified witness, not that none exists (except at trivially small sizes,
    where it is a real refutation).  Raises BudgetExhausted when the step
    budget dies first.
    """
    if k > g.n - 1:
        raise ValueError(f"impossible: width {k} needs at least {k + 1} vertices")
    budget = Budget.coerce(budget)
    if k <= 1:
        # a single surviving edge certifies width 1, at any graph size
        trimmed = _greedy_trim(g)
        bound = 1 if trimmed.m else 0
        return Deg3Evidence(trimmed, bound, None) if bound >= k else None

    def certified(h: Graph) -> Deg3Evidence | None:
        res = _certify_width(h, max_exact, budget)
        if res is not None and res[0] >= k:
            return Deg3Evidence(h, res[0], res[1])
        return None

    greedy = _greedy_trim(g)
    hit = certified(greedy)
    if hit is not None:
        return hit

    # branch over which excess edge to drop at the first too-busy vertex
    def search(adj: dict[int, set[int]]) -> Deg3Evidence | None:
        budget.tick()
        over = [v for v in sorted(adj) if len(adj[v]) > 3]
        if not over:
            h = Graph(adj, [(u, w) for u in adj for w in adj[u] if u < w])
            return certified(h)
        v = over[0]
        for w in sorted(adj[v]):
            adj[v].discard(w)
            adj[w].discard(v)
            found = search(adj)
            adj[v].add(w)
            adj[w].add(v)
            if found is not None:
                return found
        return None

    return search({v: set(g.neighbors(v)) for v in g.vertices})
