"""Minor and induced-minor models: validation, search, and the machinery that
turns plain models into induced ones inside sparsifiable graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .budget import Budget
from .graph import Graph, bfs_distances, contract_sets, induced_subgraph, shortest_path


@dataclass(frozen=True)
class MinorModel:
    """Branch sets realizing `pattern` inside `host`.

    Conditions: each set induces a connected subgraph, sets are pairwise
    disjoint, and adjacent pattern vertices have adjacent sets.  When
    `induced`, non-adjacent pattern vertices must have non-adjacent sets.
    """

    pattern: Graph
    host: Graph
    branch_sets: dict[int, frozenset[int]]
    induced: bool = False

    def owner_map(self) -> dict[int, int]:
        return {x: v for v, xs in self.branch_sets.items() for x in xs}


def validate_model(m: MinorModel) -> list[str]:
    """Every violated model condition, with the offending vertices named.

    Adjacency conditions are checked by one sweep over the host edges, so
    validation stays near-linear even for patterns with thousands of vertices.
    """
    errs = []
    if set(m.branch_sets) != set(m.pattern.vertices):
        errs.append("branch sets do not cover the pattern vertices")
        return errs
    host_vs = m.host.vertex_set()
    owner: dict[int, int] = {}
    for v, xs in sorted(m.branch_sets.items()):
        if not xs:
            errs.append(f"branch set of {v} is empty")
            continue
        if not xs <= host_vs:
            errs.append(f"branch set of {v} leaves the host")
            continue
        if len(bfs_distances(m.host, min(xs), within=xs)) != len(xs):
            errs.append(f"branch set of {v} is not connected")
        for x in xs:
            if x in owner:
                errs.append(f"branch sets of {owner[x]} and {v} overlap at {x}")
            owner[x] = v
    touching: set[tuple[int, int]] = set()
    for a, b in m.host.edges():
        u, v = owner.get(a), owner.get(b)
        if u is None or v is None or u == v:
            continue
        pair = (min(u, v), max(u, v))
        if pair in touching:
            continue
        touching.add(pair)
        if m.induced and not m.pattern.has_edge(u, v):
            errs.append(f"pattern non-edge {pair} has a host edge between its sets")
    for u, v in m.pattern.edges():
        if (min(u, v), max(u, v)) not in touching:
            errs.append(f"pattern edge ({u}, {v}) has no host edge between its sets")
    return errs


def _sets_adjacent(g: Graph, a: frozenset[int], b: frozenset[int]) -> bool:
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    return any(w in big for x in small for w in g.neighbors(x))


def identity_model(g: Graph, induced: bool = True) -> MinorModel:
    return MinorModel(pattern=g, host=g,
                      branch_sets={v: frozenset((v,)) for v in g.vertices},
                      induced=induced)


def model_contract(g: Graph, m: MinorModel) -> Graph:
    """The induced minor obtained by deleting unused vertices and contracting
    each branch set; result vertices carry the pattern identifiers."""
    used = set()
    for xs in m.branch_sets.values():
        used |= xs
    sub = induced_subgraph(g, used)
    contracted, name = contract_sets(sub, [m.branch_sets[v] for v in sorted(m.branch_sets)])
    rename = {name[m.branch_sets[v]]: v for v in m.branch_sets}
    return Graph(m.branch_sets.keys(),
                 [(rename[u], rename[w]) for u, w in contracted.edges()])


# ---------------------------------------------------------------------------
# sparsifiable graphs and the repair loop


def is_sparsifiable(g: Graph, v: int) -> tuple[bool, int | None]:
    """Whether v is sparsifiable, and the first matching case:
    1 degree <= 2;  2 degree 3 with all neighbours of degree <= 2;
    3 degree 3 with a degree-<=2 neighbour and the other two in a triangle with v."""
    if not g.has_vertex(v):
        raise ValueError(f"unknown vertex {v}")
    deg = g.degree(v)
    if deg <= 2:
        return True, 1
    if deg != 3:
        return False, None
    nbrs = g.sorted_neighbors(v)
    if all(g.degree(w) <= 2 for w in nbrs):
        return True, 2
    for low in nbrs:
        if g.degree(low) <= 2:
            rest = [w for w in nbrs if w != low]
            if g.has_edge(rest[0], rest[1]):
                return True, 3
    return False, None


def sparsifiable_vertices_ok(g: Graph) -> list[int]:
    """Vertices that are NOT sparsifiable (empty list = sparsifiable graph)."""
    return [v for v in g.vertices if not is_sparsifiable(g, v)[0]]


@dataclass(frozen=True)
class RepairResult:
    model: MinorModel
    iterations: int
    initial_violations: int


def _violating_edges(g: Graph, owner: dict[int, int], core: Graph) -> list[tuple[int, int]]:
    core_vs = core.vertex_set()
    out = []
    for a, b in g.edges():
        u, v = owner.get(a), owner.get(b)
        if u is None or v is None or u == v:
            continue
        if u in core_vs and v in core_vs and not core.has_edge(u, v):
            out.append((a, b))
    return out


def repair_to_induced_model(g: Graph, model: MinorModel, core: Graph) -> RepairResult:
    """Turn a plain model into an induced model of the core pattern.

    `model` realizes an enlarged pattern in which every core vertex has degree
    at least 3, and `core` is an induced subgraph of that pattern; the host
    must be sparsifiable.  Each iteration removes one offending host edge by a
    local move (shrink a branch set by a degree-2 endpoint, shrink past an
    unrelated common neighbour, or push both endpoints into the common
    neighbour's set), so the offending-edge count strictly decreases.
    """
    pattern = model.pattern
    bad = sparsifiable_vertices_ok(g)
    if bad:
        raise ValueError(f"host is not sparsifiable at {bad[:5]}")
    errs = validate_model(model)
    if errs:
        raise ValueError("invalid input model: " + "; ".join(errs))
    core_vs = set(core.vertices)
    if not core_vs <= set(pattern.vertices):
        raise ValueError("core is not a sub-pattern of the model pattern")
    for u, v in combinations(sorted(core_vs), 2):
        if core.has_edge(u, v) != pattern.has_edge(u, v):
            raise ValueError("core is not an induced subgraph of the pattern")
    low = [v for v in core_vs if pattern.degree(v) < 3]
    if low:
        raise ValueError(f"core vertices {low[:5]} have pattern degree below 3")

    sets = {v: set(xs) for v, xs in model.branch_sets.items()}
    closed = {u: {u} | set(pattern.neighbors(u)) for u in pattern.vertices}

    def owner_of() -> dict[int, int]:
        return {x: v for v, xs in sets.items() for x in xs}

    owner = owner_of()
    violations = _violating_edges(g, owner, core)
    initial = len(violations)
    iterations = 0
    edge_limit = g.m

    while violations:
        iterations += 1
        if iterations > edge_limit:
            raise AssertionError("repair loop exceeded the edge-count iteration bound")
        a, b = violations[0]
        u, v = owner[a], owner[b]

        def shrink(vertex: int, pat: int) -> None:
            if len(sets[pat]) < 2:
                raise AssertionError("cannot shrink a singleton branch set")
            sets[pat].discard(vertex)

        if g.degree(a) == 2:
            shrink(a, u)
        elif g.degree(b) == 2:
            shrink(b, v)
        else:
            common = sorted(g.neighbors(a) & g.neighbors(b))
            if not common:
                raise AssertionError("adjacent degree-3 endpoints lack a common neighbour")
            c = common[0]
            w = owner.get(c)
            if w is None or w not in closed[u]:
                shrink(a, u)
            elif w not in closed[v]:
                shrink(b, v)
            else:
                shrink(a, u)
                shrink(b, v)
                sets[w] |= {a, b}
        owner = owner_of()
        now = _violating_edges(g, owner, core)
        if len(now) >= len(violations):
            raise AssertionError("repair move failed to decrease the violation count")
        violations = now

    final = MinorModel(pattern=core, host=g,
                       branch_sets={v: frozenset(sets[v]) for v in sorted(core_vs)},
                       induced=True)
    errs = validate_model(final)
    if errs:
        raise AssertionError("repair produced an invalid model: " + "; ".join(errs))
    return RepairResult(model=final, iterations=iterations, initial_violations=initial)


# ---------------------------------------------------------------------------
# minor search


def find_minor_model(host: Graph, pattern: Graph,
                     budget: Budget | int | None = None,
                     induced: bool = False) -> MinorModel | None:
    """Backtracking search for a minor model: seed one host vertex per pattern
    vertex, then grow branch sets until every pattern edge has a host edge
    between its sets.  With `induced`, growth never lets the sets of a pattern
    non-edge touch.  None is an exhaustive negative."""
    budget = Budget.coerce(budget)
    if pattern.n == 0:
        return MinorModel(pattern, host, {}, induced)
    if pattern.n > host.n or pattern.m > host.m:
        return None
    order = sorted(pattern.vertices, key=lambda v: (-pattern.degree(v), v))
    # seed later pattern vertices near an already-seeded neighbour
    for i in range(1, len(order)):
        if not any(pattern.has_edge(order[i], q) for q in order[:i]):
            for j in range(i + 1, len(order)):
                if any(pattern.has_edge(order[j], q) for q in order[:i]):
                    order[i], order[j] = order[j], order[i]
                    break
    sets: dict[int, set[int]] = {}
    used: set[int] = set()
    owner: dict[int, int] = {}

    def admissible(w: int, p: int) -> bool:
        """Adding w to X_p must not connect the sets of a pattern non-edge."""
        if not induced:
            return True
        for x in host.neighbors(w):
            q = owner.get(x)
            if q is not None and q != p and not pattern.has_edge(p, q):
                return False
        return True

    def free_distances(from_set: set[int]) -> dict[int, int]:
        """Distance to every free vertex reachable from the set through free vertices."""
        dist: dict[int, int] = {}
        frontier = []
        for x in sorted(from_set):
            for w in host.sorted_neighbors(x):
                if w not in used and w not in dist:
                    dist[w] = 1
                    frontier.append(w)
        d = 1
        while frontier:
            d += 1
            nxt = []
            for x in frontier:
                for w in host.sorted_neighbors(x):
                    if w not in used and w not in dist:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        return dist

    def realize(pending: list[tuple[int, int]], k: int, cont) -> bool:
        budget.tick()
        if k == len(pending):
            return cont()
        u, v = pending[k]
        if _sets_adjacent(host, sets[u], sets[v]):
            return realize(pending, k + 1, cont)
        toward_v = free_distances(sets[v])
        grow = []
        for x in sorted(sets[u]):
            for w in host.sorted_neighbors(x):
                if w not in used and w in toward_v:
                    grow.append((toward_v[w], w))
        grow.sort()
        tried: set[int] = set()
        for _, w in grow:
            if w in tried or not admissible(w, u):
                continue
            tried.add(w)
            sets[u].add(w)
            used.add(w)
            owner[w] = u
            if realize(pending, k, cont):
                return True
            del owner[w]
            used.discard(w)
            sets[u].discard(w)
        return False

    def solve(i: int) -> bool:
        budget.tick()
        if i == len(order):
            return True
        p = order[i]
        anchors = [q for q in order[:i] if pattern.has_edge(p, q)]
        if anchors:
            near = free_distances(sets[anchors[0]])
            candidates = sorted(near, key=lambda x: (near[x], x))
        else:
            candidates = [x for x in host.vertices if x not in used]
            candidates.sort(key=lambda x: (-host.degree(x), x))
        pending = [(q, p) for q in anchors]
        for h in candidates:
            if not admissible(h, p):
                continue
            sets[p] = {h}
            used.add(h)
            owner[h] = p
            if realize(pending, 0, lambda: solve(i + 1)):
                return True
            del owner[h]
            used.discard(h)
            del sets[p]
        return False

    if solve(0):
        model = MinorModel(pattern=pattern, host=host,
                           branch_sets={v: frozenset(xs) for v, xs in sets.items()},
                           induced=induced)
        errs = validate_model(model)
        if errs:
            raise AssertionError("search produced an invalid model: " + "; ".join(errs))
        return model
    return None


# ---------------------------------------------------------------------------
# distance-5 partitioning and ball contraction


@dataclass(frozen=True)
class Distance5Partition:
    classes: tuple[frozenset[int], ...]


def validate_distance5(g: Graph, part: Distance5Partition) -> list[str]:
    errs = []
    seen: set[int] = set()
    for i, cls in enumerate(part.classes):
        if cls & seen:
            errs.append(f"class {i} overlaps an earlier class")
        seen |= cls
        for v in sorted(cls):
            near = bfs_distances(g, v, cutoff=4)
            hit = (set(near) - {v}) & cls
            if hit:
                errs.append(f"class {i} has vertices {v} and {min(hit)} at distance < 5")
    if seen != g.vertex_set():
        errs.append("classes do not cover the graph")
    return errs


def distance5_partition(g: Graph) -> Distance5Partition:
    """Greedy partition into classes of pairwise distance >= 5: each vertex in
    ascending order takes the first class unused within its radius-4 ball."""
    assigned: dict[int, int] = {}
    classes: list[set[int]] = []
    for v in g.vertices:
        near = bfs_distances(g, v, cutoff=4)
        taken = {assigned[u] for u in near if u in assigned and u != v}
        idx = 0
        while idx in taken:
            idx += 1
        if idx == len(classes):
            classes.append(set())
        classes[idx].add(v)
        assigned[v] = idx
    return Distance5Partition(tuple(frozenset(c) for c in classes))


def ball_contract(g: Graph, centers) -> tuple[Graph, MinorModel]:
    """Contract the radius-2 ball around every centre (a pairwise-distance-5
    set); other vertices persist.  Returns the contracted graph and the
    radius-<=2 branch-set model realizing it in g."""
    centers = sorted(set(centers))
    balls = {}
    for c in centers:
        ball = frozenset(bfs_distances(g, c, cutoff=2))
        balls[c] = ball
    for c, d in combinations(centers, 2):
        if balls[c] & balls[d]:
            raise ValueError(f"centres {c} and {d} are closer than distance 5")
    contracted, name = contract_sets(g, [balls[c] for c in centers])
    branch: dict[int, frozenset[int]] = {}
    ball_vertices: set[int] = set()
    for c in centers:
        branch[name[balls[c]]] = balls[c]
        ball_vertices |= balls[c]
    for v in contracted.vertices:
        if v not in branch:
            branch[v] = frozenset((v,))
    model = MinorModel(pattern=contracted, host=g, branch_sets=branch, induced=True)
    return contracted, model


def branch_set_radius(g: Graph, xs: frozenset[int]) -> int:
    best = None
    for c in sorted(xs):
        dist = bfs_distances(g, c, within=xs)
        if len(dist) != len(xs):
            raise ValueError("branch set is not connected")
        ecc = max(dist.values())
        if best is None or ecc < best:
            best = ecc
    return best if best is not None else 0


# ---------------------------------------------------------------------------
# sparsifiable restriction inside contracted balls


def _ball_subsets_by_size(ball: list[int]):
    for size in range(1, len(ball) + 1):
        for combo in combinations(ball, size):
            yield set(combo)


def _keep_for_ball(g: Graph, center: int, ball: frozenset[int],
                   targets: set[int]) -> set[int]:
    """A connected subset of the ball containing the attachment targets whose
    centre, if kept, is sparsifiable against exactly this subset.

    The centre's sparsifiability in the restricted graph depends only on the
    kept part of its own ball (radius-2 locality), so candidates are judged on
    the ball alone: the full ball when the centre is already fine, then the
    centre with shortest paths to the targets, then subsets by size.
    """

    def good(k: set[int]) -> bool:
        sub = induced_subgraph(g, k)
        if len(bfs_distances(sub, min(k))) != len(k):
            return False
        if not targets <= k:
            return False
        return center not in k or is_sparsifiable(sub, center)[0]

    if good(set(ball)):
        return set(ball)
    keep: set[int] = {center} | set(targets)
    for t in sorted(targets):
        path = shortest_path(g, [center], [t], allowed=ball)
        keep.update(path)
    if good(keep):
        return keep
    # drop the centre when the paths alone already connect the targets
    if targets:
        without = set(targets)
        for t in sorted(targets):
            path = shortest_path(g, [min(targets)], [t], allowed=ball - {center})
            if path is None:
                without = None
                break
            without.update(path)
        if without is not None and good(without):
            return without
    for cand in _ball_subsets_by_size(sorted(ball)):
        if targets and not targets <= cand:
            continue
        if not targets and center not in cand:
            continue
        if good(cand):
            return cand
    raise ValueError(f"no sparsifiable restriction inside the ball of {center}")


def sparsifiable_restriction(g: Graph, class_vertices, contracted_model: MinorModel,
                             h_sub: Graph) -> tuple[frozenset[int], MinorModel]:
    """Restrict g so the given max-degree-3 subgraph of the contracted graph
    survives as a minor while every kept class vertex becomes sparsifiable.

    Keeps every non-ball vertex of the subgraph plus, per contracted ball, the
    centre and shortest paths toward the chosen attachment edges; balls whose
    default choice fails the sparsifiability check fall back to an exhaustive
    scan of their subsets.
    """
    if h_sub.max_degree() > 3:
        raise ValueError("subgraph exceeds maximum degree 3")
    centers = set(class_vertices)
    ball_ids = {}
    for pid, xs in contracted_model.branch_sets.items():
        hit = xs & centers
        if hit:
            ball_ids[pid] = min(hit)
    for v in h_sub.vertices:
        if not contracted_model.pattern.has_vertex(v):
            raise ValueError(f"subgraph vertex {v} is not in the contracted graph")

    targets: dict[int, set[int]] = {pid: set() for pid in h_sub.vertices if pid in ball_ids}
    chosen_edges: dict[tuple[int, int], tuple[int, int]] = {}
    for x, y in h_sub.edges():
        xs, ys = contracted_model.branch_sets[x], contracted_model.branch_sets[y]
        cross = sorted((a, b) for a in xs for b in g.neighbors(a) if b in ys)
        if not cross:
            raise ValueError(f"subgraph edge ({x}, {y}) has no host edge")
        a, b = cross[0]
        chosen_edges[(x, y)] = (a, b)
        if x in targets:
            targets[x].add(a)
        if y in targets:
            targets[y].add(b)

    keep: set[int] = set()
    branch: dict[int, frozenset[int]] = {}
    for v in h_sub.vertices:
        if v in targets:
            ball = contracted_model.branch_sets[v]
            part = _keep_for_ball(g, ball_ids[v], ball, targets[v])
            branch[v] = frozenset(part)
            keep |= part
        else:
            branch[v] = contracted_model.branch_sets[v]
            keep |= branch[v]
    ball_vertices = set()
    for pid, c in ball_ids.items():
        ball_vertices |= contracted_model.branch_sets[pid]
    keep |= set(g.vertices) - ball_vertices

    restricted = induced_subgraph(g, keep)
    model = MinorModel(pattern=h_sub, host=restricted, branch_sets=branch, induced=False)
    errs = validate_model(model)
    if errs:
        raise AssertionError("restriction lost the subgraph minor: " + "; ".join(errs))
    for v in sorted(keep & centers):
        ok, _ = is_sparsifiable(restricted, v)
        if not ok:
            raise ValueError(f"class vertex {v} failed to become sparsifiable")
    return frozenset(keep), model
