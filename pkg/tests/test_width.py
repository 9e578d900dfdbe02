import math
import random

import pytest

from pathforge.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from pathforge.generators import complete_binary_tree, hat_tree, subdivide
from pathforge.minors import MinorModel, find_minor_model, identity_model
from pathforge.width import (
    Deg3Evidence,
    PathDecomposition,
    find_deg3_subgraph,
    pathwidth_exact,
    pathwidth_lower_bound_by_minor,
    tree_pathwidth,
    validate_path_decomposition,
)

from conftest import oracle_pathwidth, random_graph, random_tree


def test_exact_small_families():
    cases = [(path_graph(5), 1), (complete_graph(4), 3), (cycle_graph(6), 2),
             (Graph(), -1), (Graph([7]), 0), (star_graph(6), 1)]
    for g, expected in cases:
        value, pd = pathwidth_exact(g)
        assert value == expected
        assert not validate_path_decomposition(g, pd)
        assert pd.width == value


def test_exact_against_permutation_oracle():
    rng = random.Random(12)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 7), rng.choice([0.2, 0.5, 0.8]))
        value, pd = pathwidth_exact(g)
        assert value == oracle_pathwidth(g)
        assert not validate_path_decomposition(g, pd)


def test_exact_size_bound():
    with pytest.raises(ValueError):
        pathwidth_exact(path_graph(30))
    value, _ = pathwidth_exact(path_graph(30), max_vertices=30)
    assert value == 1


def test_tree_pathwidth_matches_exact_on_random_trees():
    rng = random.Random(13)
    for _ in range(150):
        g = random_tree(rng, rng.randint(1, 18))
        w1, pd1 = pathwidth_exact(g)
        w2, pd2 = tree_pathwidth(g)
        assert w1 == w2
        assert not validate_path_decomposition(g, pd2)


def test_tree_pathwidth_cbt_heights():
    for h in range(1, 9):
        value, pd = tree_pathwidth(complete_binary_tree(h).graph)
        assert value == math.ceil(h / 2)
        if h <= 4:
            exact, _ = pathwidth_exact(complete_binary_tree(h).graph, max_vertices=31)
            assert exact == value


def test_tree_pathwidth_star_and_forest():
    assert tree_pathwidth(star_graph(9))[0] == 1
    assert tree_pathwidth(Graph([1]))[0] == 0
    forest = Graph(range(6), [(0, 1), (2, 3), (3, 4), (3, 5)])
    value, pd = tree_pathwidth(forest)
    assert value == 1
    assert not validate_path_decomposition(forest, pd)
    with pytest.raises(ValueError):
        tree_pathwidth(cycle_graph(4))


def test_subdivision_never_lowers_width():
    rng = random.Random(14)
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 8), 0.4)
        lengths = {e: rng.randint(1, 2) for e in g.edges()}
        host, _ = subdivide(g, lengths)
        w_base, _ = pathwidth_exact(g)
        w_host, _ = pathwidth_exact(host, max_vertices=40)
        assert w_host >= w_base


def test_lower_bound_by_minor():
    hat, branch, _, cert = hat_tree(2)
    base = cert.base
    sets = {v: {v} for v in base.vertices}
    for (u, v), path in cert.path_map.items():
        child = v if u < v else u
        sets[child].update(path[1:-1])
    model = MinorModel(base, hat, {v: frozenset(s) for v, s in sets.items()}, False)
    pw_t, _ = tree_pathwidth(base)
    assert pw_t == 2
    assert pathwidth_lower_bound_by_minor(hat, model, pw_t) == 2

    host = complete_graph(4)
    k3 = find_minor_model(host, complete_graph(3))
    assert pathwidth_lower_bound_by_minor(host, k3, 2) == 2
    assert pathwidth_exact(host)[0] >= 2

    t2 = complete_binary_tree(2).graph
    assert pathwidth_lower_bound_by_minor(t2, identity_model(t2), 1) == 1

    bad = MinorModel(complete_graph(3), path_graph(3),
                     {v: frozenset((v,)) for v in range(3)}, False)
    with pytest.raises(ValueError):
        pathwidth_lower_bound_by_minor(path_graph(3), bad, 2)


def test_find_deg3_subgraph():
    t6 = complete_binary_tree(6).graph
    ev = find_deg3_subgraph(t6, 3)
    assert isinstance(ev, Deg3Evidence)
    assert ev.subgraph.max_degree() <= 3 and ev.width_bound >= 3

    ev = find_deg3_subgraph(complete_graph(5), 1)
    assert ev is not None and ev.subgraph.max_degree() <= 3 and ev.width_bound >= 1

    assert find_deg3_subgraph(cycle_graph(4), 3) is None

    with pytest.raises(ValueError):
        find_deg3_subgraph(path_graph(3), 4)  # needs at least 5 vertices


def test_decomposition_width_convention():
    assert PathDecomposition(()).width == -1
    assert PathDecomposition((frozenset({1}),)).width == 0
