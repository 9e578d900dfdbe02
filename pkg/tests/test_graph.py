import math
import random

import pytest

from pathforge.graph import (
    Graph,
    RootedTree,
    bfs_layering,
    complete_graph,
    components,
    contract_sets,
    cycle_graph,
    girth,
    induced_subgraph,
    line_graph,
    path_graph,
    star_graph,
)
from pathforge.generators import complete_binary_tree, hat_tree, wattle

from conftest import oracle_girth, random_connected_graph, random_graph


def test_no_self_loops_or_parallel_edges():
    with pytest.raises(ValueError):
        Graph([0], [(0, 0)])
    g = Graph([0, 1], [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_bfs_layering_cbt():
    t = complete_binary_tree(2)
    lay = bfs_layering(t.graph, t.root)
    assert [len(layer) for layer in lay.layers] == [1, 2, 4]


def test_bfs_layering_single_vertex():
    lay = bfs_layering(Graph([3]), 3)
    assert lay.layers == (frozenset({3}),)


def test_bfs_layering_errors():
    with pytest.raises(ValueError):
        bfs_layering(path_graph(3), 9)
    two = Graph([0, 1, 2], [(0, 1)])
    with pytest.raises(ValueError):
        bfs_layering(two, 0, require_connected=True)
    assert len(bfs_layering(two, 0).layers) == 2


def test_bfs_layering_hat_branch_gaps():
    _, branch, layering, _ = hat_tree(2)
    index = layering.as_index_map()
    spots = sorted(index[v] for v in branch)
    assert all(b - a >= 3 for a, b in zip(spots, spots[1:]))


def test_bfs_layering_random_properties():
    rng = random.Random(2)
    for _ in range(200):
        g = random_connected_graph(rng, rng.randint(1, 12))
        lay = bfs_layering(g, 0)
        seen = frozenset().union(*lay.layers)
        assert seen == g.vertex_set()
        index = lay.as_index_map()
        for u, v in g.edges():
            assert abs(index[u] - index[v]) <= 1


def test_girth_basics():
    assert girth(complete_graph(3)) == 3
    assert girth(complete_binary_tree(3).graph) == math.inf
    assert girth(cycle_graph(9)) == 9
    assert girth(Graph()) == math.inf


def test_girth_against_enumeration():
    rng = random.Random(7)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 10), rng.choice([0.2, 0.4, 0.6]))
        assert girth(g) == oracle_girth(g)


def test_line_graph_small_shapes():
    lg, _ = line_graph(path_graph(4))
    assert lg == path_graph(3)
    lg, _ = line_graph(star_graph(3))
    assert lg == complete_graph(3)
    # fork with arm lengths (2, 1, 1): triangle plus one pendant vertex
    fork = Graph(range(5), [(0, 1), (1, 2), (0, 3), (0, 4)])
    lg, name = line_graph(fork)
    tri = {name[(0, 1)], name[(0, 3)], name[(0, 4)]}
    assert all(lg.has_edge(a, b) for a in tri for b in tri if a != b)
    assert lg.degree(name[(1, 2)]) == 1
    assert lg.m == 4


def test_line_graph_edge_count_formula():
    hosts = [complete_binary_tree(3).graph, wattle(2, None, [1, 2])[0],
             hat_tree(1)[0], star_graph(5), cycle_graph(7)]
    for g in hosts:
        lg, _ = line_graph(g)
        assert lg.n == g.m
        assert lg.m == sum(g.degree(v) * (g.degree(v) - 1) // 2 for v in g.vertices)


def test_induced_subgraph_examples():
    assert induced_subgraph(complete_graph(4), [0, 1, 3]).m == 3
    assert induced_subgraph(path_graph(4), []).n == 0
    alt = induced_subgraph(cycle_graph(6), [0, 2, 4])
    assert alt.n == 3 and alt.m == 0
    with pytest.raises(ValueError):
        induced_subgraph(path_graph(3), [7])


def test_contract_sets_examples():
    c, _ = contract_sets(path_graph(3), [{0, 1}])
    assert c.n == 2 and c.m == 1
    c, _ = contract_sets(complete_graph(3), [{0, 1}])
    assert c.n == 2 and c.m == 1  # loop dropped, parallels merged
    with pytest.raises(ValueError):
        contract_sets(path_graph(4), [{0, 1}, {1, 2}])
    with pytest.raises(ValueError):
        contract_sets(path_graph(4), [{0, 3}])


def test_contract_wattle_to_quotient_tree():
    host, cert = wattle(2, 2, [1, 2])
    parts = []
    for v in cert.base.graph.vertices:
        part = set(cert.structure(v))
        parent = cert.base.parent(v)
        if parent is not None:
            part.update(cert.path_map[(parent, v)][1:-1])
        parts.append(part)
    q, name = contract_sets(host, parts)
    assert q.n == cert.base.graph.n and q.m == cert.base.graph.m
    rename = {name[frozenset(p)]: v for p, v in zip(parts, cert.base.graph.vertices)}
    edges = {(min(rename[a], rename[b]), max(rename[a], rename[b])) for a, b in q.edges()}
    assert edges == set(cert.base.graph.edges())


def test_contract_singletons_is_identity_up_to_names():
    rng = random.Random(5)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 9), 0.4)
        c, name = contract_sets(g, [{v} for v in g.vertices])
        back = {name[frozenset((v,))]: v for v in g.vertices}
        edges = {(min(back[a], back[b]), max(back[a], back[b])) for a, b in c.edges()}
        assert edges == set(g.edges()) and c.n == g.n


def test_rooted_tree_structure():
    t = complete_binary_tree(3)
    assert t.parent(0) is None and t.parent(4) == 1
    assert t.children(1) == [3, 4]
    assert t.depth(9) == 3 and t.height == 3
    assert t.is_ancestor(1, 9) and not t.is_ancestor(2, 9)
    assert t.tree_path(7, 8) == [7, 3, 8]
    assert len(t.leaves()) == 8
    with pytest.raises(ValueError):
        RootedTree(cycle_graph(4), 0)


def test_components():
    g = Graph(range(5), [(0, 1), (3, 4)])
    assert components(g) == [frozenset({0, 1}), frozenset({2}), frozenset({3, 4})]
