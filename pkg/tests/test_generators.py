import math
import random

import pytest

from pathforge.graph import Graph, contract_sets, girth, path_graph, star_graph
from pathforge.generators import (
    binary_tree_plus,
    complete_binary_tree,
    hat_tree,
    k_ary_tree,
    net_graph_replacement,
    subdivide,
    validate_subdivision,
    validate_wattle,
    wattle,
)

from conftest import random_tree


def test_complete_binary_tree_counts():
    assert complete_binary_tree(0).graph.n == 1
    t2 = complete_binary_tree(2)
    assert t2.graph.n == 7 and t2.graph.degree(t2.root) == 2
    t3 = complete_binary_tree(3)
    assert t3.graph.n == 15 and len(t3.leaves()) == 8
    with pytest.raises(ValueError):
        complete_binary_tree(-1)


def test_binary_tree_plus():
    t0 = binary_tree_plus(0)
    assert t0.graph.n == 4 and t0.graph.degree(t0.root) == 3
    assert binary_tree_plus(1).graph.n == 8
    for k in range(5):
        plus = binary_tree_plus(k)
        embedded = complete_binary_tree(k).graph
        assert all(plus.graph.degree(v) >= 3 for v in embedded.vertices)


def test_k_ary_tree_counts():
    assert k_ary_tree(2).graph.n == 7
    assert k_ary_tree(3).graph.n == 40
    assert k_ary_tree(1).graph == path_graph(2)
    for k in (2, 3):
        t = k_ary_tree(k)
        assert t.graph.n == (k ** (k + 1) - 1) // (k - 1)
        assert all(d == k for d in (t.depth(x) for x in t.leaves()))


def test_subdivide_basics():
    t1 = complete_binary_tree(1).graph
    iso, cert = subdivide(t1)
    assert iso == t1 and not validate_subdivision(cert)
    p4, cert = subdivide(path_graph(2), 3)
    assert p4.n == 4 and not validate_subdivision(cert)
    p5, cert = subdivide(t1, 2)
    assert p5.n == 5 and p5.max_degree() == 2 and not validate_subdivision(cert)
    with pytest.raises(ValueError):
        subdivide(t1, {(0, 1): 2})  # missing an edge assignment
    with pytest.raises(ValueError):
        subdivide(t1, 0)


def test_subdivide_vertex_count_formula():
    rng = random.Random(3)
    for _ in range(50):
        base = random_tree(rng, rng.randint(2, 9))
        lengths = {e: rng.randint(1, 4) for e in base.edges()}
        host, cert = subdivide(base, lengths)
        assert host.n == base.n + sum(val - 1 for val in lengths.values())
        assert not validate_subdivision(cert)


def test_subdivide_then_contract_recovers_base():
    rng = random.Random(4)
    for _ in range(100):
        base = random_tree(rng, rng.randint(2, 8))
        lengths = {e: rng.randint(1, 3) for e in base.edges()}
        host, cert = subdivide(base, lengths)
        parts = []
        label = []
        for (u, v), path in cert.path_map.items():
            if len(path) > 2:
                parts.append(set(path[1:-1]))
                label.append((u, v))
        q, name = contract_sets(host, parts)
        # every contracted interior becomes a vertex joined to both endpoints
        for (u, v), p in zip(label, parts):
            mid = name[frozenset(p)]
            assert q.has_edge(u, mid) and q.has_edge(mid, v)


def test_net_graph_replacement():
    net, info = net_graph_replacement(star_graph(3), 0)
    assert net.n == 6 and net.m == 6
    x, y, z = info["triangle"]
    assert net.has_edge(x, y) and net.has_edge(y, z) and net.has_edge(x, z)
    assert sorted(info["attachments"].values()) == [1, 2, 3]

    t2 = complete_binary_tree(2).graph
    out, _ = net_graph_replacement(t2, 1)
    assert out.n == t2.n + 2 and out.m == t2.m + 3
    assert girth(out) == 3
    with pytest.raises(ValueError):
        net_graph_replacement(t2, 0)  # degree 2


def test_wattle_examples():
    plain, cert = wattle(2)
    assert plain == complete_binary_tree(2).graph  # empty set: just the subdivision
    assert not validate_wattle(cert)

    host, cert = wattle(2, None, [1, 2])
    assert host.n == 11 and len(cert.triangles) == 2
    assert not validate_wattle(cert)

    with pytest.raises(ValueError):
        wattle(1, None, [0])  # the height-1 tree has no degree-3 vertex
    with pytest.raises(ValueError):
        wattle(2, None, [0])  # root has degree 2
    with pytest.raises(ValueError):
        wattle(2, None, [3])  # leaf


def test_wattle_with_lengths_validates():
    rng = random.Random(9)
    internal = [1, 2, 3, 4, 5, 6]
    for _ in range(20):
        chosen = [v for v in internal if rng.random() < 0.5]
        host, cert = wattle(3, rng.randint(1, 3), chosen)
        assert not validate_wattle(cert)
        assert cert.used_vertices() == host.vertex_set()


def test_hat_tree_structure():
    for k in (1, 2):
        hat, branch, layering, cert = hat_tree(k)
        assert not validate_subdivision(cert)
        index = layering.as_index_map()
        spots = sorted(index[v] for v in branch)
        assert all(s % 3 == 0 for s in spots)
        assert all(b - a >= 3 for a, b in zip(spots, spots[1:]))
        for layer in layering.layers:
            assert len(layer & branch) <= 1
        assert girth(hat) >= 6
        assert set(cert.host.edges()) <= set(hat.edges())


def test_hat_tree_minus_branch_low_degree():
    for k in (1, 2, 3):
        hat, branch, _, _ = hat_tree(k)
        rest = hat.vertex_set() - branch
        assert all(len(hat.neighbors(v) & rest) <= 2 for v in rest)


def test_hat_tree_height_formula():
    hat, branch, layering, cert = hat_tree(1)
    assert math.isinf(girth(cert.host))
    assert cert.base == complete_binary_tree(2).graph
