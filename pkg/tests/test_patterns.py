import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from pathforge.graph import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    line_graph,
    path_graph,
    star_graph,
)
from pathforge.generators import complete_binary_tree, hat_tree, k_ary_tree, net_graph_replacement, subdivide
from pathforge.patterns import (
    SHAPES,
    find_induced_subdivision,
    find_induced_subgraph,
    is_cbt_subdivision,
    is_cbt_subdivision_line_graph,
    ramsey_detect,
    recognize,
    validate_embedding,
    validate_subdivision_embedding,
)

from conftest import brute_force_induced_subgraph, random_graph


def _net() -> Graph:
    return net_graph_replacement(star_graph(3), 0)[0]


def test_find_induced_subgraph_examples():
    assert find_induced_subgraph(complete_graph(4), complete_graph(3)) is not None
    assert find_induced_subgraph(cycle_graph(6), complete_graph(3)) is None
    assert find_induced_subgraph(_net(), star_graph(3)) is None
    emb = find_induced_subgraph(_net(), complete_graph(3))
    assert emb is not None and not validate_embedding(emb)


def test_find_induced_subgraph_against_brute_force():
    rng = random.Random(21)
    for _ in range(300):
        host = random_graph(rng, rng.randint(1, 10), rng.choice([0.25, 0.5, 0.75]))
        pattern = random_graph(rng, rng.randint(1, 5), rng.choice([0.3, 0.6]))
        got = find_induced_subgraph(host, pattern)
        assert (got is not None) == brute_force_induced_subgraph(host, pattern)
        if got is not None:
            assert not validate_embedding(got)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8), st.integers(1, 4), st.data())
def test_found_embeddings_always_validate(hn, pn, data):
    host_edges = data.draw(st.sets(
        st.tuples(st.integers(0, hn - 1), st.integers(0, hn - 1)).filter(lambda e: e[0] < e[1])))
    pat_edges = data.draw(st.sets(
        st.tuples(st.integers(0, pn - 1), st.integers(0, pn - 1)).filter(lambda e: e[0] < e[1])))
    host, pattern = Graph(range(hn), host_edges), Graph(range(pn), pat_edges)
    emb = find_induced_subgraph(host, pattern)
    if emb is not None:
        assert not validate_embedding(emb)


def test_find_induced_subdivision_examples():
    t2 = complete_binary_tree(2).graph
    host, _ = subdivide(t2, 2)
    emb = find_induced_subdivision(host, t2)
    assert emb is not None and not validate_subdivision_embedding(emb)

    emb = find_induced_subdivision(cycle_graph(8), complete_binary_tree(1).graph)
    assert emb is not None and not validate_subdivision_embedding(emb)

    hat1, _, _, _ = hat_tree(1)
    assert find_induced_subdivision(hat1, complete_binary_tree(5).graph) is None


def test_find_induced_subdivision_min_length():
    t1 = complete_binary_tree(1).graph
    host, _ = subdivide(t1, 3)
    emb = find_induced_subdivision(host, t1, min_length=2)
    assert emb is not None
    assert all(len(p) >= 3 for p in emb.path_map.values())


def test_recognize_fork_family():
    assert recognize(star_graph(3), "fork")[0]
    ok, w = recognize(Graph(range(6), [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]), "fork")
    assert ok and w["center"] == 0 and sorted(len(a) for a in w["arms"]) == [2, 3, 3]
    assert not recognize(path_graph(4), "fork")[0]
    assert recognize(path_graph(4), "fork", "inclusive")[0]
    assert not recognize(complete_graph(3), "fork")[0]


def test_recognize_semi_fork_family():
    assert recognize(complete_graph(3), "semi-fork")[0]
    assert recognize(_net(), "semi-fork")[0]
    assert recognize(_net(), "net")[0]
    assert not recognize(complete_graph(3), "net")[0]
    assert not recognize(path_graph(3), "semi-fork")[0]
    assert recognize(path_graph(3), "semi-fork", "inclusive")[0]


def test_recognize_tripods():
    claw_plus_fork = Graph(range(9), [(0, 1), (0, 2), (0, 3),
                                      (4, 5), (5, 6), (5, 7), (5, 8)])
    assert recognize(claw_plus_fork, "tripod")[0]
    assert not recognize(_net(), "tripod")[0]
    assert recognize(_net(), "semi-tripod")[0]
    net = _net()
    shift = net.fresh_vertex()
    two_nets = Graph(list(net.vertices) + [v + shift for v in net.vertices],
                     net.edges() + [(a + shift, b + shift) for a, b in net.edges()])
    assert recognize(two_nets, "semi-tripod")[0]
    assert not recognize(Graph(range(2)), "tripod", "strict")[0]
    assert recognize(Graph(range(2)), "tripod", "inclusive")[0]


def test_recognize_complete_shapes():
    assert recognize(complete_graph(1), "complete")[0]
    assert recognize(complete_graph(5), "complete")[0]
    assert not recognize(cycle_graph(4), "complete")[0]
    assert recognize(complete_bipartite_graph(2, 3), "complete-bipartite")[0]
    assert recognize(complete_graph(1), "complete-bipartite")[0]
    assert not recognize(cycle_graph(5), "complete-bipartite")[0]
    assert not recognize(cycle_graph(6), "complete-bipartite")[0]
    ok, w = recognize(star_graph(3), "claw")
    assert ok and w["center"] == 0
    with pytest.raises(ValueError):
        recognize(star_graph(3), "spiral")
    with pytest.raises(ValueError):
        recognize(star_graph(3), "fork", "lenient")


def test_strict_fork_exhaustive_arm_triples():
    """Strict recognition accepts exactly the subdivided claws (arm sum <= 9)."""
    for arms in itertools.product(range(1, 8), repeat=3):
        if sum(arms) > 9:
            continue
        edges = []
        nxt = 1
        for length in arms:
            prev = 0
            for _ in range(length):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
        fork = Graph(range(nxt), edges)
        assert recognize(fork, "fork")[0]
    # and rejects near misses
    assert not recognize(Graph(range(5), [(0, 1), (0, 2), (0, 3), (0, 4)]), "fork")[0]
    assert not recognize(Graph(range(5), [(0, 1), (0, 2), (0, 3), (1, 2)]), "fork")[0]


def test_semi_fork_matches_line_graphs_of_forks():
    """Strict semi-forks are exactly line graphs of strict forks (n <= 10)."""
    seen: list[Graph] = []
    for arms in itertools.product(range(1, 9), repeat=3):
        if sum(arms) > 10:
            continue
        edges = []
        nxt = 1
        for length in arms:
            prev = 0
            for _ in range(length):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
        fork = Graph(range(nxt), edges)
        lg, _ = line_graph(fork)
        assert recognize(lg, "semi-fork")[0], arms
        seen.append(lg)
    # every strict semi-fork witness decomposes back into a fork shape
    rng = random.Random(8)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 8), rng.choice([0.2, 0.4, 0.6]))
        ok, w = recognize(g, "semi-fork")
        if ok:
            corners = w["triangle"]
            arm_lengths = sorted(len(w["paths"][c]) + 1 for c in corners)
            assert all(length >= 1 for length in arm_lengths)


def test_subdivision_family_membership():
    host, _ = subdivide(complete_binary_tree(2).graph, 2)
    assert is_cbt_subdivision(host, 2)
    assert not is_cbt_subdivision(host, 1)
    assert not is_cbt_subdivision(host, 3)
    assert is_cbt_subdivision(path_graph(3), 1)
    assert not is_cbt_subdivision(path_graph(2), 1)
    assert is_cbt_subdivision(Graph([4]), 0)

    lg, _ = line_graph(host)
    assert is_cbt_subdivision_line_graph(lg, 2)
    assert not is_cbt_subdivision_line_graph(host, 2)
    assert is_cbt_subdivision_line_graph(path_graph(2), 1)
    bigger, _ = subdivide(complete_binary_tree(3).graph, 3)
    lg3, _ = line_graph(bigger)
    assert is_cbt_subdivision_line_graph(lg3, 3)
    assert not is_cbt_subdivision_line_graph(lg3, 2)


def test_ramsey_detect():
    tag, emb = ramsey_detect(complete_graph(5), 3)
    assert tag == "complete" and not validate_embedding(emb)
    tag, emb = ramsey_detect(complete_bipartite_graph(4, 4), 3)
    assert tag == "biclique"
    tag, emb = ramsey_detect(k_ary_tree(3).graph, 3)
    assert tag == "ktree" and not validate_embedding(emb)
    assert ramsey_detect(cycle_graph(7), 3) is None
    with pytest.raises(ValueError):
        ramsey_detect(cycle_graph(7), 0)


def test_hat_tree_forbids_triangle_and_biclique():
    for k in (1, 2):
        hat, _, _, _ = hat_tree(k)
        assert find_induced_subgraph(hat, complete_graph(3)) is None
        assert find_induced_subgraph(hat, complete_bipartite_graph(2, 2)) is None
