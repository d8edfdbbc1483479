"""Star graph construction, adjacency rules, renaming automorphism, routing."""

import random
from collections import deque

import pytest

from switchsim import stargraph as sg


def brute_neighbors(label, n, k):
    """Adjacency built straight from the two formation rules, independently."""
    out = []
    for s in range(1, k):
        t = list(label)
        t[0], t[s] = t[s], t[0]
        out.append(tuple(t))
    for sym in range(1, n + 1):
        if sym not in label:
            out.append((sym,) + label[1:])
    return out


def brute_bfs(n, k, src):
    """Plain breadth-first distances over the brute-force adjacency."""
    dist = {src: 0}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v in brute_neighbors(u, n, k):
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


# --- enumeration ------------------------------------------------------------


@pytest.mark.parametrize("n,k,count", [(4, 2, 12), (2, 1, 2), (7, 4, 840)])
def test_node_counts(n, k, count):
    spec = sg.StarGraphSpec(n, k)
    nodes = sg.enumerate_nodes(spec)
    assert len(nodes) == count
    assert len(set(nodes)) == count
    assert nodes == sorted(nodes)  # deterministic lexicographic order
    assert spec.node_count == count


@pytest.mark.parametrize("n,k", [(1, 1), (3, 0), (3, 3), (4, 5)])
def test_invalid_spec_rejected(n, k):
    with pytest.raises(sg.StarGraphError):
        sg.StarGraphSpec(n, k)


def test_invalid_labels_rejected():
    spec = sg.StarGraphSpec(4, 2)
    for bad in [(1, 2, 3), (1, 1), (0, 2), (5, 1)]:
        with pytest.raises(sg.StarGraphError):
            sg.neighbors(spec, bad)


# --- adjacency --------------------------------------------------------------


def test_neighbors_worked_example_s74():
    # position swaps ascending s, then replacements ascending symbol
    spec = sg.StarGraphSpec(7, 4)
    got = sg.neighbors(spec, (1, 2, 3, 4))
    assert got == [
        (2, 1, 3, 4),
        (3, 2, 1, 4),
        (4, 2, 3, 1),
        (5, 2, 3, 4),
        (6, 2, 3, 4),
        (7, 2, 3, 4),
    ]


def test_neighbors_small_cases():
    assert sg.neighbors(sg.StarGraphSpec(2, 1), (1,)) == [(2,)]
    assert sg.neighbors(sg.StarGraphSpec(4, 2), (1, 2)) == [(2, 1), (3, 2), (4, 2)]


@pytest.mark.parametrize("n,k", [(4, 2), (5, 3), (6, 2)])
def test_neighbors_match_brute_force(n, k):
    spec = sg.StarGraphSpec(n, k)
    for lab in sg.enumerate_nodes(spec):
        assert set(sg.neighbors(spec, lab)) == set(brute_neighbors(lab, n, k))
        assert len(sg.neighbors(spec, lab)) == n - 1


def test_degree_at_largest_supported_size():
    # spot-check degree n-1 for n = 8 without materializing the big graphs
    rnd = random.Random(21)
    for k in range(1, 8):
        spec = sg.StarGraphSpec(8, k)
        for _ in range(20):
            lab = tuple(rnd.sample(range(1, 9), k))
            nbrs = sg.neighbors(spec, lab)
            assert len(nbrs) == 7
            assert len(set(nbrs)) == 7


@pytest.mark.parametrize("n,k", [(4, 2), (5, 2), (5, 4), (6, 3)])
def test_adjacency_symmetric_and_connected(n, k):
    graph = sg.StarGraph(sg.StarGraphSpec(n, k))
    for i, nbrs in enumerate(graph.adjacency):
        assert len(nbrs) == n - 1
        for j in nbrs:
            assert i in graph.adjacency[j]
    assert graph.is_connected()


def test_edge_classification():
    graph = sg.StarGraph(sg.StarGraphSpec(4, 2))
    for a, b, cls in graph.edges():
        assert cls == (sg.INTER if a[-1] != b[-1] else sg.INTRA)
    # swapping into the last position changes the sector; replacements never do
    assert sg.edge_class((1, 2), (2, 1)) == sg.INTER
    assert sg.edge_class((1, 2), (3, 2)) == sg.INTRA


def test_edge_list_export(tmp_path):
    graph = sg.StarGraph(sg.StarGraphSpec(4, 2))
    path = tmp_path / "edges.csv"
    sg.write_edge_list(graph, path)
    lines = path.read_text().strip().splitlines()
    assert len(lines) == 12 * 3 // 2
    assert all(len(line.split(",")) == 3 for line in lines)
    assert "12,21,inter" in lines


# --- renaming ---------------------------------------------------------------


def test_renaming_map_examples():
    assert sg.renaming_map(sg.StarGraphSpec(4, 2), (3, 4)) == {3: 1, 4: 2, 1: 3, 2: 4}
    assert sg.renaming_map(sg.StarGraphSpec(4, 2), (1, 2)) == {1: 1, 2: 2, 3: 3, 4: 4}
    assert sg.renaming_map(sg.StarGraphSpec(7, 4), (1, 2, 3, 4)) == {i: i for i in range(1, 8)}


def test_renaming_sends_target_to_canonical():
    spec = sg.StarGraphSpec(5, 3)
    rnd = random.Random(11)
    for _ in range(10):
        target = tuple(rnd.sample(range(1, 6), 3))
        sigma = sg.renaming_map(spec, target)
        assert sg.apply_renaming(sigma, target) == (1, 2, 3)
        assert sorted(sigma.values()) == list(range(1, 6))


@pytest.mark.parametrize("n,k", [(4, 2), (5, 3)])
def test_renaming_is_automorphism(n, k):
    spec = sg.StarGraphSpec(n, k)
    graph = sg.StarGraph(spec)
    edges = {frozenset((a, b)) for a, b, _ in graph.edges()}
    rnd = random.Random(7)
    for _ in range(5):
        target = tuple(rnd.sample(range(1, n + 1), k))
        sigma = sg.renaming_map(spec, target)
        mapped = {
            frozenset((sg.apply_renaming(sigma, a), sg.apply_renaming(sigma, b)))
            for fs in edges
            for a, b in [tuple(fs)]
        }
        assert mapped == edges


def test_renaming_preserves_distances():
    spec = sg.StarGraphSpec(5, 3)
    graph = sg.StarGraph(spec)
    rnd = random.Random(3)
    nodes = graph.nodes
    sigma = sg.renaming_map(spec, tuple(rnd.sample(range(1, 6), 3)))
    for _ in range(20):
        u, v = rnd.choice(nodes), rnd.choice(nodes)
        du = len(sg.shortest_path(graph, u, v)) - 1
        dv = len(sg.shortest_path(graph, sg.apply_renaming(sigma, u), sg.apply_renaming(sigma, v))) - 1
        assert du == dv


# --- shortest paths ---------------------------------------------------------


def test_shortest_path_trivial_and_one_hop():
    graph = sg.StarGraph(sg.StarGraphSpec(4, 2))
    assert sg.shortest_path(graph, (1, 2), (1, 2)) == [(1, 2)]
    assert len(sg.shortest_path(graph, (2, 1), (1, 2))) == 2  # one hop


def test_shortest_path_matches_bfs_all_pairs_s42():
    graph = sg.StarGraph(sg.StarGraphSpec(4, 2))
    maxd = 0
    for u in graph.nodes:
        dist = brute_bfs(4, 2, u)
        for v in graph.nodes:
            path = sg.shortest_path(graph, u, v)
            assert len(path) - 1 == dist[v]
            assert path[0] == u and path[-1] == v
            for a, b in zip(path, path[1:]):
                assert b in sg.neighbors(graph.spec, a)
            maxd = max(maxd, dist[v])
    assert maxd == 3


def test_shortest_path_deterministic():
    graph = sg.StarGraph(sg.StarGraphSpec(5, 3))
    p1 = sg.shortest_path(graph, (4, 5, 1), (2, 3, 4))
    p2 = sg.shortest_path(graph, (4, 5, 1), (2, 3, 4))
    assert p1 == p2


# --- diameter and load ------------------------------------------------------


@pytest.mark.parametrize("n,k,d", [(4, 2, 3), (7, 4, 7), (2, 1, 1), (5, 3, 5), (6, 5, 7)])
def test_diameter_formula_values(n, k, d):
    assert sg.diameter_formula(sg.StarGraphSpec(n, k)) == d


@pytest.mark.parametrize("n,k", [(3, 2), (4, 2), (4, 3), (5, 2), (5, 3)])
def test_diameter_formula_matches_all_pairs_bfs(n, k):
    spec = sg.StarGraphSpec(n, k)
    nodes = sg.enumerate_nodes(spec)
    maxd = max(max(brute_bfs(n, k, u).values()) for u in nodes)
    assert maxd == sg.diameter_formula(spec)


def test_distance_sum_uniform_s42():
    graph = sg.StarGraph(sg.StarGraphSpec(4, 2))
    sums = {sg.distance_sum(graph, v) for v in graph.nodes}
    assert sums == {23}
    assert sg.distance_sum(graph, (1, 2)) == sg.distance_sum(graph, (3, 4))
    assert sg.forwarding_factor(graph, (1, 2)) == 23 - 3


def test_distance_sum_s21():
    graph = sg.StarGraph(sg.StarGraphSpec(2, 1))
    assert sg.distance_sum(graph, (1,)) == 1
    assert sg.forwarding_factor(graph, (1,)) == 0


# --- labels -----------------------------------------------------------------


def test_label_round_trip():
    assert sg.format_label((1, 2, 3)) == "123"
    assert sg.parse_label("123") == (1, 2, 3)
    assert sg.format_label((10, 2)) == "10-2"
    assert sg.parse_label("10-2") == (10, 2)
