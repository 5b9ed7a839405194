import random

import pytest
from hypothesis import given, strategies as st

from lamplight.errors import CapExceeded
from lamplight.gf2 import GF2Matrix
from lamplight.graph import (Graph, GraphParseError, adjacency, all_undirected, bipartition,
                             corollary_form, find_premise_violation, format_graph, graph_from_matrix,
                             grid_graph, hypercube_game, induced_subgraph, odd_sets_induce_odd_arc_count,
                             odd_subset_premise, parse_graph, random_corollary_graph, random_digraph)

TRIANGLE_TEXT = "n 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 1 3\n"
TRIANGLE_LOOPED = TRIANGLE_TEXT + "".join(f"l {v}\n" for v in range(5))


def test_parse_examples():
    g = parse_graph("n 1\nl 0")
    assert g.n == 1 and g.has_loop(0) and not g.arcs
    k2 = parse_graph("n 2\ne 0 1\nl 0\nl 1")
    assert k2.edges() == [(0, 1)] and k2.all_loops()
    tri = parse_graph(TRIANGLE_TEXT)
    assert tri.n == 5 and tri.loops == 0
    assert tri.edges() == [(0, 1), (1, 2), (1, 3), (2, 3), (3, 4)]


def test_parse_directed_comments_and_roundtrip():
    g = parse_graph("# header\nn 3  # three\na 0 1\na 1 0\na 1 2\nl 2\n")
    assert g.is_paired(0, 1) and not g.is_paired(1, 2)
    assert g.unpaired_arcs() == [(1, 2)]
    assert parse_graph(format_graph(g)) == g


@pytest.mark.parametrize("text, lineno", [
    ("e 0 1\n", 1),
    ("n 2\ne 0 2\n", 2),
    ("n 2\ne 0 1\na 1 0\n", 3),
    ("n 2\nl 0\nl 0\n", 3),
    ("n 2\nx 0\n", 2),
    ("n 2\ne 0\n", 2),
    ("n 2\ne 1 1\n", 2),
    ("n 2\nn 3\n", 2),
    ("n two\n", 1),
])
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(GraphParseError) as exc:
        parse_graph(text)
    assert exc.value.lineno == lineno
    assert f"line {lineno}" in str(exc.value)


def test_adjacency_examples():
    loops3 = Graph.build(3, loops=range(3))
    assert adjacency(loops3).matrix == GF2Matrix.identity(3)
    k2 = parse_graph("n 2\ne 0 1\nl 0\nl 1")
    assert adjacency(k2).matrix.to_lists() == [[1, 1], [1, 1]]
    tri = adjacency(parse_graph(TRIANGLE_TEXT)).matrix
    assert tri.to_lists() == [
        [0, 1, 0, 0, 0],
        [1, 0, 1, 1, 0],
        [0, 1, 0, 1, 0],
        [0, 1, 1, 0, 1],
        [0, 0, 0, 1, 0],
    ]
    assert tri.is_symmetric()


def test_adjacency_directed_rows_are_out_neighbourhoods():
    g = Graph.build(3, loops=[1], arcs=[(0, 2), (2, 1)])
    assert adjacency(g).matrix.to_lists() == [[0, 0, 1], [0, 1, 0], [0, 1, 0]]
    assert graph_from_matrix(adjacency(g).matrix) == g


def test_undirected_adjacency_symmetric_with_unit_diagonal():
    rng = random.Random(5)
    for _ in range(50):
        g = random_digraph(6, rng)
        und = Graph(g.n, (1 << g.n) - 1, tuple(g.out[v] | sum(1 << u for u in range(g.n) if g.has_arc(u, v))
                                                for v in range(g.n)))
        a = adjacency(und).matrix
        assert a.is_symmetric() and a.diagonal_weight() == g.n


def test_induced_subgraph_examples():
    g = parse_graph(TRIANGLE_LOOPED)
    same, labels = induced_subgraph(g, range(5))
    assert same == g and labels == list(range(5))
    one, labels = induced_subgraph(g, [3])
    assert one.n == 1 and one.has_loop(0) and labels == [3]
    noloop, _ = induced_subgraph(parse_graph(TRIANGLE_TEXT), [3])
    assert not noloop.has_loop(0)
    tri, labels = induced_subgraph(parse_graph(TRIANGLE_TEXT), {1, 2, 3})
    assert labels == [1, 2, 3] and tri.edges() == [(0, 1), (0, 2), (1, 2)]


def test_premise_examples():
    assert odd_subset_premise(Graph.build(4, loops=range(4)))
    missing = Graph.build(3, loops=[0, 2], edges=[(0, 1), (1, 2)])
    assert find_premise_violation(missing) == [1]
    assert odd_subset_premise(grid_graph(3, 3))
    for g in all_undirected(4, loops=0b1111):
        assert odd_subset_premise(g)
    with pytest.raises(CapExceeded) as exc:
        odd_subset_premise(Graph.build(21, loops=range(21)))
    assert exc.value.cap == 20


def test_premise_on_directed_example():
    # three loops and a directed 3-cycle: U = V induces out-degree 2 everywhere
    g = Graph.build(3, loops=range(3), arcs=[(0, 1), (1, 2), (2, 0)])
    assert find_premise_violation(g) == [0, 1, 2]


def test_bipartition_examples():
    assert bipartition(grid_graph(2, 2)) == ([0, 3], [1, 2])
    assert bipartition(parse_graph(TRIANGLE_LOOPED)) is None
    assert bipartition(Graph.build(1, loops=[0])) == ([0], [])
    with pytest.raises(ValueError):
        bipartition(Graph.build(2, arcs=[(0, 1)]))


@given(st.integers(1, 6), st.integers(1, 6))
def test_grid_bipartition_has_no_internal_edges(m, n):
    g = grid_graph(m, n)
    xs, ys = bipartition(g)
    for part in (set(xs), set(ys)):
        assert not any(u in part and v in part for u, v in g.edges())


def test_grid_graph_examples():
    assert grid_graph(1, 1) == Graph.build(1, loops=[0])
    assert grid_graph(1, 2) == parse_graph("n 2\ne 0 1\nl 0\nl 1")
    g = grid_graph(2, 2)
    assert g.n == 4 and len(g.edges()) == 4 and g.all_loops()
    g = grid_graph(3, 4)
    assert len(g.edges()) == 3 * 3 + 2 * 4


def test_hypercube_examples():
    assert hypercube_game(1).matrix.to_lists() == [[1]]
    h2 = hypercube_game(2)
    # lamp columns carry labels 01, 10, 11 (values 1, 2, 3)
    assert h2.buttons == 2 and h2.lamps == 3
    assert h2.matrix.to_lists() == [[1, 0, 1], [0, 1, 1]]
    for k in range(1, 11):
        h = hypercube_game(k)
        assert all(bin(r).count("1") == 1 << (k - 1) for r in h.matrix.data)


def test_corollary_form_detection():
    assert corollary_form(Graph.build(3, loops=range(3)))
    # K_{1,2}: corridor 0 with arcs to 1 and from 2
    assert corollary_form(Graph.build(3, loops=range(3), arcs=[(0, 1), (2, 0)], edges=[(1, 2)]))
    # single unpaired arc leaves vertex 2 outside the bipartite graph
    assert not corollary_form(Graph.build(3, loops=range(3), arcs=[(0, 1)]))
    rng = random.Random(0)
    for _ in range(100):
        g = random_corollary_graph(rng.randint(1, 7), rng)
        assert corollary_form(g) and odd_sets_induce_odd_arc_count(g)
