import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from quadspec import (Graph, book, clique_join_independent,
                      clique_plus_pendants, complete, complete_bipartite,
                      construct, cycle, degree_stats, from_edge_list,
                      from_graph6, is_star_with_isolated, remove_isolated,
                      star, to_edge_list, to_graph6)
from quadspec.errors import ConstructionError, FormatError, SizeError
from quadspec.graphs import (bipartition, connected_components,
                             is_complete_bipartite_core, read_graph6_stream)

from util import petersen, random_gnp


# -- edge-list format -------------------------------------------------------

def test_edge_list_c4():
    res = from_edge_list("4 4\n0 1\n1 2\n2 3\n3 0\n")
    assert res.graph == cycle(4)
    assert res.duplicates == 0


def test_edge_list_single_edge():
    res = from_edge_list("2 1\n0 1\n")
    assert (res.graph.n, res.graph.m) == (2, 1)


def test_edge_list_duplicate_collapses_with_warning():
    res = from_edge_list("3 3\n0 1\n0 1\n1 2\n")
    assert res.graph.m == 2
    assert res.duplicates == 1
    # reversed orientation is the same edge
    res = from_edge_list("3 3\n0 1\n1 0\n1 2\n")
    assert res.graph.m == 2
    assert res.duplicates == 1


def test_edge_list_comments_and_blank_lines():
    res = from_edge_list("# a comment\n3 2\n\n0 1\n# another\n1 2\n")
    assert res.graph.m == 2


@pytest.mark.parametrize("text,fragment", [
    ("3 2\n0 1\nx y\n", "line 3"),
    ("3 1\n0 3\n", "out of range"),
    ("3 1\n1 1\n", "loop"),
    ("3 2\n0 1\n", "expected 2 edge lines"),
    ("nonsense\n", "header"),
])
def test_edge_list_errors(text, fragment):
    with pytest.raises(FormatError, match=fragment):
        from_edge_list(text)


def test_edge_list_round_trip():
    g = petersen()
    assert from_edge_list(to_edge_list(g)).graph == g


# -- graph6 ------------------------------------------------------------------

def test_graph6_k4():
    g = from_graph6(b"C~")
    assert g == complete(4)
    assert to_graph6(g) == b"C~"


def test_graph6_single_vertex():
    assert to_graph6(Graph(1)) == b"@"
    assert from_graph6(b"@").n == 1


def test_graph6_header_tolerated_never_emitted():
    g = from_graph6(b">>graph6<<C~")
    assert g == complete(4)
    assert not to_graph6(g).startswith(b">>")


def test_graph6_round_trip_vs_networkx():
    nx = pytest.importorskip("networkx")
    rng = np.random.default_rng(7)
    for _ in range(60):
        n = int(rng.integers(1, 31))
        g = random_gnp(rng, n, float(rng.uniform(0.1, 0.9)))
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(g.edges())
        assert to_graph6(g) == nx.to_graph6_bytes(h, header=False).strip()
        assert from_graph6(to_graph6(g)) == g


def test_graph6_multibyte_sizes():
    for n in (63, 100, 200):
        rng = np.random.default_rng(n)
        g = random_gnp(rng, n, 0.1)
        assert from_graph6(to_graph6(g)) == g
        assert to_graph6(g)[0] == 126


def test_graph6_errors_name_offset():
    with pytest.raises(FormatError, match="byte 1"):
        from_graph6(bytes([70, 30]))
    with pytest.raises(FormatError, match="expected"):
        from_graph6(b"C~~")
    with pytest.raises(FormatError, match="expected"):
        from_graph6(b"C")


def test_graph6_stream():
    graphs = list(read_graph6_stream(b"C~\n@\n\nBw\n"))
    assert [g.n for g in graphs] == [4, 1, 3]


# -- degree statistics --------------------------------------------------------

def test_degree_stats_star():
    s = degree_stats(star(3))
    assert sorted(s.degrees) == [1, 1, 1, 3]
    assert s.M == 12
    assert (s.delta, s.Delta) == (1, 3)


def test_degree_stats_c4():
    s = degree_stats(cycle(4))
    assert s.degrees == (2, 2, 2, 2)
    assert s.M == 16


def test_degree_stats_petersen():
    s = degree_stats(petersen())
    assert set(s.degrees) == {3}
    assert s.M == 90


def test_star_degree_square_equality():
    for m in (1, 2, 5, 12, 40):
        g = star(m)
        assert degree_stats(g).M == m * m + m


# -- edits ---------------------------------------------------------------------

def test_delete_edge():
    p4 = cycle(4).delete_edge(0, 1)
    assert p4.m == 3
    assert sorted(degree_stats(p4).degrees) == [1, 1, 2, 2]
    assert cycle(4).m == 4  # input untouched

    empty = complete(2).delete_edge(0, 1)
    assert (empty.n, empty.m) == (2, 0)
    assert complete(4).delete_edge(0, 1).m == 5


def test_delete_edge_errors():
    with pytest.raises(ValueError, match="not an edge"):
        cycle(4).delete_edge(0, 2)


def test_delete_then_add_restores():
    g = petersen()
    assert g.delete_edge(0, 1).add_edge(0, 1) == g


def test_remove_isolated():
    g = Graph(6, star(3).edges())  # K_{1,3} plus 2 isolated vertices
    core, removed = remove_isolated(g)
    assert removed == 2
    assert core == star(3)

    core, removed = remove_isolated(Graph(5))
    assert (core.n, removed) == (0, 5)

    core, removed = remove_isolated(cycle(4))
    assert removed == 0 and core == cycle(4)


def test_is_star_with_isolated():
    g = Graph(14, star(10).edges())
    assert is_star_with_isolated(g)
    assert not is_star_with_isolated(cycle(4))
    assert is_star_with_isolated(complete(2))
    assert not is_star_with_isolated(Graph(3))
    assert not is_star_with_isolated(complete(3))


# -- constructions ---------------------------------------------------------------

def test_clique_plus_pendants_16():
    g = clique_plus_pendants(16)
    assert (g.n, g.m) == (11, 16)
    degs = degree_stats(g).degrees
    assert degs[0] == 10 and degs.count(1) == 6 and degs.count(4) == 4


def test_clique_plus_pendants_rejects_non_square():
    with pytest.raises(ConstructionError, match="perfect square"):
        clique_plus_pendants(17)


def test_complete_bipartite():
    g = complete_bipartite(2, 3)
    assert (g.n, g.m) == (5, 6)
    assert is_complete_bipartite_core(g)


def test_clique_join_independent():
    g = clique_join_independent(2, 3)
    assert (g.n, g.m) == (5, 7)


def test_book():
    g = book(2)
    assert (g.n, g.m) == (4, 5)
    assert g.has_edge(0, 1)


def test_construct_dispatch():
    assert construct("cycle", 5) == cycle(5)
    assert construct("complete", 4) == complete(4)
    with pytest.raises(ConstructionError, match="unknown construction"):
        construct("moebius", 5)
    with pytest.raises(ConstructionError, match="parameter"):
        construct("cycle", 5, 6)


def test_vertex_cap():
    with pytest.raises(SizeError):
        Graph(5000)


# -- structure helpers ------------------------------------------------------------

def test_bipartition_and_components():
    assert bipartition(complete(3)) is None
    color = bipartition(cycle(6))
    assert color is not None
    comps = connected_components(Graph(6, [(0, 1), (2, 3)]))
    assert comps == [[0, 1], [2, 3], [4], [5]]


def test_complete_bipartite_core_detection():
    assert is_complete_bipartite_core(Graph(7, complete_bipartite(2, 3).edges()))
    assert not is_complete_bipartite_core(cycle(6))
    assert not is_complete_bipartite_core(
        Graph(8, complete_bipartite(2, 2).edges() + [(4, 5), (6, 7)]))


# -- properties --------------------------------------------------------------------

edge_lists = st.integers(2, 12).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
            .filter(lambda e: e[0] != e[1]),
            max_size=30)))


@settings(max_examples=60, derandomize=True)
@given(edge_lists)
def test_graph_invariants(data):
    n, edges = data
    g = Graph(n, edges)
    dense = g.dense()
    assert (dense == dense.T).all()
    assert np.diagonal(dense).sum() == 0
    assert int(g.degrees().sum()) == 2 * g.m
    assert g.m == int(dense.sum()) // 2


@settings(max_examples=60, derandomize=True)
@given(edge_lists)
def test_graph6_roundtrip_property(data):
    n, edges = data
    g = Graph(n, edges)
    assert from_graph6(to_graph6(g)) == g


@settings(max_examples=40, derandomize=True)
@given(edge_lists)
def test_delete_add_roundtrip_property(data):
    n, edges = data
    g = Graph(n, edges)
    for u, v in g.edges()[:3]:
        assert g.delete_edge(u, v).add_edge(u, v) == g


@settings(max_examples=150, derandomize=True)
@given(st.binary(max_size=40))
def test_graph6_decoder_rejects_garbage_cleanly(data):
    # arbitrary bytes either decode or raise the format/size errors;
    # anything else escaping would be a parser bug
    try:
        g = from_graph6(data)
    except (FormatError, SizeError):
        return
    assert from_graph6(to_graph6(g)) == g


@settings(max_examples=150, derandomize=True)
@given(st.text(alphabet="0123456789 #\n-x", max_size=60))
def test_edge_list_parser_rejects_garbage_cleanly(text):
    try:
        res = from_edge_list(text)
    except (FormatError, SizeError):
        return
    assert res.graph.m <= max(res.graph.n, 1) ** 2
