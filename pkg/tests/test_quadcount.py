import numpy as np
import pytest

from quadspec import (Graph, clique_plus_pendants, complete,
                      complete_bipartite, count_c4_codegree,
                      count_c4_enumeration, count_c4_spectral, count_c4_walks,
                      count_report, cycle, star)
from quadspec.enumeration import enumerate_graphs
from quadspec.errors import SizeError
from quadspec.quadcount import closed_walks_4

from util import c4_oracle, random_gnp, random_tree


# -- frozen examples ----------------------------------------------------------

def test_c4_all_methods_one():
    g = cycle(4)
    assert count_c4_codegree(g) == 1
    assert count_c4_walks(g) == 1
    assert count_c4_enumeration(g) == 1
    assert abs(count_c4_spectral(g) - 1.0) < 1e-9
    assert closed_walks_4(g) == 32


def test_k23_three():
    assert count_c4_codegree(complete_bipartite(2, 3)) == 3


def test_k33_nine():
    assert count_c4_codegree(complete_bipartite(3, 3)) == 9


def test_clique_plus_pendants_16_fifteen():
    assert count_c4_codegree(clique_plus_pendants(16)) == 15


def test_k4_three_and_walk_arithmetic():
    g = complete(4)
    assert closed_walks_4(g) == 84
    assert count_c4_walks(g) == 3       # (84 - 12 - 48) / 8
    assert count_c4_enumeration(g) == 3


def test_star3_zero_and_walk_arithmetic():
    g = star(3)
    assert closed_walks_4(g) == 18
    assert count_c4_walks(g) == 0       # (18 - 6 - 12) / 8
    assert abs(count_c4_spectral(g) - 0.0) < 1e-9


def test_c5_zero():
    assert count_c4_enumeration(cycle(5)) == 0
    assert count_c4_codegree(cycle(5)) == 0


def test_k5_spectral_fifteen():
    assert abs(count_c4_spectral(complete(5)) - 15.0) < 1e-9
    assert count_c4_codegree(complete(5)) == 15


# -- cross-method agreement ------------------------------------------------------

def test_methods_agree_on_all_small_classes():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            expected = c4_oracle(g)
            assert count_c4_codegree(g) == expected
            assert count_c4_walks(g) == expected
            assert count_c4_enumeration(g) == expected
            assert abs(count_c4_spectral(g) - expected) <= 1e-6


def test_methods_agree_on_random_graphs():
    rng = np.random.default_rng(101)
    for _ in range(300):
        n = int(rng.integers(4, 17))
        g = random_gnp(rng, n, float(rng.uniform(0.05, 0.95)))
        report = count_report(g)
        assert report.agreement
        assert report.count_codegree == c4_oracle(g)


def test_report_identity_fields():
    g = random_gnp(np.random.default_rng(5), 12, 0.5)
    report = count_report(g)
    paths = sum(d * (d - 1) // 2 for d in g.degrees().tolist())
    assert report.closed_walks_4 == \
        2 * g.m + 4 * paths + 8 * report.count_codegree


def test_large_graph_skips_enumeration():
    g = random_gnp(np.random.default_rng(60), 60, 0.3)
    report = count_report(g)
    assert report.count_enumeration is None
    assert report.count_codegree == report.count_walks
    assert abs(report.count_spectral - report.count_codegree) <= \
        1e-6 * max(1, report.count_codegree)
    assert report.agreement


def test_enumeration_size_error():
    with pytest.raises(SizeError):
        count_c4_enumeration(Graph(21, [(0, 1)]))


# -- structural zero/monotonicity properties ---------------------------------------

def test_trees_and_odd_cycles_have_no_c4():
    rng = np.random.default_rng(11)
    for _ in range(20):
        assert count_c4_codegree(random_tree(rng, int(rng.integers(2, 30)))) == 0
    for n in (3, 5, 7, 9, 11):
        assert count_c4_codegree(cycle(n)) == 0
    assert count_c4_codegree(cycle(6)) == 0  # C4-free bipartite


def test_deletion_monotonicity():
    rng = np.random.default_rng(13)
    for _ in range(30):
        g = random_gnp(rng, int(rng.integers(5, 15)), 0.5)
        if g.m == 0:
            continue
        before = count_c4_codegree(g)
        u, v = g.edges()[int(rng.integers(g.m))]
        assert count_c4_codegree(g.delete_edge(u, v)) <= before
