import pytest

from quadspec import complete, cycle, to_graph6
from quadspec.enumeration import (KNOWN_CLASS_COUNTS, canonical_masks,
                                  class_count, enumerate_graphs,
                                  mask_to_graph)
from quadspec.errors import SizeError


def test_class_counts_match_known_sequence():
    for n in range(8):
        assert class_count(n) == KNOWN_CLASS_COUNTS[n]


def test_masks_are_canonical_minima():
    # spot-check: applying a few permutations never yields a smaller mask
    import itertools
    n = 5
    masks = canonical_masks(n)
    from quadspec._bits import triangle_pairs
    u_idx, v_idx = triangle_pairs(n)
    for mask in masks[:40].tolist():
        for perm in itertools.islice(itertools.permutations(range(n)), 30):
            permuted = 0
            for k in range(len(u_idx)):
                if (mask >> k) & 1:
                    a, b = perm[u_idx[k]], perm[v_idx[k]]
                    lo, hi = min(a, b), max(a, b)
                    permuted |= 1 << (hi * (hi - 1) // 2 + lo)
            assert permuted >= mask


def test_enumeration_contains_named_graphs():
    from quadspec import Graph
    from quadspec.enumeration import canonical_mask

    rep_masks = set(canonical_masks(4).tolist())
    for g in (cycle(4), complete(4), Graph(4, complete(3).edges())):
        assert canonical_mask(g) in rep_masks


def test_edge_count_filter():
    graphs = list(enumerate_graphs(4, m=3))
    # 3-edge classes on 4 vertices: P4, K_{1,3}, triangle+isolated
    assert len(graphs) == 3
    assert all(g.m == 3 for g in graphs)


def test_edge_count_distribution_n5():
    # total over all m must be the class count
    total = sum(len(list(enumerate_graphs(5, m=m))) for m in range(11))
    assert total == class_count(5)


def test_enumerator_bound():
    with pytest.raises(SizeError):
        canonical_masks(8)


def test_mask_to_graph_roundtrip():
    masks = canonical_masks(5)
    seen = set()
    for mask in masks.tolist():
        g = mask_to_graph(5, mask)
        assert g.n == 5
        seen.add(to_graph6(g))
    assert len(seen) == len(masks)  # distinct representatives
