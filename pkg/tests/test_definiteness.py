import numpy as np
import pytest

import siglap as sl
from conftest import (
    caterpillar_with_chord,
    dense_laplacian,
    eig_signature,
    random_connected_positive,
    random_tree,
    triangle_chain_with_chords,
)
from siglap.definiteness import Classification


def test_parallel_pair_strict_interior():
    g = sl.build_graph(2, [(0, 1, 1.0), (0, 1, -0.5)])
    verdict = sl.single_edge_verdict(g)
    assert verdict.classification is Classification.STRICT_INTERIOR
    assert verdict.per_edge[0].threshold == pytest.approx(1.0)
    assert verdict.sigma.as_tuple() == (1, 0, 1)
    assert eig_signature(dense_laplacian(2, g.edges)) == (1, 0, 1)


def test_caterpillar_boundary():
    verdict = sl.single_edge_verdict(caterpillar_with_chord(-0.25))
    assert verdict.classification is Classification.BOUNDARY
    assert verdict.sigma.as_tuple() == (7, 0, 2)
    assert verdict.per_edge[0].threshold == pytest.approx(0.25, abs=1e-12)


def test_caterpillar_indefinite():
    verdict = sl.single_edge_verdict(caterpillar_with_chord(-0.3))
    assert verdict.classification is Classification.INDEFINITE
    assert verdict.sigma.n_minus == 1
    assert eig_signature(dense_laplacian(9, caterpillar_with_chord(-0.3).edges))[1] == 1


def test_single_edge_hypothesis_violations():
    with pytest.raises(sl.HypothesisViolatedError):
        sl.single_edge_verdict(sl.build_graph(2, [(0, 1, 1.0)]))  # no negative edge
    with pytest.raises(sl.HypothesisViolatedError):
        sl.single_edge_verdict(sl.build_graph(3, [(0, 1, -1.0), (1, 2, -1.0), (0, 2, 1.0)]))
    # removing the negative edge disconnects the graph
    with pytest.raises(sl.HypothesisViolatedError):
        sl.single_edge_verdict(sl.build_graph(3, [(0, 1, 1.0), (1, 2, -1.0)]))


def shared_node_triangles(chord_weights):
    edges = [(0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0),
             (2, 3, 1.0), (2, 4, 1.0), (3, 4, 1.0)]
    edges.append((0, 1, chord_weights[0]))
    edges.append((3, 4, chord_weights[1]))
    return sl.build_graph(5, edges)


def test_multi_edge_strict_interior():
    g = shared_node_triangles([-1.0, -1.0])  # thresholds 1/(2/3) = 1.5 each
    verdict = sl.multi_edge_verdict(g)
    assert verdict.classification is Classification.STRICT_INTERIOR
    assert verdict.disjointness_hypothesis_holds
    assert [pytest.approx(1.5, abs=1e-9)] * 2 == [e.threshold for e in verdict.per_edge]
    assert eig_signature(dense_laplacian(5, g.edges))[1] == 0


def test_multi_edge_indefinite():
    g = shared_node_triangles([-2.0, -1.0])
    verdict = sl.multi_edge_verdict(g)
    assert verdict.classification is Classification.INDEFINITE
    assert eig_signature(dense_laplacian(5, g.edges))[1] == 1


def test_multi_edge_single_negative_matches_single_verdict():
    g = caterpillar_with_chord(-0.1)
    single = sl.single_edge_verdict(g)
    multi = sl.multi_edge_verdict(g)
    assert multi.classification is single.classification
    assert multi.sigma.as_tuple() == single.sigma.as_tuple()
    assert multi.per_edge[0].threshold == pytest.approx(single.per_edge[0].threshold)


def test_multi_edge_non_disjoint_falls_back_to_spectrum():
    # both chords span the same asymmetric 4-cycle
    g = sl.build_graph(4, [(0, 1, 1.0), (1, 2, 2.0), (2, 3, 3.0), (0, 3, 4.0),
                           (0, 2, -0.1), (1, 3, -0.1)])
    verdict = sl.multi_edge_verdict(g)
    assert not verdict.disjointness_hypothesis_holds
    assert verdict.classification is Classification.STRICT_INTERIOR
    assert verdict.sigma.n_minus == 0
    g2 = sl.build_graph(4, [(0, 1, 1.0), (1, 2, 2.0), (2, 3, 3.0), (0, 3, 4.0),
                            (0, 2, -5.0), (1, 3, -5.0)])
    verdict2 = sl.multi_edge_verdict(g2)
    assert not verdict2.disjointness_hypothesis_holds
    assert verdict2.classification is Classification.INDEFINITE


def test_multi_edge_requires_connected_positive_part():
    g = sl.build_graph(3, [(0, 1, 1.0), (1, 2, -1.0)])
    with pytest.raises(sl.DisconnectedError):
        sl.multi_edge_verdict(g)


def test_multi_edge_requires_a_negative_edge():
    with pytest.raises(sl.HypothesisViolatedError):
        sl.multi_edge_verdict(sl.build_graph(2, [(0, 1, 1.0)]))


def test_corollary6_boundary_equality():
    result = sl.corollary6_check(caterpillar_with_chord(-0.25))
    assert result.satisfied
    assert result.inverse_weight_sum == pytest.approx(4.0)
    assert result.total_resistance == pytest.approx(4.0, abs=1e-9)


def test_corollary6_violated_implies_not_psd():
    g = caterpillar_with_chord(-0.5)
    result = sl.corollary6_check(g)
    assert not result.satisfied
    assert result.inverse_weight_sum == pytest.approx(2.0)
    assert eig_signature(dense_laplacian(9, g.edges))[1] >= 1


def test_corollary6_vacuous_without_negative_edges():
    result = sl.corollary6_check(sl.build_graph(2, [(0, 1, 1.0)]))
    assert result == (True, 0.0, 0.0)


def test_threshold_flips_exactly_at_boundary():
    rng = np.random.default_rng(73)
    for _ in range(40):
        g_plus = random_connected_positive(rng)
        u, v = (int(x) for x in rng.choice(g_plus.node_count, size=2, replace=False))
        r_uv = sl.effective_resistance(g_plus, u, v)
        for factor, expected in ((0.95, Classification.STRICT_INTERIOR),
                                 (1.0, Classification.BOUNDARY),
                                 (1.05, Classification.INDEFINITE)):
            g = sl.build_graph(g_plus.node_count,
                               list(g_plus.edges) + [(u, v, -factor / r_uv)])
            verdict = sl.single_edge_verdict(g)
            assert verdict.classification is expected
            sigma = eig_signature(dense_laplacian(g.node_count, g.edges))
            if expected is Classification.STRICT_INTERIOR:
                assert sigma == (g.node_count - 1, 0, 1)
            elif expected is Classification.BOUNDARY:
                assert sigma == (g.node_count - 2, 0, 2)
            else:
                assert sigma[1] == 1


def test_boundary_tree_plus_chord_gains_a_zero():
    rng = np.random.default_rng(79)
    for _ in range(20):
        tree = random_tree(rng, n_lo=4)
        u, v = (int(x) for x in rng.choice(tree.node_count, size=2, replace=False))
        r_uv = sl.effective_resistance(tree, u, v)
        g = sl.build_graph(tree.node_count, list(tree.edges) + [(u, v, -1.0 / r_uv)])
        assert eig_signature(dense_laplacian(g.node_count, g.edges))[2] == 2
        assert sl.single_edge_verdict(g).classification is Classification.BOUNDARY


def test_cactus_chain_verdicts_match_spectrum():
    rng = np.random.default_rng(83)
    for _ in range(20):
        k = int(rng.integers(2, 5))
        factors = [float(rng.choice([0.8, 1.0, 1.2])) for _ in range(k)]
        g, thresholds = triangle_chain_with_chords(rng, k, factors)
        verdict = sl.multi_edge_verdict(g)
        assert verdict.disjointness_hypothesis_holds
        sigma = eig_signature(dense_laplacian(g.node_count, g.edges))
        if any(f > 1.0 for f in factors):
            assert verdict.classification is Classification.INDEFINITE
            assert sigma[1] >= 1
        elif any(f == 1.0 for f in factors):
            assert verdict.classification is Classification.BOUNDARY
            assert sigma[1] == 0
        else:
            assert verdict.classification is Classification.STRICT_INTERIOR
            assert sigma == (g.node_count - 1, 0, 1)
        for item, threshold in zip(verdict.per_edge, thresholds):
            assert item.threshold == pytest.approx(threshold, abs=1e-9)


def test_corollary6_never_contradicts_psd():
    rng = np.random.default_rng(89)
    for _ in range(60):
        g_plus = random_connected_positive(rng)
        u, v = (int(x) for x in rng.choice(g_plus.node_count, size=2, replace=False))
        w = -float(rng.uniform(0.05, 3.0))
        g = sl.build_graph(g_plus.node_count, list(g_plus.edges) + [(u, v, w)])
        sigma = eig_signature(dense_laplacian(g.node_count, g.edges))
        result = sl.corollary6_check(g)
        assert not (sigma[1] == 0 and not result.satisfied)
