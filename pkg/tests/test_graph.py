"""Graph algorithms against hand counts and independent oracles."""

from datetime import datetime

import numpy as np
import pytest

from tweetleaders.corpus import RawTweet
from tweetleaders.graph import (
    RetweetGraph,
    best_partition,
    build_retweet_graph,
    connected_components,
    edge_betweenness,
    girvan_newman,
    load_edges_csv,
    modularity,
    pagerank,
    save_edges_csv,
    select_leaders,
)

from helpers import (
    graph_from_pairs,
    modularity_oracle,
    pagerank_oracle,
    planted_blocks,
    random_digraph,
    same_partition,
    set_partitions,
    two_triangles_bridge,
)
from helpers import normalize_labels as normalize

TS = datetime(2020, 2, 15, 12, 0)


def tweet(i, author, retweeted=None):
    return RawTweet(f"t{i}", author, TS, "coronavirus", retweeted)


class TestBuildGraph:
    def test_parallel_retweets_collapse(self):
        g = build_retweet_graph([tweet(0, "a", "b"), tweet(1, "a", "b")])
        assert g.n_edges == 1
        assert g.edges[(g.index["a"], g.index["b"])] == 2

    def test_self_retweet_dropped_and_counted(self):
        g = build_retweet_graph([tweet(0, "a", "a")])
        assert g.n_edges == 0
        assert g.self_retweets_dropped == 1
        assert "a" in g.index  # author still a node

    def test_hand_counted_fixture(self):
        tweets = [
            tweet(0, "a"),
            tweet(1, "b"),
            tweet(2, "c"),
            tweet(3, "d"),
            tweet(4, "e"),
            tweet(5, "a", "b"),
            tweet(6, "a", "b"),
            tweet(7, "c", "d"),
        ]
        g = build_retweet_graph(tweets)
        assert g.n_edges == 2
        weights = sorted(g.edges.values())
        assert weights == [1, 2]

    def test_isolated_authors_are_nodes(self):
        g = build_retweet_graph([tweet(0, "loner"), tweet(1, "a", "b")])
        assert g.n_nodes == 3

    def test_csv_roundtrip(self, tmp_path):
        g = build_retweet_graph([tweet(0, "a", "b"), tweet(1, "a", "b"), tweet(2, "b", "c")])
        path = tmp_path / "edges.csv"
        save_edges_csv(g, path)
        g2 = load_edges_csv(path)
        assert {(g2.handles[u], g2.handles[v]): w for (u, v), w in g2.edges.items()} == {
            ("a", "b"): 2,
            ("b", "c"): 1,
        }


class TestPageRank:
    def test_three_cycle_uniform(self):
        g = graph_from_pairs([("a", "b"), ("b", "c"), ("c", "a")])
        pr = pagerank(g)
        assert np.allclose(pr.scores, 1 / 3, atol=1e-9)
        assert pr.converged

    def test_three_node_hand_solved(self):
        # a->c, b->c, c->a with damping 0.85 solves to (0.4635, 0.0500, 0.4865)
        g = graph_from_pairs([("a", "c"), ("b", "c"), ("c", "a")])
        pr = pagerank(g, damping=0.85)
        by_handle = pr.as_dict()
        assert by_handle["a"] == pytest.approx(0.4635, abs=5e-5)
        assert by_handle["b"] == pytest.approx(0.0500, abs=5e-5)
        assert by_handle["c"] == pytest.approx(0.4865, abs=5e-5)

    def test_scores_sum_to_one(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            g = random_digraph(rng, 20)
            pr = pagerank(g)
            assert abs(pr.scores.sum() - 1.0) < 1e-9
            assert (pr.scores > 0).all()

    def test_matches_dense_oracle(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            g = random_digraph(rng, 30)
            pr = pagerank(g, tol=1e-14, max_iter=500)
            assert np.abs(pr.scores - pagerank_oracle(g)).max() < 1e-8

    def test_dangling_nodes_handled(self):
        g = graph_from_pairs([("a", "b")])  # b dangles
        pr = pagerank(g)
        assert abs(pr.scores.sum() - 1.0) < 1e-9
        assert pr.as_dict()["b"] > pr.as_dict()["a"]

    def test_empty_graph_raises(self):
        with pytest.raises(ValueError, match="empty graph"):
            pagerank(RetweetGraph([], {}))

    def test_relabeling_invariance(self):
        pairs = [("a", "c"), ("b", "c"), ("c", "a"), ("c", "d")]
        g1 = graph_from_pairs(pairs)
        renamed = [(u.upper(), v.upper()) for u, v in reversed(pairs)]
        g2 = graph_from_pairs(renamed)
        d1 = pagerank(g1, tol=1e-13).as_dict()
        d2 = pagerank(g2, tol=1e-13).as_dict()
        for h in d1:
            assert d1[h] == pytest.approx(d2[h.upper()], abs=1e-9)


class TestSelectLeaders:
    def test_from_hand_solved_example(self):
        g = graph_from_pairs([("a", "c"), ("b", "c"), ("c", "a")])
        pr = pagerank(g)
        assert select_leaders(pr, 2) == ["c", "a"]

    def test_tie_breaks_lexicographically(self):
        g = graph_from_pairs([("a", "b"), ("b", "c"), ("c", "a")])
        pr = pagerank(g)
        assert select_leaders(pr, 1) == ["a"]

    def test_clamps_to_node_count(self):
        g = graph_from_pairs([("a", "b"), ("b", "c"), ("c", "a")])
        pr = pagerank(g)
        assert len(select_leaders(pr, 10)) == 3

    def test_prefix_property(self):
        rng = np.random.default_rng(3)
        g = random_digraph(rng, 15)
        pr = pagerank(g)
        for n in range(1, g.n_nodes):
            assert select_leaders(pr, n) == select_leaders(pr, n + 1)[:n]


class TestEdgeBetweenness:
    def test_single_edge(self):
        g = graph_from_pairs([("a", "b")])
        assert edge_betweenness(g) == {("a", "b"): pytest.approx(1.0)}

    def test_path_of_three(self):
        g = graph_from_pairs([("a", "b"), ("b", "c")])
        scores = edge_betweenness(g)
        assert scores[("a", "b")] == pytest.approx(2.0)
        assert scores[("b", "c")] == pytest.approx(2.0)

    def test_two_triangles_bridge_scores_nine(self):
        scores = edge_betweenness(two_triangles_bridge())
        assert scores[("c", "d")] == pytest.approx(9.0)
        assert scores[("c", "d")] == max(scores.values())

    def test_shared_shortest_paths_split_credit(self):
        # square a-b-c-d-a: the two paths between opposite corners split
        g = graph_from_pairs([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
        scores = edge_betweenness(g)
        assert all(s == pytest.approx(2.0) for s in scores.values())


class TestModularity:
    def test_single_community_is_zero(self):
        g = two_triangles_bridge()
        assert modularity(g, [0] * g.n_nodes) == pytest.approx(0.0, abs=1e-15)

    def test_two_triangles_split(self):
        g = two_triangles_bridge()
        labels = [0, 0, 0, 1, 1, 1]
        assert modularity(g, labels) == pytest.approx(5 / 14, abs=1e-12)

    def test_partial_partition_rejected(self):
        g = two_triangles_bridge()
        with pytest.raises(ValueError):
            modularity(g, [0, 0, 0])

    def test_matches_naive_oracle_on_random_graphs(self):
        rng = np.random.default_rng(23)
        for _ in range(20):
            g = random_digraph(rng, 12)
            labels = rng.integers(0, 3, g.n_nodes).tolist()
            labels = normalize(labels)
            assert modularity(g, labels) == pytest.approx(
                modularity_oracle(g, labels), abs=1e-12
            )

    def test_brute_force_maximum_matches_oracle(self):
        rng = np.random.default_rng(4)
        for _ in range(5):
            g = random_digraph(rng, 6)
            nodes = list(range(g.n_nodes))
            best_mine, best_oracle = -1.0, -1.0
            for partition in set_partitions(nodes):
                labels = [0] * g.n_nodes
                for label, block in enumerate(partition):
                    for node in block:
                        labels[node] = label
                best_mine = max(best_mine, modularity(g, labels))
                best_oracle = max(best_oracle, modularity_oracle(g, labels))
            assert best_mine == pytest.approx(best_oracle, abs=1e-12)


class TestGirvanNewman:
    def test_already_disconnected_records_components_first(self):
        g = graph_from_pairs([("a", "b"), ("c", "d")])
        parts = girvan_newman(g, max_communities=2)
        assert parts[0].n_communities == 2
        assert parts[0].as_dict() == {"a": 0, "b": 0, "c": 1, "d": 1}

    def test_two_triangles_first_split(self):
        parts = girvan_newman(two_triangles_bridge(), max_communities=2)
        first = parts[0]
        assert first.n_communities == 2
        assert first.as_dict() == {"a": 0, "b": 0, "c": 0, "d": 1, "e": 1, "f": 1}
        assert first.modularity == pytest.approx(5 / 14, abs=1e-12)

    def test_community_counts_strictly_increase(self):
        g = two_triangles_bridge()
        parts = girvan_newman(g, max_communities=6)
        counts = [p.n_communities for p in parts]
        assert counts == sorted(set(counts))

    def test_tiny_graph_rejected(self):
        with pytest.raises(ValueError):
            girvan_newman(RetweetGraph(["a"], {}), 2)

    def test_planted_four_blocks_recovered(self):
        g, truth = planted_blocks(n_blocks=4, block_size=10, seed=7)
        parts = girvan_newman(g, max_communities=8)
        best = best_partition(parts)
        assert best.n_communities == 4
        assert same_partition(best.labels, truth)


def test_connected_components_labels_by_first_appearance():
    adj = [set() for _ in range(4)]
    adj[1].add(2)
    adj[2].add(1)
    assert connected_components(adj) == [0, 1, 1, 2]
