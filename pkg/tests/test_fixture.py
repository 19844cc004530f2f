"""Synthetic corpus generator: determinism, planted structure, sidecar truth."""

import json

import numpy as np
import pytest

from tweetleaders.corpus import PreprocessConfig, RawTweet, parse_timestamp, preprocess_corpus
from tweetleaders.graph import build_retweet_graph, pagerank, select_leaders
from tweetleaders.pipeline import FixtureSpec, cluster_tweet_counts, generate_fixture, write_fixture


def as_raw(records):
    return [
        RawTweet(
            r["id"], r["author"], parse_timestamp(r["created_at"]), r["text"],
            r.get("retweeted_author"),
        )
        for r in records
    ]


class TestCounts:
    def test_documented_rounding_rule(self):
        assert cluster_tweet_counts(4000, [0.36, 0.33, 0.18, 0.13]) == [1440, 1320, 720, 520]

    def test_remainder_goes_to_largest_fraction(self):
        # 10 * [0.45, 0.35, 0.20] = [4.5, 3.5, 2.0]; floors sum to 9 and the
        # single leftover goes to the largest fraction, the earlier cluster
        # winning the 0.5 tie
        assert cluster_tweet_counts(10, [0.45, 0.35, 0.20]) == [5, 3, 2]

    def test_total_preserved(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            raw = rng.dirichlet(np.ones(4))
            counts = cluster_tweet_counts(997, raw.tolist())
            assert sum(counts) == 997


class TestGenerate:
    def test_same_seed_identical(self):
        a, ta = generate_fixture(FixtureSpec(n_tweets=300, seed=5))
        b, tb = generate_fixture(FixtureSpec(n_tweets=300, seed=5))
        assert a == b and ta == tb

    def test_different_seed_differs(self):
        a, _ = generate_fixture(FixtureSpec(n_tweets=300, seed=5))
        b, _ = generate_fixture(FixtureSpec(n_tweets=300, seed=6))
        assert a != b

    def test_cluster_counts_match_spec(self):
        tweets, truth = generate_fixture(FixtureSpec(n_tweets=4000, seed=7))
        assert truth["cluster_tweet_counts"] == {
            "news": 1440,
            "health": 1320,
            "research": 720,
            "politics": 520,
        }
        from collections import Counter

        seen = Counter(truth["tweet_cluster"][t["id"]] for t in tweets)
        assert dict(seen) == truth["cluster_tweet_counts"]

    def test_timestamps_span_three_months(self):
        tweets, _ = generate_fixture(FixtureSpec(n_tweets=500, seed=3))
        months = {parse_timestamp(t["created_at"]).month for t in tweets}
        assert months == {2, 3, 4}

    def test_no_self_retweets(self):
        tweets, _ = generate_fixture(FixtureSpec(n_tweets=1000, seed=9))
        for t in tweets:
            assert t.get("retweeted_author") != t["author"]

    def test_every_tweet_survives_preprocessing(self):
        tweets, _ = generate_fixture(FixtureSpec(n_tweets=400, seed=11))
        clean = preprocess_corpus(as_raw(tweets), PreprocessConfig())
        assert len(clean) == len(tweets)

    def test_planted_hubs_rank_top(self):
        tweets, truth = generate_fixture(FixtureSpec(n_tweets=1500, seed=7))
        graph = build_retweet_graph(as_raw(tweets))
        pr = pagerank(graph)
        hubs = {h for members in truth["hubs"].values() for h in members}
        top = set(select_leaders(pr, len(hubs)))
        assert hubs == top

    def test_degenerate_spec_rejected(self):
        with pytest.raises(ValueError):
            FixtureSpec(clusters=[])
        spec = FixtureSpec()
        spec.clusters[0].proportion += 0.1
        with pytest.raises(ValueError, match="sum to 1"):
            FixtureSpec(clusters=spec.clusters)

    def test_write_files(self, tmp_path):
        write_fixture(
            FixtureSpec(n_tweets=50, seed=1),
            tmp_path / "corpus.jsonl",
            tmp_path / "truth.json",
        )
        lines = (tmp_path / "corpus.jsonl").read_text().splitlines()
        assert len(lines) == 50
        truth = json.loads((tmp_path / "truth.json").read_text())
        assert set(truth["author_cluster"].values()) <= {"news", "health", "research", "politics"}
