"""Gibbs LDA on planted corpora plus the selection metrics."""

import math

import numpy as np
import pytest

from helpers import planted_corpus
from tweetleaders.topics import (
    GibbsLda,
    SweepEntry,
    select_by_coherence,
    sweep_topic_count,
)


class TestFit:
    def test_planted_two_topics_recovered(self):
        docs, vocabs = planted_corpus(2, seed=3)
        model = GibbsLda(n_topics=2, alpha=0.5, iterations=150, burn_in=50, seed=1).fit(docs)
        for k in range(2):
            top5 = set(model.top_words(k, 5))
            assert any(top5 <= v for v in vocabs)
        # the two topics must pick different planted vocabularies
        assert set(model.top_words(0, 5)) != set(model.top_words(1, 5))

    def test_k_one_degenerate(self):
        docs, _ = planted_corpus(1, docs_per_topic=30, seed=5)
        model = GibbsLda(n_topics=1, alpha=0.5, iterations=20, burn_in=5, seed=2).fit(docs)
        assert set(model.assignments_.tolist()) == {0}
        phi = model.phi()[0]
        counts = model.topic_word_counts_[0]
        v = len(model.vocab_)
        expected = (counts + model.beta) / (counts.sum() + v * model.beta)
        assert np.allclose(phi, expected)

    def test_same_seed_identical(self):
        docs, _ = planted_corpus(2, docs_per_topic=20, seed=7)
        a = GibbsLda(n_topics=3, alpha=0.5, iterations=30, burn_in=5, seed=42).fit(docs)
        b = GibbsLda(n_topics=3, alpha=0.5, iterations=30, burn_in=5, seed=42).fit(docs)
        assert np.array_equal(a.assignments_, b.assignments_)

    def test_count_invariants_every_sweep(self):
        docs, _ = planted_corpus(2, docs_per_topic=15, seed=9)
        checked = []

        def callback(model, sweep):
            model.check_counts()
            checked.append(sweep)

        GibbsLda(n_topics=3, alpha=0.5, iterations=25, burn_in=5, seed=0).fit(
            docs, sweep_callback=callback
        )
        assert checked == list(range(25))

    def test_vocab_pruning_min_count(self):
        docs = [["common", "common", "rare"], ["common", "common"]]
        model = GibbsLda(n_topics=1, alpha=1.0, iterations=5, burn_in=1, seed=0).fit(docs)
        assert model.vocab_ == ["common"]

    def test_all_docs_pruned_away(self):
        with pytest.raises(ValueError):
            GibbsLda(n_topics=2, iterations=5, burn_in=1).fit([["once"], ["solo"]])

    def test_burn_in_validation(self):
        with pytest.raises(ValueError):
            GibbsLda(n_topics=2, iterations=10, burn_in=10).fit([["a", "a"]])

    def test_default_alpha_is_fifty_over_k(self):
        assert GibbsLda(n_topics=10)._effective_alpha() == pytest.approx(5.0)

    def test_loglik_trend_improves(self):
        docs, _ = planted_corpus(3, docs_per_topic=60, seed=11)
        model = GibbsLda(n_topics=3, alpha=0.5, iterations=120, burn_in=20, seed=4).fit(docs)
        trace = model.loglik_trace_
        assert trace[-50:].mean() >= trace[:50].mean()

    def test_distributions_normalize(self):
        docs, _ = planted_corpus(2, docs_per_topic=20, seed=13)
        model = GibbsLda(n_topics=4, alpha=0.5, iterations=20, burn_in=5, seed=3).fit(docs)
        assert np.allclose(model.phi().sum(axis=1), 1.0, atol=1e-9)
        assert np.allclose(model.theta().sum(axis=1), 1.0, atol=1e-9)


class TestTopWords:
    def _model(self):
        docs, _ = planted_corpus(2, docs_per_topic=40, seed=17)
        return GibbsLda(n_topics=2, alpha=0.5, iterations=60, burn_in=10, seed=5).fit(docs)

    def test_n_zero(self):
        assert self._model().top_words(0, 0) == []

    def test_n_beyond_vocab_returns_all(self):
        model = self._model()
        assert sorted(model.top_words(0, 10_000)) == model.vocab_

    def test_default_is_ten(self):
        model = self._model()
        assert len(model.top_words(0)) == 10

    def test_ties_lexicographic(self):
        # a fresh unfit-but-seeded model with equal counts everywhere
        docs = [["aa", "bb"], ["aa", "bb"]]
        model = GibbsLda(n_topics=1, alpha=1.0, iterations=5, burn_in=1, seed=0).fit(docs)
        assert model.top_words(0, 2) == ["aa", "bb"]

    def test_bad_topic_index(self):
        with pytest.raises(ValueError):
            self._model().top_words(99, 5)


class TestPerplexity:
    def test_uniform_single_topic_equals_vocab_size(self):
        # every word occurs exactly twice -> phi is exactly uniform over V=4
        docs = [["a", "b", "c", "d"], ["a", "b", "c", "d"]]
        model = GibbsLda(n_topics=1, alpha=1.0, iterations=5, burn_in=1, seed=0).fit(docs)
        assert model.perplexity() == pytest.approx(4.0, rel=1e-12)

    def test_true_k_beats_k_one(self):
        docs, _ = planted_corpus(2, seed=19)
        ppl2 = GibbsLda(n_topics=2, alpha=0.5, iterations=120, burn_in=20, seed=6).fit(docs).perplexity()
        ppl1 = GibbsLda(n_topics=1, alpha=0.5, iterations=30, burn_in=5, seed=6).fit(docs).perplexity()
        assert ppl2 < ppl1

    def test_always_at_least_one(self):
        docs, _ = planted_corpus(2, docs_per_topic=20, seed=23)
        model = GibbsLda(n_topics=3, alpha=0.5, iterations=20, burn_in=5, seed=7).fit(docs)
        assert model.perplexity() >= 1.0

    def test_held_out_fold_in(self):
        docs, _ = planted_corpus(2, seed=29)
        model = GibbsLda(n_topics=2, alpha=0.5, iterations=100, burn_in=20, seed=8).fit(docs)
        held_out, _ = planted_corpus(2, docs_per_topic=10, seed=31)
        ppl = model.perplexity(held_out)
        assert 1.0 <= ppl < 16.0  # scorable and far below the mixed-vocab level

    def test_no_scorable_tokens(self):
        docs, _ = planted_corpus(2, docs_per_topic=10, seed=37)
        model = GibbsLda(n_topics=2, alpha=0.5, iterations=10, burn_in=2, seed=9).fit(docs)
        with pytest.raises(ValueError, match="scorable"):
            model.perplexity([["zzz", "qqq"]])


class TestCoherence:
    def _fit(self, docs, k=1):
        return GibbsLda(n_topics=k, alpha=1.0, iterations=5, burn_in=1, seed=0).fit(docs)

    def test_perfect_cooccurrence_pair_term(self):
        # both words in all 10 docs: single pair term ln(11/10)
        docs = [["x", "y"] for _ in range(10)]
        model = self._fit(docs)
        score = model.umass_coherence(docs, n=2)[0]
        assert score == pytest.approx(math.log(11 / 10), rel=1e-12)

    def test_never_cooccurring_pair_term(self):
        # w_j (denominator word) appears in 10 docs, w_i in 2, never together
        docs = [["aa", "aa"]] * 10 + [["zz", "zz"]] * 2
        model = self._fit(docs)
        words = model.top_words(0, 2)
        assert words == ["aa", "zz"]
        score = model.umass_coherence(docs, n=2)[0]
        # denominator is D(zz) = 2 here: term = ln((0+1)/2)
        assert score == pytest.approx(math.log(1 / 2), rel=1e-12)
        # never co-occurring with the denominator word in 10 docs: ln(1/10)
        docs2 = [["aa", "aa", "aa"]] * 12 + [["zz"]] * 10
        model2 = self._fit(docs2)
        assert model2.top_words(0, 2) == ["aa", "zz"]
        score2 = model2.umass_coherence(docs2, n=2)[0]
        assert score2 == pytest.approx(math.log(1 / 10), rel=1e-12)

    def test_single_word_no_pairs(self):
        docs = [["x", "y"] for _ in range(5)]
        model = self._fit(docs)
        assert model.umass_coherence(docs, n=1)[0] == 0.0

    def test_zero_df_sentinel(self):
        docs = [["x", "y"] for _ in range(5)]
        model = self._fit(docs)
        assert model.umass_coherence([["other", "words"]], n=2)[0] == -np.inf


class TestSweep:
    def test_planted_three_topic_argmax(self):
        docs, _ = planted_corpus(3, docs_per_topic=70, vocab_size=12, seed=41)
        entries = sweep_topic_count(
            docs, k_range=range(2, 7), alpha=0.5, iterations=120, burn_in=40, seed=11
        )
        assert [e.n_topics for e in entries] == [2, 3, 4, 5, 6]
        assert select_by_coherence(entries).n_topics == 3

    def test_single_k(self):
        docs, _ = planted_corpus(2, docs_per_topic=20, seed=43)
        entries = sweep_topic_count(docs, k_range=[2], alpha=0.5, iterations=20, burn_in=5, seed=1)
        assert len(entries) == 1

    def test_default_range_is_three_to_ten(self):
        docs, _ = planted_corpus(2, docs_per_topic=30, vocab_size=10, seed=47)
        entries = sweep_topic_count(docs, alpha=0.5, iterations=30, burn_in=5, seed=1)
        assert [e.n_topics for e in entries] == list(range(3, 11))

    def test_empty_range_rejected(self):
        with pytest.raises(ValueError):
            sweep_topic_count([["a", "a"]], k_range=[])

    def test_select_marks_coherence_argmax(self):
        entries = [
            SweepEntry(3, 10.0, -5.0),
            SweepEntry(4, 9.0, -2.0),
            SweepEntry(5, 8.0, -3.0),
        ]
        assert select_by_coherence(entries).n_topics == 4
