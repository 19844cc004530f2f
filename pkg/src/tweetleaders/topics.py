"""Latent Dirichlet Allocation fit by collapsed Gibbs sampling.

Token-topic assignments are resampled from the collapsed conditional

    p(z = k | rest)  ~  (n_dk + alpha) * (n_kw + beta) / (n_k + V * beta)

with all counts excluding the token being resampled. The sweep kernel is
jit-compiled; randomness comes from per-sweep uniform draws of a seeded
generator, so fits are bit-reproducible.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from numba import njit
from sklearn.base import BaseEstimator

from ._validation import check_fitted


@njit(cache=True)
def _gibbs_sweep(doc_ids, words, z, ndk, nkw, nk, alpha, beta, uniforms):
    n_topics = nkw.shape[0]
    v_beta = nkw.shape[1] * beta
    for i in range(words.shape[0]):
        d = doc_ids[i]
        w = words[i]
        k = z[i]
        ndk[d, k] -= 1
        nkw[k, w] -= 1
        nk[k] -= 1
        total = 0.0
        for kk in range(n_topics):
            total += (ndk[d, kk] + alpha) * (nkw[kk, w] + beta) / (nk[kk] + v_beta)
        target = uniforms[i] * total
        acc = 0.0
        k = n_topics - 1
        for kk in range(n_topics):
            acc += (ndk[d, kk] + alpha) * (nkw[kk, w] + beta) / (nk[kk] + v_beta)
            if acc >= target:
                k = kk
                break
        z[i] = k
        ndk[d, k] += 1
        nkw[k, w] += 1
        nk[k] += 1


@njit(cache=True)
def _foldin_sweep(doc_ids, words, z, ndk, phi, alpha, uniforms):
    n_topics = phi.shape[0]
    for i in range(words.shape[0]):
        d = doc_ids[i]
        w = words[i]
        k = z[i]
        ndk[d, k] -= 1
        total = 0.0
        for kk in range(n_topics):
            total += (ndk[d, kk] + alpha) * phi[kk, w]
        target = uniforms[i] * total
        acc = 0.0
        k = n_topics - 1
        for kk in range(n_topics):
            acc += (ndk[d, kk] + alpha) * phi[kk, w]
            if acc >= target:
                k = kk
                break
        z[i] = k
        ndk[d, k] += 1


@njit(cache=True)
def _collapsed_loglik(ndk, nkw, nk, doc_lengths, alpha, beta):
    n_docs, n_topics = ndk.shape
    n_words = nkw.shape[1]
    ll = 0.0
    for k in range(n_topics):
        ll += math.lgamma(n_words * beta) - math.lgamma(nk[k] + n_words * beta)
        for w in range(n_words):
            ll += math.lgamma(nkw[k, w] + beta) - math.lgamma(beta)
    for d in range(n_docs):
        ll += math.lgamma(n_topics * alpha) - math.lgamma(doc_lengths[d] + n_topics * alpha)
        for k in range(n_topics):
            ll += math.lgamma(ndk[d, k] + alpha) - math.lgamma(alpha)
    return ll


class GibbsLda(BaseEstimator):
    """Collapsed Gibbs LDA over pre-tokenized documents.

    Parameters
    ----------
    n_topics : int
        Number of topics K (>= 1; the K=1 fit is a degenerate but valid
        unigram model).
    alpha : float or None
        Symmetric document-topic prior; None selects the 50/K convention.
    beta : float
        Symmetric topic-word prior.
    iterations : int
        Total Gibbs sweeps.
    burn_in : int
        Sweeps regarded as chain warm-up (must be < iterations); estimates
        use the final counts, burn_in marks where the log-likelihood trace
        is considered mixed.
    seed : int
        Generator seed; equal seeds give identical assignments.
    min_count : int
        Words with corpus frequency below this are dropped from the vocab.
    """

    def __init__(self, n_topics=5, alpha=None, beta=0.01, iterations=500,
                 burn_in=200, seed=0, min_count=2):
        self.n_topics = n_topics
        self.alpha = alpha
        self.beta = beta
        self.iterations = iterations
        self.burn_in = burn_in
        self.seed = seed
        self.min_count = min_count

    # -- fitting -----------------------------------------------------------

    def _effective_alpha(self) -> float:
        return 50.0 / self.n_topics if self.alpha is None else self.alpha

    def fit(self, docs, sweep_callback=None):
        """Run the sampler on token lists.

        sweep_callback(model, sweep_index) fires after every sweep; tests
        use it to assert the count invariants mid-training.
        """
        if self.n_topics < 1:
            raise ValueError("n_topics must be >= 1")
        if self.burn_in >= self.iterations:
            raise ValueError("burn_in must be smaller than iterations")
        if self._effective_alpha() <= 0 or self.beta <= 0:
            raise ValueError("priors must be positive")

        docs = [list(doc) for doc in docs]
        counts: dict[str, int] = {}
        for doc in docs:
            for word in doc:
                counts[word] = counts.get(word, 0) + 1
        vocab = sorted(w for w, c in counts.items() if c >= self.min_count)
        if not vocab:
            raise ValueError("no document survives vocabulary pruning")
        index = {w: i for i, w in enumerate(vocab)}

        doc_ids: list[int] = []
        word_ids: list[int] = []
        kept_docs = 0
        doc_map: list[int] = []  # original doc -> dense doc id, -1 when empty
        for doc in docs:
            ids = [index[w] for w in doc if w in index]
            if not ids:
                doc_map.append(-1)
                continue
            doc_map.append(kept_docs)
            doc_ids.extend([kept_docs] * len(ids))
            word_ids.extend(ids)
            kept_docs += 1
        if kept_docs == 0:
            raise ValueError("no document survives vocabulary pruning")

        alpha = self._effective_alpha()
        rng = np.random.default_rng(self.seed)
        doc_ids_arr = np.asarray(doc_ids, dtype=np.int64)
        word_ids_arr = np.asarray(word_ids, dtype=np.int64)
        z = rng.integers(0, self.n_topics, size=len(word_ids_arr), dtype=np.int64)

        ndk = np.zeros((kept_docs, self.n_topics), dtype=np.float64)
        nkw = np.zeros((self.n_topics, len(vocab)), dtype=np.float64)
        nk = np.zeros(self.n_topics, dtype=np.float64)
        for d, w, k in zip(doc_ids_arr, word_ids_arr, z):
            ndk[d, k] += 1
            nkw[k, w] += 1
            nk[k] += 1

        self.vocab_ = vocab
        self.vocab_index_ = index
        self.doc_map_ = doc_map
        self.doc_ids_ = doc_ids_arr
        self.word_ids_ = word_ids_arr
        self.assignments_ = z
        self.doc_topic_counts_ = ndk
        self.topic_word_counts_ = nkw
        self.topic_totals_ = nk
        self.doc_lengths_ = np.bincount(doc_ids_arr, minlength=kept_docs).astype(np.float64)

        loglik = np.empty(self.iterations)
        for sweep in range(self.iterations):
            _gibbs_sweep(
                doc_ids_arr, word_ids_arr, z, ndk, nkw, nk,
                alpha, self.beta, rng.random(len(word_ids_arr)),
            )
            loglik[sweep] = _collapsed_loglik(
                ndk, nkw, nk, self.doc_lengths_, alpha, self.beta
            )
            if sweep_callback is not None:
                sweep_callback(self, sweep)
        self.loglik_trace_ = loglik
        return self

    def check_counts(self) -> None:
        """Raise unless the count matrices are mutually consistent."""
        check_fitted(self, "topic_word_counts_")
        if (self.topic_word_counts_ < 0).any() or (self.doc_topic_counts_ < 0).any():
            raise AssertionError("negative counts")
        if not np.array_equal(self.topic_word_counts_.sum(axis=1), self.topic_totals_):
            raise AssertionError("topic_word_counts rows do not match topic_totals")
        if not np.array_equal(self.doc_topic_counts_.sum(axis=1), self.doc_lengths_):
            raise AssertionError("doc_topic_counts rows do not match doc lengths")
        if self.topic_totals_.sum() != len(self.word_ids_):
            raise AssertionError("count mass does not match token count")

    # -- estimates ---------------------------------------------------------

    def phi(self) -> np.ndarray:
        """Topic-word distributions (n_kw + beta) / (n_k + V beta)."""
        check_fitted(self, "topic_word_counts_")
        v = len(self.vocab_)
        return (self.topic_word_counts_ + self.beta) / (
            self.topic_totals_[:, None] + v * self.beta
        )

    def theta(self) -> np.ndarray:
        """Document-topic distributions (n_dk + alpha) / (n_d + K alpha)."""
        check_fitted(self, "doc_topic_counts_")
        alpha = self._effective_alpha()
        return (self.doc_topic_counts_ + alpha) / (
            self.doc_lengths_[:, None] + self.n_topics * alpha
        )

    def top_words(self, topic: int, n: int = 10) -> list[str]:
        """The n most probable words of a topic, probability ties broken
        lexicographically; n beyond the vocabulary returns every word."""
        check_fitted(self, "topic_word_counts_")
        if not 0 <= topic < self.n_topics:
            raise ValueError(f"topic must lie in [0, {self.n_topics})")
        if n <= 0:
            return []
        row = self.phi()[topic]
        order = sorted(zip(-row, self.vocab_))
        return [word for _, word in order[:n]]

    def _fold_in(self, docs) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Doc-topic counts for held-out docs: 50 sweeps with phi frozen."""
        doc_ids: list[int] = []
        word_ids: list[int] = []
        kept = 0
        for doc in docs:
            ids = [self.vocab_index_[w] for w in doc if w in self.vocab_index_]
            if not ids:
                continue
            doc_ids.extend([kept] * len(ids))
            word_ids.extend(ids)
            kept += 1
        if kept == 0:
            raise ValueError("no scorable tokens: held-out docs share no vocabulary")
        doc_ids_arr = np.asarray(doc_ids, dtype=np.int64)
        word_ids_arr = np.asarray(word_ids, dtype=np.int64)
        alpha = self._effective_alpha()
        phi = self.phi()
        rng = np.random.default_rng((self.seed, 0xF01D))
        z = rng.integers(0, self.n_topics, size=len(word_ids_arr), dtype=np.int64)
        ndk = np.zeros((kept, self.n_topics), dtype=np.float64)
        for d, k in zip(doc_ids_arr, z):
            ndk[d, k] += 1
        for _ in range(50):
            _foldin_sweep(
                doc_ids_arr, word_ids_arr, z, ndk, phi,
                alpha, rng.random(len(word_ids_arr)),
            )
        return doc_ids_arr, word_ids_arr, ndk

    def perplexity(self, docs=None) -> float:
        """exp(-mean per-token log-likelihood) under theta @ phi.

        With docs=None the training documents are scored from their trained
        counts; held-out docs are folded in first (phi frozen). Out-of-vocab
        tokens are skipped; nothing scorable raises.
        """
        check_fitted(self, "topic_word_counts_")
        phi = self.phi()
        if docs is None:
            doc_ids, word_ids = self.doc_ids_, self.word_ids_
            theta = self.theta()
        else:
            doc_ids, word_ids, ndk = self._fold_in(docs)
            alpha = self._effective_alpha()
            lengths = np.bincount(doc_ids, minlength=ndk.shape[0]).astype(np.float64)
            theta = (ndk + alpha) / (lengths[:, None] + self.n_topics * alpha)
        token_prob = np.einsum("ik,ki->i", theta[doc_ids], phi[:, word_ids])
        return float(np.exp(-np.log(token_prob).mean()))

    def umass_coherence(self, docs, n: int = 10) -> np.ndarray:
        """Per-topic UMass coherence over the topic's top-n words.

        Terms are ln((D(w_i, w_j) + 1) / D(w_j)) summed over ordered pairs
        i < j of the ranked top words, with document frequencies D taken
        from `docs`. A topic whose ranked words never occur in the docs
        (zero document frequency in a denominator) scores -inf.
        """
        check_fitted(self, "topic_word_counts_")
        doc_sets = [set(doc) for doc in docs]
        scores = np.zeros(self.n_topics)
        for k in range(self.n_topics):
            words = self.top_words(k, n)
            df = {w: sum(1 for s in doc_sets if w in s) for w in words}
            total = 0.0
            for j in range(1, len(words)):
                if df[words[j]] == 0:
                    total = -np.inf
                    break
                for i in range(j):
                    co = sum(1 for s in doc_sets if words[i] in s and words[j] in s)
                    total += math.log((co + 1) / df[words[j]])
            scores[k] = total
        return scores


@dataclass
class SweepEntry:
    n_topics: int
    perplexity: float
    mean_coherence: float


def sweep_topic_count(docs, k_range=None, coherence_top_n=10, **lda_params) -> list[SweepEntry]:
    """Fit one model per candidate K (same seed) and tabulate the two
    selection scores. Ks whose fit fails are skipped; an empty result raises.
    """
    docs = [list(doc) for doc in docs]
    ks = list(k_range) if k_range is not None else list(range(3, 11))
    if not ks:
        raise ValueError("k_range must be non-empty")
    entries: list[SweepEntry] = []
    for k in sorted(ks):
        try:
            model = GibbsLda(n_topics=k, **lda_params).fit(docs)
            entries.append(
                SweepEntry(
                    n_topics=k,
                    perplexity=model.perplexity(),
                    mean_coherence=float(
                        model.umass_coherence(docs, n=coherence_top_n).mean()
                    ),
                )
            )
        except ValueError:
            continue
    if not entries:
        raise ValueError("every fit in the sweep failed")
    return entries


def select_by_coherence(entries: list[SweepEntry]) -> SweepEntry:
    return max(entries, key=lambda e: e.mean_coherence)


def save_topics_csv(model: GibbsLda, path, n: int = 10) -> None:
    """`topic,rank,word,probability` rows for each topic's top words."""
    phi = model.phi()
    with Path(path).open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["topic", "rank", "word", "probability"])
        for k in range(model.n_topics):
            for rank, word in enumerate(model.top_words(k, n), start=1):
                prob = phi[k, model.vocab_index_[word]]
                writer.writerow([k, rank, word, f"{prob:.12g}"])


def save_sweep_csv(entries: list[SweepEntry], path) -> None:
    best = select_by_coherence(entries).n_topics
    with Path(path).open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["K", "perplexity", "mean_coherence", "selected"])
        for entry in entries:
            writer.writerow(
                [
                    entry.n_topics,
                    f"{entry.perplexity:.12g}",
                    f"{entry.mean_coherence:.12g}",
                    int(entry.n_topics == best),
                ]
            )
