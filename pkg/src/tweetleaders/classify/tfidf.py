"""TF-IDF vectorizer over pre-tokenized documents."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .._validation import check_fitted


class TfidfVectorizer(BaseEstimator, TransformerMixin):
    """Raw term counts weighted by smoothed idf, rows L2-normalized.

    idf(t) = ln((1 + N) / (1 + df_t)) + 1, so a term present in every
    document keeps weight 1 instead of vanishing. Out-of-vocabulary tokens
    are ignored at transform time; a document with no known token maps to a
    zero row.
    """

    def __init__(self, min_df=2, max_features=20000):
        self.min_df = min_df
        self.max_features = max_features

    def fit(self, docs, y=None):
        docs = [list(d) for d in docs]
        if not docs:
            raise ValueError("empty corpus")
        df: dict[str, int] = {}
        tf: dict[str, int] = {}
        for doc in docs:
            for word in doc:
                tf[word] = tf.get(word, 0) + 1
            for word in set(doc):
                df[word] = df.get(word, 0) + 1
        kept = [w for w, d in df.items() if d >= self.min_df]
        if self.max_features is not None and len(kept) > self.max_features:
            # keep the corpus-frequent terms, ties resolved alphabetically
            kept.sort(key=lambda w: (-tf[w], w))
            kept = kept[: self.max_features]
        kept.sort()
        if not kept:
            raise ValueError("vocabulary is empty after pruning")
        n = len(docs)
        self.vocabulary_ = {w: i for i, w in enumerate(kept)}
        self.idf_ = np.array(
            [np.log((1 + n) / (1 + df[w])) + 1.0 for w in kept]
        )
        return self

    def transform(self, docs) -> np.ndarray:
        check_fitted(self, "vocabulary_")
        docs = [list(d) for d in docs]
        out = np.zeros((len(docs), len(self.vocabulary_)))
        for i, doc in enumerate(docs):
            for word in doc:
                j = self.vocabulary_.get(word)
                if j is not None:
                    out[i, j] += 1.0
        out *= self.idf_
        norms = np.linalg.norm(out, axis=1, keepdims=True)
        norms[norms == 0.0] = 1.0  # all-OOV rows stay zero
        return out / norms

    def fit_transform(self, docs, y=None):
        return self.fit(docs).transform(docs)
