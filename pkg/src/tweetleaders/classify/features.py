"""Feature assembly: tfidf block | 8 emotion columns | concern indicators."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .._validation import as_float_2d, check_consistent_rows, check_fitted


class ColumnStandardizer(BaseEstimator, TransformerMixin):
    """Shift/scale columns to zero mean and unit variance (population std).

    Constant columns get scale 1 so they sit at exactly 0 after centering.
    Fit on training rows only; reuse the fitted instance on held-out rows.
    """

    def fit(self, X, y=None):
        X = as_float_2d(X)
        self.mean_ = X.mean(axis=0)
        std = X.std(axis=0)  # population (ddof=0)
        std[std == 0.0] = 1.0
        self.scale_ = std
        return self

    def transform(self, X) -> np.ndarray:
        check_fitted(self, "mean_")
        X = as_float_2d(X)
        return (X - self.mean_) / self.scale_


@dataclass
class FeatureMatrix:
    """Row-aligned design matrix with named column blocks."""

    X: np.ndarray
    blocks: dict[str, slice]
    labels: np.ndarray | None = None
    scaler: ColumnStandardizer | None = None

    @property
    def n_rows(self) -> int:
        return self.X.shape[0]

    def block(self, name: str) -> np.ndarray:
        return self.X[:, self.blocks[name]]

    def select(self, names) -> np.ndarray:
        """Column-concatenate the named blocks (ablation feature sets)."""
        return np.hstack([self.block(name) for name in names])


def concern_indicator_block(labels_per_tweet, concern_names) -> np.ndarray:
    """0/1 matrix: tweet x merged concern."""
    from ..concerns import merged_concern_name

    out = np.zeros((len(labels_per_tweet), len(concern_names)))
    index = {name: j for j, name in enumerate(concern_names)}
    for i, labels in enumerate(labels_per_tweet):
        for name in labels:
            out[i, index[merged_concern_name(name)]] = 1.0
    return out


def emotion_block(profiles) -> np.ndarray:
    """Stack per-tweet emotion profiles (normalized to shares)."""
    return np.vstack([p.normalize().counts for p in profiles])


def assemble_features(
    tfidf_block,
    emotion_block,
    concern_block,
    labels=None,
    standardize=True,
    scaler: ColumnStandardizer | None = None,
) -> FeatureMatrix:
    """Concatenate the three row-aligned blocks into one matrix.

    With standardize on, the emotion and concern columns are centered and
    scaled. Passing no scaler fits one on the given rows (the training
    case); passing a fitted scaler applies training parameters to new rows,
    which is what keeps cross-validation leak-free.
    """
    tfidf_block = as_float_2d(tfidf_block, "tfidf_block")
    emotion_block = as_float_2d(emotion_block, "emotion_block")
    concern_block = as_float_2d(concern_block, "concern_block")
    check_consistent_rows(tfidf_block, emotion_block, concern_block, labels)

    extra = np.hstack([emotion_block, concern_block])
    if standardize:
        if scaler is None:
            scaler = ColumnStandardizer().fit(extra)
        extra = scaler.transform(extra)
    else:
        scaler = None
    X = np.hstack([tfidf_block, extra])
    n_tfidf = tfidf_block.shape[1]
    n_emotion = emotion_block.shape[1]
    blocks = {
        "tfidf": slice(0, n_tfidf),
        "emotion": slice(n_tfidf, n_tfidf + n_emotion),
        "concern": slice(n_tfidf + n_emotion, X.shape[1]),
    }
    labels_arr = None if labels is None else np.asarray(labels)
    return FeatureMatrix(X=X, blocks=blocks, labels=labels_arr, scaler=scaler)
