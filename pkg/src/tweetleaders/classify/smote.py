"""Synthetic minority oversampling (SMOTE) for imbalanced classes."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator

from .._validation import as_float_2d, as_labels_1d


def _pairwise_sq_dists(X: np.ndarray) -> np.ndarray:
    sq = (X ** 2).sum(axis=1)
    d = sq[:, None] + sq[None, :] - 2.0 * (X @ X.T)
    np.fill_diagonal(d, np.inf)  # a point is not its own neighbor
    return np.maximum(d, 0.0)


class SmoteOversampler(BaseEstimator):
    """Balance every class up to the majority count by interpolation.

    Each synthetic row picks a minority sample uniformly at random, one of
    its k nearest same-class neighbors (Euclidean), and a uniform step
    u in [0, 1] along the connecting segment. Classes smaller than two
    samples cannot interpolate and raise.
    """

    def __init__(self, k_neighbors=5, seed=0):
        self.k_neighbors = k_neighbors
        self.seed = seed

    def fit_resample(self, X, y) -> tuple[np.ndarray, np.ndarray]:
        """Original rows come back unchanged (and first), synthetics after."""
        if self.k_neighbors < 1:
            raise ValueError("k_neighbors must be >= 1")
        X = as_float_2d(X)
        y = as_labels_1d(y, len(X))
        classes, counts = np.unique(y, return_counts=True)
        majority = counts.max()
        rng = np.random.default_rng(self.seed)

        new_rows = [X]
        new_labels = [y]
        for cls, count in zip(classes, counts):
            need = majority - count
            if need == 0:
                continue
            if count < 2:
                raise ValueError(
                    f"insufficient minority samples: class {cls!r} has {count}"
                )
            Xc = X[y == cls]
            k = min(self.k_neighbors, count - 1)
            neighbor_idx = np.argsort(_pairwise_sq_dists(Xc), axis=1, kind="stable")[:, :k]
            base = rng.integers(0, count, size=need)
            pick = rng.integers(0, k, size=need)
            step = rng.random(need)
            anchors = Xc[base]
            neighbors = Xc[neighbor_idx[base, pick]]
            synthetic = anchors + step[:, None] * (neighbors - anchors)
            new_rows.append(synthetic)
            new_labels.append(np.full(need, cls, dtype=y.dtype))
        return np.vstack(new_rows), np.concatenate(new_labels)
