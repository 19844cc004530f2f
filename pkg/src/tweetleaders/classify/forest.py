"""Random forest of Gini-split decision trees.

Every tree trains on its own bootstrap sample and examines sqrt(F) randomly
chosen features per node; the forest's probability for a row is the mean of
the per-tree leaf class distributions. All randomness flows from spawned
child generators of one seed, so fits and predictions are reproducible.

Fitted forests persist as a JSON tree dump (format tag
"tweetleaders-forest/1"): flat per-tree arrays `feature` (-1 marks a leaf),
`threshold`, `left`, `right`, and `dist` (leaf class distribution or null).
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin

from .._validation import as_float_2d, as_labels_1d, check_fitted

FOREST_FORMAT = "tweetleaders-forest/1"


class _Tree:
    """Flat-array decision tree; feature -1 marks a leaf."""

    __slots__ = ("feature", "threshold", "left", "right", "dist")

    def __init__(self):
        self.feature: list[int] = []
        self.threshold: list[float] = []
        self.left: list[int] = []
        self.right: list[int] = []
        self.dist: list[np.ndarray | None] = []

    def add_node(self) -> int:
        self.feature.append(-1)
        self.threshold.append(0.0)
        self.left.append(-1)
        self.right.append(-1)
        self.dist.append(None)
        return len(self.feature) - 1

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        feature = np.asarray(self.feature)
        threshold = np.asarray(self.threshold)
        left = np.asarray(self.left)
        right = np.asarray(self.right)
        node = np.zeros(len(X), dtype=np.int64)
        active = feature[node] >= 0
        while active.any():
            idx = np.flatnonzero(active)
            go_left = X[idx, feature[node[idx]]] <= threshold[node[idx]]
            node[idx] = np.where(go_left, left[node[idx]], right[node[idx]])
            active = feature[node] >= 0
        dists = np.vstack([self.dist[i] for i in node])
        return dists


def _best_split(X, y_codes, idx, feats, n_classes, min_leaf):
    """Exhaustive Gini scan over the candidate features, vectorized across
    all split boundaries at once. Returns None when no boundary is legal."""
    m = len(idx)
    if m < 2:
        return None
    Xs = X[np.ix_(idx, feats)]
    order = np.argsort(Xs, axis=0, kind="stable")
    sorted_x = np.take_along_axis(Xs, order, axis=0)
    onehot = np.zeros((m, n_classes))
    onehot[np.arange(m), y_codes[idx]] = 1.0
    cum = np.cumsum(onehot[order], axis=0)  # (m, s, C)
    left_counts = cum[:-1]
    total = cum[-1]  # (s, C)
    n_left = np.arange(1, m, dtype=float)[:, None]
    n_right = m - n_left
    right_counts = total[None, :, :] - left_counts
    gini_left = 1.0 - ((left_counts / n_left[..., None]) ** 2).sum(axis=2)
    gini_right = 1.0 - ((right_counts / n_right[..., None]) ** 2).sum(axis=2)
    score = (n_left * gini_left + n_right * gini_right) / m
    legal = sorted_x[1:] > sorted_x[:-1]
    if min_leaf > 1:
        legal &= (n_left >= min_leaf) & (n_right >= min_leaf)
    score = np.where(legal, score, np.inf)
    flat = int(np.argmin(score))
    boundary, col = divmod(flat, score.shape[1])
    if not np.isfinite(score[boundary, col]):
        return None
    threshold = (sorted_x[boundary, col] + sorted_x[boundary + 1, col]) / 2.0
    feature = int(feats[col])
    mask = X[idx, feature] <= threshold
    return feature, float(threshold), idx[mask], idx[~mask]


def _grow_tree(X, y_codes, n_classes, rng, max_depth, min_leaf, n_candidates):
    n_features = X.shape[1]
    tree = _Tree()
    root = tree.add_node()
    bootstrap = rng.integers(0, len(X), size=len(X))
    stack = [(root, bootstrap, 0)]
    while stack:
        node, idx, depth = stack.pop()
        counts = np.bincount(y_codes[idx], minlength=n_classes).astype(float)
        dist = counts / counts.sum()
        pure = counts.max() == counts.sum()
        too_deep = max_depth is not None and depth >= max_depth
        split = None
        if not pure and not too_deep and len(idx) >= 2 * min_leaf:
            feats = rng.choice(n_features, size=n_candidates, replace=False)
            split = _best_split(X, y_codes, idx, feats, n_classes, min_leaf)
        if split is None:
            tree.dist[node] = dist
            continue
        feature, threshold, left_idx, right_idx = split
        tree.feature[node] = feature
        tree.threshold[node] = threshold
        left = tree.add_node()
        right = tree.add_node()
        tree.left[node] = left
        tree.right[node] = right
        # right first so the left branch grows next (stable draw order)
        stack.append((right, right_idx, depth + 1))
        stack.append((left, left_idx, depth + 1))
    return tree


class RandomForest(BaseEstimator, ClassifierMixin):
    """Bootstrap-aggregated Gini decision trees.

    Parameters
    ----------
    n_trees : int
        Forest size.
    max_depth : int or None
        Depth cap; None grows until leaves are pure (or unsplittable).
    min_leaf : int
        Minimum samples on each side of a split.
    seed : int
        Master seed; per-tree generators are spawned from it.
    """

    def __init__(self, n_trees=100, max_depth=None, min_leaf=1, seed=0):
        self.n_trees = n_trees
        self.max_depth = max_depth
        self.min_leaf = min_leaf
        self.seed = seed

    def fit(self, X, y):
        X = as_float_2d(X)
        y = as_labels_1d(y, len(X))
        self.classes_ = np.unique(y)
        if len(self.classes_) < 2:
            raise ValueError("training labels contain a single class")
        code_of = {c: i for i, c in enumerate(self.classes_)}
        y_codes = np.array([code_of[v] for v in y], dtype=np.int64)
        n_candidates = max(1, int(np.sqrt(X.shape[1])))
        seeds = np.random.SeedSequence(self.seed).spawn(self.n_trees)
        self.trees_ = [
            _grow_tree(
                X,
                y_codes,
                len(self.classes_),
                np.random.default_rng(seeds[t]),
                self.max_depth,
                self.min_leaf,
                n_candidates,
            )
            for t in range(self.n_trees)
        ]
        return self

    def predict_proba(self, X) -> np.ndarray:
        check_fitted(self, "trees_")
        X = as_float_2d(X)
        total = np.zeros((len(X), len(self.classes_)))
        for tree in self.trees_:
            total += tree.predict_proba(X)
        return total / len(self.trees_)

    def predict(self, X) -> np.ndarray:
        proba = self.predict_proba(X)
        return self.classes_[np.argmax(proba, axis=1)]

    def to_json(self, path) -> None:
        check_fitted(self, "trees_")
        payload = {
            "format": FOREST_FORMAT,
            "params": self.get_params(),
            "classes": self.classes_.tolist(),
            "trees": [
                {
                    "feature": tree.feature,
                    "threshold": tree.threshold,
                    "left": tree.left,
                    "right": tree.right,
                    "dist": [None if d is None else d.tolist() for d in tree.dist],
                }
                for tree in self.trees_
            ],
        }
        Path(path).write_text(json.dumps(payload, sort_keys=True) + "\n")

    @classmethod
    def from_json(cls, path) -> "RandomForest":
        payload = json.loads(Path(path).read_text())
        if payload.get("format") != FOREST_FORMAT:
            raise ValueError(f"unsupported forest dump format: {payload.get('format')!r}")
        forest = cls(**payload["params"])
        forest.classes_ = np.asarray(payload["classes"])
        forest.trees_ = []
        for spec in payload["trees"]:
            tree = _Tree()
            tree.feature = list(spec["feature"])
            tree.threshold = list(spec["threshold"])
            tree.left = list(spec["left"])
            tree.right = list(spec["right"])
            tree.dist = [None if d is None else np.asarray(d) for d in spec["dist"]]
            forest.trees_.append(tree)
        return forest
