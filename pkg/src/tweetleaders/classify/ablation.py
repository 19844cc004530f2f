"""Repeated stratified cross-validation over the four feature sets.

Everything fitted -- TF-IDF vocabulary, standardization parameters, SMOTE
synthesis, the forest itself -- derives from the training folds only;
validation rows are transformed with training parameters and never
oversampled.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .._validation import as_labels_1d, check_consistent_rows
from .features import assemble_features
from .forest import RandomForest
from .metrics import macro_auc_ovr
from .smote import SmoteOversampler
from .tfidf import TfidfVectorizer

FEATURE_SETS: dict[str, tuple[str, ...]] = {
    "text": ("tfidf",),
    "text+concerns": ("tfidf", "concern"),
    "text+emotions": ("tfidf", "emotion"),
    "text+emotions+concerns": ("tfidf", "emotion", "concern"),
}


def format_auc_cell(mean: float, std: float) -> str:
    """Compact "96.0(2)" notation: percent mean at one decimal, std in tenths."""
    return f"{100 * mean:.1f}({round(1000 * std):d})"


@dataclass
class CvReport:
    """fold x repeat AUC values per feature set."""

    aucs: dict[str, np.ndarray]
    folds: int
    repeats: int

    def mean(self, name: str) -> float:
        return float(self.aucs[name].mean())

    def std(self, name: str) -> float:
        return float(self.aucs[name].std())

    def formatted(self, name: str) -> str:
        return format_auc_cell(self.mean(name), self.std(name))

    def rows(self) -> list[tuple[str, float, float, str]]:
        return [
            (name, self.mean(name), self.std(name), self.formatted(name))
            for name in self.aucs
        ]

    def to_csv(self, path) -> None:
        with Path(path).open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["feature_set", "mean_auc", "std_auc", "formatted"])
            for name, mean, std, cell in self.rows():
                writer.writerow([name, f"{mean:.12g}", f"{std:.12g}", cell])


def stratified_fold_indices(y, n_folds: int, rng) -> list[np.ndarray]:
    """Validation index sets: per-class shuffle, then round-robin dealing,
    so every fold sees close to the per-class proportions of the whole."""
    y = as_labels_1d(y)
    folds: list[list[int]] = [[] for _ in range(n_folds)]
    for cls in np.unique(y):
        members = np.flatnonzero(y == cls)
        if len(members) < n_folds:
            raise ValueError(
                f"class {cls!r} has {len(members)} rows; need >= {n_folds} for {n_folds}-fold CV"
            )
        members = members[rng.permutation(len(members))]
        for i, row in enumerate(members):
            folds[i % n_folds].append(int(row))
    return [np.array(sorted(f)) for f in folds]


def _child_seed(*parts) -> int:
    return int(np.random.SeedSequence(list(parts)).generate_state(1)[0])


def cross_validate_ablation(
    docs,
    emotion_block,
    concern_block,
    labels,
    folds: int = 5,
    repeats: int = 3,
    seed: int = 0,
    min_df: int = 2,
    max_features: int = 20000,
    smote_k: int = 5,
    n_trees: int = 100,
    max_depth: int | None = None,
    min_leaf: int = 1,
) -> CvReport:
    """Run folds x repeats evaluations of every feature set.

    docs are the stemmed token lists (TF-IDF is re-fit inside each training
    fold); emotion_block and concern_block are row-aligned numeric blocks.
    Returns one AUC per (repeat, fold) per feature set.
    """
    docs = [list(d) for d in docs]
    labels = as_labels_1d(labels, len(docs))
    check_consistent_rows(docs, emotion_block, concern_block, labels)
    emotion_arr = np.asarray(emotion_block, dtype=float)
    concern_arr = np.asarray(concern_block, dtype=float)
    classes = np.unique(labels)

    scores: dict[str, list[float]] = {name: [] for name in FEATURE_SETS}
    for repeat in range(repeats):
        rng = np.random.default_rng((seed, repeat))
        for fold, val_idx in enumerate(stratified_fold_indices(labels, folds, rng)):
            train_mask = np.ones(len(docs), dtype=bool)
            train_mask[val_idx] = False
            train_idx = np.flatnonzero(train_mask)

            tfidf = TfidfVectorizer(min_df=min_df, max_features=max_features)
            tfidf.fit([docs[i] for i in train_idx])
            text_train = tfidf.transform([docs[i] for i in train_idx])
            text_val = tfidf.transform([docs[i] for i in val_idx])

            train_fm = assemble_features(
                text_train, emotion_arr[train_idx], concern_arr[train_idx]
            )
            val_fm = assemble_features(
                text_val,
                emotion_arr[val_idx],
                concern_arr[val_idx],
                scaler=train_fm.scaler,
            )
            y_train = labels[train_idx]
            y_val = labels[val_idx]

            for set_index, (name, block_names) in enumerate(FEATURE_SETS.items()):
                x_train = train_fm.select(block_names)
                x_val = val_fm.select(block_names)
                smote = SmoteOversampler(
                    k_neighbors=smote_k,
                    seed=_child_seed(seed, repeat, fold, set_index, 1),
                )
                x_bal, y_bal = smote.fit_resample(x_train, y_train)
                forest = RandomForest(
                    n_trees=n_trees,
                    max_depth=max_depth,
                    min_leaf=min_leaf,
                    seed=_child_seed(seed, repeat, fold, set_index, 2),
                )
                forest.fit(x_bal, y_bal)
                proba = forest.predict_proba(x_val)
                # align probability columns to the full class list
                full = np.zeros((len(y_val), len(classes)))
                for j, cls in enumerate(classes):
                    hits = np.flatnonzero(forest.classes_ == cls)
                    if len(hits):
                        full[:, j] = proba[:, hits[0]]
                scores[name].append(macro_auc_ovr(y_val, full, classes))

    return CvReport(
        aucs={name: np.array(vals) for name, vals in scores.items()},
        folds=folds,
        repeats=repeats,
    )
