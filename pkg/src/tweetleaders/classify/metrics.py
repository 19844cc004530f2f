"""ROC-AUC computed from rank statistics (ties share credit)."""

from __future__ import annotations

import warnings

import numpy as np

from .._validation import as_labels_1d


def _average_ranks(scores: np.ndarray) -> np.ndarray:
    """1-based ranks; tied scores all get the mean of their positions."""
    order = np.argsort(scores, kind="stable")
    ranks = np.empty(len(scores))
    i = 0
    n = len(scores)
    sorted_scores = scores[order]
    while i < n:
        j = i
        while j + 1 < n and sorted_scores[j + 1] == sorted_scores[i]:
            j += 1
        ranks[order[i : j + 1]] = (i + j + 2) / 2.0
        i = j + 1
    return ranks


def binary_auc(y_true, scores) -> float:
    """Probability a random positive outranks a random negative
    (Mann-Whitney; ties count one half)."""
    y_true = np.asarray(y_true, dtype=bool)
    scores = np.asarray(scores, dtype=float)
    n_pos = int(y_true.sum())
    n_neg = len(y_true) - n_pos
    if n_pos == 0 or n_neg == 0:
        raise ValueError("binary AUC needs at least one positive and one negative")
    ranks = _average_ranks(scores)
    u = ranks[y_true].sum() - n_pos * (n_pos + 1) / 2.0
    return float(u / (n_pos * n_neg))


def macro_auc_ovr(y_true, proba, classes=None) -> float:
    """Unweighted mean of the one-vs-rest AUC per class.

    proba columns must align with `classes` (default: sorted unique labels).
    A class without both positives and negatives is skipped with a warning;
    when every class is skipped there is nothing to average and we raise.
    """
    y_true = as_labels_1d(y_true)
    proba = np.asarray(proba, dtype=float)
    if classes is None:
        classes = np.unique(y_true)
    if proba.shape != (len(y_true), len(classes)):
        raise ValueError(
            f"proba shape {proba.shape} does not match {len(y_true)} rows x {len(classes)} classes"
        )
    aucs = []
    for j, cls in enumerate(classes):
        mask = y_true == cls
        if mask.all() or not mask.any():
            warnings.warn(
                f"class {cls!r} lacks positives or negatives; skipped in macro AUC",
                stacklevel=2,
            )
            continue
        aucs.append(binary_auc(mask, proba[:, j]))
    if not aucs:
        raise ValueError("no class had both positives and negatives")
    return float(np.mean(aucs))
