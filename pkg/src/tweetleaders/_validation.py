"""Small input-validation helpers shared by the estimators."""

from __future__ import annotations

import numpy as np


class NotFittedError(ValueError, AttributeError):
    """Estimator used before fit (subclasses match sklearn's semantics)."""


def check_fitted(estimator, attribute: str) -> None:
    if not hasattr(estimator, attribute):
        raise NotFittedError(
            f"{type(estimator).__name__} is not fitted yet; call fit first"
        )


def as_float_2d(X, name: str = "X") -> np.ndarray:
    arr = np.asarray(X, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-dimensional, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError(f"{name} contains non-finite values")
    return arr


def as_labels_1d(y, n_rows: int | None = None) -> np.ndarray:
    arr = np.asarray(y)
    if arr.ndim != 1:
        raise ValueError(f"labels must be 1-dimensional, got shape {arr.shape}")
    if n_rows is not None and len(arr) != n_rows:
        raise ValueError(f"label count {len(arr)} does not match row count {n_rows}")
    return arr


def check_consistent_rows(*arrays) -> int:
    lengths = {len(a) for a in arrays if a is not None}
    if len(lengths) > 1:
        raise ValueError(f"inputs have mismatched row counts: {sorted(lengths)}")
    return lengths.pop() if lengths else 0
