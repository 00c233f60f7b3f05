"""Input validation helpers.

Soft labels, priors and model predictions are plain float vectors; noisy
mechanism outputs are unconstrained float vectors. These helpers centralize
the invariant checks so estimators and library functions stay uncluttered.
"""

from __future__ import annotations

import numpy as np

from .errors import InputError

__all__ = [
    "check_label",
    "check_labels",
    "check_distribution",
    "check_observation",
    "check_features",
    "check_X_y",
]

#: Tolerance on "probabilities sum to one".
SUM_TOL = 1e-9


def check_label(y: int, num_classes: int) -> int:
    """Validate a single class index against the class count."""
    y = int(y)
    if num_classes < 2:
        raise InputError(f"num_classes must be >= 2, got {num_classes}")
    if not 0 <= y < num_classes:
        raise InputError(f"label {y} out of range [0, {num_classes})")
    return y


def check_labels(y, num_classes: int) -> np.ndarray:
    """Validate an integer label array; returns it as int64."""
    y = np.asarray(y)
    if y.ndim != 1:
        raise InputError(f"labels must be 1-d, got shape {y.shape}")
    if not np.issubdtype(y.dtype, np.integer):
        if not np.all(y == np.floor(y)):
            raise InputError("labels must be integers")
    y = y.astype(np.int64)
    if num_classes < 2:
        raise InputError(f"num_classes must be >= 2, got {num_classes}")
    if y.size and (y.min() < 0 or y.max() >= num_classes):
        raise InputError(f"labels must lie in [0, {num_classes})")
    return y


def check_distribution(p, num_classes: int | None = None) -> np.ndarray:
    """Validate a probability vector: entries in [0, 1], summing to 1."""
    p = np.asarray(p, dtype=np.float64)
    if p.ndim != 1:
        raise InputError(f"distribution must be 1-d, got shape {p.shape}")
    if num_classes is not None and p.shape[0] != num_classes:
        raise InputError(f"distribution has length {p.shape[0]}, expected {num_classes}")
    if not np.all(np.isfinite(p)):
        raise InputError("distribution has non-finite entries")
    if p.min() < -SUM_TOL or p.max() > 1 + SUM_TOL:
        raise InputError("distribution entries must lie in [0, 1]")
    if abs(p.sum() - 1.0) > SUM_TOL:
        raise InputError(f"distribution sums to {p.sum()!r}, not 1")
    return p


def check_observation(o, num_classes: int | None = None) -> np.ndarray:
    """Validate a noisy mechanism output: finite real vector."""
    o = np.asarray(o, dtype=np.float64)
    if o.ndim != 1:
        raise InputError(f"observation must be 1-d, got shape {o.shape}")
    if num_classes is not None and o.shape[0] != num_classes:
        raise InputError(f"observation has length {o.shape[0]}, expected {num_classes}")
    if not np.all(np.isfinite(o)):
        raise InputError("observation has non-finite entries")
    return o


def check_features(X, dim: int | None = None) -> np.ndarray:
    """Validate a feature matrix, promoting a single vector to one row."""
    X = np.asarray(X, dtype=np.float64)
    if X.ndim == 1:
        X = X[None, :]
    if X.ndim != 2:
        raise InputError(f"features must be 2-d, got shape {X.shape}")
    if not np.all(np.isfinite(X)):
        raise InputError("features have non-finite entries")
    if dim is not None and X.shape[1] != dim:
        raise InputError(f"features have dim {X.shape[1]}, expected {dim}")
    return X


def check_X_y(X, y, num_classes: int | None = None) -> tuple[np.ndarray, np.ndarray, int]:
    """Validate a feature matrix with integer labels.

    Returns ``(X, y, num_classes)`` where ``num_classes`` defaults to
    ``max(y) + 1`` when not supplied.
    """
    X = check_features(X)
    y = np.asarray(y)
    if y.ndim != 1 or y.shape[0] != X.shape[0]:
        raise InputError(f"labels shape {y.shape} does not match {X.shape[0]} rows")
    if num_classes is None:
        if y.size == 0:
            raise InputError("cannot infer num_classes from empty labels")
        num_classes = int(np.max(y)) + 1
        num_classes = max(num_classes, 2)
    y = check_labels(y, num_classes)
    return X, y, num_classes
