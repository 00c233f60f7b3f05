"""Label perturbation mechanisms.

Two families:

* additive noise on a one-hot label encoding ("soft" randomized response):
  per-coordinate Laplace or Gaussian noise, producing an unconstrained real
  vector that downstream post-processing may denoise;
* classic randomized response, which keeps the label with probability
  ``exp(eps) / (exp(eps) + C - 1)`` and otherwise replaces it with a
  uniformly random different class.

Scale conventions: ``lam`` is the Laplace *scale* parameter b (density
proportional to ``exp(-|x|/b)``, per-coordinate standard deviation
``sqrt(2)*b``); ``sigma`` is the Gaussian per-coordinate standard deviation.
``lam = 0`` / ``sigma = 0`` / ``eps = inf`` are accepted as explicit
noiseless modes so baselines can share one code path.

All functions accept either a single class index or an array of indices;
the output gains a leading axis in the array case.
"""

from __future__ import annotations

import math

import numpy as np

from .data import one_hot, one_hot_matrix
from .errors import InputError

__all__ = ["laplace_perturb", "gaussian_perturb", "randomized_response",
           "laplace_log_density", "gaussian_log_density"]


def _encode(y, num_classes: int) -> tuple[np.ndarray, bool]:
    """One-hot encode scalar or array labels; returns (matrix, was_scalar)."""
    if np.ndim(y) == 0:
        return one_hot(y, num_classes)[None, :], True
    return one_hot_matrix(np.asarray(y), num_classes), False


def laplace_perturb(y, num_classes: int, lam: float,
                    rng: np.random.Generator) -> np.ndarray:
    """One-hot encode ``y`` and add iid Laplace(scale=lam) noise per coordinate.

    Args:
      y: Class index, or array of indices.
      num_classes: Number of classes C.
      lam: Laplace scale; 0 means no noise.
      rng: Source of randomness (consumed only when lam > 0).

    Returns:
      Float vector of length C (or matrix, one row per input label).
    """
    if lam < 0:
        raise InputError(f"lam must be >= 0, got {lam}")
    enc, scalar = _encode(y, num_classes)
    if lam > 0:
        enc = enc + rng.laplace(scale=lam, size=enc.shape)
    return enc[0] if scalar else enc


def gaussian_perturb(y, num_classes: int, sigma: float,
                     rng: np.random.Generator) -> np.ndarray:
    """One-hot encode ``y`` and add iid N(0, sigma^2) noise per coordinate."""
    if sigma < 0:
        raise InputError(f"sigma must be >= 0, got {sigma}")
    enc, scalar = _encode(y, num_classes)
    if sigma > 0:
        enc = enc + rng.normal(scale=sigma, size=enc.shape)
    return enc[0] if scalar else enc


def randomized_response(y, num_classes: int, eps: float,
                        rng: np.random.Generator):
    """Classic randomized response over the label domain.

    Keeps the true label with probability ``exp(eps) / (exp(eps) + C - 1)``
    and otherwise outputs one of the C - 1 remaining classes uniformly,
    which makes the mechanism eps-label-DP. ``eps = inf`` always returns
    the input label.

    Args:
      y: Class index, or array of indices.
      num_classes: Number of classes C.
      eps: Privacy parameter, > 0 (or inf for the noiseless mode).
      rng: Source of randomness.

    Returns:
      An int (or int array) in [0, C).
    """
    if not eps > 0:
        raise InputError(f"eps must be > 0, got {eps}")
    y_arr = np.atleast_1d(np.asarray(y))
    scalar = np.ndim(y) == 0
    if y_arr.size and (y_arr.min() < 0 or y_arr.max() >= num_classes):
        raise InputError(f"labels must lie in [0, {num_classes})")
    if math.isinf(eps):
        out = y_arr.astype(np.int64)
        return int(out[0]) if scalar else out
    keep_prob = math.exp(eps) / (math.exp(eps) + num_classes - 1)
    keep = rng.random(y_arr.shape) < keep_prob
    # uniform over the C-1 classes != y, via a shifted offset
    offset = rng.integers(1, num_classes, size=y_arr.shape)
    out = np.where(keep, y_arr, (y_arr + offset) % num_classes).astype(np.int64)
    return int(out[0]) if scalar else out


def laplace_log_density(o: np.ndarray, y, num_classes: int, lam: float) -> np.ndarray:
    """Log density of observation rows ``o`` under label ``y`` and Laplace noise.

    ``o`` has shape (..., C); ``y`` is a scalar label. Used by the Bayes
    oracle and by the likelihood-ratio privacy checks.
    """
    if lam <= 0:
        raise InputError(f"lam must be > 0, got {lam}")
    target = one_hot(y, num_classes)
    absdev = np.abs(np.asarray(o, dtype=np.float64) - target)
    return -absdev.sum(axis=-1) / lam - num_classes * math.log(2.0 * lam)


def gaussian_log_density(o: np.ndarray, y, num_classes: int, sigma: float) -> np.ndarray:
    """Log density of observation rows ``o`` under label ``y`` and Gaussian noise."""
    if sigma <= 0:
        raise InputError(f"sigma must be > 0, got {sigma}")
    target = one_hot(y, num_classes)
    sq = np.square(np.asarray(o, dtype=np.float64) - target)
    return (-sq.sum(axis=-1) / (2.0 * sigma * sigma)
            - num_classes * 0.5 * math.log(2.0 * math.pi * sigma * sigma))
