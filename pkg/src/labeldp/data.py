"""Datasets: container type, one-hot encoding, synthetic mixtures, CSV I/O.

The CSV format is the package's sole ingestion format: comma-separated
numeric feature columns with an integer label in the final column, header
optional. Floats are written with ``repr`` so a write/load round trip is
exact.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from .errors import InputError, ParseError
from .validation import check_features, check_labels

__all__ = [
    "Example",
    "Dataset",
    "one_hot",
    "gen_mixture",
    "load_csv",
    "save_csv",
    "train_test_split",
]


class Example(NamedTuple):
    features: np.ndarray
    label: int


@dataclass(frozen=True)
class Dataset:
    """A feature matrix with integer labels.

    Immutable after construction; safe to share across threads.
    """

    features: np.ndarray  # (n, d) float64
    labels: np.ndarray    # (n,) int64
    num_classes: int

    def __post_init__(self):
        X = check_features(self.features)
        y = check_labels(self.labels, self.num_classes)
        if X.shape[0] != y.shape[0]:
            raise InputError(
                f"{X.shape[0]} feature rows but {y.shape[0]} labels")
        X.setflags(write=False)
        y.setflags(write=False)
        object.__setattr__(self, "features", X)
        object.__setattr__(self, "labels", y)

    @property
    def n(self) -> int:
        return self.features.shape[0]

    @property
    def dim(self) -> int:
        return self.features.shape[1]

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> Example:
        return Example(self.features[i], int(self.labels[i]))

    def __iter__(self) -> Iterator[Example]:
        for i in range(self.n):
            yield self[i]

    def with_labels(self, labels) -> "Dataset":
        """Copy of the dataset with the label column replaced."""
        return Dataset(self.features, np.array(labels), self.num_classes)

    def subset(self, idx) -> "Dataset":
        idx = np.asarray(idx)
        return Dataset(self.features[idx], self.labels[idx], self.num_classes)


def one_hot(y: int, num_classes: int) -> np.ndarray:
    """One-hot encoding of a class index.

    For any pair of distinct labels the encodings differ by exactly 2 in
    l1 norm and sqrt(2) in l2 norm, independent of ``num_classes``; this
    fixes the sensitivity of every additive mechanism applied to them.
    """
    if num_classes < 2:
        raise InputError(f"num_classes must be >= 2, got {num_classes}")
    y = int(y)
    if not 0 <= y < num_classes:
        raise InputError(f"label {y} out of range [0, {num_classes})")
    v = np.zeros(num_classes, dtype=np.float64)
    v[y] = 1.0
    return v


def one_hot_matrix(labels: np.ndarray, num_classes: int) -> np.ndarray:
    """Row-wise one-hot encoding; shape (n, num_classes)."""
    labels = check_labels(labels, num_classes)
    out = np.zeros((labels.shape[0], num_classes), dtype=np.float64)
    out[np.arange(labels.shape[0]), labels] = 1.0
    return out


def gen_mixture(num_classes: int, dim: int, n: int, separation: float,
                rng: np.random.Generator) -> Dataset:
    """Sample a balanced isotropic Gaussian mixture.

    Cluster means sit pairwise ``separation`` apart when ``dim >= num_classes``
    (scaled orthogonal axes); for smaller dims they fall back to a 1-d lattice
    with ``separation`` between adjacent means. Per-cluster noise is unit
    isotropic. Class counts are balanced within one example.

    Args:
      num_classes: Number of clusters (>= 2).
      dim: Feature dimension (>= 1).
      n: Total examples (>= num_classes).
      separation: Distance between cluster means.
      rng: Source of randomness.
    """
    if num_classes < 2:
        raise InputError(f"num_classes must be >= 2, got {num_classes}")
    if dim < 1:
        raise InputError(f"dim must be >= 1, got {dim}")
    if n < num_classes:
        raise InputError(f"n must be >= num_classes, got n={n}, C={num_classes}")

    means = np.zeros((num_classes, dim))
    if dim >= num_classes:
        for c in range(num_classes):
            means[c, c] = separation / np.sqrt(2.0)
    else:
        means[:, 0] = separation * np.arange(num_classes)

    # balanced within +-1: first n % C classes get one extra example
    counts = np.full(num_classes, n // num_classes, dtype=np.int64)
    counts[: n % num_classes] += 1
    labels = np.repeat(np.arange(num_classes), counts)
    order = rng.permutation(n)
    labels = labels[order]
    X = means[labels] + rng.standard_normal((n, dim))
    return Dataset(X, labels, num_classes)


def load_csv(path, has_header: bool = False, num_classes: int | None = None) -> Dataset:
    """Load a dataset from CSV: numeric feature columns, integer label last.

    Args:
      path: File to read.
      has_header: Skip the first row when true.
      num_classes: Declared class count; defaults to ``max(label) + 1``.

    Raises:
      ParseError: Malformed row; the message names the 1-based line number.
      InputError: A label is >= the declared class count.
    """
    rows: list[list[float]] = []
    labels: list[int] = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        for lineno, row in enumerate(reader, start=1):
            if has_header and lineno == 1:
                continue
            if not row:
                continue
            if len(row) < 2:
                raise ParseError(f"line {lineno}: need at least one feature and a label")
            try:
                feats = [float(v) for v in row[:-1]]
            except ValueError as exc:
                raise ParseError(f"line {lineno}: non-numeric feature: {exc}") from exc
            raw_label = row[-1].strip()
            try:
                label = int(raw_label)
            except ValueError as exc:
                raise ParseError(f"line {lineno}: non-integer label {raw_label!r}") from exc
            if rows and len(feats) != len(rows[0]):
                raise ParseError(
                    f"line {lineno}: expected {len(rows[0])} features, got {len(feats)}")
            rows.append(feats)
            labels.append(label)
    if not rows:
        raise ParseError(f"{path}: no data rows")
    y = np.array(labels, dtype=np.int64)
    if num_classes is None:
        num_classes = max(int(y.max()) + 1, 2)
    elif y.max() >= num_classes:
        raise InputError(
            f"label {int(y.max())} exceeds declared num_classes={num_classes}")
    if y.min() < 0:
        raise InputError("labels must be nonnegative")
    return Dataset(np.array(rows, dtype=np.float64), y, num_classes)


def save_csv(dataset: Dataset, path, header: bool = False) -> None:
    """Write a dataset in the package CSV format (exact float round trip)."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        if header:
            writer.writerow([f"x{j}" for j in range(dataset.dim)] + ["label"])
        for i in range(dataset.n):
            writer.writerow([repr(float(v)) for v in dataset.features[i]]
                            + [int(dataset.labels[i])])


def train_test_split(dataset: Dataset, test_size: int,
                     rng: np.random.Generator) -> tuple[Dataset, Dataset]:
    """Random disjoint train/test split with ``test_size`` held out."""
    if not 0 < test_size < dataset.n:
        raise InputError(f"test_size must be in (0, {dataset.n}), got {test_size}")
    perm = rng.permutation(dataset.n)
    return dataset.subset(perm[test_size:]), dataset.subset(perm[:test_size])
