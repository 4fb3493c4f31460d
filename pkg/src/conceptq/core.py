"""Probability distributions, complex state vectors and diagonal projectors.

State vectors are plain ``numpy`` arrays of dtype ``complex128``. Projectors
only ever project onto spans of canonical basis vectors, so they are stored as
a set of coordinate indices instead of a matrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    DuplicateLabel,
    EmptyInput,
    LengthMismatch,
    NegativeWeight,
    SumOutOfTolerance,
    ValidationError,
)

DEFAULT_TOLERANCE = 0.01


def _frozen(values, dtype=float) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class ProbabilityDistribution:
    weights: np.ndarray
    labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", _frozen(self.weights))
        object.__setattr__(self, "labels", tuple(self.labels))

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, label: str) -> float:
        return float(self.weights[self.labels.index(label)])

    def total(self) -> float:
        return float(self.weights.sum())


@dataclass(frozen=True, eq=False)
class DisjunctionDataset:
    """Choice probabilities for concept A, concept B and 'A or B'."""

    mu_a: ProbabilityDistribution
    mu_b: ProbabilityDistribution
    mu_a_or_b: ProbabilityDistribution

    @property
    def exemplars(self) -> tuple[str, ...]:
        return self.mu_a.labels

    def __len__(self) -> int:
        return len(self.mu_a)

    def index(self, exemplar: str) -> int:
        return self.exemplars.index(exemplar)

    @classmethod
    def from_columns(cls, exemplars, mu_a, mu_b, mu_a_or_b) -> "DisjunctionDataset":
        """Build an unvalidated dataset; pass it through :func:`validate_dataset`."""
        if not len(exemplars) == len(mu_a) == len(mu_b) == len(mu_a_or_b):
            raise LengthMismatch(
                f"column lengths differ: exemplars={len(exemplars)}, mu_a={len(mu_a)}, "
                f"mu_b={len(mu_b)}, mu_a_or_b={len(mu_a_or_b)}"
            )
        labels = tuple(exemplars)
        return cls(
            ProbabilityDistribution(mu_a, labels),
            ProbabilityDistribution(mu_b, labels),
            ProbabilityDistribution(mu_a_or_b, labels),
        )


def _check_labels(labels: Sequence[str]) -> None:
    seen = set()
    for label in labels:
        if not isinstance(label, str) or not label.strip():
            raise ValidationError(f"exemplar labels must be non-empty text, got {label!r}")
        if label in seen:
            raise DuplicateLabel(f"duplicate exemplar label {label!r}")
        seen.add(label)


def normalize_distribution(
    dist: ProbabilityDistribution, tolerance: float = DEFAULT_TOLERANCE, name: str = "column"
) -> ProbabilityDistribution:
    w = np.asarray(dist.weights, dtype=float)
    if not np.all(np.isfinite(w)):
        raise ValidationError(f"{name}: non-finite weight")
    if np.any(w < 0):
        k = int(np.argmax(w < 0))
        raise NegativeWeight(f"{name}: negative weight {w[k]} for {dist.labels[k]!r}")
    total = w.sum()
    if abs(total - 1.0) > tolerance:
        raise SumOutOfTolerance(
            f"{name}: weights sum to {total:.6g}, more than {tolerance} away from 1"
        )
    return ProbabilityDistribution(w / total, dist.labels)


def validate_dataset(
    raw: DisjunctionDataset, tolerance: float = DEFAULT_TOLERANCE
) -> DisjunctionDataset:
    """Check a raw dataset and renormalize each column to sum to exactly 1.

    Columns whose sum is off by more than ``tolerance`` are rejected rather
    than rescaled: that size of drift means wrong data, not rounding.
    """
    if not tolerance > 0:
        raise ValueError("tolerance must be positive")
    cols = {"mu_a": raw.mu_a, "mu_b": raw.mu_b, "mu_a_or_b": raw.mu_a_or_b}
    lengths = {k: (len(d.weights), len(d.labels)) for k, d in cols.items()}
    if len({x for pair in lengths.values() for x in pair}) != 1:
        raise LengthMismatch(f"column lengths differ: {lengths}")
    if raw.mu_b.labels != raw.mu_a.labels or raw.mu_a_or_b.labels != raw.mu_a.labels:
        raise ValidationError("all three distributions must share the same labels in order")
    if len(raw.mu_a) < 2:
        raise EmptyInput("a dataset needs at least two exemplars")
    _check_labels(raw.mu_a.labels)
    return DisjunctionDataset(
        *(normalize_distribution(d, tolerance, name) for name, d in cols.items())
    )


# -- complex vectors ------------------------------------------------------------


def as_vector(components: Iterable[complex]) -> np.ndarray:
    return np.array(list(components), dtype=np.complex128)


def norm(v) -> float:
    return float(np.sqrt(np.sum(np.abs(np.asarray(v)) ** 2)))


def inner_product(u, v) -> complex:
    """Return <u|v>, conjugate-linear in ``u``."""
    u = np.asarray(u, dtype=np.complex128)
    v = np.asarray(v, dtype=np.complex128)
    if u.shape != v.shape:
        raise DimensionMismatch(f"dimensions differ: {u.shape} vs {v.shape}")
    return complex(np.vdot(u, v))


@dataclass(frozen=True)
class Projector:
    """Orthogonal projection onto the span of some canonical basis vectors (0-based)."""

    basis_indices: frozenset[int]

    def __post_init__(self):
        idx = frozenset(int(i) for i in self.basis_indices)
        if any(i < 0 for i in idx):
            raise ValidationError(f"negative basis index in {sorted(idx)}")
        object.__setattr__(self, "basis_indices", idx)

    def check_dimension(self, dim: int) -> None:
        if self.basis_indices and max(self.basis_indices) >= dim:
            raise DimensionMismatch(
                f"projector indices {sorted(self.basis_indices)} exceed dimension {dim}"
            )

    def apply(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=np.complex128)
        self.check_dimension(len(v))
        out = np.zeros_like(v)
        idx = sorted(self.basis_indices)
        out[idx] = v[idx]
        return out


def project_probability(v, p: Projector) -> float:
    """<v|P|v> for a diagonal projector ``p``."""
    v = np.asarray(v, dtype=np.complex128)
    p.check_dimension(len(v))
    idx = sorted(p.basis_indices)
    return float(np.sum(v[idx].real ** 2 + v[idx].imag ** 2))


def matrix_element(u, p: Projector, v) -> complex:
    """<u|P|v> for a diagonal projector ``p``."""
    u = np.asarray(u, dtype=np.complex128)
    v = np.asarray(v, dtype=np.complex128)
    if u.shape != v.shape:
        raise DimensionMismatch(f"dimensions differ: {u.shape} vs {v.shape}")
    p.check_dimension(len(v))
    idx = sorted(p.basis_indices)
    return complex(np.vdot(u[idx], v[idx]))
