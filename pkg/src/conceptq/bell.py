"""CHSH statistics from 2x2 coincidence count tables and from marginal counts.

Experiments are keyed ``AB``, ``ApB``, ``ABp`` and ``ApBp`` (p for prime). In
each table index 1 is the first-listed outcome of the pair, so ``n11`` counts
e.g. 'horse growls' and ``n22`` 'bear whinnies'; both score +1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .errors import (
    EmptyMarginal,
    EmptyTable,
    NotNormalized,
    OutOfRange,
    OutOfRangeExpectation,
    ValidationError,
)

EXPERIMENTS = ("AB", "ApB", "ABp", "ApBp")
SINGLE_EXPERIMENTS = ("A", "Ap", "B", "Bp")
# which single experiments make up each coincidence experiment
PAIRS = {"AB": ("A", "B"), "ApB": ("Ap", "B"), "ABp": ("A", "Bp"), "ApBp": ("Ap", "Bp")}
CLASSICAL_BOUND = 2.0


def _count(value, name) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise ValidationError(f"{name} must be an integer count, got {value!r}")
    if value < 0:
        raise ValidationError(f"{name} must be nonnegative, got {value}")
    return int(value)


@dataclass(frozen=True)
class CoincidenceCounts:
    n11: int
    n12: int
    n21: int
    n22: int
    experiment: str = "AB"
    rows: tuple[str, str] = ("X1", "X2")
    cols: tuple[str, str] = ("Y1", "Y2")

    def __post_init__(self):
        for name in ("n11", "n12", "n21", "n22"):
            object.__setattr__(self, name, _count(getattr(self, name), name))
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "cols", tuple(self.cols))

    @property
    def total(self) -> int:
        return self.n11 + self.n12 + self.n21 + self.n22

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n11, self.n12, self.n21, self.n22)

    def scaled(self, factor: int) -> "CoincidenceCounts":
        return CoincidenceCounts(
            *(factor * n for n in self.as_tuple()), self.experiment, self.rows, self.cols
        )


@dataclass(frozen=True)
class OutcomeCounts:
    """Counts for the two outcomes of one single experiment, e.g. horse vs bear."""

    first: int
    second: int
    labels: tuple[str, str] = ("1", "2")

    def __post_init__(self):
        object.__setattr__(self, "first", _count(self.first, "first"))
        object.__setattr__(self, "second", _count(self.second, "second"))
        object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def total(self) -> int:
        return self.first + self.second


@dataclass(frozen=True)
class MarginalCounts:
    A: OutcomeCounts
    Ap: OutcomeCounts
    B: OutcomeCounts
    Bp: OutcomeCounts

    def __getitem__(self, key: str) -> OutcomeCounts:
        if key not in SINGLE_EXPERIMENTS:
            raise KeyError(key)
        return getattr(self, key)


@dataclass(frozen=True, eq=False)
class ChshReport:
    expectations: dict[str, float]
    statistic: float
    probabilities: dict[str, np.ndarray] = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "violates" if abs(self.statistic) > CLASSICAL_BOUND else "satisfies"

    def to_dict(self) -> dict:
        return {
            "expectations": {k: float(v) for k, v in self.expectations.items()},
            "probabilities": {k: p.tolist() for k, p in self.probabilities.items()},
            "statistic": float(self.statistic),
            "verdict": self.verdict,
        }


def probabilities_from_counts(c: CoincidenceCounts) -> np.ndarray:
    """2x2 table P[i, j] = n_ij / total, each page drawn with equal probability."""
    if c.total == 0:
        raise EmptyTable(f"experiment {c.experiment}: all counts are zero")
    return np.array([[c.n11, c.n12], [c.n21, c.n22]], dtype=float) / c.total


def expectation_value(p) -> float:
    p = np.asarray(p, dtype=float)
    if p.shape != (2, 2):
        raise ValidationError(f"expected a 2x2 table, got shape {p.shape}")
    if np.any(p < 0) or abs(p.sum() - 1.0) > 1e-9:
        raise NotNormalized(f"probability table sums to {p.sum():.12g}")
    return float(p[0, 0] + p[1, 1] - p[1, 0] - p[0, 1])


def chsh_statistic(e_ab: float, e_apb: float, e_abp: float, e_apbp: float) -> ChshReport:
    """S = E(A'B') + E(A'B) + E(AB') - E(AB)."""
    expectations = {"AB": e_ab, "ApB": e_apb, "ABp": e_abp, "ApBp": e_apbp}
    for key, value in expectations.items():
        if not -1.0 - 1e-12 <= value <= 1.0 + 1e-12:
            raise OutOfRangeExpectation(f"E({key}) = {value} outside [-1, 1]")
    s = e_apbp + e_apb + e_abp - e_ab
    return ChshReport({k: float(v) for k, v in expectations.items()}, float(s))


def chsh_from_counts(tables: Mapping[str, CoincidenceCounts]) -> ChshReport:
    missing = [k for k in EXPERIMENTS if k not in tables]
    if missing:
        raise ValidationError(f"missing coincidence tables: {missing}")
    probs = {k: probabilities_from_counts(tables[k]) for k in EXPERIMENTS}
    e = {k: expectation_value(p) for k, p in probs.items()}
    report = chsh_statistic(e["AB"], e["ApB"], e["ABp"], e["ApBp"])
    return ChshReport(report.expectations, report.statistic, probs)


@dataclass(frozen=True, eq=False)
class ProductModel:
    marginals: dict[str, tuple[float, float]]
    single_expectations: dict[str, float]
    expectations: dict[str, float]
    tables: dict[str, np.ndarray]


def product_expectations(m: MarginalCounts) -> ProductModel:
    """Separated-sources model: P(X_i, Y_j) = P(X_i) P(Y_j)."""
    marg = {}
    for key in SINGLE_EXPERIMENTS:
        oc = m[key]
        if oc.total == 0:
            raise EmptyMarginal(f"single experiment {key}: both counts are zero")
        marg[key] = (oc.first / oc.total, oc.second / oc.total)
    single = {k: p1 - p2 for k, (p1, p2) in marg.items()}
    tables = {
        k: np.outer(marg[x], marg[y]) for k, (x, y) in PAIRS.items()
    }
    joint = {k: single[x] * single[y] for k, (x, y) in PAIRS.items()}
    return ProductModel(marg, single, joint, tables)


def chsh_from_marginals(m: MarginalCounts) -> ChshReport:
    model = product_expectations(m)
    e = model.expectations
    report = chsh_statistic(e["AB"], e["ApB"], e["ABp"], e["ApBp"])
    return ChshReport(report.expectations, report.statistic, model.tables)


def lemma_statistic(x: float, xp: float, y: float, yp: float) -> float:
    return x * y + x * yp + xp * y - xp * yp


def check_chsh_bound(x: float, xp: float, y: float, yp: float) -> bool:
    """Whether xy + xy' + x'y - x'y' lies in [-2, 2]; always true on [-1, 1]^4."""
    for name, value in (("x", x), ("x'", xp), ("y", y), ("y'", yp)):
        if not -1.0 <= value <= 1.0:
            raise OutOfRange(f"{name} = {value} outside [-1, 1]")
    s = lemma_statistic(x, xp, y, yp)
    return -2.0 <= s <= 2.0


# -- JSON schemas -------------------------------------------------------------


def coincidence_from_json(data: Mapping) -> dict[str, CoincidenceCounts]:
    tables = {}
    for key in EXPERIMENTS:
        entry = data.get(key)
        if not isinstance(entry, Mapping):
            raise ValidationError(f"missing or malformed table {key!r}")
        rows = tuple(entry.get("rows", ("X1", "X2")))
        cols = tuple(entry.get("cols", ("Y1", "Y2")))
        if len(rows) != 2 or len(cols) != 2:
            raise ValidationError(f"{key}: rows and cols must each name two outcomes")
        try:
            counts = [entry[n] for n in ("n11", "n12", "n21", "n22")]
        except KeyError as exc:
            raise ValidationError(f"{key}: missing count {exc.args[0]}") from None
        tables[key] = CoincidenceCounts(*counts, experiment=key, rows=rows, cols=cols)
    return tables


def coincidence_to_json(tables: Mapping[str, CoincidenceCounts]) -> dict:
    return {
        k: {"rows": list(t.rows), "cols": list(t.cols), "n11": t.n11, "n12": t.n12,
            "n21": t.n21, "n22": t.n22}
        for k, t in tables.items()
    }


def marginals_from_json(data: Mapping) -> MarginalCounts:
    parts = {}
    for key in SINGLE_EXPERIMENTS:
        entry = data.get(key)
        if not isinstance(entry, Mapping) or "counts" not in entry:
            raise ValidationError(f"missing or malformed marginal {key!r}")
        counts = entry["counts"]
        labels = tuple(entry.get("labels", ("1", "2")))
        if len(counts) != 2 or len(labels) != 2:
            raise ValidationError(f"{key}: need exactly two counts and two labels")
        parts[key] = OutcomeCounts(counts[0], counts[1], labels)
    return MarginalCounts(**parts)


def marginals_to_json(m: MarginalCounts) -> dict:
    return {
        k: {"labels": list(m[k].labels), "counts": [m[k].first, m[k].second]}
        for k in SINGLE_EXPERIMENTS
    }
