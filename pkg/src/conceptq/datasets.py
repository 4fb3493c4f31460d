"""CSV/JSON loaders and the datasets bundled with the package."""
from __future__ import annotations

import csv
import io
import json
from importlib import resources
from pathlib import Path

from .core import DEFAULT_TOLERANCE, DisjunctionDataset, validate_dataset
from .errors import ValidationError

DATASET_COLUMNS = ("exemplar", "mu_a", "mu_b", "mu_a_or_b")

DEMOS = {
    "fruits-vegetables": "fruits_vegetables.csv",
    "animal-acts": "animal_acts.json",
    "animal-acts-product": "animal_acts_marginals.json",
    "animal-acts-grid": "animal_acts_grid.json",
}


def read_text(name: str) -> str:
    return resources.files("conceptq").joinpath("data").joinpath(name).read_text(encoding="utf-8")


def demo_text(demo: str) -> str:
    try:
        return read_text(DEMOS[demo])
    except KeyError:
        raise ValidationError(f"unknown demo {demo!r}; choose from {sorted(DEMOS)}") from None


def _float(value: str, where: str) -> float:
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ValidationError(f"{where}: not a number: {value!r}") from None


def read_dataset_csv(text: str) -> DisjunctionDataset:
    """Parse the CSV without validating or renormalizing the columns."""
    reader = csv.DictReader(io.StringIO(text))
    header = tuple(h.strip() for h in (reader.fieldnames or ()))
    if header != DATASET_COLUMNS:
        raise ValidationError(
            f"expected header {','.join(DATASET_COLUMNS)}, got {','.join(header) or '<empty>'}"
        )
    names, a, b, ab = [], [], [], []
    for lineno, row in enumerate(reader, start=2):
        if None in row or any(v is None for v in row.values()):
            raise ValidationError(f"line {lineno}: wrong number of fields")
        names.append(row["exemplar"].strip())
        a.append(_float(row["mu_a"], f"line {lineno}"))
        b.append(_float(row["mu_b"], f"line {lineno}"))
        ab.append(_float(row["mu_a_or_b"], f"line {lineno}"))
    return DisjunctionDataset.from_columns(names, a, b, ab)


def parse_dataset_csv(text: str, tolerance: float = DEFAULT_TOLERANCE) -> DisjunctionDataset:
    return validate_dataset(read_dataset_csv(text), tolerance)


def load_dataset_csv(path, tolerance: float = DEFAULT_TOLERANCE) -> DisjunctionDataset:
    return parse_dataset_csv(Path(path).read_text(encoding="utf-8"), tolerance)


def parse_signs_csv(text: str, exemplars) -> tuple[int, ...]:
    """Signs file: header ``exemplar,sign``, one row per exemplar, sign +1/-1 (or +/-)."""
    reader = csv.DictReader(io.StringIO(text))
    header = tuple(h.strip() for h in (reader.fieldnames or ()))
    if header != ("exemplar", "sign"):
        raise ValidationError(f"expected header exemplar,sign, got {','.join(header)}")
    table = {}
    for row in reader:
        raw = (row["sign"] or "").strip()
        sign = {"+": 1, "-": -1, "+1": 1, "-1": -1, "1": 1}.get(raw)
        if sign is None:
            raise ValidationError(f"bad sign {raw!r} for {row['exemplar']!r}")
        table[row["exemplar"].strip()] = sign
    missing = [e for e in exemplars if e not in table]
    extra = sorted(set(table) - set(exemplars))
    if missing or extra:
        raise ValidationError(f"signs file mismatch: missing {missing}, unknown {extra}")
    return tuple(table[e] for e in exemplars)


def fruits_vegetables() -> DisjunctionDataset:
    """Hampton's Fruits / Vegetables disjunction data, 24 exemplars, 4 decimals."""
    return parse_dataset_csv(read_text(DEMOS["fruits-vegetables"]))


def fruits_vegetables_printed() -> dict[str, list]:
    """Published lambda_k, theta_k, |A> components and |B> moduli for that dataset."""
    rows = list(csv.DictReader(io.StringIO(read_text("fruits_vegetables_printed.csv"))))
    out: dict[str, list] = {"exemplar": [r["exemplar"] for r in rows]}
    for key in ("lambda", "theta_deg", "a_component", "b_modulus"):
        out[key] = [float(r[key]) for r in rows]
    return out


# last component of the published |B>
PRINTED_B_EXTRA_COMPONENT = 0.1565


def fruits_vegetables_printed_signs() -> tuple[int, ...]:
    return tuple(1 if lam >= 0 else -1 for lam in fruits_vegetables_printed()["lambda"])


def load_json_text(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ValidationError("expected a JSON object at top level")
    return data
