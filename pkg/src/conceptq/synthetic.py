"""Random representable datasets and sign assignments for property checks."""
from __future__ import annotations

import numpy as np

from .core import DisjunctionDataset, validate_dataset
from .interference import SignAssignment


def _zero_sum_within_bounds(t: np.ndarray, bound: np.ndarray, max_iter: int = 200) -> np.ndarray:
    """Shift t towards sum zero while keeping |t_k| <= bound_k."""
    t = t.copy()
    for _ in range(max_iter):
        excess = t.sum()
        if abs(excess) < 1e-16:
            break
        # room to move each entry in the direction that reduces the excess
        room = bound + t if excess > 0 else bound - t
        total_room = room.sum()
        if total_room <= 0:
            break
        step = min(abs(excess), total_room)
        t -= np.sign(excess) * step * room / total_room
        t = np.clip(t, -bound, bound)
    return t


def random_representable_dataset(
    rng: np.random.Generator, n: int, shrink: float = 0.9
) -> DisjunctionDataset:
    """Draw mu(A), mu(B) from a flat Dirichlet and interference terms inside the
    representable band, pushed to zero sum so that mu(A or B) also sums to 1.
    """
    while True:
        a = rng.dirichlet(np.ones(n))
        b = rng.dirichlet(np.ones(n))
        bound = shrink * np.sqrt(a * b)
        t = rng.uniform(-bound, bound)
        t = _zero_sum_within_bounds(t, bound)
        ab = (a + b) / 2 + t
        if np.all(ab >= 0) and abs(t.sum()) < 1e-12:
            break
    names = [f"e{k}" for k in range(n)]
    return validate_dataset(DisjunctionDataset.from_columns(names, a, b, ab), tolerance=1e-6)


def random_magnitudes(rng: np.random.Generator, n: int) -> np.ndarray:
    """Nonnegative magnitudes with assorted scales, ties and zeros mixed in."""
    kind = rng.integers(4)
    if kind == 0:
        return rng.uniform(0, 1, n)
    if kind == 1:
        return rng.exponential(1.0, n) * 10.0 ** rng.uniform(-6, 2, n)
    if kind == 2:
        return rng.integers(0, 4, n).astype(float)
    return np.abs(rng.standard_cauchy(n))


def random_valid_signs(
    rng: np.random.Generator,
    lambda_abs: np.ndarray,
    m: int,
    count: int,
    max_tries: int = 100_000,
) -> list[SignAssignment]:
    """Uniformly drawn sign vectors with |sum_{k != m} lambda_k| <= |lambda_m| (rejection)."""
    lam = np.asarray(lambda_abs, dtype=float)
    n = lam.size
    rest = np.arange(n) != m
    found = []
    for _ in range(max_tries):
        signs = rng.choice([-1, 1], size=n)
        if abs(np.sum(signs[rest] * lam[rest])) <= lam[m]:
            found.append(SignAssignment(tuple(int(s) for s in signs), "user-supplied"))
            if len(found) == count:
                break
    return found
