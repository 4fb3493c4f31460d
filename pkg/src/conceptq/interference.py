"""Complex Hilbert-space model of a concept disjunction.

Given choice probabilities mu(A)_k, mu(B)_k and mu(A or B)_k over n exemplars,
build two orthogonal unit vectors |A>, |B> in C^(n+1) and a spectral family
of n diagonal projectors M_k such that

    <A|M_k|A> = mu(A)_k
    <B|M_k|B> = mu(B)_k
    1/2 <A+B|M_k|A+B> = (mu(A)_k + mu(B)_k) / 2 + Re<A|M_k|B> = mu(A or B)_k.

The construction is closed form. The exemplar with the largest |lambda_k|
(the anchor m) gets a damped amplitude c_m in |B> plus one extra dimension that
restores the norm; the phases beta_k carry the interference.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np

from .core import (
    DisjunctionDataset,
    Projector,
    inner_product,
    norm,
    project_probability,
)
from .errors import (
    AnchorNotMaximal,
    ConstraintViolated,
    EmptyInput,
    IndexOutOfRange,
    LengthMismatch,
    NotRepresentable,
    OrthogonalityFailure,
    ValidationError,
    ZeroAnchorMass,
)

EPS = 1e-9
NEUTRAL_EPS = 1e-12

Classification = Literal["strengthening", "weakening", "neutral"]


@dataclass(frozen=True, eq=False)
class InterferenceTerms:
    values: np.ndarray

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]

    @property
    def total(self) -> float:
        return float(self.values.sum())


@dataclass(frozen=True)
class SignAssignment:
    signs: tuple[int, ...]
    source: Literal["greedy", "user-supplied"] = "user-supplied"

    def __post_init__(self):
        signs = tuple(int(s) for s in self.signs)
        if any(s not in (1, -1) for s in signs):
            raise ValidationError(f"signs must be +1 or -1, got {signs}")
        object.__setattr__(self, "signs", signs)

    def __len__(self):
        return len(self.signs)

    def as_array(self) -> np.ndarray:
        return np.array(self.signs, dtype=float)


@dataclass(frozen=True, eq=False)
class Residuals:
    """Absolute reconstruction errors per exemplar for each of the three distributions."""

    a: np.ndarray
    b: np.ndarray
    a_or_b: np.ndarray

    @property
    def max(self) -> float:
        return float(max(self.a.max(), self.b.max(), self.a_or_b.max()))


@dataclass(frozen=True, eq=False)
class InterferenceFit:
    dataset: DisjunctionDataset
    terms: InterferenceTerms
    signs: SignAssignment
    anchor_index: int
    lambdas: np.ndarray
    c_m: float
    beta: np.ndarray  # radians, in (-pi, pi]
    vector_a: np.ndarray
    vector_b: np.ndarray
    projectors: tuple[Projector, ...]
    residuals: Residuals = field(repr=False)

    @property
    def theta_deg(self) -> np.ndarray:
        return np.degrees(self.beta)

    @property
    def anchor(self) -> str:
        return self.dataset.exemplars[self.anchor_index]

    @property
    def max_residual(self) -> float:
        return self.residuals.max

    @property
    def disjunction_vector(self) -> np.ndarray:
        return (self.vector_a + self.vector_b) / np.sqrt(2.0)

    def classification(self) -> list[Classification]:
        return classify_interference(self.terms, self.beta)

    def ranking(self, by: Literal["angle", "magnitude"] = "angle"):
        return rank_interference(self.terms, self.beta, self.dataset.exemplars, by=by)


def interference_terms(ds: DisjunctionDataset) -> InterferenceTerms:
    a, b, ab = ds.mu_a.weights, ds.mu_b.weights, ds.mu_a_or_b.weights
    return InterferenceTerms(ab - (a + b) / 2)


def lambda_magnitudes(ds: DisjunctionDataset, clamp_eps: float = EPS) -> np.ndarray:
    """|lambda_k| = sqrt(mu(A)_k mu(B)_k - I_k^2).

    Raises NotRepresentable if the discriminant is below ``-clamp_eps`` for any
    exemplar: the interference there is larger than any pair of amplitudes
    with those moduli can produce.
    """
    if clamp_eps < 0:
        raise ValueError("clamp_eps must be nonnegative")
    terms = interference_terms(ds).values
    disc = ds.mu_a.weights * ds.mu_b.weights - terms**2
    bad = np.flatnonzero(disc < -clamp_eps)
    if bad.size:
        names = ", ".join(ds.exemplars[k] for k in bad)
        raise NotRepresentable(
            f"|I_k| > sqrt(mu_a * mu_b) for {names}; no Hilbert-space model exists"
        )
    return np.sqrt(np.clip(disc, 0.0, None))


def select_anchor(lambda_abs: Sequence[float]) -> int:
    lam = np.asarray(lambda_abs, dtype=float)
    if lam.size == 0:
        raise EmptyInput("no lambda magnitudes given")
    return int(np.argmax(lam))  # first occurrence on ties


def assign_signs(lambda_abs: Sequence[float], m: int) -> SignAssignment:
    """Greedy signs keeping |sum_{k != m} lambda_k| <= max_{k != m} |lambda_k|.

    Magnitudes are visited largest first (ties by index); each sign opposes the
    running sum, with a zero sum resolved to -1. The anchor gets the sign of
    -sum_{k != m} lambda_k (+1 on zero), matching the sine of beta_m.
    """
    lam = np.abs(np.asarray(lambda_abs, dtype=float))
    n = lam.size
    if not 0 <= m < n:
        raise IndexOutOfRange(f"anchor index {m} outside [0, {n})")
    if np.any(lam > lam[m]):
        raise AnchorNotMaximal(f"|lambda_{m}| = {lam[m]} is not the largest magnitude")
    signs = [1] * n
    running = 0.0
    for k in sorted((k for k in range(n) if k != m), key=lambda k: (-lam[k], k)):
        s = -1 if running >= 0 else 1
        signs[k] = s
        running += s * lam[k]
    signs[m] = 1 if -running >= 0 else -1
    return SignAssignment(tuple(signs), source="greedy")


def _rest_sum(lam: np.ndarray, m: int) -> float:
    return float(np.sum(np.delete(lam, m)))


def compute_cm(
    ds: DisjunctionDataset, terms: InterferenceTerms, lam: Sequence[float], m: int
) -> float:
    lam = np.asarray(lam, dtype=float)
    rest = _rest_sum(lam, m)
    numerator = rest**2 + terms.values[m] ** 2
    mass = ds.mu_a.weights[m] * ds.mu_b.weights[m]
    if mass == 0:
        if numerator <= EPS**2:
            # anchor amplitude vanishes in both vectors; any c_m works
            return 0.0
        raise ZeroAnchorMass(f"mu_a * mu_b = 0 at anchor {ds.exemplars[m]!r}")
    c_m = float(np.sqrt(numerator / mass))
    if c_m > 1 + EPS:
        raise ConstraintViolated(
            f"c_m = {c_m:.6g} > 1: |sum of non-anchor lambdas| = {abs(rest):.6g} exceeds "
            f"|lambda_m| = {np.sqrt(max(mass - terms.values[m] ** 2, 0.0)):.6g}"
        )
    return min(c_m, 1.0)


def _wrap(angle: np.ndarray) -> np.ndarray:
    return np.where(angle <= -np.pi, angle + 2 * np.pi, angle)


def phases_rad(
    ds: DisjunctionDataset,
    terms: InterferenceTerms,
    lam: Sequence[float],
    m: int,
    c_m: float,
    signs: Sequence[int] | None = None,
) -> np.ndarray:
    lam = np.asarray(lam, dtype=float)
    if signs is None:
        signs = np.where(lam < 0, -1.0, 1.0)
    signs = np.asarray(signs, dtype=float)
    scale = np.sqrt(ds.mu_a.weights * ds.mu_b.weights)
    I = terms.values
    beta = np.zeros(len(I))
    for k in range(len(I)):
        if k == m:
            continue
        if scale[k] == 0:
            if abs(I[k]) > EPS:
                raise NotRepresentable(
                    f"{ds.exemplars[k]!r} has zero mu_a * mu_b but interference {I[k]:.3g}"
                )
            continue
        x = I[k] / scale[k]
        if abs(x) > 1 + EPS:
            raise NotRepresentable(f"arccos argument {x:.12g} for {ds.exemplars[k]!r}")
        beta[k] = signs[k] * np.arccos(np.clip(x, -1.0, 1.0))
    if c_m > 0:
        g = c_m * scale[m]
        beta[m] = np.arctan2(-_rest_sum(lam, m) / g, I[m] / g)
    return _wrap(beta)


def compute_phases(ds, terms, lam, m, c_m, signs=None) -> np.ndarray:
    """Phase angles beta_k in degrees, in (-180, 180]."""
    return np.degrees(phases_rad(ds, terms, lam, m, c_m, signs))


def build_state_vectors(
    ds: DisjunctionDataset, m: int, c_m: float, beta_rad: Sequence[float]
) -> tuple[np.ndarray, np.ndarray]:
    a = ds.mu_a.weights
    b = ds.mu_b.weights
    n = len(a)
    beta = np.asarray(beta_rad, dtype=float)
    vec_a = np.zeros(n + 1, dtype=np.complex128)
    vec_a[:n] = np.sqrt(a)
    vec_b = np.zeros(n + 1, dtype=np.complex128)
    vec_b[:n] = np.exp(1j * beta) * np.sqrt(b)
    vec_b[m] *= c_m
    vec_b[n] = np.sqrt(max(b[m] * (1.0 - c_m**2), 0.0))
    overlap = abs(inner_product(vec_a, vec_b))
    if overlap > 1e-6:
        raise OrthogonalityFailure(f"|<A|B>| = {overlap:.3g}")
    return vec_a, vec_b


def build_projectors(n: int, m: int) -> tuple[Projector, ...]:
    """M_k onto coordinate k, except M_m onto coordinates m and n (0-based)."""
    if not 0 <= m < n:
        raise IndexOutOfRange(f"anchor index {m} outside [0, {n})")
    return tuple(Projector(frozenset({k, n} if k == m else {k})) for k in range(n))


def reconstruction_residuals(
    vector_a, vector_b, projectors: Sequence[Projector], ds: DisjunctionDataset
) -> Residuals:
    disj = (np.asarray(vector_a) + np.asarray(vector_b)) / np.sqrt(2.0)
    got_a = np.array([project_probability(vector_a, p) for p in projectors])
    got_b = np.array([project_probability(vector_b, p) for p in projectors])
    got_ab = np.array([project_probability(disj, p) for p in projectors])
    return Residuals(
        np.abs(got_a - ds.mu_a.weights),
        np.abs(got_b - ds.mu_b.weights),
        np.abs(got_ab - ds.mu_a_or_b.weights),
    )


def verify_reconstruction(fit: InterferenceFit, ds: DisjunctionDataset | None = None) -> Residuals:
    return reconstruction_residuals(
        fit.vector_a, fit.vector_b, fit.projectors, fit.dataset if ds is None else ds
    )


def classify_interference(terms: InterferenceTerms, beta=None) -> list[Classification]:
    out: list[Classification] = []
    for value in np.asarray(getattr(terms, "values", terms), dtype=float):
        if abs(value) <= NEUTRAL_EPS:
            out.append("neutral")
        elif value < 0:
            out.append("weakening")
        else:
            out.append("strengthening")
    return out


def rank_interference(
    terms: InterferenceTerms,
    beta,
    exemplars: Sequence[str],
    by: Literal["angle", "magnitude"] = "angle",
) -> dict[str, list[str]]:
    """Order exemplars within each class from strongest to weakest effect.

    ``by="angle"`` ranks by how far |beta_k| sits from 90 degrees, i.e. by the
    interference relative to sqrt(mu_a mu_b); ``by="magnitude"`` ranks by |I_k|.
    """
    values = np.asarray(terms.values, dtype=float)
    labels = classify_interference(terms)
    if by == "angle":
        strength = np.abs(np.cos(np.asarray(beta, dtype=float)))
    elif by == "magnitude":
        strength = np.abs(values)
    else:
        raise ValueError(f"unknown ranking {by!r}")
    ranked: dict[str, list[str]] = {"strengthening": [], "weakening": [], "neutral": []}
    for k in sorted(range(len(values)), key=lambda k: (-strength[k], k)):
        ranked[labels[k]].append(exemplars[k])
    return ranked


def _coerce_signs(signs, n: int) -> SignAssignment:
    if not isinstance(signs, SignAssignment):
        signs = SignAssignment(tuple(signs), source="user-supplied")
    if len(signs) != n:
        raise LengthMismatch(f"{len(signs)} signs given for {n} exemplars")
    return signs


def fit_disjunction(
    ds: DisjunctionDataset,
    signs: SignAssignment | Sequence[int] | None = None,
    clamp_eps: float = EPS,
) -> InterferenceFit:
    """Run the full construction on a validated dataset.

    Without ``signs`` the greedy balancing rule picks them. Supplied signs are
    used as given; they fail with ConstraintViolated if they push c_m past 1.
    """
    n = len(ds)
    terms = interference_terms(ds)
    mags = lambda_magnitudes(ds, clamp_eps)
    m = select_anchor(mags)
    signs = assign_signs(mags, m) if signs is None else _coerce_signs(signs, n)
    lam = signs.as_array() * mags
    c_m = compute_cm(ds, terms, lam, m)
    beta = phases_rad(ds, terms, lam, m, c_m, signs.signs)
    vec_a, vec_b = build_state_vectors(ds, m, c_m, beta)
    projectors = build_projectors(n, m)
    residuals = reconstruction_residuals(vec_a, vec_b, projectors, ds)
    return InterferenceFit(
        dataset=ds,
        terms=terms,
        signs=signs,
        anchor_index=m,
        lambdas=lam,
        c_m=c_m,
        beta=beta,
        vector_a=vec_a,
        vector_b=vec_b,
        projectors=projectors,
        residuals=residuals,
    )


def state_norms(fit: InterferenceFit) -> tuple[float, float]:
    return norm(fit.vector_a), norm(fit.vector_b)
