"""Double-slit detection densities on a one-dimensional screen.

Each slit contributes a Gaussian envelope centred on its image at -s/2 or
+s/2, with a phase set by the straight path length from the slit to the
screen point:

    psi_j(x) = N exp(-(x - a_j)^2 / (4 sigma^2)) exp(i k r_j(x)),
    r_j(x) = sqrt(L^2 + (x - a_j)^2),  N = (2 pi sigma^2)^(-1/4).

The detection density with both slits open is 1/2 |psi_A + psi_B|^2, which
splits into the classical average 1/2 (|psi_A|^2 + |psi_B|^2) plus the
interference term Re(psi_A^* psi_B).
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Literal

import numpy as np

from .errors import InvalidConfig

CSV_COLUMNS = ("x", "rho_a", "rho_b", "rho_classical", "rho_quantum", "interference")


@dataclass(frozen=True)
class SlitConfig:
    wavelength: float = 500e-9
    separation: float = 1e-4
    distance: float = 1.0
    sigma: float = 5e-4
    x_min: float | None = None
    x_max: float | None = None
    points: int = 2001

    def __post_init__(self):
        for name in ("wavelength", "separation", "distance", "sigma"):
            value = getattr(self, name)
            if not (np.isfinite(value) and value > 0):
                raise InvalidConfig(f"{name} must be positive, got {value}")
        if isinstance(self.points, bool) or int(self.points) != self.points or self.points < 2:
            raise InvalidConfig(f"points must be an integer >= 2, got {self.points}")
        # default screen: 8 sigma beyond the outer slit images
        half = self.separation / 2 + 8 * self.sigma
        if self.x_min is None:
            object.__setattr__(self, "x_min", -half)
        if self.x_max is None:
            object.__setattr__(self, "x_max", half)
        if not (np.isfinite(self.x_min) and np.isfinite(self.x_max)):
            raise InvalidConfig("screen bounds must be finite")
        if not self.x_max > self.x_min:
            raise InvalidConfig(f"empty screen interval [{self.x_min}, {self.x_max}]")
        object.__setattr__(self, "points", int(self.points))

    @property
    def wavenumber(self) -> float:
        return 2 * np.pi / self.wavelength

    @property
    def normalization(self) -> float:
        return (2 * np.pi * self.sigma**2) ** -0.25

    @property
    def fringe_spacing(self) -> float:
        """Small-angle estimate lambda L / s."""
        return self.wavelength * self.distance / self.separation

    def grid(self) -> np.ndarray:
        x = np.linspace(self.x_min, self.x_max, self.points)
        if self.x_min == -self.x_max:
            x = (x - x[::-1]) / 2  # exactly antisymmetric
        return x


def slit_position(cfg: SlitConfig, slit: Literal["A", "B"]) -> float:
    if slit == "A":
        return -cfg.separation / 2
    if slit == "B":
        return cfg.separation / 2
    raise InvalidConfig(f"unknown slit {slit!r}")


def wave_amplitude(cfg: SlitConfig, slit: Literal["A", "B"], x) -> np.ndarray | complex:
    a = slit_position(cfg, slit)
    x_arr = np.asarray(x, dtype=float)
    d = x_arr - a
    r = np.hypot(cfg.distance, d)
    # k r is ~1e7 rad; split off k L mod 2 pi to keep the fringe phase accurate
    excess = d**2 / (r + cfg.distance)
    phase = cfg.wavenumber * excess + np.fmod(cfg.wavenumber * cfg.distance, 2 * np.pi)
    psi = cfg.normalization * np.exp(-(d**2) / (4 * cfg.sigma**2)) * np.exp(1j * phase)
    return complex(psi) if np.ndim(psi) == 0 else psi


@dataclass(frozen=True, eq=False)
class ScreenProfile:
    x: np.ndarray
    rho_a: np.ndarray
    rho_b: np.ndarray
    rho_classical: np.ndarray
    rho_quantum: np.ndarray
    interference: np.ndarray

    def columns(self) -> dict[str, np.ndarray]:
        return {name: getattr(self, name) for name in CSV_COLUMNS}

    def to_csv(self, path) -> None:
        cols = self.columns()
        lines = [",".join(CSV_COLUMNS)]
        for i in range(len(self.x)):
            lines.append(",".join(format(float(cols[c][i]), ".17g") for c in CSV_COLUMNS))
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")

    @classmethod
    def from_csv(cls, path) -> "ScreenProfile":
        data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
        return cls(*(data[:, i] for i in range(len(CSV_COLUMNS))))

    def integrals(self) -> dict[str, float]:
        return {
            name: float(np.trapezoid(getattr(self, name), self.x))
            for name in CSV_COLUMNS[1:]
        }


def screen_profile(cfg: SlitConfig, closed: Literal["A", "B"] | None = None) -> ScreenProfile:
    """Sample all densities on the screen grid; ``closed`` zeroes one slit's wave."""
    x = cfg.grid()
    psi_a = wave_amplitude(cfg, "A", x)
    psi_b = wave_amplitude(cfg, "B", x)
    if closed == "A":
        psi_a = np.zeros_like(psi_a)
    elif closed == "B":
        psi_b = np.zeros_like(psi_b)
    elif closed is not None:
        raise InvalidConfig(f"unknown slit {closed!r}")
    rho_a = np.abs(psi_a) ** 2
    rho_b = np.abs(psi_b) ** 2
    return ScreenProfile(
        x=x,
        rho_a=rho_a,
        rho_b=rho_b,
        rho_classical=(rho_a + rho_b) / 2,
        rho_quantum=np.abs(psi_a + psi_b) ** 2 / 2,
        interference=(np.conj(psi_a) * psi_b).real,
    )


def local_maxima(values) -> np.ndarray:
    """Indices of strict interior local maxima (plateaus count once, at their left edge)."""
    v = np.asarray(values, dtype=float)
    if v.size < 3:
        return np.array([], dtype=int)
    idx = []
    i = 1
    while i < v.size - 1:
        if v[i] > v[i - 1]:
            j = i
            while j < v.size - 1 and v[j + 1] == v[i]:
                j += 1
            if j < v.size - 1 and v[j + 1] < v[i]:
                idx.append(i)
            i = j + 1
        else:
            i += 1
    return np.array(idx, dtype=int)


def measured_fringe_spacing(profile: ScreenProfile) -> float | None:
    """Distance between the central maximum of rho_quantum and its nearest neighbour.

    Returns None when rho_quantum has fewer than two local maxima on the grid.
    """
    peaks = local_maxima(profile.rho_quantum)
    if peaks.size < 2:
        return None
    xs = profile.x[peaks]
    centre = int(np.argmin(np.abs(xs)))
    gaps = []
    if centre > 0:
        gaps.append(xs[centre] - xs[centre - 1])
    if centre < xs.size - 1:
        gaps.append(xs[centre + 1] - xs[centre])
    return float(np.mean(gaps))
