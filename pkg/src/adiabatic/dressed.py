"""Dressed-state picture of a two-level passage with H = (1/2)[[−δ, Ω₀], [Ω₀, δ]]."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray
from scipy.integrate import cumulative_trapezoid

from core.errors import UndefinedAngleError
from .area import as_two_level_model


def _branch_trig(rabi, detuning, flipped=False):
    rabi = np.asarray(rabi, dtype=float)
    detuning = np.asarray(detuning, dtype=float)
    effective = np.hypot(rabi, detuning)
    if np.any(effective == 0.0):
        raise UndefinedAngleError("Mixing angle is undefined where Ω₀ = δ = 0")
    # θ in [0, π/2]; atan2 stays accurate when Ω₀ ≪ |δ|
    theta = 0.5 * np.arctan2(np.abs(rabi), detuning)
    theta = np.where(flipped, -theta, theta)
    return np.sin(theta), np.cos(theta), effective


def mixing_angle(rabi, detuning, flipped=False):
    """θ from sinθ = √(½(1 − δ/Ω)), cosθ = √(½(1 + δ/Ω)); flipped takes the −θ branch."""
    sin, cos, _ = _branch_trig(rabi, detuning, flipped)
    return np.arctan2(sin, cos)[()]


@dataclass(frozen=True, eq=False)
class DressedDecomposition:
    times: NDArray[np.float64]
    mixing_angle: NDArray[np.float64]
    dressed_amplitudes: NDArray[np.complex128]  # columns c̃₁, c̃₂
    effective_rabi: NDArray[np.float64]

    @property
    def norms(self) -> NDArray[np.float64]:
        return np.linalg.norm(self.dressed_amplitudes, axis=1)


def _rotate(sin, cos, amplitudes):
    c1, c2 = amplitudes[:, 0], amplitudes[:, 1]
    return np.stack([cos * c1 - sin * c2, sin * c1 + cos * c2], axis=1)


def decompose(source, times, amplitudes, flipped=None) -> DressedDecomposition:
    """Dressed amplitudes of bare two-level amplitudes along times.

    The flipped branch is used where Ω₀ < 0 unless `flipped` is given.
    """
    model = as_two_level_model(source)
    times = np.asarray(times, dtype=float)
    rabi, detuning = model.two_level_parameters(times)
    flipped = rabi < 0 if flipped is None else flipped
    sin, cos, effective = _branch_trig(rabi, detuning, flipped)
    dressed = _rotate(sin, cos, np.asarray(amplitudes, dtype=complex))
    return DressedDecomposition(times, np.arctan2(sin, cos), dressed, effective)


def to_bare(decomposition: DressedDecomposition) -> NDArray[np.complex128]:
    """Inverse of decompose."""
    sin, cos = np.sin(decomposition.mixing_angle), np.cos(decomposition.mixing_angle)
    return _rotate(-sin, cos, decomposition.dressed_amplitudes)


def predict_adiabatic_amplitudes(source, times, initial=(1.0, 0.0)) -> NDArray[np.complex128]:
    """Bare amplitudes under perfect adiabatic following from `initial` at times[0].

    The lower dressed state |I⟩ gains exp(+i∫Ω/2), the upper exp(−i∫Ω/2).
    """
    model = as_two_level_model(source)
    times = np.asarray(times, dtype=float)
    rabi, detuning = model.two_level_parameters(times)
    sin, cos, effective = _branch_trig(rabi, detuning, rabi < 0)

    start = _rotate(sin[:1], cos[:1], np.asarray([initial], dtype=complex))[0]
    half_area = 0.5 * cumulative_trapezoid(effective, times, initial=0.0)
    dressed = np.stack([start[0] * np.exp(1j * half_area), start[1] * np.exp(-1j * half_area)], axis=1)
    return _rotate(-sin, cos, dressed)


def adiabaticity_margin(source, grid) -> NDArray[np.float64]:
    """max(|Ω̇₀|, |δ̇|)/Ω² on the grid nodes; infinite where Ω = 0.

    Derivatives are taken inside each grid segment so that jumps at
    breakpoints do not show up as rates.
    """
    model = as_two_level_model(source)
    pieces = []
    for (a, b), n in zip(grid.segments(), grid.segment_steps()):
        times = np.linspace(a, b, n + 1)
        samples = times.copy()
        samples[-1] = np.nextafter(b, -np.inf)
        rabi, detuning = model.two_level_parameters(samples)
        effective_sq = rabi**2 + detuning**2
        dt = (b - a) / n
        rate = np.maximum(np.abs(np.gradient(rabi, dt)), np.abs(np.gradient(detuning, dt)))
        with np.errstate(divide="ignore", invalid="ignore"):
            margin = np.where(effective_sq > 0, rate / effective_sq, np.inf)
        pieces.append(margin if not pieces else margin[1:])
    return np.concatenate(pieces)
