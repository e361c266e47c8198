from dataclasses import dataclass, replace
from enum import Enum

import numpy as np
from numpy.typing import NDArray

from core.errors import ParameterError
from pulses import NonlinearDetuningPulse


class ModelKind(Enum):
    ARP_TWO_LEVEL = "arp_two_level"
    STIRAP_THREE_LEVEL = "stirap_three_level"
    ENSEMBLE_TWO_LEVEL = "ensemble_two_level"
    ENSEMBLE_THREE_LEVEL_FULL = "ensemble_three_level_full"
    ENSEMBLE_THREE_LEVEL_SYMMETRIC = "ensemble_three_level_symmetric"
    FORSTER_CHANNEL = "forster_channel"

    @property
    def is_two_level(self) -> bool:
        return self in (
            ModelKind.ARP_TWO_LEVEL,
            ModelKind.ENSEMBLE_TWO_LEVEL,
            ModelKind.FORSTER_CHANNEL,
        )


@dataclass(frozen=True)
class ExtraChannel:
    """Off-resonant pair channel with a constant offset from the tuned one."""

    offset: float  # rad/µs
    coupling_ratio: float  # relative to V


@dataclass(frozen=True)
class ForsterChannelParams:
    """Effective two-atom Förster channel |r₀r₁⟩ ↔ |r₂r₃⟩.

    The tuned defect δ_F(t) is the detuning of `detuning_waveform`; the
    zero-field defect is kept for reporting only. With `envelope_width`
    set, V is modulated by Gaussians centered on each passage.
    """

    defect_at_zero_field: float  # rad/µs
    coupling_coefficient: float  # C₃ in rad·µm³/µs
    distance: float  # µm
    detuning_waveform: NonlinearDetuningPulse
    envelope_width: float | None = None
    extra_channels: tuple[ExtraChannel, ...] = ()

    def __post_init__(self):
        if self.distance <= 0:
            raise ParameterError(f"Interatomic distance must be positive, got R = {self.distance} µm")
        if self.coupling_coefficient <= 0:
            raise ParameterError(f"C3 must be positive, got {self.coupling_coefficient}")
        if self.envelope_width is not None and self.envelope_width <= 0:
            raise ParameterError(f"Envelope width must be positive, got {self.envelope_width}")

    @property
    def coupling(self) -> float:
        """V = C₃/R³ in rad/µs."""
        return self.coupling_coefficient / self.distance**3

    @classmethod
    def from_coupling(
        cls,
        coupling: float,
        distance: float,
        detuning_waveform: NonlinearDetuningPulse,
        defect_at_zero_field: float = 0.0,
        **kwargs,
    ) -> "ForsterChannelParams":
        """Fix C₃ so that V has the given value at the given distance."""
        if distance <= 0:
            raise ParameterError(f"Interatomic distance must be positive, got R = {distance} µm")
        return cls(defect_at_zero_field, coupling * distance**3, distance, detuning_waveform, **kwargs)

    def with_distance(self, distance: float) -> "ForsterChannelParams":
        return replace(self, distance=distance)

    def envelope(self, t: NDArray[np.float64]) -> NDArray[np.float64]:
        t = np.asarray(t, dtype=float)
        if self.envelope_width is None:
            return np.ones_like(t)
        centers = np.asarray(self.detuning_waveform.centers)
        return np.exp(-((t[..., None] - centers) ** 2) / (2 * self.envelope_width**2)).sum(axis=-1)
