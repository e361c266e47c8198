from dataclasses import dataclass, replace
from typing import ClassVar

import numpy as np

from core.config import config
from core.errors import ConstraintError
from .types import TimeLike


def gaussian_half_width(width: float, threshold: float) -> float:
    """Distance from the center where exp(-x²/2w²) drops to threshold."""
    return width * float(np.sqrt(2.0 * np.log(1.0 / threshold)))


@dataclass(frozen=True)
class GaussianChirpPulse:
    """Gaussian Rabi envelope with a linear detuning chirp.

    Ω(t) = phase_sign·Ω₀·exp[-(t-center)²/2w²], δ(t) = α·(t-center).
    """

    is_pair: ClassVar[bool] = False

    peak_rabi: float
    width: float
    center: float = 0.0
    chirp_rate: float = 0.0
    phase_sign: int = 1

    def __post_init__(self):
        if self.width <= 0:
            raise ConstraintError(f"Pulse width must be positive, got {self.width}")
        if self.phase_sign not in (1, -1):
            raise ConstraintError(f"phase_sign must be +1 or -1, got {self.phase_sign}")

    def envelope(self, t: TimeLike) -> TimeLike:
        return np.exp(-((t - self.center) ** 2) / (2.0 * self.width**2))

    def rabi(self, t: TimeLike) -> TimeLike:
        return self.phase_sign * self.peak_rabi * self.envelope(t)

    def detuning(self, t: TimeLike) -> TimeLike:
        return self.chirp_rate * (np.asarray(t, dtype=float) - self.center)[()]

    def support(self, threshold: float | None = None) -> tuple[float, float]:
        threshold = threshold if threshold is not None else config.truncation_threshold
        half = gaussian_half_width(self.width, threshold)
        return self.center - half, self.center + half

    def breakpoints(self) -> tuple[float, ...]:
        return ()

    def shifted(self, dt: float) -> "GaussianChirpPulse":
        return replace(self, center=self.center + dt)

    def flipped(self) -> "GaussianChirpPulse":
        return replace(self, phase_sign=-self.phase_sign)

    def with_detuning_sign(self, sign: int) -> "GaussianChirpPulse":
        return replace(self, chirp_rate=sign * self.chirp_rate)
