from dataclasses import dataclass, replace
from typing import ClassVar

import numpy as np
from numpy.typing import NDArray

from core.errors import ConstraintError
from .types import TimeLike, as_output, broadcast_constant


@dataclass(frozen=True)
class NonlinearDetuningPulse:
    """Constant Rabi frequency with an odd-power detuning sweep per passage.

    Each center t_j owns the segment between the midpoints to its
    neighbours (outer edges mirror the adjacent half-gap). Inside that
    segment δ(t) = s₁·(t-t_j) + s₂·(t-t_j)^p with p = 3 or 5.
    """

    is_pair: ClassVar[bool] = False

    rabi_frequency: float
    centers: tuple[float, ...]
    slope: float
    coefficient: float = 0.0
    odd_power: int = 3
    half_span: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "centers", tuple(float(c) for c in self.centers))
        if not self.centers:
            raise ConstraintError("At least one passage center is required")
        if self.odd_power not in (3, 5):
            raise ConstraintError(f"odd_power must be 3 or 5, got {self.odd_power}")
        if any(b <= a for a, b in zip(self.centers, self.centers[1:])):
            raise ConstraintError(f"Centers must be strictly increasing: {self.centers}")
        if len(self.centers) == 1 and (self.half_span is None or self.half_span <= 0):
            raise ConstraintError("A single-passage pulse needs a positive half_span")

    @property
    def midpoints(self) -> tuple[float, ...]:
        return tuple(0.5 * (a + b) for a, b in zip(self.centers, self.centers[1:]))

    def _outer_half_spans(self) -> tuple[float, float]:
        if self.half_span is not None:
            return self.half_span, self.half_span
        return (
            0.5 * (self.centers[1] - self.centers[0]),
            0.5 * (self.centers[-1] - self.centers[-2]),
        )

    def segment_index(self, t: TimeLike) -> NDArray[np.intp]:
        """Index of the passage owning each time (midpoints belong to the later one)."""
        return np.searchsorted(np.asarray(self.midpoints), np.asarray(t, dtype=float), side="right")

    def local_time(self, t: TimeLike) -> TimeLike:
        """t - t_j for the owning center t_j."""
        t = np.asarray(t, dtype=float)
        return as_output(t - np.asarray(self.centers)[self.segment_index(t)])

    def rabi(self, t: TimeLike) -> TimeLike:
        return broadcast_constant(self.rabi_frequency, t)

    def detuning(self, t: TimeLike) -> TimeLike:
        tau = np.asarray(self.local_time(t))
        return as_output(self.slope * tau + self.coefficient * tau**self.odd_power)

    def support(self, threshold: float | None = None) -> tuple[float, float]:
        before, after = self._outer_half_spans()
        return self.centers[0] - before, self.centers[-1] + after

    def breakpoints(self) -> tuple[float, ...]:
        return self.midpoints

    def shifted(self, dt: float) -> "NonlinearDetuningPulse":
        return replace(self, centers=tuple(c + dt for c in self.centers))

    def flipped(self) -> "NonlinearDetuningPulse":
        return replace(self, rabi_frequency=-self.rabi_frequency)

    def with_detuning_sign(self, sign: int) -> "NonlinearDetuningPulse":
        return replace(self, slope=sign * self.slope, coefficient=sign * self.coefficient)
