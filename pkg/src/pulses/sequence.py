from dataclasses import dataclass, field
from typing import Any

import numpy as np

from core.errors import ConstraintError
from .types import DoubleMode, RabiPair, TimeLike, as_output

# Supports may touch within this tolerance (µs).
_TOUCH_TOLERANCE = 1e-9


@dataclass(frozen=True)
class DoubleSequence:
    """Two passages of the same pulse kind played back to back.

    The second pulse is stored as written; `mode` decides how it is
    played (as is, with its Rabi field inverted, or with its detuning
    negated). Envelopes add; the detuning comes from the pulse owning the
    time, split at the midpoint between the two supports.
    """

    first: Any
    second: Any
    mode: DoubleMode = DoubleMode.IDENTICAL
    _played: Any = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if type(self.first) is not type(self.second):
            raise ConstraintError(
                f"Both passages must be the same pulse kind, got "
                f"{type(self.first).__name__} and {type(self.second).__name__}"
            )
        first_end = self.first.support()[1]
        second_start = self.second.support()[0]
        if second_start < first_end - _TOUCH_TOLERANCE:
            raise ConstraintError(
                f"Second pulse starts at {second_start:.6g} µs, before the first "
                f"ends at {first_end:.6g} µs"
            )
        if self.mode is DoubleMode.PHASE_FLIPPED:
            played = self.second.flipped()
        elif self.mode is DoubleMode.DETUNING_SIGN_SWITCHED:
            played = self.second.with_detuning_sign(-1)
        else:
            played = self.second
        object.__setattr__(self, "_played", played)

    @classmethod
    def repeated(
        cls, pulse: Any, mode: DoubleMode = DoubleMode.IDENTICAL, gap: float = 0.0
    ) -> "DoubleSequence":
        """Play pulse, then a copy starting where the first support ends."""
        start, end = pulse.support()
        return cls(pulse, pulse.shifted(end - start + gap), mode)

    @property
    def is_pair(self) -> bool:
        return self.first.is_pair

    @property
    def played_second(self) -> Any:
        """The second pulse as it is actually played."""
        return self._played

    @property
    def boundary(self) -> float:
        return 0.5 * (self.first.support()[1] + self.second.support()[0])

    def rabi(self, t: TimeLike) -> TimeLike | RabiPair:
        return self.first.rabi(t) + self._played.rabi(t)

    def detuning(self, t: TimeLike) -> TimeLike:
        t = np.asarray(t, dtype=float)
        return as_output(
            np.where(t < self.boundary, self.first.detuning(t), self._played.detuning(t))
        )

    def support(self, threshold: float | None = None) -> tuple[float, float]:
        return self.first.support(threshold)[0], self.second.support(threshold)[1]

    def breakpoints(self) -> tuple[float, ...]:
        return (
            tuple(self.first.breakpoints())
            + (self.boundary,)
            + tuple(self._played.breakpoints())
        )

    def shifted(self, dt: float) -> "DoubleSequence":
        return DoubleSequence(self.first.shifted(dt), self.second.shifted(dt), self.mode)

    def flipped(self) -> "DoubleSequence":
        return DoubleSequence(self.first.flipped(), self.second.flipped(), self.mode)

    def with_detuning_sign(self, sign: int) -> "DoubleSequence":
        return DoubleSequence(
            self.first.with_detuning_sign(sign), self.second.with_detuning_sign(sign), self.mode
        )
