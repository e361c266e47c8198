"""Shared pulse enums and value types."""

from enum import Enum
from typing import NamedTuple, TypeAlias

import numpy as np
from numpy.typing import NDArray

TimeLike: TypeAlias = float | NDArray[np.float64]


class DetuningSignRule(Enum):
    """How a constant detuning depends on time."""

    CONSTANT = "constant"
    SIGN_OF_TIME = "sgn"  # δ·sgn(t) with sgn(0) = +1


class DoubleMode(Enum):
    """How the second pulse of a double sequence relates to the first."""

    IDENTICAL = "identical"
    PHASE_FLIPPED = "phase_flipped"
    DETUNING_SIGN_SWITCHED = "detuning_sign_switched"


class RabiPair(NamedTuple):
    """Pump and Stokes Rabi frequencies of a two-photon pulse pair."""

    pump: TimeLike
    stokes: TimeLike

    def __add__(self, other: "RabiPair") -> "RabiPair":  # type: ignore[override]
        return RabiPair(self.pump + other.pump, self.stokes + other.stokes)


def sgn(t: TimeLike) -> TimeLike:
    """Sign of t with sgn(0) = +1."""
    return np.copysign(1.0, np.asarray(t, dtype=float) + 0.0)[()]


def as_output(value: NDArray) -> TimeLike:
    """Unwrap 0-d arrays so scalar inputs give scalar outputs."""
    value = np.asarray(value)
    return value[()] if value.ndim == 0 else value


def broadcast_constant(value: float, t: TimeLike) -> TimeLike:
    """A constant waveform shaped like t."""
    return as_output(np.full(np.shape(t), value, dtype=float))
