from typing import Protocol, runtime_checkable

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from .types import TimeLike, RabiPair


@runtime_checkable
class PulseProtocol(Protocol):
    """Protocol every pulse waveform implements.

    Times are in µs and frequencies in rad/µs. Methods accept scalars or
    numpy arrays and return the same shape.
    """

    is_pair: bool

    def rabi(self, t: TimeLike) -> TimeLike | RabiPair:
        """Instantaneous (signed) Rabi frequency, or pump/Stokes pair."""
        ...

    def detuning(self, t: TimeLike) -> TimeLike:
        """Instantaneous detuning."""
        ...

    def support(self, threshold: float | None = None) -> tuple[float, float]:
        """Window outside which every envelope is below threshold·peak."""
        ...

    def breakpoints(self) -> tuple[float, ...]:
        """Times where the waveform is discontinuous."""
        ...

    def shifted(self, dt: float) -> Self:
        """Copy moved later in time by dt."""
        ...

    def flipped(self) -> Self:
        """Copy with the Rabi field sign inverted."""
        ...

    def with_detuning_sign(self, sign: int) -> Self:
        """Copy with the detuning multiplied by sign."""
        ...
