"""Module-level evaluation helpers over any pulse type."""

from .protocol import PulseProtocol
from .types import RabiPair, TimeLike


def eval_rabi(pulse: PulseProtocol, t: TimeLike) -> TimeLike | RabiPair:
    """Instantaneous Rabi frequency (rad/µs); a RabiPair for pump/Stokes pulses."""
    return pulse.rabi(t)


def eval_detuning(pulse: PulseProtocol, t: TimeLike) -> TimeLike:
    """Instantaneous detuning (rad/µs)."""
    return pulse.detuning(t)


def support_window(pulse: PulseProtocol, threshold: float | None = None) -> tuple[float, float]:
    """Time window (µs) outside which all envelopes are below threshold·peak."""
    return pulse.support(threshold)
