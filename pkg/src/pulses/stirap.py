from dataclasses import dataclass, replace
from typing import ClassVar

import numpy as np
from scipy.special import expit

from core.config import config
from core.errors import ConstraintError
from .gaussian import gaussian_half_width
from .types import DetuningSignRule, RabiPair, TimeLike, broadcast_constant, sgn


@dataclass(frozen=True)
class StirapPair:
    """Gaussian Stokes and pump pulses driving g→e→r.

    A plain pair fires the Stokes pulse first (counterintuitive order). A
    mirrored pair is the symmetric double sequence: each field is the sum
    of two Gaussians centered at ±center.
    """

    is_pair: ClassVar[bool] = True

    stokes_peak: float
    pump_peak: float
    stokes_center: float
    pump_center: float
    width: float
    delta: float = 0.0
    detuning_sign_rule: DetuningSignRule = DetuningSignRule.CONSTANT
    mirrored: bool = False

    def __post_init__(self):
        if self.width <= 0:
            raise ConstraintError(f"Pulse width must be positive, got {self.width}")
        if self.mirrored:
            if self.stokes_center <= 0 or self.pump_center <= 0:
                raise ConstraintError(
                    "Mirrored pairs need positive centers, got "
                    f"stokes={self.stokes_center}, pump={self.pump_center}"
                )
        elif not self.stokes_center < self.pump_center:
            raise ConstraintError(
                f"Stokes pulse ({self.stokes_center}) must precede pump pulse "
                f"({self.pump_center})"
            )

    def _centers(self, center: float) -> tuple[float, ...]:
        return (-center, center) if self.mirrored else (center,)

    def _gaussians(self, t: TimeLike, center: float) -> TimeLike:
        t = np.asarray(t, dtype=float)
        total = sum(
            np.exp(-((t - c) ** 2) / (2.0 * self.width**2)) for c in self._centers(center)
        )
        return total[()]

    def pump(self, t: TimeLike) -> TimeLike:
        return self.pump_peak * self._gaussians(t, self.pump_center)

    def stokes(self, t: TimeLike) -> TimeLike:
        return self.stokes_peak * self._gaussians(t, self.stokes_center)

    def rabi(self, t: TimeLike) -> RabiPair:
        return RabiPair(self.pump(t), self.stokes(t))

    def detuning(self, t: TimeLike) -> TimeLike:
        if self.detuning_sign_rule is DetuningSignRule.SIGN_OF_TIME:
            return self.delta * sgn(t)
        return broadcast_constant(self.delta, t)

    def support(self, threshold: float | None = None) -> tuple[float, float]:
        threshold = threshold if threshold is not None else config.truncation_threshold
        half = gaussian_half_width(self.width, threshold)
        centers = self._centers(self.stokes_center) + self._centers(self.pump_center)
        return min(centers) - half, max(centers) + half

    def breakpoints(self) -> tuple[float, ...]:
        if self.detuning_sign_rule is DetuningSignRule.SIGN_OF_TIME:
            return (0.0,)
        return ()

    def shifted(self, dt: float) -> "StirapPair":
        if self.mirrored or self.detuning_sign_rule is DetuningSignRule.SIGN_OF_TIME:
            raise ConstraintError("Pairs anchored at t=0 cannot be shifted")
        return replace(
            self,
            stokes_center=self.stokes_center + dt,
            pump_center=self.pump_center + dt,
        )

    def flipped(self) -> "StirapPair":
        """Invert the pump field sign."""
        return replace(self, pump_peak=-self.pump_peak)

    def with_detuning_sign(self, sign: int) -> "StirapPair":
        return replace(self, delta=sign * self.delta)

    def reversed_order(self, center: float | None = None) -> "StirapPair":
        """Pump-first copy around center, used for the return passage.

        The returned pair keeps the pulse shapes but swaps the time order of
        the two fields, so it is built without the counterintuitive check.
        """
        center = center if center is not None else 0.5 * (self.stokes_center + self.pump_center)
        mirror = ReturnPair(
            stokes_peak=self.stokes_peak,
            pump_peak=self.pump_peak,
            stokes_center=2 * center - self.stokes_center,
            pump_center=2 * center - self.pump_center,
            width=self.width,
            delta=self.delta,
        )
        return mirror


@dataclass(frozen=True)
class ReturnPair(StirapPair):
    """Pump-first pair that brings population from r back to g."""

    def __post_init__(self):
        if self.width <= 0:
            raise ConstraintError(f"Pulse width must be positive, got {self.width}")
        if not self.pump_center < self.stokes_center:
            raise ConstraintError(
                f"Return pair needs the pump ({self.pump_center}) before the "
                f"Stokes pulse ({self.stokes_center})"
            )

    def shifted(self, dt: float) -> "ReturnPair":
        return replace(
            self,
            stokes_center=self.stokes_center + dt,
            pump_center=self.pump_center + dt,
        )


@dataclass(frozen=True)
class OptimizedStirapPair:
    """Pulse pair with a common hypergaussian envelope and logistic mixing.

    Ω_P = Ω_V·F·cos(πf/2), Ω_S = Ω_V·F·sin(πf/2), with
    F = exp[-((t-t₀)/T₀)^(2n)] and f = 1/(1 + exp(-λ(t-t₀)/τ)).
    """

    is_pair: ClassVar[bool] = True

    amplitude: float
    hyper_width: float
    hyper_order: int = 3
    steepness: float = 4.0
    tau: float | None = None
    center: float = 0.0
    delta: float = 0.0
    pump_sign: int = 1

    def __post_init__(self):
        if self.pump_sign not in (1, -1):
            raise ConstraintError(f"pump_sign must be +1 or -1, got {self.pump_sign}")
        if self.hyper_width <= 0:
            raise ConstraintError(f"hyper_width must be positive, got {self.hyper_width}")
        if self.hyper_order < 1:
            raise ConstraintError(f"hyper_order must be >= 1, got {self.hyper_order}")
        if self.effective_tau <= 0:
            raise ConstraintError(f"tau must be positive, got {self.effective_tau}")

    @property
    def effective_tau(self) -> float:
        return self.tau if self.tau is not None else self.hyper_width / 2.0

    def envelope(self, t: TimeLike) -> TimeLike:
        x = (np.asarray(t, dtype=float) - self.center) / self.hyper_width
        return np.exp(-(x ** (2 * self.hyper_order)))[()]

    def switching(self, t: TimeLike) -> TimeLike:
        x = (np.asarray(t, dtype=float) - self.center) / self.effective_tau
        return expit(self.steepness * x)[()]

    def pump(self, t: TimeLike) -> TimeLike:
        return self.pump_sign * self.amplitude * self.envelope(t) * np.cos(0.5 * np.pi * self.switching(t))

    def stokes(self, t: TimeLike) -> TimeLike:
        return self.amplitude * self.envelope(t) * np.sin(0.5 * np.pi * self.switching(t))

    def rabi(self, t: TimeLike) -> RabiPair:
        return RabiPair(self.pump(t), self.stokes(t))

    def detuning(self, t: TimeLike) -> TimeLike:
        return broadcast_constant(self.delta, t)

    def support(self, threshold: float | None = None) -> tuple[float, float]:
        threshold = threshold if threshold is not None else config.truncation_threshold
        half = self.hyper_width * np.log(1.0 / threshold) ** (1.0 / (2 * self.hyper_order))
        return self.center - float(half), self.center + float(half)

    def breakpoints(self) -> tuple[float, ...]:
        return ()

    def shifted(self, dt: float) -> "OptimizedStirapPair":
        return replace(self, center=self.center + dt)

    def flipped(self) -> "OptimizedStirapPair":
        """Invert the pump field sign."""
        return replace(self, pump_sign=-self.pump_sign)

    def with_detuning_sign(self, sign: int) -> "OptimizedStirapPair":
        return replace(self, delta=sign * self.delta)
