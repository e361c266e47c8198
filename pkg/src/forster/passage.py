import logging
from dataclasses import dataclass

import numpy as np

from adiabatic import PassagePrediction, predict_passages
from core.errors import ConstraintError
from hamiltonians import ForsterChannelParams, forster_model
from propagator import IntegrationMethod, TimeGrid, Trajectory, propagate
from pulses import NonlinearDetuningPulse
from .scenario import DEFAULT_DISTANCE, ForsterScenario

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PassageResult:
    """Double passage of a Förster channel started in the initial pair state."""

    scenario: ForsterScenario
    trajectory: Trajectory
    prediction: PassagePrediction
    warnings: tuple[str, ...] = ()

    @property
    def amplitude(self) -> complex:
        return complex(self.trajectory.final_amplitudes[0])

    @property
    def population_error(self) -> float:
        return float(1.0 - abs(self.amplitude) ** 2)

    @property
    def phase(self) -> float:
        """Final phase of the initial channel in (−π, π]."""
        return float(np.angle(self.amplitude))

    @property
    def unwrapped_phase(self) -> float:
        return float(self.trajectory.phases[-1, 0])

    @property
    def max_margin(self) -> float:
        return max(step.max_margin for step in self.prediction.passes)

    @property
    def flagged(self) -> bool:
        return bool(self.warnings)

    def summary(self) -> dict:
        return {
            **self.scenario.summary(),
            "population_error": self.population_error,
            "phase": self.phase,
            "unwrapped_phase": self.unwrapped_phase,
            "predicted_phase": self.prediction.phase,
            "max_margin": self.max_margin,
            "flagged": self.flagged,
            "warnings": list(self.warnings),
        }


def run_double_passage(scenario: ForsterScenario, record_every: int = 1) -> PassageResult:
    """Propagate the pair channel through both passages.

    Passages whose adiabaticity margin exceeds the configured threshold
    are flagged on the result, not rejected.
    """
    model = scenario.model()
    psi0 = np.zeros(model.dimension, dtype=complex)
    psi0[0] = 1.0

    prediction = predict_passages(scenario.channel)
    trajectory = propagate(model, psi0, scenario.grid(), record_every)
    warnings = (*prediction.warnings, *trajectory.warnings)

    result = PassageResult(scenario, trajectory, prediction, tuple(warnings))
    logger.debug(
        f"{scenario.name}: V/2π = {scenario.coupling / (2 * np.pi):.4g} MHz, "
        f"population error {result.population_error:.3g}, phase {result.phase:.6f}"
    )
    return result


def exchange_channel(coupling: float, duration: float, distance: float = DEFAULT_DISTANCE) -> ForsterChannelParams:
    """Channel tuned exactly on resonance for `duration`, centered on t = 0."""
    if duration <= 0:
        raise ConstraintError(f"Exchange duration must be positive, got {duration} µs")
    waveform = NonlinearDetuningPulse(0.0, (0.0,), slope=0.0, half_span=0.5 * duration)
    return ForsterChannelParams.from_coupling(coupling, distance, waveform)


def resonant_exchange(
    coupling: float,
    duration: float,
    steps_per_us: float | None = None,
    record_every: int = 1,
) -> Trajectory:
    """Zero-defect evolution: population of the initial channel goes as cos²(V·t)."""
    model = forster_model(exchange_channel(coupling, duration))
    psi0 = np.zeros(model.dimension, dtype=complex)
    psi0[0] = 1.0
    grid = TimeGrid.for_window(-0.5 * duration, 0.5 * duration, steps_per_us, method=IntegrationMethod.MAGNUS4)
    return propagate(model, psi0, grid, record_every)
