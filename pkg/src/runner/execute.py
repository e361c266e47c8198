"""Run one scenario config and turn the results into tables."""

import logging
from dataclasses import dataclass, field

import numpy as np

from adiabatic import predict_passages, predict_phase_from_eigentrack
from core.config import config
from propagator import EigenTrack, Trajectory, eigen_track, propagate, wrap_phase
from propagator.eigen import MAX_TRACK_DIMENSION
from .config import ScenarioConfig
from .output import Table

logger = logging.getLogger(__name__)

TWO_PI = 2 * np.pi


def final_phase(amplitude: complex, floor: float | None = None) -> float | None:
    """Wrapped phase of an amplitude, None when its population is below the floor."""
    floor = floor if floor is not None else config.phase_population_floor
    if abs(amplitude) ** 2 < floor:
        return None
    return float(np.angle(amplitude))


@dataclass(frozen=True, eq=False)
class RunResult:
    config: ScenarioConfig
    trajectory: Trajectory
    track: EigenTrack | None = None
    predicted_phase: np.ndarray | None = None  # on the track's times
    report: dict = field(default_factory=dict)
    warnings: tuple[str, ...] = ()

    @property
    def labels(self) -> tuple[str, ...]:
        return self.trajectory.labels

    @property
    def final_populations(self) -> dict[str, float]:
        return {label: float(p) for label, p in zip(self.labels, self.trajectory.populations[-1])}

    @property
    def final_phases(self) -> dict[str, float | None]:
        return {label: final_phase(c) for label, c in zip(self.labels, self.trajectory.final_amplitudes)}

    def summary(self) -> dict:
        return {
            "name": self.config.name,
            "model": self.config.model.value,
            "n_atoms": self.config.n_atoms,
            "t_start_us": float(self.trajectory.times[0]),
            "t_end_us": float(self.trajectory.times[-1]),
            "final_populations": self.final_populations,
            "final_phases": self.final_phases,
            "max_norm_drift": self.trajectory.max_norm_drift,
            **self.report,
            "warnings": list(self.warnings),
        }

    def tables(self) -> list[Table]:
        outputs = self.config.outputs
        tables = []
        trajectory = self.trajectory.decimated(outputs.samples_per_us)
        columns, headers = [trajectory.times], ["t"]
        if outputs.populations:
            columns.extend(trajectory.populations.T)
            headers.extend(f"P_{label}" for label in self.labels)
        if outputs.phases:
            columns.extend(trajectory.phases.T)
            headers.extend(f"phase_{label}" for label in self.labels)
        tables.append(Table("trajectory", tuple(headers), np.column_stack(columns)))

        if self.track is not None:
            headers = ["t", *(f"E{k}_MHz" for k in range(self.track.eigenvalues.shape[1])), "phase_predicted"]
            rows = np.column_stack([self.track.times, self.track.eigenvalues / TWO_PI, self.predicted_phase])
            tables.append(Table("eigenvalues", tuple(headers), rows))
        return tables


def _two_level_report(model) -> tuple[dict, list[str]]:
    prediction = predict_passages(model)
    report = {
        "predicted_amplitude": prediction.amplitude,
        "predicted_phase": prediction.phase,
        "max_adiabaticity_margin": max(step.max_margin for step in prediction.passes),
        "passages": len(prediction.passes),
    }
    return report, list(prediction.warnings)


def execute(scenario: ScenarioConfig, steps_per_us: float | None = None) -> RunResult:
    """Propagate the scenario and collect the requested diagnostics."""
    model = scenario.build_model()
    psi0 = scenario.initial_amplitudes(model)
    grid = scenario.build_grid(model, steps_per_us)
    trajectory = propagate(model, psi0, grid, scenario.grid.record_every)
    warnings = list(trajectory.warnings)

    report = {}
    if scenario.outputs.report and model.kind.is_two_level and np.flatnonzero(psi0)[0] == 0:
        report, flagged = _two_level_report(model)
        warnings.extend(flagged)

    track = predicted = None
    if scenario.outputs.eigenvalues:
        if model.dimension > MAX_TRACK_DIMENSION:
            warnings.append(f"Eigenvalues skipped: dimension {model.dimension} > {MAX_TRACK_DIMENSION}")
        else:
            track = eigen_track(model, grid, psi0)
            start = int(np.flatnonzero(psi0)[0])
            predicted = predict_phase_from_eigentrack(track, start, psi0)
            final = predicted[-1]
            report["eigen_predicted_phase"] = None if np.isnan(final) else float(final)
            numeric = final_phase(trajectory.final_amplitudes[start])
            if numeric is not None and not np.isnan(final):
                report["eigen_phase_error"] = float(abs(wrap_phase(numeric - final)))

    for message in warnings:
        logger.warning(f"{scenario.name}: {message}")
    logger.debug(f"{scenario.name}: final populations {np.round(trajectory.populations[-1], 6)}")
    return RunResult(scenario, trajectory, track, predicted, report, tuple(warnings))
