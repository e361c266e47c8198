"""Closed-form phase predictions for adiabatic passages."""

import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray
from scipy.integrate import quad

from core.config import config
from core.errors import ConstraintError
from hamiltonians import ForsterChannelParams, HamiltonianModel
from propagator import EigenTrack, TimeGrid, wrap_phase
from pulses import DoubleSequence, NonlinearDetuningPulse
from .area import as_two_level_model, generalized_area
from .dressed import adiabaticity_margin

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PassageStep:
    window: tuple[float, float]
    area: float
    start_sign: int  # sign of δ at the window start
    end_sign: int
    pulse_sign: int
    max_margin: float

    @property
    def transfers(self) -> bool:
        return self.start_sign != self.end_sign


@dataclass(frozen=True)
class PassagePrediction:
    """Adiabatic prediction for a chain of passages started in |1⟩."""

    amplitude: complex  # of |1⟩ after the last passage
    final_state: int
    passes: tuple[PassageStep, ...]
    warnings: tuple[str, ...] = ()

    @property
    def phase(self) -> float:
        return float(np.angle(self.amplitude))


def passage_windows(source) -> list[tuple[float, float]]:
    """Time windows of the individual passes of a multi-passage source."""
    if isinstance(source, HamiltonianModel):
        return passage_windows(source.source)
    if isinstance(source, ForsterChannelParams):
        return passage_windows(source.detuning_waveform)
    start, end = source.support()
    if isinstance(source, DoubleSequence):
        return [(start, source.boundary), (source.boundary, end)]
    if isinstance(source, NonlinearDetuningPulse):
        edges = [start, *source.midpoints, end]
        return list(zip(edges[:-1], edges[1:]))
    return [(start, end)]


def _sign(value: float) -> int:
    return 1 if value >= 0 else -1


def _pass_map(state: int, step: PassageStep) -> tuple[int, complex]:
    """Follow the dressed branch |state⟩ starts on through one pass."""
    lower = 1 if step.start_sign > 0 else 2
    factor = np.exp(0.5j * step.area) if state == lower else np.exp(-0.5j * step.area)
    if not step.transfers:
        return state, factor
    s = step.pulse_sign
    if step.start_sign > 0:
        return (2, -s * factor) if state == 1 else (1, s * factor)
    return (2, s * factor) if state == 1 else (1, -s * factor)


def _trace_phase(model: HamiltonianModel, window: tuple[float, float]) -> float:
    """−½∫(H₁₁ + H₂₂) dt, the common phase of both levels."""
    points = [b for b in model.breakpoints() if window[0] < b < window[1]]
    value, _ = quad(
        lambda t: float(np.trace(model.matrix(t)[:2, :2])),
        *window,
        points=points or None,
        epsabs=1e-13,
        epsrel=1e-12,
        limit=500,
    )
    return -0.5 * value


def _passage_step(model: HamiltonianModel, window: tuple[float, float]) -> PassageStep:
    start, end = window
    edge = np.nextafter(end, -np.inf)
    rabi, detuning = model.two_level_parameters(np.array([start, edge]))
    rabi_area, _ = quad(lambda t: float(model.two_level_parameters(t)[0][0]), start, end, limit=500)
    margin = adiabaticity_margin(model, TimeGrid.for_window(start, end, config.eigen_samples_per_us))
    return PassageStep(
        window=(float(start), float(end)),
        area=generalized_area(model, window).value,
        start_sign=_sign(detuning[0]),
        end_sign=_sign(detuning[1]),
        pulse_sign=_sign(rabi_area),
        max_margin=float(np.max(margin)),
    )


def predict_passages(source) -> PassagePrediction:
    """Chain the adiabatic map of every pass of the source, starting in |1⟩."""
    model = as_two_level_model(source)
    state, amplitude = 1, complex(1.0)
    steps, warnings = [], []

    for window in passage_windows(source):
        step = _passage_step(model, window)
        state, factor = _pass_map(state, step)
        amplitude *= factor * np.exp(1j * _trace_phase(model, window))
        steps.append(step)
        if step.max_margin > config.passage_margin_threshold:
            warnings.append(
                f"Passage over [{window[0]:.4g}, {window[1]:.4g}] µs is not adiabatic "
                f"(margin {step.max_margin:.3g})"
            )

    for message in warnings:
        logger.warning(message)
    final = amplitude if state == 1 else complex(0.0)
    return PassagePrediction(complex(final), state, tuple(steps), tuple(warnings))


def predict_double_arp_amplitude(sequence) -> PassagePrediction:
    """Amplitude c₁ after a double passage.

    Identical pulses of areas S₁, S₂ give −exp[i(S₁ − S₂)/2]; a phase-flipped
    second pulse gives +exp[i(S₁ − S₂)/2].
    """
    windows = passage_windows(sequence)
    if len(windows) != 2:
        raise ConstraintError(f"A double passage needs two passes, got {len(windows)}")
    return predict_passages(sequence)


def predict_phase_from_eigentrack(
    track: EigenTrack,
    basis_index: int = 0,
    psi0: NDArray[np.complex128] | None = None,
    floor: float | None = None,
    wrap: bool = True,
) -> NDArray[np.float64]:
    """Phase of component `basis_index` under adiabatic following of the tracked branch.

    −∫E dt plus the argument of ⟨k|v(t)⟩⟨v(t₀)|ψ₀⟩, NaN where |⟨k|v(t)⟩|² is
    below the population floor.
    """
    floor = floor if floor is not None else config.phase_population_floor
    energies = track.initial_branch_values
    steps = np.diff(track.times)
    increments = 0.5 * (energies[1:] + energies[:-1]) * steps
    for index in track.breakpoint_indices:
        # left limit at a jump, extrapolated from the two previous samples
        if index >= 2:
            increments[index - 1] = 0.5 * (3 * energies[index - 1] - energies[index - 2]) * steps[index - 1]
        elif index == 1:
            increments[0] = energies[0] * steps[0]
    dynamic = -np.concatenate([[0.0], np.cumsum(increments)])

    vectors = track.branch_vectors
    if psi0 is None:
        psi0 = np.zeros(vectors.shape[1], dtype=complex)
        psi0[0] = 1.0
    projected = vectors[:, basis_index] * np.vdot(vectors[0], np.asarray(psi0, dtype=complex))
    phase = dynamic + np.angle(projected)
    phase = np.where(np.abs(vectors[:, basis_index]) ** 2 >= floor, phase, np.nan)
    return wrap_phase(phase) if wrap else phase
