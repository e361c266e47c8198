"""Step maps obtained by propagating the pulses of a gate sequence."""

import logging
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from hamiltonians import ForsterChannelParams, arp_model, ensemble_model, forster_model, two_level_ensemble_model
from propagator import IntegrationMethod, Protocol, TimeGrid, propagate
from pulses import GaussianChirpPulse, NonlinearDetuningPulse, StirapPair
from statespace import Representation, basis_state, build_basis
from .types import TransferDirection

logger = logging.getLogger(__name__)

TWO_PI = 2 * np.pi


def constant_drive(rabi: float, duration: float) -> NonlinearDetuningPulse:
    """Resonant drive of constant Rabi frequency centered on t = 0."""
    return NonlinearDetuningPulse(rabi, (0.0,), slope=0.0, half_span=0.5 * duration)


def constant_drive_map(model, duration: float, n_steps: int = 16) -> NDArray[np.complex128]:
    """Propagator of a time-independent two-level model; Magnus steps are exact here."""
    grid = TimeGrid(-0.5 * duration, 0.5 * duration, n_steps, method=IntegrationMethod.MAGNUS4)
    columns = [propagate(model, np.eye(2, dtype=complex)[k], grid, record_every=n_steps).final_amplitudes for k in range(2)]
    return np.stack(columns, axis=1)


@dataclass(frozen=True)
class DynamicalSettings:
    """Pulses used when gate steps are propagated.

    The π pulses are driven with laser phase π (Rabi −Ω) so that area π
    maps |x⟩ → i|y⟩ like the idealized step.
    """

    arp_pulse: GaussianChirpPulse = field(
        default_factory=lambda: GaussianChirpPulse(peak_rabi=TWO_PI * 5, width=1.0, chirp_rate=-TWO_PI)
    )
    stirap_pair: StirapPair = field(
        default_factory=lambda: StirapPair(
            stokes_peak=TWO_PI * 30, pump_peak=TWO_PI * 40, stokes_center=-1.0, pump_center=1.0,
            width=1.0, delta=TWO_PI * 200,
        )
    )
    pi_rabi: float = TWO_PI * 5
    steps_per_us: float | None = None
    method: IntegrationMethod = IntegrationMethod.MAGNUS4


class DynamicalMaps:
    """Caches propagated 2×2 step maps per ensemble size."""

    def __init__(self, settings: DynamicalSettings | None = None):
        self.settings = settings or DynamicalSettings()
        self._transfers: dict[tuple[int, Protocol, TransferDirection], NDArray[np.complex128]] = {}
        self._pi: dict[int, NDArray[np.complex128]] = {}
        self._forster: dict[ForsterChannelParams, complex] = {}

    def _grid(self, model) -> TimeGrid:
        return TimeGrid.for_model(model, self.settings.steps_per_us, method=self.settings.method)

    def _arp_map(self, n_atoms: int, direction: TransferDirection) -> NDArray[np.complex128]:
        pulse = self.settings.arp_pulse
        if direction is TransferDirection.DOWN:
            pulse = pulse.flipped()
        model = two_level_ensemble_model(pulse, n_atoms)
        grid = self._grid(model)
        columns = [
            propagate(model, np.eye(2, dtype=complex)[k], grid, record_every=grid.n_steps).final_amplitudes
            for k in range(2)
        ]
        return np.stack(columns, axis=1)

    def _stirap_map(self, n_atoms: int, direction: TransferDirection) -> NDArray[np.complex128]:
        pair = self.settings.stirap_pair
        if direction is TransferDirection.DOWN:
            pair = pair.reversed_order().with_detuning_sign(-1)
        basis = build_basis(n_atoms, representation=Representation.SYMMETRIC)
        ground, excited = basis.ground_label, "g" * (n_atoms - 1) + "r"
        model = ensemble_model(pair, basis)
        grid = self._grid(model)

        rows = [basis.index(ground), basis.index(excited)]
        columns = []
        for label in (ground, excited):
            final = propagate(model, basis_state(basis, label), grid, record_every=grid.n_steps).final_amplitudes
            columns.append(final[rows])
        return np.stack(columns, axis=1)

    def transfer_map(self, n_atoms: int, protocol: Protocol, direction: TransferDirection) -> NDArray[np.complex128]:
        """Map on (|0⟩, |r0⟩′) of an N-atom ensemble, restricted to those two states."""
        key = (n_atoms, Protocol(protocol), TransferDirection(direction))
        if key not in self._transfers:
            build = self._arp_map if key[1] is Protocol.ARP else self._stirap_map
            self._transfers[key] = build(n_atoms, key[2])
            logger.debug(f"{key[1].value} {key[2].value} map for N = {n_atoms}: {self._transfers[key].round(6).tolist()}")
        return self._transfers[key]

    def chi(self, n_atoms: int, protocol: Protocol) -> float:
        """χ_N: the phase one up-pass gives the collective Rydberg state."""
        return float(np.angle(self.transfer_map(n_atoms, protocol, TransferDirection.UP)[1, 0]))

    def pi_pulse_map(self, multiple: int = 1) -> NDArray[np.complex128]:
        if multiple not in self._pi:
            rabi = self.settings.pi_rabi
            duration = multiple * np.pi / rabi
            self._pi[multiple] = constant_drive_map(arp_model(constant_drive(-rabi, duration)), duration)
        return self._pi[multiple]

    def forster_amplitude(self, channel: ForsterChannelParams) -> complex:
        """Amplitude left in the initial pair channel after the passage."""
        if channel not in self._forster:
            model = forster_model(channel)
            psi0 = np.zeros(model.dimension, dtype=complex)
            psi0[0] = 1.0
            grid = self._grid(model)
            trajectory = propagate(model, psi0, grid, record_every=grid.n_steps)
            self._forster[channel] = complex(trajectory.final_amplitudes[0])
        return self._forster[channel]
