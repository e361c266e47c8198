"""Gate sequences built from steps, and the operations that run them."""

import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from core.errors import ConstraintError
from hamiltonians import ForsterChannelParams
from propagator import Protocol
from .context import GateContext
from .dynamics import DynamicalMaps
from .executor import SequenceRunner
from .fidelity import gate_fidelity
from .register import LogicalEncoding, Register, atom_pair_register, ensemble_register
from .report import GateReport
from .steps import (
    ArpTransferStep,
    ForsterPassageStep,
    GateStep,
    MicrowaveRotationStep,
    PiPulseStep,
    QubitRotationStep,
    StirapTransferStep,
)
from .types import CNOT, CZ, ENSEMBLE_CNOT, GateMode, Subsystem, TransferDirection

logger = logging.getLogger(__name__)

NORM_TOLERANCE = 1e-9


def _transfer(protocol: Protocol, subsystem: Subsystem, direction: TransferDirection) -> GateStep:
    step_class = ArpTransferStep if Protocol(protocol) is Protocol.ARP else StirapTransferStep
    return step_class(subsystem=subsystem, direction=direction)


def single_qubit_sequence(theta: float, phi: float, transfer: Protocol = Protocol.STIRAP) -> list[GateStep]:
    """Pulses 1-5: π, transfer up, microwave R(θ, φ), transfer down, π."""
    return [
        PiPulseStep(Subsystem.TARGET, ("1", "r1")),
        _transfer(transfer, Subsystem.TARGET, TransferDirection.UP),
        MicrowaveRotationStep(Subsystem.TARGET, theta, phi),
        _transfer(transfer, Subsystem.TARGET, TransferDirection.DOWN),
        PiPulseStep(Subsystem.TARGET, ("1", "r1")),
    ]


def cnot_sequence(transfer: Protocol = Protocol.STIRAP) -> list[GateStep]:
    """Seven pulses; pulse 4 is a microwave π rotation on both ensembles."""
    return [
        PiPulseStep(Subsystem.CONTROL, ("1", "r0")),
        PiPulseStep(Subsystem.TARGET, ("1", "r1")),
        _transfer(transfer, Subsystem.TARGET, TransferDirection.UP),
        MicrowaveRotationStep(Subsystem.BOTH, np.pi, np.pi / 2),
        _transfer(transfer, Subsystem.TARGET, TransferDirection.DOWN),
        PiPulseStep(Subsystem.TARGET, ("1", "r1")),
        PiPulseStep(Subsystem.CONTROL, ("1", "r1")),
    ]


def forster_cz_sequence(channel: ForsterChannelParams) -> list[GateStep]:
    """π excitation of both atoms, double Förster passage, 3π de-excitation."""
    return [
        PiPulseStep(Subsystem.BOTH, ("1", "r")),
        ForsterPassageStep(channel=channel),
        PiPulseStep(Subsystem.BOTH, ("1", "r"), multiple=3),
    ]


def forster_cnot_sequence(channel: ForsterChannelParams) -> list[GateStep]:
    """CZ between target rotations R_y(−π/2) and R_y(+π/2)."""
    return [
        QubitRotationStep(Subsystem.TARGET, -np.pi / 2, np.pi / 2),
        *forster_cz_sequence(channel),
        QubitRotationStep(Subsystem.TARGET, np.pi / 2, np.pi / 2),
    ]


@dataclass(frozen=True, eq=False)
class GateRun:
    """Final logical state of one run plus the barred register state after every step."""

    final: NDArray[np.complex128]
    context: GateContext

    @property
    def step_states(self) -> list[NDArray[np.complex128]]:
        return [s.amplitudes for s in self.context.snapshots]

    def step_amplitude(self, step: int, *levels: str) -> complex:
        """Barred amplitude of a register state after step `step` (1-based)."""
        snapshot = self.context.snapshots[step - 1]
        return complex(snapshot.amplitudes[self.context.register.index(levels)])


def _normalized(values) -> NDArray[np.complex128]:
    state = np.asarray(values, dtype=complex)
    norm = float(np.linalg.norm(state))
    if abs(norm - 1.0) > NORM_TOLERANCE:
        raise ConstraintError(f"Input state norm {norm:.12g} differs from 1")
    return state


def _ensemble_runner(
    register: Register,
    mode: GateMode,
    chi: dict[str, float] | None,
    transfer: Protocol,
    dynamics: DynamicalMaps | None,
) -> SequenceRunner:
    mode = GateMode(mode)
    if mode is GateMode.DYNAMICAL:
        dynamics = dynamics or DynamicalMaps()
        if chi is None:
            chi = {site.name: dynamics.chi(site.n_atoms, transfer) for site in register.sites}
    encoding = LogicalEncoding(register, dict(chi or {}))
    return SequenceRunner(register, mode, encoding, dynamics)


def single_qubit_gate(
    a: complex,
    b: complex,
    theta: float,
    phi: float,
    n_atoms: int = 1,
    mode: GateMode = GateMode.IDEALIZED,
    chi: dict[str, float] | None = None,
    transfer: Protocol = Protocol.STIRAP,
    dynamics: DynamicalMaps | None = None,
) -> GateRun:
    """Rotate a|0̄⟩ + b|1̄⟩ of one ensemble so that (a′, −b′) = R(θ, φ)(a, b)."""
    runner = _ensemble_runner(ensemble_register(n_atoms), mode, chi, transfer, dynamics)
    context = runner.execute(single_qubit_sequence(theta, phi, transfer), _normalized([a, b]))
    return GateRun(context.logical_state(), context)


def cnot_gate(
    a: complex,
    b: complex,
    c: complex,
    d: complex,
    n_atoms: tuple[int, int] = (1, 1),
    mode: GateMode = GateMode.IDEALIZED,
    chi: dict[str, float] | None = None,
    transfer: Protocol = Protocol.STIRAP,
    dynamics: DynamicalMaps | None = None,
) -> GateRun:
    """Run the ensemble CNOT on a|0̄0̄⟩ + b|0̄1̄⟩ + c|1̄0̄⟩ + d|1̄1̄⟩."""
    runner = _ensemble_runner(ensemble_register(*n_atoms), mode, chi, transfer, dynamics)
    context = runner.execute(cnot_sequence(transfer), _normalized([a, b, c, d]))
    return GateRun(context.logical_state(), context)


def cnot_report(
    n_atoms: tuple[int, int] = (1, 1),
    mode: GateMode = GateMode.IDEALIZED,
    chi: dict[str, float] | None = None,
    transfer: Protocol = Protocol.STIRAP,
    dynamics: DynamicalMaps | None = None,
) -> GateReport:
    """Assembled ensemble CNOT matrix scored against the ideal sequence matrix."""
    runner = _ensemble_runner(ensemble_register(*n_atoms), mode, chi, transfer, dynamics)
    steps = cnot_sequence(transfer)
    matrix, warnings = runner.logical_matrix(steps)
    fidelity = gate_fidelity(matrix, ENSEMBLE_CNOT)
    logger.info(f"Ensemble CNOT ({GateMode(mode).value}, N = {n_atoms}): fidelity {fidelity:.8f}")
    return GateReport(
        name="ensemble_cnot",
        achieved=matrix,
        target=ENSEMBLE_CNOT,
        fidelity=fidelity,
        warnings=tuple(warnings),
        metrics={"chi": dict(runner.encoding.chi), "n_atoms": list(n_atoms)},
    )


def _forster_report(
    name: str,
    steps: list[GateStep],
    target: NDArray[np.complex128],
    state,
    mode: GateMode,
    dynamics: DynamicalMaps | None,
) -> GateReport:
    register = atom_pair_register()
    runner = SequenceRunner(register, mode, dynamics=dynamics)
    matrix, warnings = runner.logical_matrix(steps)
    context = runner.execute(steps, _normalized(state))
    fidelity = gate_fidelity(matrix, target)
    report = GateReport(
        name=name,
        achieved=matrix,
        target=target,
        fidelity=fidelity,
        snapshots=tuple(context.snapshots),
        labels=tuple(register.format_label(label) for label in register.labels),
        final_state=context.logical_state(),
        warnings=tuple(warnings),
        metrics=dict(context.metrics),
    )
    level = logging.WARNING if warnings else logging.INFO
    logger.log(level, f"{name} ({GateMode(mode).value}): fidelity {fidelity:.6f}, {len(warnings)} warning(s)")
    return report


def forster_cz(
    state,
    channel: ForsterChannelParams,
    mode: GateMode = GateMode.DYNAMICAL,
    dynamics: DynamicalMaps | None = None,
) -> GateReport:
    """Controlled-Z of two atoms via double passage of the Förster resonance.

    Single-excitation branches return with phase 0 because the π and 3π
    pulses contribute i·(−i) per atom; only |11⟩ picks up the channel phase.
    """
    return _forster_report("forster_cz", forster_cz_sequence(channel), CZ, state, mode, dynamics)


def forster_cnot(
    state,
    channel: ForsterChannelParams,
    mode: GateMode = GateMode.DYNAMICAL,
    dynamics: DynamicalMaps | None = None,
) -> GateReport:
    return _forster_report("forster_cnot", forster_cnot_sequence(channel), CNOT, state, mode, dynamics)
