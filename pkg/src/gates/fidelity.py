"""Gate fidelity and the π-pulse against adiabatic excitation comparison."""

from enum import Enum

import numpy as np
from numpy.typing import NDArray

from core.errors import ConstraintError, ShapeError
from hamiltonians import two_level_ensemble_model
from propagator import IntegrationMethod, Protocol, run_excitation_probability
from pulses import GaussianChirpPulse, StirapPair
from .dynamics import constant_drive, constant_drive_map

TWO_PI = 2 * np.pi


def gate_fidelity(achieved: NDArray[np.complex128], target: NDArray[np.complex128]) -> float:
    """Global-phase-invariant |Tr(U_target† U)|² / D²."""
    achieved = np.asarray(achieved, dtype=complex)
    target = np.asarray(target, dtype=complex)
    if achieved.shape != target.shape or achieved.ndim != 2 or achieved.shape[0] != achieved.shape[1]:
        raise ShapeError(f"Cannot compare a {achieved.shape} gate with a {target.shape} target")
    dimension = achieved.shape[0]
    overlap = np.trace(target.conj().T @ achieved)
    return float(np.clip(abs(overlap) ** 2 / dimension**2, 0.0, 1.0))


class ExcitationBranch(Enum):
    PI_PULSE = "pi_pulse"
    ARP = "arp"
    STIRAP = "stirap"


def default_excitation_pulse(branch: ExcitationBranch):
    """Chirped ARP pulse (Ω₀/2π = 2 MHz) or far-detuned STIRAP pair (δ/2π = 200 MHz)."""
    if ExcitationBranch(branch) is ExcitationBranch.ARP:
        return GaussianChirpPulse(peak_rabi=TWO_PI * 2, width=1.0, chirp_rate=-TWO_PI)
    return StirapPair(
        stokes_peak=TWO_PI * 30, pump_peak=TWO_PI * 40, stokes_center=-1.0, pump_center=1.0,
        width=1.0, delta=TWO_PI * 200,
    )


def _check_atoms(n_atoms: int, n_opt: int) -> None:
    if n_atoms < 1 or n_opt < 1:
        raise ConstraintError(f"Atom numbers must be >= 1, got N = {n_atoms}, N_opt = {n_opt}")


def pi_pulse_error(n_atoms: int, n_opt: int = 5) -> float:
    """1 − sin²((π/2)√(N/N_opt)) for a pulse with area π at N_opt atoms."""
    _check_atoms(n_atoms, n_opt)
    return float(1.0 - np.sin(0.5 * np.pi * np.sqrt(n_atoms / n_opt)) ** 2)


def dynamical_pi_pulse_error(n_atoms: int, n_opt: int = 5, rabi: float = TWO_PI) -> float:
    """The same error from propagating the √N two-level ensemble."""
    _check_atoms(n_atoms, n_opt)
    duration = np.pi / (rabi * np.sqrt(n_opt))
    model = two_level_ensemble_model(constant_drive(rabi, duration), n_atoms)
    propagator = constant_drive_map(model, duration)
    return float(1.0 - abs(propagator[1, 0]) ** 2)


def pi_pulse_vs_adiabatic_error(
    n_atoms: int,
    n_opt: int = 5,
    protocol: ExcitationBranch | str = ExcitationBranch.PI_PULSE,
    pulse=None,
    **kwargs,
) -> float:
    """Single-Rydberg excitation error 1 − P₁ of one branch.

    The π-pulse branch uses the closed form; ARP and STIRAP propagate the
    ensemble with `pulse` (or the default pulse of that branch).
    """
    branch = ExcitationBranch(protocol)
    if branch is ExcitationBranch.PI_PULSE:
        return pi_pulse_error(n_atoms, n_opt)
    _check_atoms(n_atoms, n_opt)
    pulse = pulse if pulse is not None else default_excitation_pulse(branch)
    if branch is ExcitationBranch.STIRAP:
        kwargs.setdefault("method", IntegrationMethod.MAGNUS4)
    return float(1.0 - run_excitation_probability(n_atoms, Protocol(branch.value), pulse, **kwargs))
