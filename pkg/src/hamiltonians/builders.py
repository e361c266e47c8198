"""Model factories and the per-kind instantaneous Hamiltonians."""

import logging

import numpy as np
from numpy.typing import NDArray

from core.config import config
from core.errors import CapacityError, ConstraintError
from statespace import BlockadedBasis, Representation
from .model import CouplingTerm, HamiltonianModel
from .operators import ensemble_operators
from .types import ForsterChannelParams, ModelKind

logger = logging.getLogger(__name__)

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]])
SIGMA_Z = np.array([[-1.0, 0.0], [0.0, 1.0]])  # sign of the |1⟩ entry is -δ


def _require_pair(pulse, expected: bool) -> None:
    if bool(pulse.is_pair) != expected:
        kind = "a pump/Stokes pair" if expected else "a single-field pulse"
        raise ConstraintError(f"Expected {kind}, got {type(pulse).__name__}")


def arp_model(pulse) -> HamiltonianModel:
    """Two-level atom under a chirped pulse: (1/2)[[−δ, Ω₀], [Ω₀, δ]]."""
    _require_pair(pulse, False)
    return HamiltonianModel(
        kind=ModelKind.ARP_TWO_LEVEL,
        labels=("1", "2"),
        terms=(
            CouplingTerm("rabi", SIGMA_X, lambda t: 0.5 * pulse.rabi(t)),
            CouplingTerm("detuning", SIGMA_Z, lambda t: 0.5 * pulse.detuning(t)),
        ),
        source=pulse,
        two_level=lambda t: (pulse.rabi(t), pulse.detuning(t)),
    )


def two_level_ensemble_model(pulse, n_atoms: int) -> HamiltonianModel:
    """Blockaded ensemble reduced to |G⟩ ↔ |R⟩ with √N·Ω₀ coupling."""
    _require_pair(pulse, False)
    if n_atoms < 1:
        raise CapacityError(f"Ensemble needs at least one atom, got {n_atoms}")
    enhancement = np.sqrt(n_atoms)
    return HamiltonianModel(
        kind=ModelKind.ENSEMBLE_TWO_LEVEL,
        labels=("G", "R"),
        terms=(
            CouplingTerm("rabi", SIGMA_X, lambda t: 0.5 * enhancement * pulse.rabi(t)),
            CouplingTerm("detuning", SIGMA_Z, lambda t: 0.5 * pulse.detuning(t)),
        ),
        source=pulse,
        n_atoms=n_atoms,
        two_level=lambda t: (enhancement * pulse.rabi(t), pulse.detuning(t)),
    )


def _pair_terms(pulse, pump: NDArray, stokes: NDArray, excited: NDArray) -> tuple[CouplingTerm, ...]:
    return (
        CouplingTerm("pump", pump, lambda t: 0.5 * pulse.rabi(t).pump),
        CouplingTerm("stokes", stokes, lambda t: 0.5 * pulse.rabi(t).stokes),
        CouplingTerm("detuning", excited, lambda t: pulse.detuning(t)),
    )


def stirap_model(pulse) -> HamiltonianModel:
    """Single three-level atom: (1/2)[[0, Ω_P, 0], [Ω_P, 2δ, Ω_S], [0, Ω_S, 0]]."""
    _require_pair(pulse, True)
    pump = np.zeros((3, 3))
    pump[0, 1] = pump[1, 0] = 1.0
    stokes = np.zeros((3, 3))
    stokes[1, 2] = stokes[2, 1] = 1.0
    excited = np.diag([0.0, 1.0, 0.0])
    return HamiltonianModel(
        kind=ModelKind.STIRAP_THREE_LEVEL,
        labels=("g", "e", "r"),
        terms=_pair_terms(pulse, pump, stokes, excited),
        source=pulse,
    )


def ensemble_model(pulse, basis: BlockadedBasis) -> HamiltonianModel:
    """N three-level atoms with at most one Rydberg excitation."""
    _require_pair(pulse, True)
    if (
        basis.representation is Representation.FULL
        and basis.n_atoms > config.max_full_propagation_atoms
    ):
        raise CapacityError(
            f"Full-representation propagation supports 1..{config.max_full_propagation_atoms} "
            f"atoms, got {basis.n_atoms}; use the symmetric representation"
        )
    operators = ensemble_operators(basis)
    kind = (
        ModelKind.ENSEMBLE_THREE_LEVEL_FULL
        if basis.representation is Representation.FULL
        else ModelKind.ENSEMBLE_THREE_LEVEL_SYMMETRIC
    )
    logger.debug(f"Ensemble model {kind.value} with {basis.describe()}")
    return HamiltonianModel(
        kind=kind,
        labels=basis.states,
        terms=_pair_terms(pulse, operators.pump, operators.stokes, operators.excited),
        source=pulse,
        basis=basis,
        n_atoms=basis.n_atoms,
    )


def forster_model(channel: ForsterChannelParams) -> HamiltonianModel:
    """Two-atom Förster channel [[0, V·g(t)], [V·g(t), δ_F(t)]] plus optional extra channels."""
    extras = channel.extra_channels
    dimension = 2 + len(extras)
    coupling = np.zeros((dimension, dimension))
    coupling[0, 1] = coupling[1, 0] = 1.0
    defect = np.zeros((dimension, dimension))
    defect[1, 1] = 1.0
    offsets = np.zeros((dimension, dimension))
    for k, extra in enumerate(extras, start=2):
        coupling[0, k] = coupling[k, 0] = extra.coupling_ratio
        defect[k, k] = 1.0
        offsets[k, k] = extra.offset

    waveform = channel.detuning_waveform
    v = channel.coupling
    terms = [
        CouplingTerm("coupling", coupling, lambda t: v * channel.envelope(t)),
        CouplingTerm("defect", defect, lambda t: waveform.detuning(t)),
    ]
    if extras:
        terms.append(CouplingTerm("offsets", offsets, lambda t: np.ones_like(t)))

    return HamiltonianModel(
        kind=ModelKind.FORSTER_CHANNEL,
        labels=("r0r1", "r2r3") + tuple(f"x{k}" for k in range(1, len(extras) + 1)),
        terms=tuple(terms),
        source=channel,
        n_atoms=2,
        two_level=lambda t: (2.0 * v * channel.envelope(t), waveform.detuning(t)),
    )


def h_arp(model: HamiltonianModel, t: float) -> NDArray[np.float64]:
    model.require(ModelKind.ARP_TWO_LEVEL)
    return model.matrix(t)


def h_stirap(model: HamiltonianModel, t: float) -> NDArray[np.float64]:
    model.require(ModelKind.STIRAP_THREE_LEVEL)
    return model.matrix(t)


def h_ensemble(model: HamiltonianModel, t: float) -> NDArray[np.float64]:
    model.require(ModelKind.ENSEMBLE_THREE_LEVEL_FULL, ModelKind.ENSEMBLE_THREE_LEVEL_SYMMETRIC)
    return model.matrix(t)


def h_two_level_ensemble(model: HamiltonianModel, t: float) -> NDArray[np.float64]:
    model.require(ModelKind.ENSEMBLE_TWO_LEVEL)
    return model.matrix(t)


def h_forster(model: HamiltonianModel, t: float) -> NDArray[np.float64]:
    model.require(ModelKind.FORSTER_CHANNEL)
    return model.matrix(t)
