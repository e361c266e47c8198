import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from hamiltonians import ensemble_model, two_level_ensemble_model
from statespace import Representation, build_basis, ground_state
from .grid import IntegrationMethod, TimeGrid
from .trajectory import Trajectory, propagate

logger = logging.getLogger(__name__)


class Protocol(Enum):
    ARP = "arp"
    STIRAP = "stirap"


@dataclass(frozen=True, eq=False)
class ExcitationResult:
    n_atoms: int
    protocol: Protocol
    probability: float  # total single-Rydberg population at t_end
    trajectory: Trajectory
    single_rydberg_columns: tuple[int, ...]

    @property
    def single_rydberg_population(self):
        return self.trajectory.populations[:, list(self.single_rydberg_columns)].sum(axis=1)


def run_excitation(
    n_atoms: int,
    protocol: Protocol,
    pulse,
    representation: Representation = Representation.SYMMETRIC,
    steps_per_us: float | None = None,
    method: IntegrationMethod = IntegrationMethod.RK4,
    record_every: int = 1,
) -> ExcitationResult:
    """Excite an N-atom blockaded ensemble from its ground state.

    ARP uses the collective two-level model (√N coupling); STIRAP uses the
    three-level ensemble in the requested representation.
    """
    protocol = Protocol(protocol)
    if protocol is Protocol.ARP:
        model = two_level_ensemble_model(pulse, n_atoms)
        psi0 = np.array([1.0, 0.0], dtype=complex)
        columns = (1,)
    else:
        basis = build_basis(n_atoms, representation=representation)
        model = ensemble_model(pulse, basis)
        psi0 = ground_state(basis)
        columns = tuple(int(k) for k in np.flatnonzero(basis.rydberg_counts == 1))

    grid = TimeGrid.for_model(model, steps_per_us, method=method)
    trajectory = propagate(model, psi0, grid, record_every)
    probability = float(trajectory.populations[-1, list(columns)].sum())
    logger.debug(f"{protocol.value} with N = {n_atoms}: P1 = {probability:.6f}")
    return ExcitationResult(n_atoms, protocol, probability, trajectory, columns)


def run_excitation_probability(n_atoms: int, protocol: Protocol, pulse, **kwargs) -> float:
    """Final single-Rydberg probability P₁."""
    return run_excitation(n_atoms, protocol, pulse, **kwargs).probability
