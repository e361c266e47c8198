from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from core.config import config
from core.errors import ConstraintError, ShapeError
from .basis import (
    BlockadedBasis,
    Representation,
    build_basis,
    require_symmetric_occupation,
    symmetrizer,
)
from .scheme import AtomLevelScheme, THREE_LEVEL


@dataclass(frozen=True, eq=False)
class CollectiveState:
    """Normalized complex amplitudes over a blockaded basis."""

    basis: BlockadedBasis
    amplitudes: NDArray[np.complex128]
    norm_tolerance: float | None = None

    def __post_init__(self):
        amplitudes = np.asarray(self.amplitudes, dtype=complex)
        if amplitudes.shape != (self.basis.dimension,):
            raise ShapeError(
                f"Amplitude vector of shape {amplitudes.shape} does not fit the "
                f"{self.basis.describe()} (dimension {self.basis.dimension})"
            )
        tolerance = self.norm_tolerance if self.norm_tolerance is not None else config.norm_tolerance
        norm = float(np.linalg.norm(amplitudes))
        if abs(norm - 1.0) > tolerance:
            raise ConstraintError(f"State norm {norm:.12g} differs from 1 by more than {tolerance:g}")
        object.__setattr__(self, "amplitudes", amplitudes)
        object.__setattr__(self, "norm_tolerance", tolerance)

    @property
    def populations(self) -> NDArray[np.float64]:
        return np.abs(self.amplitudes) ** 2

    def amplitude(self, label: str) -> complex:
        return complex(self.amplitudes[self.basis.index(label)])

    def with_phase(self, phase: float) -> "CollectiveState":
        return CollectiveState(self.basis, np.exp(1j * phase) * self.amplitudes, self.norm_tolerance)


@dataclass(frozen=True, eq=False)
class SymmetricProjection:
    """Symmetric-subspace amplitudes of a full-basis state plus the leaked weight."""

    basis: BlockadedBasis
    amplitudes: NDArray[np.complex128]
    leakage: float

    def amplitude(self, label: str) -> complex:
        return complex(self.amplitudes[self.basis.index(label)])

    def as_state(self) -> CollectiveState:
        """Normalized symmetric state; fails if the leakage is not negligible."""
        return CollectiveState(self.basis, self.amplitudes)


def basis_state(basis: BlockadedBasis, label: str) -> CollectiveState:
    amplitudes = np.zeros(basis.dimension, dtype=complex)
    amplitudes[basis.index(label)] = 1.0
    return CollectiveState(basis, amplitudes)


def ground_state(basis: BlockadedBasis) -> CollectiveState:
    return basis_state(basis, basis.ground_label)


def symmetric_state(
    n_atoms: int,
    occupation: tuple[int, ...],
    scheme: AtomLevelScheme = THREE_LEVEL,
    basis: BlockadedBasis | None = None,
) -> CollectiveState:
    """Equal-weight superposition of all permutations, in the full basis."""
    if sum(occupation) != n_atoms:
        raise ConstraintError(f"Occupation {occupation} does not add up to {n_atoms} atoms")
    target = require_symmetric_occupation(scheme, occupation)
    basis = basis or build_basis(n_atoms, scheme, Representation.FULL)

    members = [i for i, label in enumerate(basis.states) if basis.canonical(label) == target]
    amplitudes = np.zeros(basis.dimension, dtype=complex)
    amplitudes[members] = 1.0 / np.sqrt(len(members))
    return CollectiveState(basis, amplitudes)


def project_to_symmetric(
    state: CollectiveState, symmetric: BlockadedBasis | None = None
) -> SymmetricProjection:
    """Split a full-basis state into symmetric amplitudes and leakage."""
    full = state.basis
    symmetric = symmetric or build_basis(full.n_atoms, full.scheme, Representation.SYMMETRIC)
    amplitudes = symmetrizer(full, symmetric) @ state.amplitudes
    leakage = float(np.vdot(state.amplitudes, state.amplitudes).real - np.vdot(amplitudes, amplitudes).real)
    return SymmetricProjection(symmetric, amplitudes, max(leakage, 0.0))
