"""Time-independent coupling patterns of blockaded ensembles."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from core.errors import ShapeError
from statespace import BlockadedBasis, Representation, THREE_LEVEL


@dataclass(frozen=True, eq=False)
class EnsembleOperators:
    """H = (Ω_P/2)·pump + (Ω_S/2)·stokes + δ·excited."""

    pump: NDArray[np.float64]
    stokes: NDArray[np.float64]
    excited: NDArray[np.float64]


def _link(matrix: NDArray[np.float64], i: int, j: int, value: float) -> None:
    matrix[i, j] = value
    matrix[j, i] = value


def _full_operators(basis: BlockadedBasis, pump, stokes) -> None:
    for i, label in enumerate(basis.states):
        for position, level in enumerate(label):
            if level == "g":
                _link(pump, i, basis.index(label[:position] + "e" + label[position + 1:]), 1.0)
            elif level == "e":
                raised = label[:position] + "r" + label[position + 1:]
                if basis.rydberg_count(raised) <= basis.max_rydberg:
                    _link(stokes, i, basis.index(raised), 1.0)


def _symmetric_operators(basis: BlockadedBasis, pump, stokes) -> None:
    for i, label in enumerate(basis.states):
        n_g, n_e, n_r = basis.occupation(label)
        if n_g > 0:
            target = "g" * (n_g - 1) + "e" * (n_e + 1) + "r" * n_r
            _link(pump, i, basis.index(target), np.sqrt(n_g * (n_e + 1)))
        if n_e > 0 and n_r + 1 <= basis.max_rydberg:
            target = "g" * n_g + "e" * (n_e - 1) + "r" * (n_r + 1)
            _link(stokes, i, basis.index(target), np.sqrt(n_e * (n_r + 1)))


def ensemble_operators(basis: BlockadedBasis) -> EnsembleOperators:
    """Pump, Stokes and e-counting operators on a three-level blockaded basis."""
    if basis.scheme != THREE_LEVEL:
        raise ShapeError(f"Ensemble operators need the g/e/r scheme, got {basis.scheme.levels}")

    dimension = basis.dimension
    pump = np.zeros((dimension, dimension))
    stokes = np.zeros((dimension, dimension))
    if basis.representation is Representation.FULL:
        _full_operators(basis, pump, stokes)
    else:
        _symmetric_operators(basis, pump, stokes)

    excited = np.diag(basis.level_count("e").astype(float))
    return EnsembleOperators(pump, stokes, excited)
