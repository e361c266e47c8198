from .scheme import AtomLevelScheme, TWO_LEVEL, THREE_LEVEL
from .basis import BlockadedBasis, Representation, build_basis, full_dimension, symmetrizer
from .states import (
    CollectiveState,
    SymmetricProjection,
    basis_state,
    ground_state,
    symmetric_state,
    project_to_symmetric,
)

__all__ = [
    "AtomLevelScheme",
    "TWO_LEVEL",
    "THREE_LEVEL",
    "BlockadedBasis",
    "Representation",
    "build_basis",
    "full_dimension",
    "symmetrizer",
    "CollectiveState",
    "SymmetricProjection",
    "basis_state",
    "ground_state",
    "symmetric_state",
    "project_to_symmetric",
]
