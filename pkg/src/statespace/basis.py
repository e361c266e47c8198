import itertools
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from math import factorial, prod

import numpy as np
from numpy.typing import NDArray

from core.config import config
from core.errors import CapacityError, ConstraintError, ShapeError
from .scheme import AtomLevelScheme, THREE_LEVEL


class Representation(Enum):
    FULL = "full"
    SYMMETRIC = "symmetric"


@dataclass(frozen=True)
class BlockadedBasis:
    """Collective basis of N atoms with at most one Rydberg excitation.

    Full labels spell the level of each atom ("gr" is atom 1 in g, atom 2
    in r). Symmetric labels spell the canonical sorted occupation ("gr"
    stands for the normalized sum of all permutations).
    """

    n_atoms: int
    scheme: AtomLevelScheme
    representation: Representation
    states: tuple[str, ...]
    max_rydberg: int = 1
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.states)})

    @property
    def dimension(self) -> int:
        return len(self.states)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ShapeError(f"State {label!r} is not in the {self.describe()}") from None

    def occupation(self, label: str) -> tuple[int, ...]:
        """Number of atoms in each level of the scheme."""
        return tuple(label.count(level) for level in self.scheme.levels)

    def rydberg_count(self, label: str) -> int:
        return sum(label.count(level) for level in self.scheme.rydberg_labels)

    @cached_property
    def rydberg_counts(self) -> NDArray[np.int64]:
        return np.array([self.rydberg_count(s) for s in self.states])

    @cached_property
    def level_counts(self) -> NDArray[np.int64]:
        """(dimension × levels) table of occupations."""
        return np.array([self.occupation(s) for s in self.states])

    def level_count(self, level: str) -> NDArray[np.int64]:
        return self.level_counts[:, self.scheme.rank(level)]

    @property
    def ground_label(self) -> str:
        return self.scheme.levels[0] * self.n_atoms

    def canonical(self, label: str) -> str:
        """Symmetric label of a full-basis string."""
        return "".join(sorted(label, key=self.scheme.rank))

    def multiplicity(self, label: str) -> int:
        """Number of full-basis strings behind a symmetric label."""
        counts = self.occupation(label)
        return factorial(self.n_atoms) // prod(factorial(c) for c in counts)

    def compatible_with(self, other: "BlockadedBasis") -> bool:
        return self.n_atoms == other.n_atoms and self.scheme == other.scheme

    def describe(self) -> str:
        return f"{self.representation.value} basis of {self.n_atoms} atoms over {self.scheme.levels}"


def _check_capacity(n_atoms: int, representation: Representation) -> None:
    limit = (
        config.max_full_atoms
        if representation is Representation.FULL
        else config.max_symmetric_atoms
    )
    if not 1 <= n_atoms <= limit:
        raise CapacityError(
            f"{representation.value} representation supports 1..{limit} atoms, got {n_atoms}"
        )


def build_basis(
    n_atoms: int,
    scheme: AtomLevelScheme = THREE_LEVEL,
    representation: Representation = Representation.FULL,
) -> BlockadedBasis:
    """Enumerate the blockaded collective basis in lexicographic level order.

    For N = 2 and the three-level scheme the full order is
    gg, ge, gr, eg, ee, er, rg, re.
    """
    _check_capacity(n_atoms, representation)

    def allowed(label: tuple[str, ...]) -> bool:
        return sum(label.count(level) for level in scheme.rydberg_labels) <= 1

    if representation is Representation.FULL:
        source = itertools.product(scheme.levels, repeat=n_atoms)
    else:
        source = itertools.combinations_with_replacement(scheme.levels, n_atoms)

    states = tuple("".join(label) for label in source if allowed(label))
    return BlockadedBasis(n_atoms, scheme, representation, states)


def full_dimension(n_atoms: int, n_levels: int = 3) -> int:
    """Full blockaded dimension: (L-1)^N + N·(L-1)^(N-1) for one Rydberg level."""
    ground_like = n_levels - 1
    return ground_like**n_atoms + n_atoms * ground_like ** (n_atoms - 1)


def symmetrizer(full: BlockadedBasis, symmetric: BlockadedBasis) -> NDArray[np.float64]:
    """Isometry rows mapping full amplitudes onto symmetric amplitudes.

    Row k holds 1/√C on every full string whose occupation is symmetric
    state k (C = number of such strings).
    """
    if full.representation is not Representation.FULL:
        raise ShapeError(f"Expected a full basis, got {full.describe()}")
    if symmetric.representation is not Representation.SYMMETRIC:
        raise ShapeError(f"Expected a symmetric basis, got {symmetric.describe()}")
    if not full.compatible_with(symmetric):
        raise ShapeError(f"Cannot project {full.describe()} onto {symmetric.describe()}")

    matrix = np.zeros((symmetric.dimension, full.dimension))
    for column, label in enumerate(full.states):
        row = symmetric.index(full.canonical(label))
        matrix[row, column] = 1.0 / np.sqrt(symmetric.multiplicity(symmetric.states[row]))
    return matrix


def require_symmetric_occupation(scheme: AtomLevelScheme, occupation: tuple[int, ...]) -> str:
    """Canonical label for an occupation tuple, enforcing the blockade."""
    if len(occupation) != len(scheme.levels) or any(n < 0 for n in occupation):
        raise ConstraintError(f"Occupation {occupation} does not match levels {scheme.levels}")
    rydberg = sum(n for n, level in zip(occupation, scheme.levels) if level in scheme.rydberg_labels)
    if rydberg > 1:
        raise ConstraintError(f"Occupation {occupation} has {rydberg} Rydberg atoms; blockade allows 1")
    return "".join(level * n for level, n in zip(scheme.levels, occupation))
