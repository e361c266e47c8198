"""Product registers of ensemble or single-atom sites and their logical encoding."""

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from numpy.typing import NDArray

from core.errors import ConstraintError, ShapeError
from .types import Subsystem

ENSEMBLE_LEVELS = ("0", "1", "r0", "r1")
ATOM_LEVELS = ("0", "1", "r")

Label = tuple[str, ...]


@dataclass(frozen=True)
class Site:
    """One qubit carrier: an N-atom ensemble or a single atom.

    Ensemble levels stand for the collective states |0̄⟩, |1̄⟩, |r̄₀⟩, |r̄₁⟩.
    """

    name: str
    levels: tuple[str, ...] = ENSEMBLE_LEVELS
    rydberg_levels: tuple[str, ...] = ("r0", "r1")
    n_atoms: int = 1

    def __post_init__(self):
        if self.n_atoms < 1:
            raise ConstraintError(f"Site {self.name!r} needs at least one atom, got {self.n_atoms}")
        if not {"0", "1"} <= set(self.levels):
            raise ConstraintError(f"Site {self.name!r} must carry qubit levels 0 and 1, got {self.levels}")

    def level_index(self, level: str) -> int:
        try:
            return self.levels.index(level)
        except ValueError:
            raise ShapeError(f"Level {level!r} is not on site {self.name!r} {self.levels}") from None


@dataclass(frozen=True)
class Register:
    """Tensor product of sites.

    With `blockade` set, optical steps on one site act only on the
    components where no other site holds a Rydberg level.
    """

    sites: tuple[Site, ...]
    blockade: bool = True
    _index: dict[Label, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        names = [s.name for s in self.sites]
        if len(set(names)) != len(names):
            raise ConstraintError(f"Site names must be unique, got {names}")
        object.__setattr__(self, "_index", {label: i for i, label in enumerate(self.labels)})

    @cached_property
    def labels(self) -> tuple[Label, ...]:
        return tuple(itertools.product(*(s.levels for s in self.sites)))

    @property
    def dimension(self) -> int:
        return len(self.labels)

    @property
    def n_qubits(self) -> int:
        return len(self.sites)

    def index(self, label: Label) -> int:
        try:
            return self._index[tuple(label)]
        except KeyError:
            raise ShapeError(f"No register state {label}") from None

    def position(self, name: str) -> int:
        for k, site in enumerate(self.sites):
            if site.name == name:
                return k
        raise ShapeError(f"No site named {name!r}; sites are {[s.name for s in self.sites]}")

    def resolve(self, subsystem: "Subsystem | str") -> list[int]:
        """Site positions a step addresses; "both" means every site."""
        subsystem = subsystem.value if isinstance(subsystem, Subsystem) else subsystem
        if subsystem == Subsystem.BOTH.value:
            return list(range(self.n_qubits))
        return [self.position(subsystem)]

    def blocked(self, label: Label, position: int) -> bool:
        if not self.blockade:
            return False
        return any(
            level in site.rydberg_levels
            for k, (site, level) in enumerate(zip(self.sites, label))
            if k != position
        )

    def local_operator(
        self,
        position: int,
        levels: tuple[str, ...],
        matrix: NDArray[np.complex128],
        gated: bool = True,
    ) -> NDArray[np.complex128]:
        """Embed a map over `levels` of one site into the register."""
        site = self.sites[position]
        for level in levels:
            site.level_index(level)
        operator = np.eye(self.dimension, dtype=complex)
        for i, label in enumerate(self.labels):
            if label[position] not in levels or (gated and self.blocked(label, position)):
                continue
            column = levels.index(label[position])
            operator[i, i] = 0.0
            for row, level in enumerate(levels):
                partner = label[:position] + (level,) + label[position + 1 :]
                operator[self.index(partner), i] = matrix[row, column]
        return operator

    def format_label(self, label: Label) -> str:
        return "|" + ",".join(label) + "⟩"


def ensemble_register(*n_atoms: int, names: tuple[str, ...] | None = None) -> Register:
    """Blockaded ensemble qubits; one count gives ("target",), two give ("control", "target")."""
    if names is None:
        names = ("target",) if len(n_atoms) == 1 else ("control", "target")
    if len(names) != len(n_atoms):
        raise ConstraintError(f"Got {len(n_atoms)} atom counts for sites {names}")
    return Register(tuple(Site(name, n_atoms=n) for name, n in zip(names, n_atoms)))


def atom_pair_register() -> Register:
    """Two single atoms far enough apart to avoid blockade."""
    sites = tuple(Site(name, ATOM_LEVELS, ("r",)) for name in ("control", "target"))
    return Register(sites, blockade=False)


@dataclass(frozen=True)
class LogicalEncoding:
    """Logical qubits inside a register with the χ phase of every site.

    |1̄⟩ = e^{iχ}|1̄⟩′ and |r̄⟩ = e^{iχ}|r̄⟩′, where primed states are the
    plain symmetric collective states.
    """

    register: Register
    chi: dict[str, float] = field(default_factory=dict)

    def site_phase(self, position: int, level: str) -> complex:
        site = self.register.sites[position]
        return 1.0 if level == "0" else complex(np.exp(1j * self.chi.get(site.name, 0.0)))

    @cached_property
    def frame_phases(self) -> NDArray[np.complex128]:
        """Diagonal taking barred amplitudes to primed amplitudes."""
        return np.array(
            [
                np.prod([self.site_phase(k, level) for k, level in enumerate(label)])
                for label in self.register.labels
            ],
            dtype=complex,
        )

    def to_primed(self, position: int, levels: tuple[str, ...], matrix) -> NDArray[np.complex128]:
        """Express a barred-frame local map in the primed frame."""
        phases = np.diag([self.site_phase(position, level) for level in levels])
        return phases @ np.asarray(matrix, dtype=complex) @ phases.conj()

    @cached_property
    def logical_labels(self) -> tuple[Label, ...]:
        return tuple(itertools.product("01", repeat=self.register.n_qubits))

    @cached_property
    def isometry(self) -> NDArray[np.complex128]:
        """Columns: logical basis states in the primed register frame."""
        matrix = np.zeros((self.register.dimension, len(self.logical_labels)), dtype=complex)
        for column, label in enumerate(self.logical_labels):
            row = self.register.index(label)
            matrix[row, column] = self.frame_phases[row]
        return matrix

    def encode(self, logical) -> NDArray[np.complex128]:
        logical = np.asarray(logical, dtype=complex)
        if logical.shape != (len(self.logical_labels),):
            raise ShapeError(
                f"Logical state of shape {logical.shape} does not fit {self.register.n_qubits} qubit(s)"
            )
        return self.isometry @ logical

    def decode(self, amplitudes) -> NDArray[np.complex128]:
        return self.isometry.conj().T @ np.asarray(amplitudes, dtype=complex)

    def to_barred(self, amplitudes) -> NDArray[np.complex128]:
        return self.frame_phases.conj() * np.asarray(amplitudes, dtype=complex)
