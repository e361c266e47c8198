"""Atom-number statistics of randomly loaded dipole traps."""

import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field
from scipy.stats import poisson

from core.errors import ConstraintError
from .output import Table

logger = logging.getLogger(__name__)


class PoissonLoadingSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    mean_atoms: float = Field(gt=0)
    max_atoms: int = Field(ge=0)


@dataclass(frozen=True, eq=False)
class LoadingTable:
    spec: PoissonLoadingSpec
    atoms: NDArray[np.int64]
    probabilities: NDArray[np.float64]
    remainder: float  # P(N > max_atoms)

    def probability(self, n_atoms: int) -> float:
        return float(self.probabilities[n_atoms]) if 0 <= n_atoms <= self.spec.max_atoms else 0.0

    def weighted_mean(self, values: dict[int, float]) -> float:
        """Mean of per-N values over traps holding at least one atom.

        Every N in 1..max_atoms needs a value.
        """
        loaded = range(1, self.spec.max_atoms + 1)
        if not loaded:
            raise ConstraintError("A weighted mean needs max_atoms >= 1")
        missing = [n for n in loaded if n not in values]
        if missing:
            raise ConstraintError(f"No value for N = {missing}")
        weights = np.array([self.probability(n) for n in loaded])
        samples = np.array([values[n] for n in loaded])
        return float(weights @ samples / weights.sum())

    def as_table(self) -> Table:
        return Table("loading", ("N", "probability"), np.column_stack([self.atoms, self.probabilities]))


def poisson_stats(spec: PoissonLoadingSpec) -> LoadingTable:
    """P(N) = e^{−N̄}·N̄^N/N! for N = 0..max_atoms, plus the tail beyond."""
    atoms = np.arange(spec.max_atoms + 1)
    probabilities = poisson.pmf(atoms, spec.mean_atoms)
    remainder = float(poisson.sf(spec.max_atoms, spec.mean_atoms))
    logger.debug(f"Poisson loading N̄ = {spec.mean_atoms}: P(0) = {probabilities[0]:.4g}, tail {remainder:.3g}")
    return LoadingTable(spec, atoms, probabilities, remainder)
