import logging
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from numpy.typing import NDArray

from core.config import config
from core.errors import ShapeError
from statespace import CollectiveState
from .grid import TimeGrid
from .integrators import adaptive, fixed_step
from .phase import unwrap_masked

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Recorded amplitudes of one propagation, rows in time."""

    times: NDArray[np.float64]
    amplitudes: NDArray[np.complex128]
    labels: tuple[str, ...]
    warnings: tuple[str, ...] = ()

    @cached_property
    def populations(self) -> NDArray[np.float64]:
        return np.abs(self.amplitudes) ** 2

    @cached_property
    def norms(self) -> NDArray[np.float64]:
        return np.linalg.norm(self.amplitudes, axis=1)

    @cached_property
    def phases(self) -> NDArray[np.float64]:
        """Unwrapped phases per component, NaN below the population floor."""
        return np.stack(
            [unwrap_masked(self.amplitudes[:, k]) for k in range(len(self.labels))], axis=1
        )

    @property
    def final_amplitudes(self) -> NDArray[np.complex128]:
        return self.amplitudes[-1]

    @property
    def max_norm_drift(self) -> float:
        return float(np.max(np.abs(self.norms - 1.0)))

    def column(self, key: int | str) -> int:
        if isinstance(key, str):
            if key not in self.labels:
                raise ShapeError(f"No basis state {key!r} in trajectory labels {self.labels}")
            return self.labels.index(key)
        return int(key)

    def amplitude(self, key: int | str) -> NDArray[np.complex128]:
        return self.amplitudes[:, self.column(key)]

    def population(self, key: int | str) -> NDArray[np.float64]:
        return self.populations[:, self.column(key)]

    def decimated(self, samples_per_us: float | None = None) -> "Trajectory":
        """Roughly `samples_per_us` rows per µs, always keeping both ends."""
        density = samples_per_us if samples_per_us is not None else config.output_samples_per_us
        duration = float(self.times[-1] - self.times[0])
        wanted = max(2, math.ceil(duration * density) + 1)
        if wanted >= len(self.times):
            return self
        stride = max(1, (len(self.times) - 1) // (wanted - 1))
        rows = np.arange(0, len(self.times), stride)
        if rows[-1] != len(self.times) - 1:
            rows = np.append(rows, len(self.times) - 1)
        return Trajectory(self.times[rows], self.amplitudes[rows], self.labels, self.warnings)


def initial_amplitudes(model, psi0) -> NDArray[np.complex128]:
    if isinstance(psi0, CollectiveState):
        basis = model.basis
        if basis is not None and (
            not psi0.basis.compatible_with(basis) or psi0.basis.representation is not basis.representation
        ):
            raise ShapeError(
                f"Initial state on {psi0.basis.describe()} does not match the model's {basis.describe()}"
            )
        amplitudes = psi0.amplitudes
    else:
        amplitudes = np.asarray(psi0, dtype=complex)
    if amplitudes.shape != (model.dimension,):
        raise ShapeError(
            f"Initial state of shape {amplitudes.shape} does not fit a model of dimension {model.dimension}"
        )
    return amplitudes


def propagate(
    model,
    psi0: CollectiveState | NDArray[np.complex128],
    grid: TimeGrid | None = None,
    record_every: int = 1,
) -> Trajectory:
    """Integrate i·dc/dt = H(t)·c from psi0 over the grid.

    Without a grid the model's support is used at the configured density.
    """
    grid = grid if grid is not None else TimeGrid.for_model(model)
    c0 = initial_amplitudes(model, psi0)
    logger.debug(
        f"Propagating {model.kind.value} (dimension {model.dimension}) over "
        f"[{grid.t_start:.4g}, {grid.t_end:.4g}] µs with {grid.n_steps} {grid.method.value} steps"
    )

    integrate = adaptive if grid.adaptive else fixed_step
    times, amplitudes = integrate(model, c0, grid, record_every)

    warnings = []
    drift = float(np.max(np.abs(np.linalg.norm(amplitudes, axis=1) - 1.0)))
    if drift > config.norm_tolerance:
        message = f"Norm drift {drift:.3g} exceeds tolerance {config.norm_tolerance:g}"
        logger.warning(message)
        warnings.append(message)

    return Trajectory(times, amplitudes, tuple(model.labels), tuple(warnings))
