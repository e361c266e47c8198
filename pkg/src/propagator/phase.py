import numpy as np
from numpy.typing import NDArray

from core.config import config


def wrap_phase(phase):
    """Map phases onto (−π, π]."""
    return np.pi - np.mod(np.pi - np.asarray(phase, dtype=float), 2.0 * np.pi)


def unwrap_masked(
    amplitudes: NDArray[np.complex128],
    floor: float | None = None,
) -> NDArray[np.float64]:
    """Unwrapped arg of an amplitude series; NaN where |c|² is below the floor.

    Unwrapping runs over the unmasked samples only, so a phase picked up
    across a masked gap is joined to the nearest 2π branch.
    """
    floor = floor if floor is not None else config.phase_population_floor
    amplitudes = np.asarray(amplitudes)
    phases = np.full(amplitudes.shape, np.nan)
    valid = np.abs(amplitudes) ** 2 >= floor
    if np.any(valid):
        phases[valid] = np.unwrap(np.angle(amplitudes[valid]))
    return phases


def extract_phase(trajectory, basis_index: int | str, floor: float | None = None) -> NDArray[np.float64]:
    """Continuous phase of one basis component along a trajectory."""
    index = trajectory.column(basis_index)
    return unwrap_masked(trajectory.amplitudes[:, index], floor)
