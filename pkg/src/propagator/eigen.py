"""Continuity-ordered instantaneous spectra."""

import logging
import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray
from scipy.optimize import linear_sum_assignment

from core.config import config
from core.errors import CapacityError
from statespace import CollectiveState
from .grid import TimeGrid
from .integrators import chunk_slices
from .trajectory import initial_amplitudes

logger = logging.getLogger(__name__)

MAX_TRACK_DIMENSION = 64


@dataclass(frozen=True, eq=False)
class EigenTrack:
    """Eigenvalue traces ordered by eigenvector continuity.

    `branch_vectors` holds the eigenvector of the initially occupied
    branch with its phase transported along the track.
    """

    times: NDArray[np.float64]
    eigenvalues: NDArray[np.float64]
    initial_state_branch: int
    branch_vectors: NDArray[np.complex128]
    flagged: tuple[int, ...] = ()
    discontinuities: tuple[int, ...] = ()
    breakpoint_indices: tuple[int, ...] = ()  # samples taken exactly at a Hamiltonian jump

    @property
    def initial_branch_values(self) -> NDArray[np.float64]:
        return self.eigenvalues[:, self.initial_state_branch]

    def zero_traces(self, tolerance: float = 1e-9) -> list[int]:
        """Branches whose eigenvalue stays within tolerance·max|λ| of zero."""
        scale = max(float(np.max(np.abs(self.eigenvalues))), 1e-300)
        return [
            k for k in range(self.eigenvalues.shape[1])
            if np.max(np.abs(self.eigenvalues[:, k])) < tolerance * scale
        ]


def _degenerate_clusters(values: NDArray[np.float64], rtol: float) -> list[NDArray[np.intp]]:
    scale = max(float(np.max(np.abs(values))), 1e-300)
    breaks = np.flatnonzero(np.diff(values) > rtol * scale) + 1
    return [cluster for cluster in np.split(np.arange(len(values)), breaks) if len(cluster) > 1]


def _align_clusters(
    values: NDArray[np.float64],
    vectors: NDArray[np.complex128],
    reference: NDArray[np.complex128],
    rtol: float,
) -> NDArray[np.complex128]:
    """Rotate each degenerate eigenspace onto the closest reference vectors."""
    vectors = vectors.copy()
    for cluster in _degenerate_clusters(values, rtol):
        block = vectors[:, cluster]
        weights = np.linalg.norm(block.conj().T @ reference, axis=0)
        nearest = np.sort(np.argsort(weights)[::-1][: len(cluster)])
        u, _, vh = np.linalg.svd(block.conj().T @ reference[:, nearest])
        vectors[:, cluster] = block @ (u @ vh)
    return vectors


def _match(
    previous: NDArray[np.complex128],
    vectors: NDArray[np.complex128],
    values: NDArray[np.float64],
    ambiguity: float,
) -> tuple[NDArray[np.intp], bool]:
    """Column order of `vectors` continuing the previous columns."""
    overlap = np.abs(previous.conj().T @ vectors) ** 2
    rows, cols = linear_sum_assignment(-overlap)
    order = np.empty(len(rows), dtype=np.intp)
    order[rows] = cols

    weak = overlap[np.arange(len(order)), order] < ambiguity
    if not np.any(weak):
        return order, False
    # Ambiguous slots take the ambiguous columns in ascending value order.
    slots = np.flatnonzero(weak)
    columns = order[slots]
    order[slots] = columns[np.argsort(values[columns])]
    return order, True


def _fix_gauge(vectors: NDArray[np.complex128], previous: NDArray[np.complex128] | None) -> NDArray[np.complex128]:
    if previous is None:
        pivots = np.argmax(np.abs(vectors), axis=0)
        reference = vectors[pivots, np.arange(vectors.shape[1])]
    else:
        reference = np.sum(previous.conj() * vectors, axis=0)
    magnitude = np.abs(reference)
    phase = np.where(magnitude > 0, np.conj(reference) / np.where(magnitude > 0, magnitude, 1.0), 1.0)
    return vectors * phase


def eigen_track(
    model,
    grid: TimeGrid | None = None,
    psi0: CollectiveState | NDArray[np.complex128] | None = None,
    samples_per_us: float | None = None,
) -> EigenTrack:
    """Instantaneous eigenvalues of the model ordered for continuity.

    The spectrum is sampled at `samples_per_us` (default from config) over
    the grid window. The initially occupied branch is the eigenvector with
    the largest overlap with psi0 (default: first basis state) at t_start.
    """
    if model.dimension > MAX_TRACK_DIMENSION:
        raise CapacityError(
            f"Eigenvalue tracking supports dimension 1..{MAX_TRACK_DIMENSION}, got {model.dimension}"
        )
    window = grid if grid is not None else TimeGrid.for_model(model)
    density = samples_per_us if samples_per_us is not None else config.eigen_samples_per_us
    sampling = TimeGrid(
        window.t_start,
        window.t_end,
        max(2, math.ceil(window.duration * density)),
        breakpoints=window.breakpoints,
    )
    times = sampling.nodes()

    if psi0 is None:
        psi0 = np.zeros(model.dimension, dtype=complex)
        psi0[0] = 1.0
    psi0 = initial_amplitudes(model, psi0)

    n_times, dimension = len(times), model.dimension
    eigenvalues = np.empty((n_times, dimension))
    branch_vectors = np.empty((n_times, dimension), dtype=complex)
    flagged: list[int] = []
    previous: NDArray[np.complex128] | None = None
    branch = 0

    for chunk in chunk_slices(n_times, config.chunk_size):
        chunk_values, chunk_vectors = np.linalg.eigh(model.matrices(times[chunk]))
        for k in range(len(chunk_values)):
            i = chunk.start + k
            values, vectors = chunk_values[k], chunk_vectors[k].astype(complex)
            reference = np.eye(dimension, dtype=complex) if previous is None else previous
            vectors = _align_clusters(values, vectors, reference, config.eigen_degeneracy_rtol)

            if previous is not None:
                order, ambiguous = _match(previous, vectors, values, config.eigen_ambiguity_overlap)
                values, vectors = values[order], vectors[:, order]
                if ambiguous:
                    flagged.append(i)
            vectors = _fix_gauge(vectors, previous)

            if previous is None:
                branch = int(np.argmax(np.abs(vectors.conj().T @ psi0) ** 2))
            eigenvalues[i] = values
            branch_vectors[i] = vectors[:, branch]
            previous = vectors

    slopes = np.abs(np.diff(eigenvalues, axis=0)) / np.diff(times)[:, None]
    discontinuities = tuple(int(i) + 1 for i in np.flatnonzero(np.any(slopes > config.eigen_slope_limit, axis=1)))
    if flagged:
        logger.warning(f"Eigenvalue matching was ambiguous at {len(flagged)} sample(s)")
    if discontinuities:
        logger.debug(f"Eigenvalue slope limit exceeded at {len(discontinuities)} sample(s)")

    jumps = tuple(int(i) for i in np.flatnonzero(np.isin(times, sampling.breakpoints)))
    return EigenTrack(times, eigenvalues, branch, branch_vectors, tuple(flagged), discontinuities, jumps)
