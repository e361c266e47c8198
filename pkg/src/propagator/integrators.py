"""Single-step schemes for i·dc/dt = H(t)·c with ħ = 1."""

import logging
from typing import Iterator

import numpy as np
from numpy.typing import NDArray

from core.config import config
from core.errors import IntegrationError
from .grid import IntegrationMethod, TimeGrid

logger = logging.getLogger(__name__)

GAUSS_OFFSET = np.sqrt(3.0) / 6.0


def rk4_step(
    c: NDArray[np.complex128],
    h_start: NDArray,
    h_mid: NDArray,
    h_end: NDArray,
    dt: float,
) -> NDArray[np.complex128]:
    """Classic RK4 step with the Hamiltonian sampled at t, t + dt/2 and t + dt."""
    k1 = -1j * (h_start @ c)
    k2 = -1j * (h_mid @ (c + 0.5 * dt * k1))
    k3 = -1j * (h_mid @ (c + 0.5 * dt * k2))
    k4 = -1j * (h_end @ (c + dt * k3))
    return c + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def magnus4_propagators(
    h_first: NDArray, h_second: NDArray, dt: NDArray[np.float64]
) -> NDArray[np.complex128]:
    """Fourth-order Magnus step operators from two Gauss-point samples.

    Batched over the leading axis: H_eff = (H₁+H₂)/2 − i(√3·dt/12)[H₂, H₁]
    and U = exp(−i·dt·H_eff) through an eigendecomposition.
    """
    dt = np.asarray(dt, dtype=float)[:, None, None]
    commutator = h_second @ h_first - h_first @ h_second
    h_eff = 0.5 * (h_first + h_second) - 1j * (np.sqrt(3.0) * dt / 12.0) * commutator
    values, vectors = np.linalg.eigh(h_eff)
    phases = np.exp(-1j * dt[:, :, 0] * values)
    return (vectors * phases[:, None, :]) @ np.conj(np.swapaxes(vectors, 1, 2))


def chunk_slices(n: int, size: int) -> Iterator[slice]:
    for start in range(0, n, size):
        yield slice(start, min(start + size, n))


def _chunk_propagators(model, starts, ends, dt, method: IntegrationMethod):
    """Per-step update functions for one chunk of the grid."""
    if method is IntegrationMethod.MAGNUS4:
        h_first = model.matrices(starts + (0.5 - GAUSS_OFFSET) * dt)
        h_second = model.matrices(starts + (0.5 + GAUSS_OFFSET) * dt)
        propagators = magnus4_propagators(h_first, h_second, dt)
        return lambda k, c: propagators[k] @ c

    h_start = model.matrices(starts)
    h_mid = model.matrices(starts + 0.5 * dt)
    h_end = model.matrices(ends)
    return lambda k, c: rk4_step(c, h_start[k], h_mid[k], h_end[k], dt[k])


def fixed_step(
    model,
    c0: NDArray[np.complex128],
    grid: TimeGrid,
    record_every: int = 1,
) -> tuple[NDArray[np.float64], NDArray[np.complex128]]:
    """Integrate over the grid nodes, keeping every `record_every`-th node and the last."""
    nodes = grid.nodes()
    ends = grid.step_end_times(nodes)
    steps = np.diff(nodes)
    n_steps = len(steps)

    kept_times = [nodes[0]]
    kept = [c0.copy()]
    c = c0.astype(complex, copy=True)

    for chunk in chunk_slices(n_steps, config.chunk_size):
        advance = _chunk_propagators(model, nodes[chunk], ends[chunk], steps[chunk], grid.method)
        for k in range(chunk.stop - chunk.start):
            c = advance(k, c)
            index = chunk.start + k + 1
            if index % record_every == 0 or index == n_steps:
                kept_times.append(nodes[index])
                kept.append(c)

        if not np.all(np.isfinite(c)):
            raise IntegrationError("Amplitudes became non-finite", float(nodes[chunk.stop]))

    return np.asarray(kept_times), np.asarray(kept)


def _doubling_estimates(model, c, t, dt, reaches_boundary: bool):
    """One full RK4 step and two half steps over [t, t + dt]."""
    end = t + dt
    if reaches_boundary:
        end = np.nextafter(end, -np.inf)
    h = model.matrices(np.array([t, t + 0.25 * dt, t + 0.5 * dt, t + 0.75 * dt, end]))
    full = rk4_step(c, h[0], h[2], h[4], dt)
    half = rk4_step(c, h[0], h[1], h[2], 0.5 * dt)
    half = rk4_step(half, h[2], h[3], h[4], 0.5 * dt)
    return full, half


def adaptive(
    model,
    c0: NDArray[np.complex128],
    grid: TimeGrid,
    record_every: int = 1,
) -> tuple[NDArray[np.float64], NDArray[np.complex128]]:
    """RK4 with step doubling, never stepping across a segment boundary."""
    kept_times = [grid.t_start]
    kept = [c0.copy()]
    c = c0.astype(complex, copy=True)
    accepted = 0

    for (a, b), n in zip(grid.segments(), grid.segment_steps()):
        t = a
        dt = (b - a) / n
        while t < b:
            reaches_boundary = dt >= b - t
            if reaches_boundary:
                dt = b - t
            full, half = _doubling_estimates(model, c, t, dt, reaches_boundary)
            error = float(np.linalg.norm(half - full)) / 15.0
            tolerance = grid.abs_tol + grid.rel_tol * float(np.linalg.norm(half))

            if error > tolerance:
                dt *= max(0.1, 0.9 * (tolerance / error) ** 0.2)
                if dt < grid.min_step:
                    raise IntegrationError(f"Step size underflow (dt = {dt:.3g} µs)", t)
                continue

            t = b if reaches_boundary else t + dt
            c = half
            accepted += 1
            if accepted % record_every == 0:
                kept_times.append(t)
                kept.append(c)
            dt *= 2.0 if error == 0.0 else min(2.0, 0.9 * (tolerance / error) ** 0.2)

        if not np.all(np.isfinite(c)):
            raise IntegrationError("Amplitudes became non-finite", t)

    if kept_times[-1] != grid.t_end:
        kept_times.append(grid.t_end)
        kept.append(c)
    logger.debug(f"Adaptive integration accepted {accepted} steps")
    return np.asarray(kept_times), np.asarray(kept)
