from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np
from numpy.typing import NDArray

from core.errors import ModelKindError
from pulses.types import TimeLike
from statespace import BlockadedBasis
from .types import ForsterChannelParams, ModelKind

Waveform = Callable[[NDArray[np.float64]], NDArray[np.float64]]


@dataclass(frozen=True, eq=False)
class CouplingTerm:
    """A constant real symmetric matrix weighted by a scalar waveform."""

    name: str
    matrix: NDArray[np.float64]
    waveform: Waveform


@dataclass(frozen=True, eq=False)
class HamiltonianModel:
    """H(t) = Σ_k w_k(t)·M_k for one of the supported model kinds.

    `source` is the pulse (or Förster channel) the waveforms are built
    from; `support()` and `breakpoints()` are delegated to it.
    """

    kind: ModelKind
    labels: tuple[str, ...]
    terms: tuple[CouplingTerm, ...]
    source: Any
    basis: BlockadedBasis | None = None
    n_atoms: int = 1
    two_level: Callable[[NDArray[np.float64]], tuple[NDArray, NDArray]] | None = None
    _stack: NDArray[np.float64] = field(init=False, repr=False)

    def __post_init__(self):
        stack = np.stack([term.matrix for term in self.terms])
        object.__setattr__(self, "_stack", stack)

    @property
    def dimension(self) -> int:
        return len(self.labels)

    @property
    def channel(self) -> ForsterChannelParams | None:
        return self.source if self.kind is ModelKind.FORSTER_CHANNEL else None

    def require(self, *kinds: ModelKind) -> None:
        if self.kind not in kinds:
            expected = ", ".join(k.value for k in kinds)
            raise ModelKindError(f"Expected a model of kind {expected}, got {self.kind.value}")

    def coefficients(self, times: TimeLike) -> NDArray[np.float64]:
        """Waveform values, shape (len(times), n_terms)."""
        times = np.atleast_1d(np.asarray(times, dtype=float))
        return np.stack(
            [np.broadcast_to(term.waveform(times), times.shape) for term in self.terms], axis=-1
        )

    def matrices(self, times: TimeLike) -> NDArray[np.float64]:
        """H at every time, shape (len(times), D, D)."""
        return np.einsum("tk,kij->tij", self.coefficients(times), self._stack)

    def matrix(self, t: float) -> NDArray[np.float64]:
        return self.matrices(np.array([t], dtype=float))[0]

    def two_level_parameters(self, times: TimeLike) -> tuple[NDArray, NDArray]:
        """Effective (Rabi frequency, detuning) of a two-level model."""
        if self.two_level is None:
            raise ModelKindError(f"Model of kind {self.kind.value} is not a two-level model")
        times = np.atleast_1d(np.asarray(times, dtype=float))
        rabi, detuning = self.two_level(times)
        return np.broadcast_to(rabi, times.shape), np.broadcast_to(detuning, times.shape)

    def support(self, threshold: float | None = None) -> tuple[float, float]:
        if self.kind is ModelKind.FORSTER_CHANNEL:
            return self.source.detuning_waveform.support(threshold)
        return self.source.support(threshold)

    def breakpoints(self) -> tuple[float, ...]:
        if self.kind is ModelKind.FORSTER_CHANNEL:
            return tuple(self.source.detuning_waveform.breakpoints())
        return tuple(self.source.breakpoints())
