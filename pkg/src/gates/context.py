"""State carried through a gate sequence."""

import logging
from dataclasses import dataclass, field
from typing import Any, TYPE_CHECKING

import numpy as np
from numpy.typing import NDArray

from .register import Label, LogicalEncoding, Register
from .types import GateMode

if TYPE_CHECKING:
    from .dynamics import DynamicalMaps

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class StepSnapshot:
    """Register amplitudes in the barred frame after one step."""

    index: int
    name: str
    amplitudes: NDArray[np.complex128]


@dataclass
class GateContext:
    """Context that maintains the register state while a sequence runs."""

    register: Register
    encoding: LogicalEncoding
    amplitudes: NDArray[np.complex128]
    mode: GateMode = GateMode.IDEALIZED
    dynamics: "DynamicalMaps | None" = None

    snapshots: list[StepSnapshot] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    metrics: dict[str, Any] = field(default_factory=dict)
    steps_executed: int = 0

    def apply_local(self, position: int, levels: tuple[str, ...], matrix, gated: bool = True) -> None:
        operator = self.register.local_operator(position, levels, np.asarray(matrix, dtype=complex), gated)
        self.amplitudes = operator @ self.amplitudes

    def apply_phase(self, label: Label, factor: complex) -> None:
        index = self.register.index(label)
        self.amplitudes = self.amplitudes.copy()
        self.amplitudes[index] *= factor

    def barred_amplitudes(self) -> NDArray[np.complex128]:
        return self.encoding.to_barred(self.amplitudes)

    def record(self, name: str) -> None:
        self.steps_executed += 1
        self.snapshots.append(StepSnapshot(self.steps_executed, name, self.barred_amplitudes()))
        logger.debug(f"Step {self.steps_executed} ({name}): norm {np.linalg.norm(self.amplitudes):.12f}")

    def warn(self, message: str) -> None:
        if message not in self.warnings:
            logger.warning(message)
            self.warnings.append(message)

    def logical_state(self) -> NDArray[np.complex128]:
        return self.encoding.decode(self.amplitudes)

    def leakage(self) -> float:
        """Weight outside the logical subspace."""
        logical = self.logical_state()
        return float(max(np.vdot(self.amplitudes, self.amplitudes).real - np.vdot(logical, logical).real, 0.0))
