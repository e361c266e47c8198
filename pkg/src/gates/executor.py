"""Sequence runner - executes a list of gate steps on a register."""

import logging

import numpy as np
from numpy.typing import NDArray

from .context import GateContext
from .dynamics import DynamicalMaps
from .register import LogicalEncoding, Register
from .steps import GateStep
from .types import GateMode

logger = logging.getLogger(__name__)


class SequenceRunner:
    """Executes gate sequences."""

    def __init__(
        self,
        register: Register,
        mode: GateMode = GateMode.IDEALIZED,
        encoding: LogicalEncoding | None = None,
        dynamics: DynamicalMaps | None = None,
    ):
        """Initialize the runner.

        Args:
            register: Sites the steps act on
            mode: Idealized step maps or propagated pulses
            encoding: Logical encoding with χ per site (χ = 0 when omitted)
            dynamics: Propagated step maps, required in dynamical mode
        """
        self.register = register
        self.mode = GateMode(mode)
        self.encoding = encoding or LogicalEncoding(register)
        self.dynamics = dynamics
        if self.mode is GateMode.DYNAMICAL and self.dynamics is None:
            self.dynamics = DynamicalMaps()

    def new_context(self, logical) -> GateContext:
        return GateContext(
            register=self.register,
            encoding=self.encoding,
            amplitudes=self.encoding.encode(logical),
            mode=self.mode,
            dynamics=self.dynamics,
        )

    def execute(self, steps: list[GateStep], logical) -> GateContext:
        """Run the steps on an encoded logical state.

        Args:
            steps: Steps to execute in order
            logical: Logical amplitudes over |0⟩, |1⟩ per qubit

        Returns:
            The context after execution, with one snapshot per step
        """
        context = self.new_context(logical)
        for step in steps:
            step.execute(context)
        return context

    def execute_single(self, step: GateStep, context: GateContext) -> GateContext:
        step.execute(context)
        return context

    def logical_matrix(self, steps: list[GateStep]) -> tuple[NDArray[np.complex128], list[str]]:
        """Gate matrix on the logical basis plus the warnings collected on the way."""
        size = len(self.encoding.logical_labels)
        columns, warnings = [], []
        for k in range(size):
            context = self.execute(steps, np.eye(size, dtype=complex)[k])
            columns.append(context.logical_state())
            warnings.extend(w for w in context.warnings if w not in warnings)
        logger.debug(f"Assembled {size}×{size} gate matrix from {len(steps)} steps")
        return np.stack(columns, axis=1), warnings
