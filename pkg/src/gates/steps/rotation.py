from dataclasses import dataclass
from typing import ClassVar

import numpy as np

from .base import GateStep
from ..context import GateContext
from ..types import bloch_rotation

RYDBERG_FRAME = np.diag([1, 1j])


@dataclass
class MicrowaveRotationStep(GateStep):
    """Microwave R(θ, φ) on the |r̄₀⟩, |r̄₁⟩ pair.

    a|r̄₀⟩ + ib|r̄₁⟩ becomes a′|r̄₀⟩ − ib′|r̄₁⟩ with (a′, −b′) = R(θ, φ)(a, b).
    """

    STEP_NAMES: ClassVar[list[str]] = ["microwave_rotation", "microwave"]
    levels: ClassVar[tuple[str, ...]] = ("r0", "r1")
    gated: ClassVar[bool] = False

    theta: float = 0.0
    phi: float = 0.0

    def matrix(self):
        return RYDBERG_FRAME @ bloch_rotation(self.theta, self.phi) @ RYDBERG_FRAME.conj().T

    def local_map(self, context: GateContext, position: int):
        return self.ideal(context, position, self.matrix())


@dataclass
class QubitRotationStep(GateStep):
    """Bloch rotation R(θ, φ) of the logical pair |0⟩, |1⟩."""

    STEP_NAMES: ClassVar[list[str]] = ["qubit_rotation"]
    levels: ClassVar[tuple[str, ...]] = ("0", "1")
    gated: ClassVar[bool] = False

    theta: float = 0.0
    phi: float = 0.0

    def local_map(self, context: GateContext, position: int):
        return self.ideal(context, position, bloch_rotation(self.theta, self.phi))
