"""Optical steps: collective transfers |0̄⟩ ↔ |r̄₀⟩ and resonant π pulses."""

from dataclasses import dataclass
from typing import ClassVar

import numpy as np

from core.errors import ConstraintError
from propagator import Protocol
from .base import GateStep
from ..context import GateContext
from ..types import TransferDirection, odd_pi_rotation

# |0⟩ → |r0⟩, |r0⟩ → −|0⟩
TRANSFER_UP = np.array([[0, -1], [1, 0]], dtype=complex)


@dataclass
class StirapTransferStep(GateStep):
    """Adiabatic transfer between |0̄⟩ and |r̄₀⟩ of one ensemble."""

    STEP_NAMES: ClassVar[list[str]] = ["stirap_up", "stirap_down"]
    levels: ClassVar[tuple[str, ...]] = ("0", "r0")
    protocol: ClassVar[Protocol] = Protocol.STIRAP

    direction: TransferDirection = TransferDirection.UP

    def __post_init__(self):
        self.direction = TransferDirection(self.direction)

    @classmethod
    def from_name(cls, name: str, **params) -> "StirapTransferStep":
        if name.endswith("_down"):
            params.setdefault("direction", TransferDirection.DOWN)
        return cls(**params)

    @property
    def name(self) -> str:
        return f"{self.protocol.value}_{self.direction.value}"

    def local_map(self, context: GateContext, position: int):
        if self.dynamical(context):
            n_atoms = context.register.sites[position].n_atoms
            return context.dynamics.transfer_map(n_atoms, self.protocol, self.direction)
        ideal = TRANSFER_UP if self.direction is TransferDirection.UP else TRANSFER_UP.T
        return self.ideal(context, position, ideal)


@dataclass
class ArpTransferStep(StirapTransferStep):
    """Same transfer by a chirped pulse; the return pass inverts the field."""

    STEP_NAMES: ClassVar[list[str]] = ["arp", "arp_up", "arp_down"]
    protocol: ClassVar[Protocol] = Protocol.ARP


@dataclass
class PiPulseStep(GateStep):
    """Resonant pulse of area m·π between a ground-like and a Rydberg level.

    Area π maps |x⟩ → i|y⟩; the de-excitation pulse of the Förster scheme
    uses area 3π, which maps |y⟩ → −i|x⟩.
    """

    STEP_NAMES: ClassVar[list[str]] = ["pi_pulse"]

    transition: tuple[str, str] = ("1", "r1")
    multiple: int = 1

    def __post_init__(self):
        self.transition = tuple(self.transition)
        if len(self.transition) != 2 or self.transition[0] == self.transition[1]:
            raise ConstraintError(f"A π pulse needs two distinct levels, got {self.transition}")
        if self.multiple < 1 or self.multiple % 2 == 0:
            raise ConstraintError(f"Pulse area must be an odd multiple of π, got {self.multiple}π")

    @property
    def level_pair(self) -> tuple[str, ...]:
        return self.transition

    @property
    def name(self) -> str:
        area = "pi" if self.multiple == 1 else f"{self.multiple}pi"
        return f"{area}_pulse_{self.transition[0]}_{self.transition[1]}"

    def local_map(self, context: GateContext, position: int):
        if self.dynamical(context):
            return context.dynamics.pi_pulse_map(self.multiple)
        return self.ideal(context, position, odd_pi_rotation(self.multiple))
