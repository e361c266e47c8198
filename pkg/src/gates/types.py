"""Shared gate enums and reference matrices."""

from enum import Enum

import numpy as np


class GateMode(Enum):
    IDEALIZED = "idealized"  # exact step maps
    DYNAMICAL = "dynamical"  # step maps from propagated pulses


class Subsystem(Enum):
    CONTROL = "control"
    TARGET = "target"
    BOTH = "both"


class TransferDirection(Enum):
    UP = "up"  # |0⟩ → |r0⟩
    DOWN = "down"  # |r0⟩ → |0⟩


# Two-qubit orders are |control target⟩: 00, 01, 10, 11.
ENSEMBLE_CNOT = np.array(
    [
        [0, -1, 0, 0],
        [-1, 0, 0, 0],
        [0, 0, -1j, 0],
        [0, 0, 0, -1j],
    ],
    dtype=complex,
)
CZ = np.diag([1, 1, 1, -1]).astype(complex)
CNOT = np.array(
    [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 1, 0],
    ],
    dtype=complex,
)

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)


def bloch_rotation(theta: float, phi: float) -> np.ndarray:
    """R(θ, φ) = exp[−iθ/2 (cosφ σx + sinφ σy)]."""
    axis = np.cos(phi) * SIGMA_X + np.sin(phi) * SIGMA_Y
    return np.cos(theta / 2) * np.eye(2) - 1j * np.sin(theta / 2) * axis


def odd_pi_rotation(multiple: int) -> np.ndarray:
    """exp(i·mπ/2·σx) for odd m, built from exact entries.

    m = 1 maps |x⟩ → i|y⟩; m = 3 maps |x⟩ → −i|y⟩.
    """
    sign = 1 if (multiple - 1) // 2 % 2 == 0 else -1
    return 1j * sign * SIGMA_X
