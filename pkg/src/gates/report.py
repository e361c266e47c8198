from dataclasses import dataclass, field
from typing import Any

import numpy as np
from numpy.typing import NDArray

from propagator import wrap_phase
from .context import StepSnapshot


def complex_pairs(value) -> Any:
    """Nested [re, im] lists for JSON."""
    array = np.asarray(value, dtype=complex)
    if array.ndim == 0:
        return [float(array.real), float(array.imag)]
    return [complex_pairs(item) for item in array]


def _json_value(value):
    if isinstance(value, (complex, np.complexfloating)):
        return complex_pairs(value)
    if isinstance(value, np.ndarray):
        return complex_pairs(value) if np.iscomplexobj(value) else value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    return value


@dataclass(frozen=True, eq=False)
class GateReport:
    """Achieved gate matrix against its target, with the run that produced it."""

    name: str
    achieved: NDArray[np.complex128]
    target: NDArray[np.complex128]
    fidelity: float
    snapshots: tuple[StepSnapshot, ...] = ()
    labels: tuple[str, ...] = ()
    final_state: NDArray[np.complex128] | None = None
    warnings: tuple[str, ...] = ()
    metrics: dict[str, Any] = field(default_factory=dict)

    @property
    def confident(self) -> bool:
        return not self.warnings

    @property
    def diagonal_phases(self) -> NDArray[np.float64]:
        return np.angle(np.diag(self.achieved))

    @property
    def entangling_phase(self) -> float:
        """φ₁₁ − φ₁₀ − φ₀₁ + φ₀₀ wrapped to (−π, π]."""
        p00, p01, p10, p11 = self.diagonal_phases
        return float(wrap_phase(p11 - p10 - p01 + p00))

    def to_json_dict(self) -> dict[str, Any]:
        data = {
            "name": self.name,
            "fidelity": self.fidelity,
            "confident": self.confident,
            "achieved": complex_pairs(self.achieved),
            "target": complex_pairs(self.target),
            "warnings": list(self.warnings),
            "metrics": {key: _json_value(value) for key, value in self.metrics.items()},
            "snapshots": [
                {"step": s.index, "name": s.name, "amplitudes": complex_pairs(s.amplitudes)}
                for s in self.snapshots
            ],
            "labels": list(self.labels),
        }
        if self.final_state is not None:
            data["final_state"] = complex_pairs(self.final_state)
        if self.achieved.shape == (4, 4):
            data["entangling_phase"] = self.entangling_phase
        return data
