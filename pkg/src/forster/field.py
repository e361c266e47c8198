"""Stark tuning: field-to-defect tables and the detuning sweep they produce."""

import logging
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np
from numpy.typing import NDArray
from scipy.interpolate import PchipInterpolator
from scipy.optimize import brentq

from core.errors import ConfigError, ConstraintError
from pulses import NonlinearDetuningPulse

logger = logging.getLogger(__name__)

TWO_PI = 2 * np.pi


@dataclass(frozen=True, eq=False)
class FieldTable:
    """Förster defect Δ(E) of a pair channel sampled against the electric field.

    Fields in V/cm, energies in MHz (linear frequency).
    """

    field: NDArray[np.float64]
    energy: NDArray[np.float64]

    def __post_init__(self):
        field = np.asarray(self.field, dtype=float)
        energy = np.asarray(self.energy, dtype=float)
        if field.ndim != 1 or field.shape != energy.shape or len(field) < 2:
            raise ConstraintError(f"Field table needs two equal columns of >= 2 rows, got {field.shape} and {energy.shape}")
        if np.any(np.diff(field) <= 0):
            raise ConstraintError("Field table must list strictly increasing fields")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "energy", energy)

    @cached_property
    def interpolant(self) -> PchipInterpolator:
        return PchipInterpolator(self.field, self.energy, extrapolate=False)

    @property
    def span(self) -> tuple[float, float]:
        return float(self.field[0]), float(self.field[-1])

    def defect(self, field) -> NDArray[np.float64]:
        """Defect in rad/µs at the given fields."""
        return TWO_PI * self.interpolant(np.asarray(field, dtype=float))

    def is_monotone(self, low: float | None = None, high: float | None = None) -> bool:
        """Strict monotonicity of the table rows between two fields."""
        low = self.span[0] if low is None else low
        high = self.span[1] if high is None else high
        # endpoints within tolerance of a row are represented by the row itself
        tolerance = 1e-9 * (self.span[1] - self.span[0])
        inside = (self.field >= low - tolerance) & (self.field <= high + tolerance)
        rows = self.field[inside]
        values = [self.energy[inside]]
        if len(rows) == 0 or rows[0] - low > tolerance:
            values.insert(0, self.interpolant([low]))
        if len(rows) == 0 or high - rows[-1] > tolerance:
            values.append(self.interpolant([high]))
        values = np.concatenate(values)
        steps = np.diff(values[np.isfinite(values)])
        steps = steps[steps != 0]
        return len(steps) > 0 and bool(np.all(steps > 0) or np.all(steps < 0))


def load_field_table(path: str | Path) -> FieldTable:
    """Read a two-column CSV of field [V/cm] and energy [MHz]; a header row is allowed."""
    path = Path(path)
    with path.open() as handle:
        first = handle.readline().split(",")[0].strip()
    try:
        float(first)
        skip = 0
    except ValueError:
        skip = 1
    try:
        data = np.loadtxt(path, delimiter=",", comments="#", skiprows=skip, ndmin=2)
    except ValueError as e:
        raise ConfigError(f"Cannot parse field table {path}: {e}") from e
    if data.shape[1] != 2:
        raise ConfigError(f"Field table {path} must have two columns, got {data.shape[1]}")
    order = np.argsort(data[:, 0])
    logger.debug(f"Loaded {len(data)} field rows from {path}")
    return FieldTable(data[order, 0], data[order, 1])


def resonance_field(table: FieldTable) -> float:
    """Field at which the defect vanishes."""
    signs = np.sign(table.energy)
    changes = np.flatnonzero(signs[:-1] * signs[1:] <= 0)
    if len(changes) == 0:
        raise ConstraintError(f"Defect does not cross zero between {table.span[0]} and {table.span[1]} V/cm")
    k = int(changes[0])
    if table.energy[k] == 0:
        return float(table.field[k])
    return float(brentq(lambda e: float(table.interpolant(e)), table.field[k], table.field[k + 1], xtol=1e-14))


def required_field(table: FieldTable, waveform: NonlinearDetuningPulse, times) -> NDArray[np.float64]:
    """Field waveform E(t) that produces the detuning sweep of `waveform`."""
    if not table.is_monotone():
        raise ConstraintError("Inverting the field table needs a monotone defect")
    target = np.asarray(waveform.detuning(times), dtype=float) / TWO_PI
    low, high = sorted((table.energy[0], table.energy[-1]))
    if target.min() < low or target.max() > high:
        raise ConstraintError(
            f"Defect sweep [{target.min():.4g}, {target.max():.4g}] MHz leaves the table range [{low:.4g}, {high:.4g}] MHz"
        )
    order = np.argsort(table.energy)
    inverse = PchipInterpolator(table.energy[order], table.field[order])
    return inverse(target)


@dataclass(frozen=True)
class DefectFit:
    pulse: NonlinearDetuningPulse
    residual: float  # rms, rad/µs
    resonance_field: float | None = None

    @property
    def slope(self) -> float:
        return self.pulse.slope

    @property
    def coefficient(self) -> float:
        return self.pulse.coefficient


def effective_defect_from_field(
    table: FieldTable,
    times,
    field,
    centers: tuple[float, ...],
    odd_power: int = 5,
    half_span: float | None = None,
) -> DefectFit:
    """Least-squares δ_F(t) = s₁(t−t_j) + s₂(t−t_j)^p through the tabulated defect.

    One pair (s₁, s₂) is shared by all passages.
    """
    times = np.asarray(times, dtype=float)
    field = np.asarray(field, dtype=float)
    if times.shape != field.shape:
        raise ConstraintError(f"Times {times.shape} and field samples {field.shape} differ in shape")
    if field.min() < table.span[0] or field.max() > table.span[1]:
        raise ConstraintError(f"Field samples leave the table span {table.span} V/cm")
    if not table.is_monotone(field.min(), field.max()):
        raise ConstraintError("Defect is not monotone over the swept field range; fit rejected")

    if half_span is None and len(centers) == 1:
        half_span = float(np.max(np.abs(times - centers[0])))
    template = NonlinearDetuningPulse(0.0, tuple(centers), slope=0.0, odd_power=odd_power, half_span=half_span)
    tau = np.asarray(template.local_time(times))
    defect = table.defect(field)

    design = np.column_stack([tau, tau**odd_power])
    (slope, coefficient), *_ = np.linalg.lstsq(design, defect, rcond=None)
    residual = float(np.sqrt(np.mean((design @ [slope, coefficient] - defect) ** 2)))

    try:
        resonance = resonance_field(table)
    except ConstraintError:
        resonance = None
    pulse = NonlinearDetuningPulse(
        0.0, tuple(centers), slope=float(slope), coefficient=float(coefficient),
        odd_power=odd_power, half_span=half_span,
    )
    logger.info(
        f"Fitted s₁/2π = {slope / TWO_PI:.6g} MHz/µs, s₂/2π = {coefficient / TWO_PI:.6g} MHz/µs^{odd_power}, "
        f"rms residual {residual:.3g} rad/µs"
    )
    return DefectFit(pulse, residual, resonance)
