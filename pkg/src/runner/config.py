"""Scenario configuration files.

Frequencies are written in MHz (linear) and times in µs. Everything is
converted to rad/µs when the pulse or model is built.
"""

import json
from pathlib import Path
from typing import Annotated, Literal, Union

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from core.errors import ConfigError
from hamiltonians import (
    ForsterChannelParams,
    HamiltonianModel,
    ModelKind,
    arp_model,
    ensemble_model,
    forster_model,
    stirap_model,
    two_level_ensemble_model,
)
from propagator import IntegrationMethod, TimeGrid
from pulses import (
    DetuningSignRule,
    DoubleMode,
    DoubleSequence,
    GaussianChirpPulse,
    NonlinearDetuningPulse,
    OptimizedStirapPair,
    StirapPair,
)
from statespace import Representation, build_basis

TWO_PI = 2 * np.pi


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class GaussianChirpConfig(_Strict):
    kind: Literal["gaussian_chirp"] = "gaussian_chirp"
    peak_rabi_mhz: float = Field(ge=0)
    width_us: float = Field(gt=0)
    center_us: float = 0.0
    chirp_mhz_per_us: float = 0.0
    phase_sign: Literal[1, -1] = 1

    def build(self) -> GaussianChirpPulse:
        return GaussianChirpPulse(
            peak_rabi=TWO_PI * self.peak_rabi_mhz,
            width=self.width_us,
            center=self.center_us,
            chirp_rate=TWO_PI * self.chirp_mhz_per_us,
            phase_sign=self.phase_sign,
        )


class StirapPairConfig(_Strict):
    kind: Literal["stirap_pair"] = "stirap_pair"
    stokes_peak_mhz: float = Field(ge=0)
    pump_peak_mhz: float = Field(ge=0)
    stokes_center_us: float
    pump_center_us: float
    width_us: float = Field(gt=0)
    detuning_mhz: float = 0.0
    detuning_sign_rule: DetuningSignRule = DetuningSignRule.CONSTANT
    mirrored: bool = False

    def build(self) -> StirapPair:
        return StirapPair(
            stokes_peak=TWO_PI * self.stokes_peak_mhz,
            pump_peak=TWO_PI * self.pump_peak_mhz,
            stokes_center=self.stokes_center_us,
            pump_center=self.pump_center_us,
            width=self.width_us,
            delta=TWO_PI * self.detuning_mhz,
            detuning_sign_rule=self.detuning_sign_rule,
            mirrored=self.mirrored,
        )


class OptimizedStirapConfig(_Strict):
    kind: Literal["optimized_stirap"] = "optimized_stirap"
    amplitude_mhz: float = Field(ge=0)
    hyper_width_us: float = Field(gt=0)
    hyper_order: int = Field(3, ge=1)
    steepness: float = Field(4.0, gt=0)
    tau_us: float | None = Field(None, gt=0)
    center_us: float = 0.0
    detuning_mhz: float = 0.0

    def build(self) -> OptimizedStirapPair:
        return OptimizedStirapPair(
            amplitude=TWO_PI * self.amplitude_mhz,
            hyper_width=self.hyper_width_us,
            hyper_order=self.hyper_order,
            steepness=self.steepness,
            tau=self.tau_us,
            center=self.center_us,
            delta=TWO_PI * self.detuning_mhz,
        )


class NonlinearDetuningConfig(_Strict):
    kind: Literal["nonlinear_detuning"] = "nonlinear_detuning"
    rabi_mhz: float = Field(0.0, ge=0)
    centers_us: list[float] = Field(min_length=1)
    slope_mhz_per_us: float
    coefficient_mhz: float = 0.0  # MHz/µs^p
    odd_power: Literal[3, 5] = 3
    half_span_us: float | None = Field(None, gt=0)

    def build(self) -> NonlinearDetuningPulse:
        return NonlinearDetuningPulse(
            rabi_frequency=TWO_PI * self.rabi_mhz,
            centers=tuple(self.centers_us),
            slope=TWO_PI * self.slope_mhz_per_us,
            coefficient=TWO_PI * self.coefficient_mhz,
            odd_power=self.odd_power,
            half_span=self.half_span_us,
        )


PulseConfig = Annotated[
    Union[GaussianChirpConfig, StirapPairConfig, OptimizedStirapConfig, NonlinearDetuningConfig],
    Field(discriminator="kind"),
]


class DoubleConfig(_Strict):
    """Repeat the pulse right after itself."""

    mode: DoubleMode = DoubleMode.IDENTICAL
    gap_us: float = Field(0.0, ge=0)


class ForsterConfig(_Strict):
    coupling_mhz: float = Field(gt=0)  # V/2π at distance_um
    distance_um: float = Field(15.5, gt=0)
    defect_at_zero_field_mhz: float = 0.0
    envelope_width_us: float | None = Field(None, gt=0)

    def build(self, waveform: NonlinearDetuningPulse) -> ForsterChannelParams:
        return ForsterChannelParams.from_coupling(
            TWO_PI * self.coupling_mhz,
            self.distance_um,
            waveform,
            defect_at_zero_field=TWO_PI * self.defect_at_zero_field_mhz,
            envelope_width=self.envelope_width_us,
        )


class GridConfig(_Strict):
    steps_per_us: float | None = Field(None, gt=0)
    method: IntegrationMethod = IntegrationMethod.RK4
    adaptive: bool = False
    t_start_us: float | None = None
    t_end_us: float | None = None
    record_every: int = Field(1, ge=1)

    @model_validator(mode="after")
    def _window(self):
        if (self.t_start_us is None) != (self.t_end_us is None):
            raise ValueError("t_start_us and t_end_us must be given together")
        return self


class OutputConfig(_Strict):
    populations: bool = True
    phases: bool = True
    eigenvalues: bool = False
    report: bool = True
    samples_per_us: float | None = Field(None, gt=0)


SINGLE_ATOM_KINDS = (ModelKind.ARP_TWO_LEVEL, ModelKind.STIRAP_THREE_LEVEL, ModelKind.FORSTER_CHANNEL)
PAIR_KINDS = (
    ModelKind.STIRAP_THREE_LEVEL,
    ModelKind.ENSEMBLE_THREE_LEVEL_FULL,
    ModelKind.ENSEMBLE_THREE_LEVEL_SYMMETRIC,
)


class ScenarioConfig(_Strict):
    """One propagation: model, pulse, initial state, grid and outputs."""

    name: str = Field(min_length=1, pattern=r"^[A-Za-z0-9_.-]+$")
    description: str = ""
    model: ModelKind
    pulse: PulseConfig
    double: DoubleConfig | None = None
    forster: ForsterConfig | None = None
    n_atoms: int = Field(1, ge=1)
    initial_state: str | None = None  # basis label; the first basis state by default
    grid: GridConfig = Field(default_factory=GridConfig)
    outputs: OutputConfig = Field(default_factory=OutputConfig)

    @model_validator(mode="after")
    def _consistent(self):
        if self.model in SINGLE_ATOM_KINDS and self.n_atoms != 1:
            raise ValueError(f"Model {self.model.value} describes one atom (or pair channel), got n_atoms = {self.n_atoms}")
        if self.model is ModelKind.FORSTER_CHANNEL:
            if self.forster is None or self.pulse.kind != "nonlinear_detuning":
                raise ValueError("A forster_channel model needs a 'forster' block and a nonlinear_detuning pulse")
            if self.double is not None:
                raise ValueError("A forster_channel waveform already holds all passages; drop 'double'")
        elif self.forster is not None:
            raise ValueError(f"'forster' only applies to forster_channel models, not {self.model.value}")
        wants_pair = self.model in PAIR_KINDS
        if wants_pair != (self.pulse.kind in ("stirap_pair", "optimized_stirap")):
            kind = "a pump/Stokes pair" if wants_pair else "a single-field pulse"
            raise ValueError(f"Model {self.model.value} needs {kind}, got {self.pulse.kind}")
        # surfaces pulse constraints (ordering, centers) as validation errors
        self.build_source()
        return self

    def build_pulse(self):
        pulse = self.pulse.build()
        if self.double is not None:
            return DoubleSequence.repeated(pulse, self.double.mode, self.double.gap_us)
        return pulse

    def build_source(self):
        """The pulse, or the Förster channel built around it."""
        if self.model is ModelKind.FORSTER_CHANNEL:
            return self.forster.build(self.pulse.build())
        return self.build_pulse()

    def build_model(self) -> HamiltonianModel:
        source = self.build_source()
        match self.model:
            case ModelKind.ARP_TWO_LEVEL:
                return arp_model(source)
            case ModelKind.STIRAP_THREE_LEVEL:
                return stirap_model(source)
            case ModelKind.ENSEMBLE_TWO_LEVEL:
                return two_level_ensemble_model(source, self.n_atoms)
            case ModelKind.ENSEMBLE_THREE_LEVEL_FULL:
                return ensemble_model(source, build_basis(self.n_atoms, representation=Representation.FULL))
            case ModelKind.ENSEMBLE_THREE_LEVEL_SYMMETRIC:
                return ensemble_model(source, build_basis(self.n_atoms, representation=Representation.SYMMETRIC))
            case ModelKind.FORSTER_CHANNEL:
                return forster_model(source)

    def initial_amplitudes(self, model: HamiltonianModel) -> NDArray[np.complex128]:
        label = self.initial_state if self.initial_state is not None else model.labels[0]
        if label not in model.labels:
            raise ConfigError(f"Initial state {label!r} is not one of {list(model.labels)}")
        psi0 = np.zeros(model.dimension, dtype=complex)
        psi0[model.labels.index(label)] = 1.0
        return psi0

    def build_grid(self, model: HamiltonianModel, steps_per_us: float | None = None) -> TimeGrid:
        """Integration grid; an explicit steps_per_us wins over the file's."""
        density = steps_per_us if steps_per_us is not None else self.grid.steps_per_us
        options = {"method": self.grid.method, "adaptive": self.grid.adaptive}
        if self.grid.t_start_us is None:
            return TimeGrid.for_model(model, density, **options)
        return TimeGrid.for_window(
            self.grid.t_start_us, self.grid.t_end_us, density, breakpoints=model.breakpoints(), **options
        )


def parse_config(data: dict) -> ScenarioConfig:
    try:
        return ScenarioConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigError(f"Invalid scenario config: {e}") from e


def load_config(path: str | Path) -> ScenarioConfig:
    """Read a JSON scenario file."""
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise ConfigError(f"{path} is not valid JSON: {e}") from e
    return parse_config(data)


def dump_config(scenario: ScenarioConfig) -> str:
    return scenario.model_dump_json(indent=2)
