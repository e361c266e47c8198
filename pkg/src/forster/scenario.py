"""Förster passage scenarios and the parameter sets they are built from."""

from dataclasses import dataclass, field, replace

import numpy as np

from core.errors import ConstraintError
from hamiltonians import ForsterChannelParams, HamiltonianModel, forster_model
from propagator import IntegrationMethod, TimeGrid
from pulses import NonlinearDetuningPulse

TWO_PI = 2 * np.pi

# V/2π = 2 MHz at R = 15.5 µm fixes C₃; the coupling is not a measured value.
DEFAULT_DISTANCE = 15.5  # µm
DEFAULT_COUPLING = TWO_PI * 2.0
ZERO_FIELD_DEFECT = TWO_PI * 152.0

CROSSING_SAMPLES = 2001


def _zero_crossings(waveform: NonlinearDetuningPulse, start: float, end: float) -> int:
    times = np.linspace(start, end, CROSSING_SAMPLES)
    times[-1] = np.nextafter(end, -np.inf)
    signs = np.sign(np.asarray(waveform.detuning(times)))
    signs = signs[signs != 0]
    return int(np.count_nonzero(np.diff(signs)))


@dataclass(frozen=True)
class ForsterScenario:
    """A double passage of one Förster channel plus how to integrate it."""

    name: str
    channel: ForsterChannelParams
    steps_per_us: float | None = None
    method: IntegrationMethod = IntegrationMethod.MAGNUS4
    description: str = field(default="", compare=False)

    def __post_init__(self):
        waveform = self.channel.detuning_waveform
        if len(waveform.centers) < 2:
            raise ConstraintError(f"Scenario {self.name!r} needs two passage centers, got {waveform.centers}")
        start, end = waveform.support()
        edges = [start, *waveform.midpoints, end]
        for k, (a, b) in enumerate(zip(edges[:-1], edges[1:])):
            crossings = _zero_crossings(waveform, a, b)
            if crossings != 1:
                raise ConstraintError(
                    f"Defect of scenario {self.name!r} crosses zero {crossings} times in passage {k + 1}"
                )

    @property
    def centers(self) -> tuple[float, ...]:
        return self.channel.detuning_waveform.centers

    @property
    def coupling(self) -> float:
        return self.channel.coupling

    @property
    def distance(self) -> float:
        return self.channel.distance

    def model(self) -> HamiltonianModel:
        return forster_model(self.channel)

    def grid(self) -> TimeGrid:
        return TimeGrid.for_model(self.model(), self.steps_per_us, method=self.method)

    def with_distance(self, distance: float) -> "ForsterScenario":
        return replace(self, channel=self.channel.with_distance(distance))

    def with_steps(self, steps_per_us: float | None) -> "ForsterScenario":
        return replace(self, steps_per_us=steps_per_us)

    def summary(self) -> dict:
        return {
            "name": self.name,
            "coupling_mhz": self.coupling / TWO_PI,
            "distance_um": self.distance,
            "zero_field_defect_mhz": self.channel.defect_at_zero_field / TWO_PI,
            "centers_us": list(self.centers),
        }


def stark_tuned_waveform(t1: float = -0.3, t2: float = 0.2993) -> NonlinearDetuningPulse:
    """Quintic defect sweep with s₁/2π = 22.6 MHz/µs and s₂/2π = 28800 MHz/µs⁵."""
    return NonlinearDetuningPulse(
        rabi_frequency=0.0,
        centers=(t1, t2),
        slope=TWO_PI * 22.6,
        coefficient=TWO_PI * 28800,
        odd_power=5,
    )


def stark_tuned_scenario(
    coupling: float = DEFAULT_COUPLING,
    distance: float = DEFAULT_DISTANCE,
    steps_per_us: float | None = None,
) -> ForsterScenario:
    """Stark-tuned |70S,73S⟩ → |70P,72P⟩ passage used by the CZ gate."""
    channel = ForsterChannelParams.from_coupling(
        coupling, distance, stark_tuned_waveform(), defect_at_zero_field=ZERO_FIELD_DEFECT
    )
    return ForsterScenario(
        "stark_tuned", channel, steps_per_us,
        description="Quintic Stark-tuned defect, constant coupling",
    )


def gaussian_chirp_scenario(steps_per_us: float | None = None) -> ForsterScenario:
    """Linearly chirped passages under Gaussian couplings (Ω₀/2π = 10 MHz, w = 0.12 µs)."""
    waveform = NonlinearDetuningPulse(0.0, (0.5, 1.5), slope=TWO_PI * -100)
    channel = ForsterChannelParams.from_coupling(TWO_PI * 5, DEFAULT_DISTANCE, waveform, envelope_width=0.12)
    return ForsterScenario(
        "gaussian_chirp", channel, steps_per_us,
        description="Gaussian coupling, linear detuning",
    )


def cubic_sweep_scenario(steps_per_us: float | None = None) -> ForsterScenario:
    """Constant coupling (Ω₀/2π = 2.1 MHz) with a cubic detuning sweep."""
    waveform = NonlinearDetuningPulse(
        0.0, (0.5, 1.5), slope=TWO_PI * -10, coefficient=TWO_PI * -2000, odd_power=3
    )
    channel = ForsterChannelParams.from_coupling(TWO_PI * 1.05, DEFAULT_DISTANCE, waveform)
    return ForsterScenario(
        "cubic_sweep", channel, steps_per_us,
        description="Constant coupling, cubic detuning",
    )


SCENARIOS = {
    "stark_tuned": stark_tuned_scenario,
    "gaussian_chirp": gaussian_chirp_scenario,
    "cubic_sweep": cubic_sweep_scenario,
}


def get_scenario(name: str, **kwargs) -> ForsterScenario:
    try:
        factory = SCENARIOS[name]
    except KeyError:
        raise ConstraintError(f"Unknown Förster scenario {name!r}; known: {sorted(SCENARIOS)}") from None
    return factory(**kwargs)
