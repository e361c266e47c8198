"""Built-in scenario configs, also the starting points for sweeps."""

from typing import Callable

from core.errors import ConfigError
from hamiltonians import ModelKind
from propagator import IntegrationMethod
from pulses import DetuningSignRule, DoubleMode
from .config import (
    DoubleConfig,
    GaussianChirpConfig,
    GridConfig,
    OutputConfig,
    ScenarioConfig,
    StirapPairConfig,
)

# Gaussian ARP pulse: Ω₀/2π = 5 MHz, w = 1 µs, α/2π = −1 MHz/µs
INVERSION_PULSE = GaussianChirpConfig(peak_rabi_mhz=5.0, width_us=1.0, chirp_mhz_per_us=-1.0)
# weaker pulse used on ensembles
ENSEMBLE_PULSE = GaussianChirpConfig(peak_rabi_mhz=2.0, width_us=1.0, chirp_mhz_per_us=-1.0)

MAGNUS = GridConfig(method=IntegrationMethod.MAGNUS4)


def blockade_pair(detuning_mhz: float, swapped: bool = False) -> StirapPairConfig:
    """Stokes 30 MHz at −1 µs, pump 40 MHz at +1 µs, w = 1 µs; `swapped` exchanges the peaks."""
    stokes, pump = (40.0, 30.0) if swapped else (30.0, 40.0)
    return StirapPairConfig(
        stokes_peak_mhz=stokes, pump_peak_mhz=pump, stokes_center_us=-1.0, pump_center_us=1.0,
        width_us=1.0, detuning_mhz=detuning_mhz,
    )


def equal_pair(detuning_mhz: float) -> StirapPairConfig:
    """Both fields 10 MHz, Stokes at −1 µs, pump at +1 µs, w = 1 µs."""
    return StirapPairConfig(
        stokes_peak_mhz=10.0, pump_peak_mhz=10.0, stokes_center_us=-1.0, pump_center_us=1.0,
        width_us=1.0, detuning_mhz=detuning_mhz,
    )


def mirrored_pair(
    rule: DetuningSignRule,
    stokes_mhz: float = 10.0,
    pump_mhz: float = 10.0,
    stokes_center: float = 6.0,
    pump_center: float = 4.0,
    detuning_mhz: float = 10.0,
) -> StirapPairConfig:
    """Symmetric double STIRAP: Stokes at ±stokes_center, pump at ±pump_center."""
    return StirapPairConfig(
        stokes_peak_mhz=stokes_mhz, pump_peak_mhz=pump_mhz,
        stokes_center_us=stokes_center, pump_center_us=pump_center,
        width_us=1.0, detuning_mhz=detuning_mhz, detuning_sign_rule=rule, mirrored=True,
    )


def arp_inversion() -> ScenarioConfig:
    return ScenarioConfig(
        name="arp_inversion",
        description="Chirped Gaussian pulse inverting a two-level atom",
        model=ModelKind.ARP_TWO_LEVEL,
        pulse=INVERSION_PULSE,
        outputs=OutputConfig(eigenvalues=True),
    )


def stirap_single() -> ScenarioConfig:
    return ScenarioConfig(
        name="stirap_single",
        description="Counterintuitive pair transferring a three-level atom to r",
        model=ModelKind.STIRAP_THREE_LEVEL,
        pulse=equal_pair(10.0),
        outputs=OutputConfig(eigenvalues=True),
    )


def blockade_arp(n_atoms: int = 2) -> ScenarioConfig:
    return ScenarioConfig(
        name="blockade_arp",
        description="ARP of a blockaded ensemble with √N coupling",
        model=ModelKind.ENSEMBLE_TWO_LEVEL,
        pulse=ENSEMBLE_PULSE,
        n_atoms=n_atoms,
    )


def blockade_stirap_resonant(n_atoms: int = 2) -> ScenarioConfig:
    return ScenarioConfig(
        name="blockade_stirap_resonant",
        description="STIRAP on a blockaded ensemble with a resonant intermediate level",
        model=ModelKind.ENSEMBLE_THREE_LEVEL_SYMMETRIC,
        pulse=blockade_pair(0.0),
        n_atoms=n_atoms,
        outputs=OutputConfig(eigenvalues=True),
    )


def blockade_stirap_detuned(n_atoms: int = 2, swapped: bool = False) -> ScenarioConfig:
    return ScenarioConfig(
        name="blockade_stirap_detuned",
        description="STIRAP on a blockaded ensemble far detuned from the intermediate level",
        model=ModelKind.ENSEMBLE_THREE_LEVEL_SYMMETRIC,
        pulse=blockade_pair(200.0, swapped),
        n_atoms=n_atoms,
        grid=MAGNUS,
    )


def stirap_regime(detuning_mhz: float = 10.0, n_atoms: int = 2) -> ScenarioConfig:
    return ScenarioConfig(
        name="stirap_regime",
        description="Two-atom STIRAP whose outcome switches with the intermediate detuning",
        model=ModelKind.ENSEMBLE_THREE_LEVEL_SYMMETRIC,
        pulse=equal_pair(detuning_mhz),
        n_atoms=n_atoms,
        outputs=OutputConfig(eigenvalues=True),
    )


def double_arp(mode: DoubleMode = DoubleMode.IDENTICAL) -> ScenarioConfig:
    return ScenarioConfig(
        name="double_arp",
        description="Two chirped passages back to back",
        model=ModelKind.ARP_TWO_LEVEL,
        pulse=INVERSION_PULSE,
        double=DoubleConfig(mode=mode),
    )


def double_stirap(rule: DetuningSignRule = DetuningSignRule.CONSTANT, n_atoms: int = 2) -> ScenarioConfig:
    return ScenarioConfig(
        name="double_stirap",
        description="Symmetric double STIRAP of a blockaded pair started in the ground state",
        model=ModelKind.ENSEMBLE_THREE_LEVEL_SYMMETRIC,
        pulse=mirrored_pair(rule),
        n_atoms=n_atoms,
        outputs=OutputConfig(eigenvalues=True),
    )


def ensemble_double_stirap(
    n_atoms: int = 2, rule: DetuningSignRule = DetuningSignRule.SIGN_OF_TIME
) -> ScenarioConfig:
    return ScenarioConfig(
        name="ensemble_double_stirap",
        description="Far-detuned symmetric double STIRAP of a blockaded ensemble",
        model=ModelKind.ENSEMBLE_THREE_LEVEL_SYMMETRIC,
        pulse=mirrored_pair(rule, 30.0, 40.0, stokes_center=5.0, pump_center=3.0, detuning_mhz=200.0),
        n_atoms=n_atoms,
        grid=MAGNUS,
    )


def ensemble_double_arp(n_atoms: int = 2, mode: DoubleMode = DoubleMode.PHASE_FLIPPED) -> ScenarioConfig:
    return ScenarioConfig(
        name="ensemble_double_arp",
        description="Double ARP of a blockaded ensemble",
        model=ModelKind.ENSEMBLE_TWO_LEVEL,
        pulse=ENSEMBLE_PULSE,
        double=DoubleConfig(mode=mode),
        n_atoms=n_atoms,
    )


SCENARIOS: dict[str, Callable[[], ScenarioConfig]] = {
    "arp_inversion": arp_inversion,
    "stirap_single": stirap_single,
    "blockade_arp": blockade_arp,
    "blockade_stirap_resonant": blockade_stirap_resonant,
    "blockade_stirap_detuned": blockade_stirap_detuned,
    "stirap_regime": stirap_regime,
    "double_arp": double_arp,
    "double_stirap": double_stirap,
    "ensemble_double_stirap": ensemble_double_stirap,
    "ensemble_double_arp": ensemble_double_arp,
}


def builtin_scenario(name: str) -> ScenarioConfig:
    try:
        return SCENARIOS[name]()
    except KeyError:
        raise ConfigError(f"Unknown scenario {name!r}; built-in: {sorted(SCENARIOS)}") from None
