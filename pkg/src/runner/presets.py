"""Named reproduction runs, each writing its tables and a summary."""

import logging
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from adiabatic import adiabaticity_margin, predict_adiabatic_amplitudes
from core.config import config
from core.errors import ConfigError
from forster import (
    cubic_sweep_scenario,
    distance_sensitivity,
    gaussian_chirp_scenario,
    run_double_passage,
    stark_tuned_scenario,
)
from gates import (
    DynamicalMaps,
    DynamicalSettings,
    ExcitationBranch,
    GateMode,
    forster_cnot,
    forster_cz,
    pi_pulse_vs_adiabatic_error,
)
from propagator import IntegrationMethod, Protocol, TimeGrid, run_excitation_probability
from pulses import DetuningSignRule, DoubleMode, OptimizedStirapPair, StirapPair
from .execute import RunResult, execute, final_phase
from .output import Table
from .poisson import PoissonLoadingSpec, poisson_stats
from .scenarios import (
    arp_inversion,
    blockade_arp,
    blockade_stirap_detuned,
    blockade_stirap_resonant,
    double_arp,
    double_stirap,
    ensemble_double_arp,
    ensemble_double_stirap,
    stirap_regime,
    stirap_single,
)

logger = logging.getLogger(__name__)

TWO_PI = 2 * np.pi
ENSEMBLE_SIZES = (1, 2, 3)
CANCELLATION_SIZES = (1, 2, 7)
REGIME_DETUNINGS = (0.0, 4.0, 5.0, 10.0)  # MHz
LOADING = PoissonLoadingSpec(mean_atoms=5.0, max_atoms=9)
DISTANCE_DELTAS = (-0.2, -0.1, 0.1, 0.2)


@dataclass(frozen=True, eq=False)
class PresetResult:
    name: str
    tables: list[Table] = field(default_factory=list)
    summary: dict = field(default_factory=dict)


def _prefixed(prefix: str, result: RunResult) -> list[Table]:
    return [replace(table, name=f"{prefix}_{table.name}") for table in result.tables()]


def single_rydberg_columns(labels: tuple[str, ...]) -> list[int]:
    return [k for k, label in enumerate(labels) if label in ("2", "R") or label.count("r") == 1]


def single_rydberg_population(result: RunResult) -> np.ndarray:
    return result.trajectory.populations[:, single_rydberg_columns(result.labels)].sum(axis=1)


def _zero_branch(result: RunResult) -> bool:
    return bool(result.track is not None and result.track.zero_traces(1e-10))


def _ensemble_table(name: str, results: dict, key: str) -> Table:
    first = next(iter(results.values()))
    headers = ("t", *(f"P1_{key}{label}" for label in results))
    rows = np.column_stack([first.trajectory.times, *(single_rydberg_population(r) for r in results.values())])
    return Table(name, headers, rows)


def arp_inversion_preset(steps_per_us: float | None = None) -> PresetResult:
    """Chirped inversion of one atom, its dressed-state prediction, and single-atom STIRAP."""
    arp_scenario = arp_inversion()
    arp = execute(arp_scenario, steps_per_us)
    stirap = execute(stirap_single(), steps_per_us)

    model = arp_scenario.build_model()
    start, end = arp.trajectory.times[0], arp.trajectory.times[-1]
    coarse = TimeGrid.for_window(start, end, config.output_samples_per_us)
    nodes = coarse.nodes()
    numeric = np.interp(nodes, arp.trajectory.times, arp.trajectory.population("2"))
    predicted = np.abs(predict_adiabatic_amplitudes(model, nodes)[:, 1]) ** 2
    margin = adiabaticity_margin(model, coarse)
    adiabatic = margin < config.adiabatic_margin_threshold
    dressed = Table("dressed", ("t", "P_r", "P_r_predicted", "margin"), np.column_stack([nodes, numeric, predicted, margin]))

    summary = {
        "arp_final_P_r": arp.final_populations["2"],
        "stirap_final_P_r": stirap.final_populations["r"],
        "max_dressed_deviation": float(np.max(np.abs(numeric - predicted)[adiabatic])) if adiabatic.any() else None,
        "adiabatic_fraction": float(adiabatic.mean()),
        "arp": arp.summary(),
        "stirap": stirap.summary(),
    }
    return PresetResult("arp_inversion", [*_prefixed("arp", arp), *_prefixed("stirap", stirap), dressed], summary)


def _ensemble_sweep(name: str, factory: Callable, steps_per_us: float | None) -> PresetResult:
    results = {n: execute(factory(n), steps_per_us) for n in ENSEMBLE_SIZES}
    finals = {n: float(single_rydberg_population(r)[-1]) for n, r in results.items()}
    summary = {
        "P1": {f"N{n}": p for n, p in finals.items()},
        "P1_spread": max(finals.values()) - min(finals.values()),
        "zero_branch": {f"N{n}": _zero_branch(r) for n, r in results.items()},
        "warnings": sorted({w for r in results.values() for w in r.warnings}),
    }
    return PresetResult(name, [_ensemble_table("single_rydberg", results, "N")], summary)


def blockade_arp_preset(steps_per_us: float | None = None) -> PresetResult:
    """ARP of N = 1..3 blockaded atoms: the single-Rydberg probability does not depend on N."""
    return _ensemble_sweep("blockade_arp", blockade_arp, steps_per_us)


def blockade_stirap_resonant_preset(steps_per_us: float | None = None) -> PresetResult:
    """Resonant STIRAP fails once two atoms share the blockade."""
    return _ensemble_sweep("blockade_stirap_resonant", blockade_stirap_resonant, steps_per_us)


def blockade_stirap_detuned_preset(steps_per_us: float | None = None) -> PresetResult:
    """Far-detuned STIRAP behaves like ARP and excites one atom for every N, in either peak ordering."""
    result = _ensemble_sweep("blockade_stirap_detuned", blockade_stirap_detuned, steps_per_us)
    swapped = _ensemble_sweep("swapped", lambda n: blockade_stirap_detuned(n, swapped=True), steps_per_us)
    tables = [*result.tables, *(replace(t, name=f"swapped_{t.name}") for t in swapped.tables)]
    return PresetResult(result.name, tables, {**result.summary, "swapped": swapped.summary})


def stirap_regimes_preset(steps_per_us: float | None = None) -> PresetResult:
    """Two-atom STIRAP spectra and outcomes across intermediate detunings."""
    results = {d: execute(stirap_regime(d), steps_per_us) for d in REGIME_DETUNINGS}
    tables = [_ensemble_table("single_rydberg", results, "delta")]
    for detuning, result in results.items():
        tables.extend(t for t in _prefixed(f"delta{detuning:g}", result) if t.name.endswith("eigenvalues"))
    summary = {
        "P1": {f"{d:g}": float(single_rydberg_population(r)[-1]) for d, r in results.items()},
        "zero_branch": {f"{d:g}": _zero_branch(r) for d, r in results.items()},
    }
    return PresetResult("stirap_regimes", tables, summary)


def loading_preset(steps_per_us: float | None = None) -> PresetResult:
    """Poisson loading and the excitation error of π pulses, ARP and STIRAP against N."""
    loading = poisson_stats(LOADING)
    sizes = range(1, LOADING.max_atoms + 1)
    errors = {
        branch: {
            n: pi_pulse_vs_adiabatic_error(n, protocol=branch)
            if branch is ExcitationBranch.PI_PULSE
            else pi_pulse_vs_adiabatic_error(n, protocol=branch, steps_per_us=steps_per_us)
            for n in sizes
        }
        for branch in ExcitationBranch
    }
    rows = [[n, *(errors[branch][n] for branch in ExcitationBranch)] for n in sizes]
    table = Table("errors", ("N", *(f"error_{b.value}" for b in ExcitationBranch)), np.array(rows))
    summary = {
        "mean_atoms": LOADING.mean_atoms,
        "P0": loading.probability(0),
        "P5": loading.probability(5),
        "tail_beyond_max": loading.remainder,
        "weighted_error": {b.value: loading.weighted_mean(errors[b]) for b in ExcitationBranch},
    }
    return PresetResult("loading", [loading.as_table(), table], summary)


def optimized_stirap_preset(steps_per_us: float | None = None) -> PresetResult:
    """Hypergaussian pulses with logistic mixing against Gaussian pulses of the same peak."""
    optimized = OptimizedStirapPair(
        amplitude=TWO_PI * 50, hyper_width=2.0, hyper_order=3, steepness=4.0, center=4.0, delta=TWO_PI * 200
    )
    gaussian = StirapPair(
        stokes_peak=TWO_PI * 50, pump_peak=TWO_PI * 50, stokes_center=3.0, pump_center=5.0,
        width=1.0, delta=TWO_PI * 200,
    )
    sizes = range(1, 6)
    options = {"steps_per_us": steps_per_us, "method": IntegrationMethod.MAGNUS4}
    rows = [
        [
            n,
            1.0 - run_excitation_probability(n, Protocol.STIRAP, optimized, **options),
            1.0 - run_excitation_probability(n, Protocol.STIRAP, gaussian, **options),
        ]
        for n in sizes
    ]
    table = Table("errors", ("N", "error_optimized", "error_gaussian"), np.array(rows))
    summary = {
        "max_error_optimized": float(table.column("error_optimized").max()),
        "max_error_gaussian": float(table.column("error_gaussian").max()),
    }
    return PresetResult("optimized_stirap", [table], summary)


def double_arp_preset(steps_per_us: float | None = None) -> PresetResult:
    """Identical and phase-flipped double passages: |1⟩ returns with phase π and 0."""
    tables, summary = [], {}
    for mode in (DoubleMode.IDENTICAL, DoubleMode.PHASE_FLIPPED):
        result = execute(double_arp(mode), steps_per_us)
        tables.extend(_prefixed(mode.value, result))
        summary[mode.value] = {
            "final_phase": result.final_phases["1"],
            "predicted_phase": result.report.get("predicted_phase"),
            "population_error": 1.0 - result.final_populations["1"],
        }
    return PresetResult("double_arp", tables, summary)


def double_stirap_preset(steps_per_us: float | None = None) -> PresetResult:
    """Double STIRAP with constant and sign-switched detuning against the −∫E dt prediction."""
    tables, summary = [], {}
    for rule in (DetuningSignRule.CONSTANT, DetuningSignRule.SIGN_OF_TIME):
        result = execute(double_stirap(rule), steps_per_us)
        tables.extend(_prefixed(rule.value, result))
        summary[rule.value] = {
            "final_phase": result.final_phases["gg"],
            "eigen_predicted_phase": result.report.get("eigen_predicted_phase"),
            "eigen_phase_error": result.report.get("eigen_phase_error"),
            "ground_population": result.final_populations["gg"],
        }
    return PresetResult("double_stirap", tables, summary)


def phase_cancellation_preset(steps_per_us: float | None = None) -> PresetResult:
    """Final ground-state phases of double sequences on N-atom ensembles."""
    variants = {
        "stirap_constant": lambda n: ensemble_double_stirap(n, DetuningSignRule.CONSTANT),
        "stirap_switched": lambda n: ensemble_double_stirap(n, DetuningSignRule.SIGN_OF_TIME),
        "arp_identical": lambda n: ensemble_double_arp(n, DoubleMode.IDENTICAL),
        "arp_flipped": lambda n: ensemble_double_arp(n, DoubleMode.PHASE_FLIPPED),
    }
    phases = {name: {} for name in variants}
    for name, factory in variants.items():
        for n in CANCELLATION_SIZES:
            result = execute(factory(n), steps_per_us)
            ground = result.trajectory.final_amplitudes[0]
            phases[name][n] = final_phase(ground)
            if phases[name][n] is None:
                logger.warning(f"{name}, N = {n}: ground state not repopulated")
    rows = [
        [n, *(np.nan if phases[name][n] is None else phases[name][n] for name in variants)]
        for n in CANCELLATION_SIZES
    ]
    table = Table("phases", ("N", *variants), np.array(rows))
    summary = {name: {f"N{n}": value for n, value in by_n.items()} for name, by_n in phases.items()}
    return PresetResult("phase_cancellation", [table], summary)


def _passage_table(name: str, result) -> Table:
    trajectory = result.trajectory.decimated()
    return Table(
        name,
        ("t", "P_r0r1", "P_r2r3", "phase_r0r1"),
        np.column_stack([trajectory.times, trajectory.populations[:, :2], trajectory.phases[:, 0]]),
    )


def nonlinear_passage_preset(steps_per_us: float | None = None) -> PresetResult:
    """Double passage with Gaussian couplings and with a cubic detuning sweep."""
    tables, summary = [], {}
    for scenario in (gaussian_chirp_scenario(steps_per_us), cubic_sweep_scenario(steps_per_us)):
        result = run_double_passage(scenario)
        tables.append(_passage_table(scenario.name, result))
        summary[scenario.name] = result.summary()
    return PresetResult("nonlinear_passage", tables, summary)


def forster_cz_preset(steps_per_us: float | None = None) -> PresetResult:
    """Stark-tuned Förster passage, its distance sensitivity and the resulting CZ and CNOT."""
    scenario = stark_tuned_scenario(steps_per_us=steps_per_us)
    passage = run_double_passage(scenario)
    sensitivity = distance_sensitivity(scenario, DISTANCE_DELTAS)
    sensitivity_table = Table(
        "distance",
        ("delta", "distance_um", "coupling_mhz", "phase", "deviation", "population_error", "exchange_population_error"),
        np.array([
            [r.delta, r.distance, r.coupling / TWO_PI, r.phase, r.deviation, r.population_error, r.exchange_population_error]
            for r in sensitivity.rows
        ]),
    )
    dynamics = DynamicalMaps(DynamicalSettings(steps_per_us=steps_per_us))
    uniform = np.full(4, 0.5)
    cz = forster_cz(uniform, scenario.channel, GateMode.DYNAMICAL, dynamics)
    cnot = forster_cnot(uniform, scenario.channel, GateMode.DYNAMICAL, dynamics)
    summary = {
        "passage": passage.summary(),
        "distance": {
            "baseline_phase": sensitivity.baseline_phase,
            "max_deviation": sensitivity.max_deviation,
            "threshold": sensitivity.threshold,
            "within_threshold": sensitivity.within_threshold,
            "flagged_rows": len(sensitivity.flagged_rows),
        },
        "cz": cz.to_json_dict(),
        "cnot_fidelity": cnot.fidelity,
    }
    return PresetResult("forster_cz", [_passage_table("passage", passage), sensitivity_table], summary)


PRESETS: dict[str, Callable[[float | None], PresetResult]] = {
    "arp_inversion": arp_inversion_preset,
    "blockade_arp": blockade_arp_preset,
    "blockade_stirap_resonant": blockade_stirap_resonant_preset,
    "blockade_stirap_detuned": blockade_stirap_detuned_preset,
    "stirap_regimes": stirap_regimes_preset,
    "loading": loading_preset,
    "optimized_stirap": optimized_stirap_preset,
    "double_arp": double_arp_preset,
    "double_stirap": double_stirap_preset,
    "phase_cancellation": phase_cancellation_preset,
    "nonlinear_passage": nonlinear_passage_preset,
    "forster_cz": forster_cz_preset,
}


def run_preset(name: str, steps_per_us: float | None = None) -> PresetResult:
    try:
        preset = PRESETS[name]
    except KeyError:
        raise ConfigError(f"Unknown preset {name!r}; available: {sorted(PRESETS)}") from None
    logger.info(f"Running preset {name}")
    return preset(steps_per_us)
