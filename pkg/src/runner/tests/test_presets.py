import numpy as np
import pytest

from core.errors import ConfigError
from propagator import wrap_phase
from ..presets import (
    PRESETS,
    double_arp_preset,
    double_stirap_preset,
    optimized_stirap_preset,
    run_preset,
    single_rydberg_columns,
    stirap_regimes_preset,
)


def test_preset_registry():
    """Every named reproduction run is registered."""
    assert set(PRESETS) == {
        "arp_inversion",
        "blockade_arp",
        "blockade_stirap_resonant",
        "blockade_stirap_detuned",
        "stirap_regimes",
        "loading",
        "optimized_stirap",
        "double_arp",
        "double_stirap",
        "phase_cancellation",
        "nonlinear_passage",
        "forster_cz",
    }


def test_unknown_preset():
    """Unknown presets list the available ones."""
    with pytest.raises(ConfigError, match="Unknown preset 'inversion'"):
        run_preset("inversion")


@pytest.mark.parametrize(
    ("labels", "columns"),
    [
        (("1", "2"), [1]),
        (("G", "R"), [1]),
        (("g", "e", "r"), [2]),
        (("gg", "ge", "ee", "gr", "er"), [3, 4]),
    ],
)
def test_single_rydberg_columns(labels, columns):
    """Single-excitation states are picked out by label."""
    assert single_rydberg_columns(labels) == columns


def test_double_arp_preset():
    """The double ARP preset reports phase π for identical and 0 for flipped passages."""
    result = double_arp_preset(steps_per_us=2000)

    assert {t.name for t in result.tables} == {"identical_trajectory", "phase_flipped_trajectory"}
    assert abs(wrap_phase(result.summary["identical"]["final_phase"] - np.pi)) < 0.05
    assert abs(result.summary["phase_flipped"]["final_phase"]) < 0.05
    assert result.summary["identical"]["population_error"] < 1e-3


def test_double_stirap_preset():
    """The sign-switched pair returns |gg⟩ with the eigenvalue phase; constant δ misses it by about 0.09 rad."""
    result = double_stirap_preset(steps_per_us=2000)
    switched = result.summary["sgn"]
    constant = result.summary["constant"]

    assert switched["ground_population"] > 0.98
    assert switched["eigen_phase_error"] < 0.02
    assert constant["eigen_predicted_phase"] == pytest.approx(-0.2818, abs=0.02)
    assert constant["final_phase"] == pytest.approx(-0.3695, abs=0.02)
    assert 0.06 < constant["eigen_phase_error"] < 0.12


def test_stirap_regimes_switch():
    """Two-atom STIRAP excites one atom only once δ/2π passes about 5 MHz."""
    p1 = stirap_regimes_preset(steps_per_us=2000).summary["P1"]

    assert p1["0"] < 1e-3
    assert p1["4"] < 0.5
    assert p1["5"] > 0.5
    assert p1["10"] > 0.99


def test_optimized_stirap_preset():
    """Optimized pulses keep the excitation error below 1e-5 for N = 1..5, Gaussian pulses do not."""
    summary = optimized_stirap_preset(steps_per_us=10000).summary

    assert summary["max_error_optimized"] < 1e-5
    assert summary["max_error_gaussian"] > 1e-4
