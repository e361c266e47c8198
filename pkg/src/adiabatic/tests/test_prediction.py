import numpy as np
import pytest

from core.errors import ConstraintError
from hamiltonians import arp_model, ensemble_model, stirap_model
from propagator import TimeGrid, eigen_track, propagate
from pulses import DetuningSignRule, DoubleMode, DoubleSequence, GaussianChirpPulse, StirapPair
from statespace import Representation, build_basis
from ..area import generalized_area
from ..prediction import (
    passage_windows,
    predict_double_arp_amplitude,
    predict_passages,
    predict_phase_from_eigentrack,
)

TWO_PI = 2 * np.pi


@pytest.fixture
def chirped_pulse():
    return GaussianChirpPulse(peak_rabi=TWO_PI * 5, width=1.0, chirp_rate=-TWO_PI)


def final_amplitude(sequence):
    model = arp_model(sequence)
    grid = TimeGrid.for_model(model, steps_per_us=2000)
    return propagate(model, np.array([1.0, 0.0]), grid).final_amplitudes[0]


def mirrored_pair(rule):
    """Double-sequence fields: Stokes at ±6 µs, pump at ±4 µs, both 2π·10 MHz, δ/2π = 10 MHz."""
    return StirapPair(TWO_PI * 10, TWO_PI * 10, 6.0, 4.0, width=1.0, delta=TWO_PI * 10,
                      detuning_sign_rule=rule, mirrored=True)


def test_identical_double_arp_gives_minus_one(chirped_pulse):
    """Two identical passages return |1⟩ with c₁ = −1, numerically within 0.02 rad."""
    sequence = DoubleSequence.repeated(chirped_pulse, DoubleMode.IDENTICAL)

    prediction = predict_double_arp_amplitude(sequence)

    assert prediction.amplitude == pytest.approx(-1.0, abs=1e-9)
    assert prediction.final_state == 1
    assert prediction.warnings == ()
    assert [step.transfers for step in prediction.passes] == [True, True]
    numeric = final_amplitude(sequence)
    assert abs(numeric) ** 2 > 0.999
    assert abs(np.angle(-numeric)) < 0.02


def test_phase_flipped_double_arp_gives_plus_one(chirped_pulse):
    """Inverting the second field gives c₁ = +1."""
    sequence = DoubleSequence.repeated(chirped_pulse, DoubleMode.PHASE_FLIPPED)

    prediction = predict_double_arp_amplitude(sequence)

    assert prediction.amplitude == pytest.approx(1.0, abs=1e-9)
    assert abs(np.angle(final_amplitude(sequence))) < 0.02


def test_unequal_areas(chirped_pulse):
    """Different areas give −exp[i(S₁ − S₂)/2]."""
    second = GaussianChirpPulse(peak_rabi=TWO_PI * 6, width=1.0, chirp_rate=-TWO_PI).shifted(14.0)
    sequence = DoubleSequence(chirped_pulse, second)
    windows = passage_windows(sequence)
    s1 = generalized_area(chirped_pulse, windows[0]).value
    s2 = generalized_area(second, windows[1]).value

    prediction = predict_double_arp_amplitude(sequence)

    assert prediction.amplitude == pytest.approx(-np.exp(0.5j * (s1 - s2)), abs=1e-9)


def test_sign_switched_arp_keeps_population_in_one(chirped_pulse):
    """A reversed second sweep also returns to |1⟩."""
    sequence = DoubleSequence.repeated(chirped_pulse, DoubleMode.DETUNING_SIGN_SWITCHED)
    prediction = predict_passages(sequence)
    s1, s2 = (step.area for step in prediction.passes)

    assert prediction.final_state == 1
    assert prediction.passes[1].start_sign == -1
    assert prediction.amplitude == pytest.approx(np.exp(0.5j * (s1 + s2)), abs=1e-9)


def test_single_pass_goes_to_two(chirped_pulse):
    """One passage leaves nothing in |1⟩."""
    prediction = predict_passages(chirped_pulse)

    assert prediction.final_state == 2
    assert prediction.amplitude == 0
    with pytest.raises(ConstraintError, match="two passes"):
        predict_double_arp_amplitude(chirped_pulse)


def test_non_adiabatic_passage_is_flagged():
    """A weak fast passage carries a warning instead of failing."""
    weak = GaussianChirpPulse(peak_rabi=TWO_PI * 0.2, width=0.2, chirp_rate=-TWO_PI * 20)

    prediction = predict_double_arp_amplitude(DoubleSequence.repeated(weak))

    assert prediction.warnings
    assert "not adiabatic" in prediction.warnings[0]


def test_dark_branch_phase_is_zero():
    """The single-atom dark state accumulates no phase on |g⟩."""
    pair = StirapPair(TWO_PI * 30, TWO_PI * 40, -1.0, 1.0, width=1.0)
    track = eigen_track(stirap_model(pair), samples_per_us=100)

    phase = predict_phase_from_eigentrack(track)

    assert np.nanmax(np.abs(phase)) < 1e-10
    assert np.isnan(phase[-1])


def test_sign_switched_double_stirap_cancels_phase():
    """With δ·sgn(t) the ground-state phase returns to zero; constant δ leaves a large phase."""
    basis = build_basis(2, representation=Representation.SYMMETRIC)
    switched = eigen_track(ensemble_model(mirrored_pair(DetuningSignRule.SIGN_OF_TIME), basis), samples_per_us=200)
    constant = eigen_track(ensemble_model(mirrored_pair(DetuningSignRule.CONSTANT), basis), samples_per_us=200)

    assert 0.0 in switched.times
    assert abs(predict_phase_from_eigentrack(switched)[-1]) < 1e-3
    assert abs(predict_phase_from_eigentrack(constant, wrap=False)[-1]) > 1.0
