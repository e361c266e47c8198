import numpy as np
import pytest

from hamiltonians import ForsterChannelParams, arp_model
from propagator import Protocol, wrap_phase
from pulses import NonlinearDetuningPulse
from ..dynamics import DynamicalMaps, DynamicalSettings, constant_drive, constant_drive_map
from ..protocols import cnot_report, forster_cnot, forster_cz
from ..report import complex_pairs
from ..types import ENSEMBLE_CNOT, GateMode, SIGMA_X, TransferDirection

TWO_PI = 2 * np.pi
SIGMA_Z = np.diag([1.0, -1.0])


@pytest.fixture(scope="module")
def maps():
    return DynamicalMaps(DynamicalSettings(steps_per_us=4000))


@pytest.fixture
def stark_channel():
    waveform = NonlinearDetuningPulse(
        rabi_frequency=0.0,
        centers=(-0.3, 0.2993),
        slope=TWO_PI * 22.6,
        coefficient=TWO_PI * 28800,
        odd_power=5,
    )
    return ForsterChannelParams.from_coupling(TWO_PI * 2, 15.5, waveform, defect_at_zero_field=TWO_PI * 152)


def test_constant_drive_rotates_by_area():
    """A resonant drive of area π/2 gives cos(π/4)·I − i·sin(π/4)·σx."""
    rabi = TWO_PI * 2
    duration = 0.5 * np.pi / rabi
    propagator = constant_drive_map(arp_model(constant_drive(rabi, duration)), duration)
    expected = np.cos(np.pi / 4) * np.eye(2) - 1j * np.sin(np.pi / 4) * SIGMA_X

    np.testing.assert_allclose(propagator, expected, atol=1e-12)


def test_pi_pulses_match_idealized_maps(maps):
    """Area π gives iσx and area 3π gives −iσx."""
    np.testing.assert_allclose(maps.pi_pulse_map(1), 1j * SIGMA_X, atol=1e-12)
    np.testing.assert_allclose(maps.pi_pulse_map(3), -1j * SIGMA_X, atol=1e-12)


def test_arp_transfer_is_special_unitary(maps):
    """Up pass transfers; down pass is the same map conjugated by σz."""
    up = maps.transfer_map(1, Protocol.ARP, TransferDirection.UP)
    down = maps.transfer_map(1, Protocol.ARP, TransferDirection.DOWN)

    assert abs(up[1, 0]) ** 2 > 0.999
    assert up[0, 1] == pytest.approx(-np.conj(up[1, 0]), abs=1e-9)
    np.testing.assert_allclose(down, SIGMA_Z @ up @ SIGMA_Z, atol=1e-9)


def test_transfer_maps_are_cached(maps):
    """A second request returns the stored map."""
    first = maps.transfer_map(2, Protocol.ARP, TransferDirection.UP)

    assert maps.transfer_map(2, "arp", "up") is first


def test_chi_depends_on_atom_number(maps):
    """The collective Rydberg state of two atoms picks up another phase than one atom."""
    chi_1 = maps.chi(1, Protocol.ARP)
    chi_2 = maps.chi(2, Protocol.ARP)

    assert abs(wrap_phase(chi_1 - chi_2)) > 1e-3


def test_dynamical_arp_cnot(maps):
    """Propagated ARP transfers reproduce the ensemble CNOT once χ is known."""
    report = cnot_report((1, 2), GateMode.DYNAMICAL, transfer=Protocol.ARP, dynamics=maps)

    assert report.fidelity > 0.99
    assert report.metrics["chi"]["target"] == pytest.approx(maps.chi(2, Protocol.ARP))
    np.testing.assert_allclose(np.abs(report.achieved), np.abs(ENSEMBLE_CNOT), atol=0.05)


def test_dynamical_forster_cz(maps, stark_channel):
    """The double passage leaves |11⟩ with a phase of π and little population loss."""
    report = forster_cz([0.5, 0.5, 0.5, 0.5], stark_channel, mode=GateMode.DYNAMICAL, dynamics=maps)

    assert abs(wrap_phase(report.entangling_phase - np.pi)) < 0.05
    assert report.fidelity > 0.99
    assert report.metrics["forster_population_error"] < 2e-2
    assert report.confident
    np.testing.assert_allclose(report.diagonal_phases[:3], 0.0, atol=1e-9)


def test_dynamical_forster_cnot(maps, stark_channel):
    """|10⟩ flips the target."""
    report = forster_cnot([0, 0, 1, 0], stark_channel, mode=GateMode.DYNAMICAL, dynamics=maps)

    assert report.fidelity > 0.99
    assert abs(report.final_state[3]) ** 2 > 0.99


def test_complex_pairs():
    """Complex values nest as [re, im]."""
    assert complex_pairs(1 + 2j) == [1.0, 2.0]
    assert complex_pairs(np.array([[1j, 0]])) == [[[0.0, 1.0], [0.0, 0.0]]]
