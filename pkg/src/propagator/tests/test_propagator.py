import numpy as np
import pytest

from core.errors import ConstraintError, IntegrationError, ShapeError
from hamiltonians import arp_model, ensemble_model, stirap_model
from pulses import DetuningSignRule, GaussianChirpPulse, NonlinearDetuningPulse, StirapPair
from statespace import CollectiveState, Representation, build_basis, ground_state, project_to_symmetric
from ..grid import IntegrationMethod, TimeGrid
from ..phase import extract_phase, wrap_phase
from ..trajectory import propagate
from ..excitation import Protocol, run_excitation, run_excitation_probability

TWO_PI = 2 * np.pi
GROUND = np.array([1.0, 0.0], dtype=complex)


@pytest.fixture
def arp_chirp_model():
    return arp_model(GaussianChirpPulse(peak_rabi=TWO_PI * 5, width=1.0, chirp_rate=-TWO_PI))


def constant_rabi_model(rabi: float, duration: float):
    """Resonant two-level drive that is constant over [-duration/2, duration/2]."""
    return arp_model(NonlinearDetuningPulse(rabi, (0.0,), slope=0.0, half_span=duration / 2))


def stirap_fields(detuning=0.0, pump=40.0, stokes=30.0):
    return StirapPair(
        stokes_peak=TWO_PI * stokes,
        pump_peak=TWO_PI * pump,
        stokes_center=-1.0,
        pump_center=1.0,
        width=1.0,
        delta=TWO_PI * detuning,
    )


def test_grid_places_breakpoints_on_nodes():
    """Every breakpoint is a node and the last step of a segment ends just before it."""
    grid = TimeGrid(-1.0, 1.0, 10, breakpoints=(0.0, 5.0))
    nodes = grid.nodes()

    assert grid.breakpoints == (0.0,)
    assert 0.0 in nodes
    assert nodes[0] == -1.0 and nodes[-1] == 1.0
    ends = grid.step_end_times(nodes)
    segment_end = int(np.flatnonzero(nodes == 0.0)[0]) - 1
    assert ends[segment_end] < 0.0
    assert ends[segment_end] == np.nextafter(0.0, -1.0)


def test_grid_validation():
    """Empty windows and single-step grids are rejected."""
    with pytest.raises(ConstraintError, match="t_start < t_end"):
        TimeGrid(1.0, 1.0, 10)
    with pytest.raises(ConstraintError, match="at least 2"):
        TimeGrid(0.0, 1.0, 1)


def test_grid_for_model_uses_density(arp_chirp_model):
    """for_model covers the pulse support at the requested density."""
    grid = TimeGrid.for_model(arp_chirp_model, steps_per_us=100)

    assert grid.t_start == pytest.approx(-6.0697, abs=1e-3)
    assert grid.n_steps == int(np.ceil(grid.duration * 100))


def test_zero_hamiltonian_keeps_amplitudes():
    """H = 0 leaves the state untouched."""
    model = arp_model(GaussianChirpPulse(peak_rabi=0.0, width=1.0))
    psi0 = np.array([0.6, 0.8j])

    trajectory = propagate(model, psi0, TimeGrid(-1.0, 1.0, 50))

    np.testing.assert_array_equal(trajectory.amplitudes, np.tile(psi0, (51, 1)))


@pytest.mark.parametrize("method", list(IntegrationMethod))
def test_resonant_pi_pulse_inverts(method):
    """Constant Ω over π/Ω gives full inversion within 1e-8."""
    rabi = TWO_PI * 5
    duration = np.pi / rabi
    model = constant_rabi_model(rabi, duration)

    trajectory = propagate(model, GROUND, TimeGrid.for_model(model, method=method))

    assert trajectory.population("2")[-1] == pytest.approx(1.0, abs=1e-8)
    np.testing.assert_allclose(trajectory.final_amplitudes, [0.0, -1j], atol=1e-8)


def test_adaptive_pi_pulse():
    """Step doubling reaches the same inversion."""
    rabi = TWO_PI * 5
    model = constant_rabi_model(rabi, np.pi / rabi)
    grid = TimeGrid.for_model(model, steps_per_us=100, adaptive=True)

    trajectory = propagate(model, GROUND, grid)

    assert trajectory.times[-1] == grid.t_end
    assert trajectory.population("2")[-1] == pytest.approx(1.0, abs=1e-8)


def test_adaptive_underflow_reports_time():
    """An unreachable tolerance fails with the time of the failing step."""
    model = constant_rabi_model(TWO_PI * 5, 0.1)
    grid = TimeGrid(-0.05, 0.05, 2, adaptive=True, rel_tol=1e-30, abs_tol=0.0, min_step=1e-3)

    with pytest.raises(IntegrationError, match="underflow") as excinfo:
        propagate(model, GROUND, grid)
    assert excinfo.value.time == pytest.approx(-0.05)


def test_chirped_arp_inverts(arp_chirp_model):
    """The chirped Gaussian pulse ends with P_r > 0.999 and a conserved norm."""
    trajectory = propagate(arp_chirp_model, GROUND, TimeGrid.for_model(arp_chirp_model, steps_per_us=2000))

    assert trajectory.population("2")[-1] > 0.999
    assert trajectory.max_norm_drift < 1e-8
    assert trajectory.warnings == ()


def test_rk4_convergence_order(arp_chirp_model):
    """Successive step halvings shrink the final-amplitude change by about 2⁴."""
    start, end = arp_chirp_model.support()
    finals = [
        propagate(arp_chirp_model, GROUND, TimeGrid(start, end, n)).final_amplitudes
        for n in (1200, 2400, 4800)
    ]

    coarse = np.linalg.norm(finals[0] - finals[1])
    fine = np.linalg.norm(finals[1] - finals[2])
    assert np.log2(coarse / fine) >= 3.5


def test_grid_halving_converged(arp_chirp_model):
    """5000 and 10000 steps/µs agree on the final amplitudes to 1e-8."""
    finals = [
        propagate(arp_chirp_model, GROUND, TimeGrid.for_model(arp_chirp_model, steps_per_us=density)).final_amplitudes
        for density in (5000, 10000)
    ]

    np.testing.assert_allclose(finals[0], finals[1], atol=1e-8)


def test_global_phase_commutes(arp_chirp_model):
    """propagate(e^{iφ}ψ₀) = e^{iφ}·propagate(ψ₀)."""
    grid = TimeGrid.for_model(arp_chirp_model, steps_per_us=200)
    psi0 = np.array([0.8, 0.6j])
    phase = np.exp(0.7j)

    plain = propagate(arp_chirp_model, psi0, grid).amplitudes
    rotated = propagate(arp_chirp_model, phase * psi0, grid).amplitudes

    np.testing.assert_allclose(rotated, phase * plain, atol=1e-10)


def test_record_every_keeps_last_row(arp_chirp_model):
    """Strided recording keeps the first and final rows."""
    grid = TimeGrid(-6.0, 6.0, 1000)
    full = propagate(arp_chirp_model, GROUND, grid)
    strided = propagate(arp_chirp_model, GROUND, grid, record_every=7)

    assert strided.times[0] == full.times[0]
    assert strided.times[-1] == full.times[-1]
    np.testing.assert_array_equal(strided.final_amplitudes, full.final_amplitudes)
    assert len(strided.times) == 1000 // 7 + 2


def test_decimated_keeps_ends(arp_chirp_model):
    """Decimation to 10 samples/µs keeps both window ends."""
    trajectory = propagate(arp_chirp_model, GROUND, TimeGrid(-6.0, 6.0, 1200))
    small = trajectory.decimated(10)

    assert small.times[0] == -6.0 and small.times[-1] == 6.0
    assert 100 <= len(small.times) <= 130


def test_dimension_mismatch():
    """The initial state must fit the model."""
    model = stirap_model(stirap_fields())

    with pytest.raises(ShapeError, match="does not fit"):
        propagate(model, GROUND, TimeGrid(-1.0, 1.0, 10))
    with pytest.raises(ShapeError, match="does not match"):
        basis = build_basis(2, representation=Representation.SYMMETRIC)
        full = build_basis(2, representation=Representation.FULL)
        propagate(ensemble_model(stirap_fields(), basis), ground_state(full), TimeGrid(-1.0, 1.0, 10))


def test_phase_of_real_amplitudes_is_zero():
    """Real positive amplitudes have identically zero phase."""
    model = arp_model(GaussianChirpPulse(peak_rabi=0.0, width=1.0))
    trajectory = propagate(model, np.array([0.6, 0.8]), TimeGrid(0.0, 1.0, 10))

    np.testing.assert_array_equal(extract_phase(trajectory, "1"), np.zeros(11))
    np.testing.assert_array_equal(trajectory.phases, np.zeros((11, 2)))


def test_free_evolution_phase_slope():
    """Under diag(0, δ, 0) the |e⟩ phase decreases at rate δ, unwrapped past ±π."""
    detuning = TWO_PI * 3
    pair = StirapPair(0.0, 0.0, -0.1, 0.1, width=0.1, delta=detuning)
    trajectory = propagate(stirap_model(pair), np.array([0.0, 1.0, 0.0]), TimeGrid(0.0, 1.0, 1000))

    phase = extract_phase(trajectory, "e")
    np.testing.assert_allclose(phase, -detuning * trajectory.times, atol=1e-7)
    assert np.all(np.isnan(extract_phase(trajectory, "g")))


def test_wrap_phase():
    """Wrapping lands in (−π, π]."""
    np.testing.assert_allclose(wrap_phase([np.pi, -np.pi, 3 * np.pi, 0.5]), [np.pi, np.pi, np.pi, 0.5])


def test_sign_switched_detuning_is_resolved_exactly():
    """With δ·sgn(t) the grid has a node at 0 and free evolution phases cancel."""
    pair = StirapPair(0.0, 0.0, -0.1, 0.1, width=0.1, delta=TWO_PI * 10,
                      detuning_sign_rule=DetuningSignRule.SIGN_OF_TIME)
    model = stirap_model(pair)
    grid = TimeGrid(-0.5, 0.5, 2000, breakpoints=model.breakpoints())

    trajectory = propagate(model, np.array([0.0, 1.0, 0.0]), grid)

    assert 0.0 in trajectory.times
    assert extract_phase(trajectory, "e")[-1] == pytest.approx(0.0, abs=1e-8)


@pytest.mark.parametrize("n_atoms", [2, 3])
def test_symmetric_matches_projected_full(n_atoms):
    """Symmetric propagation equals the projection of full propagation."""
    pair = stirap_fields()
    full = build_basis(n_atoms, representation=Representation.FULL)
    symmetric = build_basis(n_atoms, representation=Representation.SYMMETRIC)
    grid = TimeGrid(-3.0, 3.0, 12000)

    full_run = propagate(ensemble_model(pair, full), ground_state(full), grid)
    symmetric_run = propagate(ensemble_model(pair, symmetric), ground_state(symmetric), grid)

    projected = project_to_symmetric(
        CollectiveState(full, full_run.final_amplitudes, norm_tolerance=1e-3), symmetric
    )
    np.testing.assert_allclose(projected.amplitudes, symmetric_run.final_amplitudes, atol=1e-8)
    assert projected.leakage < 1e-8


def test_single_atom_stirap_inverts():
    """δ = 0 STIRAP transfers one atom to |r⟩."""
    assert run_excitation_probability(1, Protocol.STIRAP, stirap_fields(), steps_per_us=2000) > 0.99


def test_two_atom_stirap_fails_without_detuning():
    """The blockaded ground state is not dark, so δ = 0 transfer fails."""
    result = run_excitation(2, Protocol.STIRAP, stirap_fields(), steps_per_us=2000)

    assert result.probability < 0.05
    assert result.single_rydberg_population[-1] == pytest.approx(result.probability)


def test_detuning_restores_two_atom_transfer():
    """Equal 10 MHz fields: δ/2π = 10 MHz transfers, δ = 0 does not."""
    transfer = run_excitation_probability(2, Protocol.STIRAP, stirap_fields(10.0, 10.0, 10.0), steps_per_us=2000)
    blocked = run_excitation_probability(2, Protocol.STIRAP, stirap_fields(0.0, 10.0, 10.0), steps_per_us=2000)

    assert transfer > 0.9
    assert blocked < 0.1


def test_arp_probability_independent_of_atom_number():
    """Chirped ARP gives the same P₁ for N = 1, 2, 3."""
    pulse = GaussianChirpPulse(peak_rabi=TWO_PI * 2, width=1.0, chirp_rate=-TWO_PI)
    probabilities = [
        run_excitation_probability(n, Protocol.ARP, pulse, steps_per_us=1000) for n in (1, 2, 3)
    ]

    assert max(probabilities) - min(probabilities) < 1e-3
    assert min(probabilities) > 0.99
