import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from core.errors import ConstraintError, ShapeError
from hamiltonians import ForsterChannelParams
from pulses import NonlinearDetuningPulse
from ..context import GateContext
from ..executor import SequenceRunner
from ..protocols import cnot_gate, cnot_report, cnot_sequence, forster_cnot, forster_cz, single_qubit_gate
from ..register import LogicalEncoding, Site, atom_pair_register, ensemble_register
from ..steps import MicrowaveRotationStep, PiPulseStep, StepRegistry, StirapTransferStep
from ..steps.transfer import TRANSFER_UP
from ..types import CNOT, CZ, ENSEMBLE_CNOT, GateMode, Subsystem, TransferDirection, bloch_rotation

TWO_PI = 2 * np.pi

angles = st.floats(-np.pi, np.pi, allow_nan=False)


def qubit(alpha: float, beta: float) -> np.ndarray:
    return np.array([np.cos(alpha), np.sin(alpha) * np.exp(1j * beta)])


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


class TestRegister:
    def test_labels_are_site_products(self):
        """Two ensembles span 16 states ordered control-major."""
        register = ensemble_register(1, 1)

        assert register.dimension == 16
        assert register.labels[0] == ("0", "0")
        assert register.labels[1] == ("0", "1")
        assert register.index(("r1", "r0")) == 14
        assert register.format_label(("1", "r0")) == "|1,r0⟩"

    def test_single_count_names_the_target(self):
        """One atom count builds a lone target ensemble."""
        register = ensemble_register(3)

        assert [s.name for s in register.sites] == ["target"]
        assert register.sites[0].n_atoms == 3
        assert register.resolve(Subsystem.BOTH) == [0]

    def test_resolve_accepts_strings(self):
        """Subsystems resolve from enums or plain names."""
        register = ensemble_register(1, 1)

        assert register.resolve("control") == [0]
        assert register.resolve(Subsystem.TARGET) == [1]
        assert register.resolve("both") == [0, 1]

    def test_invalid_sites_raise(self):
        """Sites need atoms, qubit levels and unique names."""
        with pytest.raises(ConstraintError, match="at least one atom"):
            Site("a", n_atoms=0)
        with pytest.raises(ConstraintError, match="qubit levels"):
            Site("a", levels=("0", "r0"))
        with pytest.raises(ConstraintError, match="unique"):
            ensemble_register(1, 1, names=("a", "a"))
        with pytest.raises(ShapeError, match="No site named"):
            ensemble_register(1, 1).position("ancilla")

    def test_optical_step_is_blocked_by_rydberg_neighbor(self):
        """A target transfer leaves components with a Rydberg control untouched."""
        register = ensemble_register(1, 1)
        operator = register.local_operator(1, ("0", "r0"), TRANSFER_UP)

        blocked = register.index(("r0", "0"))
        free = register.index(("0", "0"))
        assert operator[blocked, blocked] == 1.0
        assert operator[register.index(("0", "r0")), free] == 1.0
        assert operator[free, free] == 0.0

    def test_ungated_step_ignores_blockade(self):
        """Microwave couplings act whatever the other site holds."""
        register = ensemble_register(1, 1)
        operator = register.local_operator(1, ("0", "r0"), TRANSFER_UP, gated=False)

        source = register.index(("r0", "0"))
        assert operator[register.index(("r0", "r0")), source] == 1.0

    def test_atom_pair_has_no_blockade(self):
        """Single atoms far apart are excited independently."""
        register = atom_pair_register()

        assert register.dimension == 9
        assert not register.blocked(("r", "r"), 0)


class TestEncoding:
    def test_isometry_columns_are_orthonormal(self):
        """E†E is the identity for any χ."""
        encoding = LogicalEncoding(ensemble_register(2, 3), {"control": 0.3, "target": -1.2})
        isometry = encoding.isometry

        np.testing.assert_allclose(isometry.conj().T @ isometry, np.eye(4), atol=1e-15)

    def test_excited_levels_carry_chi(self):
        """|1̄⟩ = e^{iχ}|1⟩′ while |0̄⟩ has no phase."""
        encoding = LogicalEncoding(ensemble_register(2), {"target": 0.4})

        assert encoding.site_phase(0, "0") == 1.0
        assert encoding.site_phase(0, "r1") == pytest.approx(np.exp(0.4j))
        np.testing.assert_allclose(encoding.encode([0.6, 0.8])[1], 0.8 * np.exp(0.4j))

    def test_encode_rejects_wrong_width(self):
        """A one-qubit state does not fit a two-qubit register."""
        encoding = LogicalEncoding(ensemble_register(1, 1))

        with pytest.raises(ShapeError, match="does not fit 2 qubit"):
            encoding.encode([1.0, 0.0])


class TestRegistry:
    def test_names_carry_direction(self):
        """Names like stirap_down build a down transfer and report that name."""
        step = StepRegistry.create_step("stirap_down", subsystem=Subsystem.TARGET)

        assert isinstance(step, StirapTransferStep)
        assert step.direction is TransferDirection.DOWN
        assert step.name == "stirap_down"
        assert StepRegistry.create_step("ARP_DOWN").name == "arp_down"

    def test_pi_pulse_names(self):
        """Pulse names spell area and transition."""
        assert StepRegistry.create_step("pi_pulse", transition=("1", "r0")).name == "pi_pulse_1_r0"
        assert PiPulseStep(Subsystem.BOTH, ("1", "r"), multiple=3).name == "3pi_pulse_1_r"

    def test_all_steps_registered(self):
        """Every step kind is reachable by name."""
        names = StepRegistry.get_all_step_names()

        for name in ("stirap_up", "arp", "pi_pulse", "microwave", "qubit_rotation", "forster_passage"):
            assert name in names

    def test_unknown_step(self):
        """Unknown names list the known ones."""
        with pytest.raises(ConstraintError, match="Unknown gate step 'raman'"):
            StepRegistry.create_step("raman")

    def test_pi_pulse_validation(self):
        """Even areas and degenerate transitions are rejected."""
        with pytest.raises(ConstraintError, match="odd multiple"):
            PiPulseStep(multiple=2)
        with pytest.raises(ConstraintError, match="two distinct levels"):
            PiPulseStep(transition=("1", "1"))

    def test_dynamical_step_without_maps(self):
        """A dynamical context without propagated maps cannot run optical steps."""
        register = ensemble_register(1)
        context = GateContext(
            register,
            LogicalEncoding(register),
            LogicalEncoding(register).encode([0.0, 1.0]),
            mode=GateMode.DYNAMICAL,
        )

        with pytest.raises(ConstraintError, match="needs a DynamicalMaps"):
            PiPulseStep().execute(context)


class TestSingleQubitGate:
    def test_snapshots_follow_pulse_sequence(self):
        """a|0̄⟩ + b|1̄⟩ goes through a|0̄⟩ + ib|r̄₁⟩ and a|r̄₀⟩ + ib|r̄₁⟩."""
        a, b = 0.6, 0.8j
        theta, phi = 1.1, 0.4
        run = single_qubit_gate(a, b, theta, phi)
        rotated = bloch_rotation(theta, phi) @ np.array([a, b])

        assert run.step_amplitude(1, "0") == pytest.approx(a)
        assert run.step_amplitude(1, "r1") == pytest.approx(1j * b)
        assert run.step_amplitude(2, "r0") == pytest.approx(a)
        assert run.step_amplitude(3, "r0") == pytest.approx(rotated[0])
        assert run.step_amplitude(3, "r1") == pytest.approx(1j * rotated[1])
        assert len(run.step_states) == 5

    def test_zero_rotation_flips_sign_of_one(self):
        """θ = 0 leaves (a, −b)."""
        run = single_qubit_gate(0.6, 0.8, 0.0, 0.0)

        np.testing.assert_allclose(run.final, [0.6, -0.8], atol=1e-15)

    def test_half_rotation_balances_populations(self):
        """R_y(π/2) takes |0̄⟩ to equal weights."""
        run = single_qubit_gate(1.0, 0.0, np.pi / 2, np.pi / 2)

        np.testing.assert_allclose(np.abs(run.final) ** 2, [0.5, 0.5], atol=1e-15)

    @settings(max_examples=40, deadline=None)
    @given(angles, angles, st.floats(0, 2 * np.pi), angles, st.integers(1, 6))
    def test_rotation_rule_holds(self, alpha, beta, theta, phi, n_atoms):
        """(a′, −b′) = R(θ, φ)(a, b) and the norm is kept."""
        state = qubit(alpha, beta)
        run = single_qubit_gate(*state, theta, phi, n_atoms=n_atoms)
        expected = bloch_rotation(theta, phi) @ state

        np.testing.assert_allclose(run.final * [1, -1], expected, atol=1e-12)
        assert np.linalg.norm(run.final) == pytest.approx(1.0, abs=1e-12)
        assert run.context.leakage() < 1e-12

    def test_unnormalized_input(self):
        """Inputs must be normalized."""
        with pytest.raises(ConstraintError, match="norm"):
            single_qubit_gate(1.0, 1.0, 0.0, 0.0)


class TestEnsembleCnot:
    def test_matrix(self):
        """Seven pulses give [[0,−1,0,0],[−1,0,0,0],[0,0,−i,0],[0,0,0,−i]]."""
        report = cnot_report()

        np.testing.assert_allclose(report.achieved, ENSEMBLE_CNOT, atol=1e-15)
        assert report.fidelity == pytest.approx(1.0)
        assert report.confident

    def test_matrix_is_unitary(self):
        """The assembled gate is unitary for unequal ensembles."""
        matrix = cnot_report(n_atoms=(3, 5)).achieved

        np.testing.assert_allclose(matrix.conj().T @ matrix, np.eye(4), atol=1e-14)

    def test_both_unexcited_snapshots(self):
        """|0̄0̄⟩: the target goes up, the microwave moves it to i|r̄₁⟩, then −|0̄1̄⟩."""
        run = cnot_gate(1.0, 0.0, 0.0, 0.0)

        assert run.step_amplitude(3, "0", "r0") == pytest.approx(1.0)
        assert run.step_amplitude(4, "0", "r1") == pytest.approx(1j)
        assert run.step_amplitude(6, "0", "1") == pytest.approx(-1.0)
        np.testing.assert_allclose(run.final, [0, -1, 0, 0], atol=1e-15)

    def test_control_blocks_target_transfer(self):
        """|1̄0̄⟩: the Rydberg control blocks the target and ends as −i|1̄0̄⟩."""
        run = cnot_gate(0.0, 0.0, 1.0, 0.0)

        assert run.step_amplitude(1, "r0", "0") == pytest.approx(1j)
        assert run.step_amplitude(3, "r0", "0") == pytest.approx(1j)
        assert run.step_amplitude(4, "r1", "0") == pytest.approx(-1.0)
        np.testing.assert_allclose(run.final, [0, 0, -1j, 0], atol=1e-15)

    @settings(max_examples=30, deadline=None)
    @given(angles, angles, angles, angles, st.integers(1, 4), st.integers(1, 4))
    def test_chi_does_not_change_logical_gate(self, alpha, beta, chi_c, chi_t, n_c, n_t):
        """The idealized gate is the same for any collective phases χ."""
        state = np.kron(qubit(alpha, beta), qubit(beta, alpha))
        run = cnot_gate(*state, n_atoms=(n_c, n_t), chi={"control": chi_c, "target": chi_t})

        np.testing.assert_allclose(run.final, ENSEMBLE_CNOT @ state, atol=1e-12)

    def test_sequence_layout(self):
        """Pulse 4 is the only step on both ensembles."""
        steps = cnot_sequence()

        assert len(steps) == 7
        assert [s.subsystem for s in steps].count(Subsystem.BOTH) == 1
        assert isinstance(steps[3], MicrowaveRotationStep)
        assert steps[3].theta == pytest.approx(np.pi)

    def test_runner_records_one_snapshot_per_step(self):
        """The runner keeps step names in order."""
        register = ensemble_register(1, 1)
        context = SequenceRunner(register).execute(cnot_sequence(), [0, 0, 0, 1])

        assert [s.name for s in context.snapshots][:3] == ["pi_pulse_1_r0", "pi_pulse_1_r1", "stirap_up"]
        assert context.steps_executed == 7


class TestIdealizedForster:
    def test_cz_matrix(self, stark_channel):
        """Only |11⟩ picks up the −1 of the double passage."""
        report = forster_cz([0, 0, 0, 1], stark_channel, mode=GateMode.IDEALIZED)

        np.testing.assert_allclose(report.achieved, CZ, atol=1e-6)
        np.testing.assert_allclose(report.final_state, [0, 0, 0, -1], atol=1e-6)
        assert report.fidelity == pytest.approx(1.0, abs=1e-10)
        assert abs(abs(report.entangling_phase) - np.pi) < 1e-6
        assert report.confident

    def test_cz_snapshots(self, stark_channel):
        """Both atoms reach |r,r⟩ with amplitude i·i = −1 after the π pulses."""
        report = forster_cz([0, 0, 0, 1], stark_channel, mode=GateMode.IDEALIZED)
        rr = report.labels.index("|r,r⟩")

        assert [s.name for s in report.snapshots] == ["pi_pulse_1_r", "forster_passage", "3pi_pulse_1_r"]
        assert report.snapshots[0].amplitudes[rr] == pytest.approx(-1.0)
        assert report.snapshots[1].amplitudes[rr] == pytest.approx(1.0, abs=1e-6)

    def test_cnot_matrix(self, stark_channel):
        """Target rotations around the CZ make a CNOT."""
        report = forster_cnot([0, 0, 1, 0], stark_channel, mode=GateMode.IDEALIZED)

        np.testing.assert_allclose(report.achieved, CNOT, atol=1e-6)
        np.testing.assert_allclose(np.abs(report.final_state) ** 2, [0, 0, 0, 1], atol=1e-10)

    def test_json_has_entangling_phase(self, stark_channel):
        """Matrices serialize as [re, im] pairs."""
        data = forster_cz([0.5, 0.5, 0.5, 0.5], stark_channel, mode=GateMode.IDEALIZED).to_json_dict()

        assert data["name"] == "forster_cz"
        assert data["achieved"][0][0] == pytest.approx([1.0, 0.0])
        assert abs(abs(data["entangling_phase"]) - np.pi) < 1e-6
        assert len(data["snapshots"]) == 3
        assert "forster_population_error" in data["metrics"]
