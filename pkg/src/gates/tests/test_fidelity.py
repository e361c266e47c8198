import numpy as np
import pytest

from core.errors import ConstraintError, ShapeError
from ..fidelity import (
    ExcitationBranch,
    dynamical_pi_pulse_error,
    gate_fidelity,
    pi_pulse_error,
    pi_pulse_vs_adiabatic_error,
)
from ..types import CZ


class TestGateFidelity:
    def test_identity(self):
        """A gate matches itself."""
        assert gate_fidelity(np.eye(4), np.eye(4)) == pytest.approx(1.0)

    def test_global_phase_is_ignored(self):
        """e^{iα}·U scores 1 against U."""
        assert gate_fidelity(np.exp(0.7j) * CZ, CZ) == pytest.approx(1.0)

    def test_one_negated_column(self):
        """CZ against the identity: |1 + 1 + 1 − 1|² / 16."""
        assert gate_fidelity(CZ, np.eye(4)) == pytest.approx(0.25)

    def test_shape_mismatch(self):
        """Gates of different size cannot be compared."""
        with pytest.raises(ShapeError, match="Cannot compare"):
            gate_fidelity(np.eye(2), np.eye(4))


class TestPiPulseError:
    def test_optimal_atom_number(self):
        """The pulse is exact at N_opt."""
        assert pi_pulse_error(5) == pytest.approx(0.0, abs=1e-15)

    def test_closed_form(self):
        """N = 4 misses by cos²((π/2)√0.8) ≈ 0.027."""
        assert pi_pulse_error(4) == pytest.approx(np.cos(0.5 * np.pi * np.sqrt(0.8)) ** 2)
        assert pi_pulse_error(4) == pytest.approx(0.0272, abs=1e-3)

    @pytest.mark.parametrize("n_atoms", [1, 2, 3, 4, 6, 7, 8])
    def test_propagated_pulse_matches_closed_form(self, n_atoms):
        """Propagating the √N ensemble reproduces 1 − sin²((π/2)√(N/N_opt))."""
        assert dynamical_pi_pulse_error(n_atoms) == pytest.approx(pi_pulse_error(n_atoms), abs=1e-12)

    def test_invalid_atom_number(self):
        """N must be at least one."""
        with pytest.raises(ConstraintError, match="must be >= 1"):
            pi_pulse_error(0)
        with pytest.raises(ConstraintError, match="must be >= 1"):
            pi_pulse_vs_adiabatic_error(0, protocol="arp")


class TestAdiabaticExcitation:
    def test_pi_branch_uses_closed_form(self):
        """The π-pulse branch needs no propagation."""
        assert pi_pulse_vs_adiabatic_error(3) == pytest.approx(pi_pulse_error(3))

    @pytest.mark.parametrize("n_atoms", [2, 3, 4, 6, 7])
    def test_arp_beats_pi_pulse_away_from_optimum(self, n_atoms):
        """Chirped excitation is at least ten times more accurate than a fixed π pulse."""
        arp = pi_pulse_vs_adiabatic_error(n_atoms, protocol=ExcitationBranch.ARP, steps_per_us=1000)

        assert arp < pi_pulse_error(n_atoms) / 10

    @pytest.mark.parametrize("n_atoms", [2, 3, 4, 6, 7])
    def test_stirap_beats_pi_pulse_away_from_optimum(self, n_atoms):
        """Far-detuned STIRAP is at least ten times more accurate than a fixed π pulse."""
        stirap = pi_pulse_vs_adiabatic_error(n_atoms, protocol=ExcitationBranch.STIRAP, steps_per_us=4000)

        assert stirap < pi_pulse_error(n_atoms) / 10
