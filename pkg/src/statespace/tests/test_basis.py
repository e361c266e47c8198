import json
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, strategies as st

from core.errors import CapacityError, ConstraintError, ShapeError
from ..basis import Representation, build_basis, full_dimension, symmetrizer
from ..scheme import AtomLevelScheme, THREE_LEVEL, TWO_LEVEL

GOLDEN = json.loads((Path(__file__).parent / "golden" / "basis_order.json").read_text())


def test_two_atom_order_matches_printed_matrix():
    """N = 2 full basis lists the eight states gg..re in the printed order."""
    basis = build_basis(2, THREE_LEVEL, Representation.FULL)

    assert list(basis.states) == GOLDEN["full_2"]


@pytest.mark.parametrize(
    "key, n_atoms, scheme, representation",
    [
        ("full_3", 3, THREE_LEVEL, Representation.FULL),
        ("symmetric_3", 3, THREE_LEVEL, Representation.SYMMETRIC),
        ("symmetric_two_level_4", 4, TWO_LEVEL, Representation.SYMMETRIC),
    ],
)
def test_golden_orders(key, n_atoms, scheme, representation):
    """Basis ordering is stable against the stored golden lists."""
    assert list(build_basis(n_atoms, scheme, representation).states) == GOLDEN[key]


def test_single_atom_has_three_states():
    """One atom has no blockade effect."""
    assert build_basis(1).states == ("g", "e", "r")


@given(st.integers(1, 8))
def test_dimension_formulas(n_atoms):
    """Full and symmetric dimensions follow the closed forms."""
    full = build_basis(n_atoms, THREE_LEVEL, Representation.FULL)
    symmetric = build_basis(n_atoms, THREE_LEVEL, Representation.SYMMETRIC)
    two_level = build_basis(n_atoms, TWO_LEVEL, Representation.SYMMETRIC)

    assert full.dimension == 2**n_atoms + n_atoms * 2 ** (n_atoms - 1)
    assert full.dimension == full_dimension(n_atoms)
    assert symmetric.dimension == 2 * n_atoms + 1
    assert two_level.dimension == 2
    assert full.rydberg_counts.max() <= 1


def test_capacity_limits():
    """Out-of-range atom numbers raise a capacity error."""
    with pytest.raises(CapacityError, match="1..12"):
        build_basis(13, THREE_LEVEL, Representation.FULL)
    with pytest.raises(CapacityError, match="1..100"):
        build_basis(101, THREE_LEVEL, Representation.SYMMETRIC)
    with pytest.raises(CapacityError):
        build_basis(0)


def test_large_symmetric_basis():
    """The symmetric basis reaches 100 atoms."""
    assert build_basis(100, THREE_LEVEL, Representation.SYMMETRIC).dimension == 201


def test_scheme_validation():
    """Rydberg labels must be a nonempty subset of the levels."""
    with pytest.raises(ConstraintError, match="subset"):
        AtomLevelScheme(("g", "e"), frozenset({"r"}))
    with pytest.raises(ConstraintError, match="subset"):
        AtomLevelScheme(("g", "r"), frozenset())


def test_symmetrizer_is_isometry():
    """Rows of the symmetrizer are orthonormal."""
    full = build_basis(3)
    symmetric = build_basis(3, representation=Representation.SYMMETRIC)
    matrix = symmetrizer(full, symmetric)

    np.testing.assert_allclose(matrix @ matrix.T, np.eye(symmetric.dimension), atol=1e-14)


def test_symmetrizer_rejects_mismatch():
    """Bases with different atom numbers cannot be combined."""
    with pytest.raises(ShapeError, match="Cannot project"):
        symmetrizer(build_basis(2), build_basis(3, representation=Representation.SYMMETRIC))


def test_index_of_missing_state():
    """Looking up a blockaded state fails with a shape error."""
    with pytest.raises(ShapeError, match="'rr'"):
        build_basis(2).index("rr")
