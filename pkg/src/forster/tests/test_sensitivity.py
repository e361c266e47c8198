import numpy as np
import pytest

from core.errors import ConstraintError
from ..scenario import DEFAULT_COUPLING, stark_tuned_scenario
from ..sensitivity import distance_sensitivity


@pytest.fixture(scope="module")
def table():
    return distance_sensitivity(stark_tuned_scenario(steps_per_us=2000), [-0.1, 0.1], max_workers=1)


def test_coupling_follows_inverse_cube(table):
    """Each row rescales V by (1 + Δ)⁻³."""
    for row in table.rows:
        assert row.coupling == pytest.approx(DEFAULT_COUPLING * (1 + row.delta) ** -3, rel=1e-12)
    assert [row.delta for row in table.rows] == [-0.1, 0.1]


def test_passage_phase_is_robust(table):
    """The passage phase barely moves while a timed exchange fails."""
    assert table.max_deviation < 0.1
    assert table.within_threshold
    assert all(row.exchange_population_error > 0.4 for row in table.rows)
    assert all(row.population_error < 0.05 for row in table.rows)
    assert table.max_deviation_from_pi < 0.15


def test_records_and_format(table):
    """Rows convert to records and render as a table."""
    records = table.as_records()
    assert set(records[0]) >= {"delta", "distance", "phase", "deviation", "flagged"}
    text = table.format()
    assert "ΔR/R" in text
    assert "exchange error" in text


def test_delta_out_of_range():
    """Distance changes beyond the configured limit are rejected."""
    with pytest.raises(ConstraintError, match="must lie within"):
        distance_sensitivity(stark_tuned_scenario(steps_per_us=500), [0.5])


def test_empty_deltas():
    """Only the baseline is run when no changes are requested."""
    result = distance_sensitivity(stark_tuned_scenario(steps_per_us=500), [], max_workers=1)
    assert result.rows == ()
    assert result.max_deviation == 0.0
    assert np.isfinite(result.baseline_phase)
