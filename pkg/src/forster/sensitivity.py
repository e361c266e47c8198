"""Dependence of the passage phase on the interatomic distance."""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, replace
from itertools import repeat

import numpy as np
from tabulate import tabulate

from core.config import config
from core.errors import ConstraintError
from propagator import wrap_phase
from .passage import resonant_exchange, run_double_passage
from .scenario import ForsterScenario

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SensitivityRow:
    delta: float  # relative change of R
    distance: float  # µm
    coupling: float  # rad/µs
    phase: float
    population_error: float
    max_margin: float
    flagged: bool
    exchange_population_error: float  # resonant exchange timed for the baseline distance
    exchange_phase: float
    deviation: float = 0.0  # phase minus the baseline phase, wrapped


@dataclass(frozen=True)
class SensitivityTable:
    scenario: str
    baseline_phase: float
    threshold: float
    rows: tuple[SensitivityRow, ...]

    @property
    def max_deviation_from_pi(self) -> float:
        if not self.rows:
            return 0.0
        return float(max(abs(wrap_phase(row.phase - np.pi)) for row in self.rows))

    @property
    def max_deviation(self) -> float:
        return float(max((abs(row.deviation) for row in self.rows), default=0.0))

    @property
    def within_threshold(self) -> bool:
        return self.max_deviation <= self.threshold

    @property
    def flagged_rows(self) -> list[SensitivityRow]:
        return [row for row in self.rows if row.flagged]

    def as_records(self) -> list[dict]:
        return [asdict(row) for row in self.rows]

    def format(self) -> str:
        headers = ["ΔR/R", "R [µm]", "V/2π [MHz]", "phase", "Δphase", "pop. error", "exchange error", "flag"]
        table = [
            [
                row.delta,
                row.distance,
                row.coupling / (2 * np.pi),
                row.phase,
                row.deviation,
                row.population_error,
                row.exchange_population_error,
                "!" if row.flagged else "",
            ]
            for row in self.rows
        ]
        return tabulate(table, headers=headers, floatfmt=".6g")


def _row(scenario: ForsterScenario, delta: float, exchange_time: float) -> SensitivityRow:
    perturbed = scenario.with_distance(scenario.distance * (1.0 + delta))
    result = run_double_passage(perturbed, record_every=perturbed.grid().n_steps)
    exchange = resonant_exchange(perturbed.coupling, exchange_time, perturbed.steps_per_us).final_amplitudes[0]
    return SensitivityRow(
        delta=float(delta),
        distance=perturbed.distance,
        coupling=perturbed.coupling,
        phase=result.phase,
        population_error=result.population_error,
        max_margin=result.max_margin,
        flagged=result.flagged,
        exchange_population_error=float(1.0 - abs(exchange) ** 2),
        exchange_phase=float(np.angle(exchange)),
    )


def distance_sensitivity(
    scenario: ForsterScenario,
    relative_deltas,
    max_workers: int | None = None,
    threshold: float | None = None,
) -> SensitivityTable:
    """Passage phase for R·(1 + Δ) per requested Δ, against the unperturbed run.

    The coupling follows V ∝ R⁻³. Each row also carries a resonant exchange
    of fixed duration π/V₀, a full 2π cycle at the baseline distance.
    """
    deltas = [float(d) for d in relative_deltas]
    limit = config.max_distance_delta
    outside = [d for d in deltas if abs(d) > limit + 1e-12]
    if outside:
        raise ConstraintError(f"Relative distance changes must lie within ±{limit:g}, got {outside}")
    threshold = threshold if threshold is not None else config.distance_phase_threshold
    workers = max_workers if max_workers is not None else config.max_workers

    exchange_time = np.pi / scenario.coupling
    runs = [0.0, *deltas]
    if workers > 1 and len(runs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_row, repeat(scenario), runs, repeat(exchange_time)))
    else:
        rows = [_row(scenario, delta, exchange_time) for delta in runs]

    baseline, *rest = rows
    rows = tuple(
        replace(row, deviation=float(wrap_phase(row.phase - baseline.phase)))
        for row in rest
    )
    table = SensitivityTable(scenario.name, baseline.phase, threshold, rows)
    if table.flagged_rows:
        logger.warning(f"{len(table.flagged_rows)} of {len(rows)} distance rows are not adiabatic")
    logger.info(f"{scenario.name}: max phase deviation {table.max_deviation:.3g} rad over {len(rows)} distances")
    return table
