"""Parameter sweeps: one scenario config, one dotted field, many values."""

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from copy import deepcopy
from dataclasses import dataclass

import numpy as np

from core.config import config
from core.errors import ConfigError
from .config import ScenarioConfig, parse_config
from .execute import execute
from .output import Table

logger = logging.getLogger(__name__)


def parse_value(text: str):
    """JSON literal if it parses, otherwise the raw string."""
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def _resolve(data: dict, path: str) -> tuple[dict, str]:
    *parents, leaf = path.split(".")
    node = data
    for key in parents:
        if not isinstance(node, dict) or not isinstance(node.get(key), dict):
            raise ConfigError(f"Sweep parameter {path!r} does not resolve: no block {key!r}")
        node = node[key]
    if leaf not in node:
        raise ConfigError(f"Sweep parameter {path!r} does not resolve: no field {leaf!r}")
    return node, leaf


def with_parameter(scenario: ScenarioConfig, path: str, value) -> ScenarioConfig:
    """Copy of the scenario with the dotted field set and revalidated."""
    data = deepcopy(scenario.model_dump(mode="json"))
    node, leaf = _resolve(data, path)
    node[leaf] = value
    return parse_config(data)


def _sweep_point(data: dict, steps_per_us: float | None) -> tuple[list[float], list[float]]:
    result = execute(parse_config(data), steps_per_us)
    phases = [np.nan if p is None else p for p in result.final_phases.values()]
    return list(result.final_populations.values()), phases


@dataclass(frozen=True)
class SweepResult:
    parameter: str
    values: tuple
    labels: tuple[str, ...]
    populations: np.ndarray  # (values, states)
    phases: np.ndarray

    def as_table(self) -> Table:
        headers = (
            "value",
            *(f"P_{label}" for label in self.labels),
            *(f"phase_{label}" for label in self.labels),
        )
        numeric = [v if isinstance(v, (int, float)) and not isinstance(v, bool) else np.nan for v in self.values]
        rows = np.column_stack([numeric, self.populations, self.phases]) if self.values else np.empty((0, len(headers)))
        return Table("sweep", headers, rows)

    def summary(self) -> dict:
        return {
            "parameter": self.parameter,
            "values": list(self.values),
            "final_populations": {
                label: self.populations[:, k].tolist() for k, label in enumerate(self.labels)
            },
        }


def sweep(
    scenario: ScenarioConfig,
    parameter: str,
    values: list,
    steps_per_us: float | None = None,
    max_workers: int | None = None,
) -> SweepResult:
    """Run the scenario once per value; independent runs go to a process pool."""
    _resolve(scenario.model_dump(mode="json"), parameter)
    points = [with_parameter(scenario, parameter, value) for value in values]
    labels = points[0].build_model().labels if points else scenario.build_model().labels
    workers = max_workers if max_workers is not None else config.max_workers

    payloads = [point.model_dump(mode="json") for point in points]
    if workers > 1 and len(points) > 1:
        logger.info(f"Sweeping {parameter} over {len(points)} values with {workers} workers")
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_sweep_point, payloads, [steps_per_us] * len(payloads)))
    else:
        outcomes = [_sweep_point(payload, steps_per_us) for payload in payloads]

    width = len(labels)
    populations = np.array([o[0] for o in outcomes], dtype=float).reshape(-1, width)
    phases = np.array([o[1] for o in outcomes], dtype=float).reshape(-1, width)
    return SweepResult(parameter, tuple(values), tuple(labels), populations, phases)
