from .config import (
    DoubleConfig,
    ForsterConfig,
    GaussianChirpConfig,
    GridConfig,
    NonlinearDetuningConfig,
    OptimizedStirapConfig,
    OutputConfig,
    ScenarioConfig,
    StirapPairConfig,
    dump_config,
    load_config,
    parse_config,
)
from .execute import RunResult, execute, final_phase
from .output import Table, write_outputs
from .poisson import LoadingTable, PoissonLoadingSpec, poisson_stats
from .scenarios import SCENARIOS, builtin_scenario
from .presets import PRESETS, PresetResult, run_preset
from .sweep import SweepResult, parse_value, sweep, with_parameter
from .workflow import preset_workflow, run_workflow, sweep_workflow

__all__ = [
    "DoubleConfig",
    "ForsterConfig",
    "GaussianChirpConfig",
    "GridConfig",
    "NonlinearDetuningConfig",
    "OptimizedStirapConfig",
    "OutputConfig",
    "ScenarioConfig",
    "StirapPairConfig",
    "dump_config",
    "load_config",
    "parse_config",
    "RunResult",
    "execute",
    "final_phase",
    "Table",
    "write_outputs",
    "LoadingTable",
    "PoissonLoadingSpec",
    "poisson_stats",
    "SCENARIOS",
    "builtin_scenario",
    "PRESETS",
    "PresetResult",
    "run_preset",
    "SweepResult",
    "parse_value",
    "sweep",
    "with_parameter",
    "preset_workflow",
    "run_workflow",
    "sweep_workflow",
]
