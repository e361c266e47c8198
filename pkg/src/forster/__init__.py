from .scenario import (
    DEFAULT_COUPLING,
    DEFAULT_DISTANCE,
    SCENARIOS,
    ForsterScenario,
    cubic_sweep_scenario,
    gaussian_chirp_scenario,
    get_scenario,
    stark_tuned_scenario,
    stark_tuned_waveform,
)
from .passage import PassageResult, exchange_channel, resonant_exchange, run_double_passage
from .sensitivity import SensitivityRow, SensitivityTable, distance_sensitivity
from .field import (
    DefectFit,
    FieldTable,
    effective_defect_from_field,
    load_field_table,
    required_field,
    resonance_field,
)

__all__ = [
    "DEFAULT_COUPLING",
    "DEFAULT_DISTANCE",
    "SCENARIOS",
    "ForsterScenario",
    "cubic_sweep_scenario",
    "gaussian_chirp_scenario",
    "get_scenario",
    "stark_tuned_scenario",
    "stark_tuned_waveform",
    "PassageResult",
    "exchange_channel",
    "resonant_exchange",
    "run_double_passage",
    "SensitivityRow",
    "SensitivityTable",
    "distance_sensitivity",
    "DefectFit",
    "FieldTable",
    "effective_defect_from_field",
    "load_field_table",
    "required_field",
    "resonance_field",
]
