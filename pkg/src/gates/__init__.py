from .types import (
    CNOT,
    CZ,
    ENSEMBLE_CNOT,
    GateMode,
    Subsystem,
    TransferDirection,
    bloch_rotation,
    odd_pi_rotation,
)
from .register import (
    ATOM_LEVELS,
    ENSEMBLE_LEVELS,
    LogicalEncoding,
    Register,
    Site,
    atom_pair_register,
    ensemble_register,
)
from .context import GateContext, StepSnapshot
from .steps import (
    ArpTransferStep,
    ForsterPassageStep,
    GateStep,
    MicrowaveRotationStep,
    PiPulseStep,
    QubitRotationStep,
    StepRegistry,
    StirapTransferStep,
)
from .dynamics import DynamicalMaps, DynamicalSettings
from .executor import SequenceRunner
from .report import GateReport, complex_pairs
from .fidelity import (
    ExcitationBranch,
    dynamical_pi_pulse_error,
    gate_fidelity,
    pi_pulse_error,
    pi_pulse_vs_adiabatic_error,
)
from .protocols import (
    GateRun,
    cnot_gate,
    cnot_report,
    cnot_sequence,
    forster_cnot,
    forster_cz,
    forster_cz_sequence,
    single_qubit_gate,
    single_qubit_sequence,
)

__all__ = [
    "CNOT",
    "CZ",
    "ENSEMBLE_CNOT",
    "GateMode",
    "Subsystem",
    "TransferDirection",
    "bloch_rotation",
    "odd_pi_rotation",
    "ATOM_LEVELS",
    "ENSEMBLE_LEVELS",
    "LogicalEncoding",
    "Register",
    "Site",
    "atom_pair_register",
    "ensemble_register",
    "GateContext",
    "StepSnapshot",
    "ArpTransferStep",
    "ForsterPassageStep",
    "GateStep",
    "MicrowaveRotationStep",
    "PiPulseStep",
    "QubitRotationStep",
    "StepRegistry",
    "StirapTransferStep",
    "DynamicalMaps",
    "DynamicalSettings",
    "SequenceRunner",
    "GateReport",
    "complex_pairs",
    "ExcitationBranch",
    "dynamical_pi_pulse_error",
    "gate_fidelity",
    "pi_pulse_error",
    "pi_pulse_vs_adiabatic_error",
    "GateRun",
    "cnot_gate",
    "cnot_report",
    "cnot_sequence",
    "forster_cnot",
    "forster_cz",
    "forster_cz_sequence",
    "single_qubit_gate",
    "single_qubit_sequence",
]
