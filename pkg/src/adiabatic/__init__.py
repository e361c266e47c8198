from .area import PulseArea, as_two_level_model, effective_rabi, generalized_area
from .dressed import (
    DressedDecomposition,
    adiabaticity_margin,
    decompose,
    mixing_angle,
    predict_adiabatic_amplitudes,
    to_bare,
)
from .prediction import (
    PassagePrediction,
    PassageStep,
    passage_windows,
    predict_double_arp_amplitude,
    predict_passages,
    predict_phase_from_eigentrack,
)

__all__ = [
    "PulseArea",
    "as_two_level_model",
    "effective_rabi",
    "generalized_area",
    "DressedDecomposition",
    "adiabaticity_margin",
    "decompose",
    "mixing_angle",
    "predict_adiabatic_amplitudes",
    "to_bare",
    "PassagePrediction",
    "PassageStep",
    "passage_windows",
    "predict_double_arp_amplitude",
    "predict_passages",
    "predict_phase_from_eigentrack",
]
