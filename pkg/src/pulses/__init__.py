from .types import DetuningSignRule, DoubleMode, RabiPair, sgn
from .protocol import PulseProtocol
from .gaussian import GaussianChirpPulse
from .stirap import StirapPair, ReturnPair, OptimizedStirapPair
from .nonlinear import NonlinearDetuningPulse
from .sequence import DoubleSequence
from .evaluation import eval_rabi, eval_detuning, support_window

__all__ = [
    "DetuningSignRule",
    "DoubleMode",
    "RabiPair",
    "sgn",
    "PulseProtocol",
    "GaussianChirpPulse",
    "StirapPair",
    "ReturnPair",
    "OptimizedStirapPair",
    "NonlinearDetuningPulse",
    "DoubleSequence",
    "eval_rabi",
    "eval_detuning",
    "support_window",
]
