from .types import ExtraChannel, ForsterChannelParams, ModelKind
from .model import CouplingTerm, HamiltonianModel
from .operators import EnsembleOperators, ensemble_operators
from .builders import (
    arp_model,
    stirap_model,
    ensemble_model,
    two_level_ensemble_model,
    forster_model,
    h_arp,
    h_stirap,
    h_ensemble,
    h_two_level_ensemble,
    h_forster,
)

__all__ = [
    "ExtraChannel",
    "ForsterChannelParams",
    "ModelKind",
    "CouplingTerm",
    "HamiltonianModel",
    "EnsembleOperators",
    "ensemble_operators",
    "arp_model",
    "stirap_model",
    "ensemble_model",
    "two_level_ensemble_model",
    "forster_model",
    "h_arp",
    "h_stirap",
    "h_ensemble",
    "h_two_level_ensemble",
    "h_forster",
]
