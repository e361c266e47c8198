from .grid import IntegrationMethod, TimeGrid
from .integrators import magnus4_propagators, rk4_step
from .trajectory import Trajectory, propagate
from .eigen import EigenTrack, eigen_track
from .phase import extract_phase, unwrap_masked, wrap_phase
from .excitation import ExcitationResult, Protocol, run_excitation, run_excitation_probability

__all__ = [
    "IntegrationMethod",
    "TimeGrid",
    "magnus4_propagators",
    "rk4_step",
    "Trajectory",
    "propagate",
    "EigenTrack",
    "eigen_track",
    "extract_phase",
    "unwrap_masked",
    "wrap_phase",
    "ExcitationResult",
    "Protocol",
    "run_excitation",
    "run_excitation_probability",
]
