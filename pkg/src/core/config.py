from pydantic import BaseModel
import os
from dotenv import load_dotenv

load_dotenv()


class Config(BaseModel):
    """Simulator configuration."""

    # Integration
    steps_per_us: int = int(os.getenv("RYDSIM_STEPS_PER_US", "10000"))
    norm_tolerance: float = 1e-8
    adaptive_rel_tol: float = 1e-10
    adaptive_abs_tol: float = 1e-12
    adaptive_min_step: float = 1e-9  # µs
    chunk_size: int = 2048  # Hamiltonian evaluations per vectorized batch

    # Pulses
    truncation_threshold: float = 1e-8

    # Phases
    phase_population_floor: float = 1e-6

    # Adiabaticity
    adiabatic_margin_threshold: float = 0.05
    passage_margin_threshold: float = 1.0

    # Eigenvalue tracking
    eigen_samples_per_us: int = 1000
    eigen_ambiguity_overlap: float = 0.5
    eigen_slope_limit: float = 1e5  # rad/µs²
    eigen_degeneracy_rtol: float = 1e-9

    # State spaces
    max_full_atoms: int = 12
    max_symmetric_atoms: int = 100
    max_full_propagation_atoms: int = 6

    # Forster channel
    distance_phase_threshold: float = 0.1  # rad
    max_distance_delta: float = 0.2

    # Output
    output_dir: str = os.getenv("RYDSIM_OUTPUT_DIR", "output")
    output_samples_per_us: int = 100

    # Concurrency
    max_workers: int = int(os.getenv("RYDSIM_MAX_WORKERS", "1"))


# Global config instance
config = Config()
