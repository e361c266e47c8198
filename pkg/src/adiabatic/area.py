from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from hamiltonians import ForsterChannelParams, HamiltonianModel, arp_model, forster_model


def as_two_level_model(source) -> HamiltonianModel:
    """A two-level model from a model, a Förster channel or a single-field pulse."""
    if isinstance(source, HamiltonianModel):
        return source
    if isinstance(source, ForsterChannelParams):
        return forster_model(source)
    return arp_model(source)


@dataclass(frozen=True)
class PulseArea:
    """S = ∫√(Ω₀² + δ²) dt over a window."""

    value: float
    window: tuple[float, float]
    error: float = 0.0


def effective_rabi(model: HamiltonianModel, t):
    rabi, detuning = model.two_level_parameters(t)
    return np.hypot(rabi, detuning)


def generalized_area(source, window: tuple[float, float] | None = None) -> PulseArea:
    """Generalized pulse area by adaptive quadrature split at the breakpoints."""
    model = as_two_level_model(source)
    start, end = window if window is not None else model.support()
    points = [b for b in model.breakpoints() if start < b < end]

    value, error = quad(
        lambda t: float(effective_rabi(model, t)[0]),
        start,
        end,
        points=points or None,
        epsabs=0.0,
        epsrel=1e-12,
        limit=500,
    )
    return PulseArea(float(value), (float(start), float(end)), float(error))
