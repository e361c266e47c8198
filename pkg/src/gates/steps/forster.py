from dataclasses import dataclass
from functools import lru_cache
from typing import ClassVar

import numpy as np

from adiabatic import PassagePrediction, predict_passages
from core.errors import ConstraintError
from hamiltonians import ForsterChannelParams
from .base import GateStep
from ..context import GateContext
from ..types import Subsystem


@lru_cache(maxsize=32)
def passage_prediction(channel: ForsterChannelParams) -> PassagePrediction:
    return predict_passages(channel)


@dataclass
class ForsterPassageStep(GateStep):
    """Double passage of the Förster resonance.

    Only the component with every atom in its Rydberg level couples to the
    pair channel; it is multiplied by the returned channel amplitude.
    """

    STEP_NAMES: ClassVar[list[str]] = ["forster_passage"]
    gated: ClassVar[bool] = False

    subsystem: Subsystem | str = Subsystem.BOTH
    channel: ForsterChannelParams | None = None

    def __post_init__(self):
        if self.channel is None:
            raise ConstraintError("A Förster passage needs channel parameters")

    def local_map(self, context: GateContext, position: int):
        raise ConstraintError("A Förster passage acts on the pair, not on one site")

    def execute(self, context: GateContext) -> None:
        prediction = passage_prediction(self.channel)
        for message in prediction.warnings:
            context.warn(f"Low confidence: {message}")

        if self.dynamical(context):
            amplitude = context.dynamics.forster_amplitude(self.channel)
        else:
            amplitude = prediction.amplitude

        label = tuple(site.rydberg_levels[0] for site in context.register.sites)
        context.apply_phase(label, amplitude)
        context.metrics["forster_amplitude"] = complex(amplitude)
        context.metrics["forster_population_error"] = float(1.0 - abs(amplitude) ** 2)
        context.metrics["forster_phase"] = float(np.angle(amplitude))
        context.record(self.name)
