"""Base step class and registry."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import ClassVar, Type

from core.errors import ConstraintError
from ..context import GateContext
from ..types import GateMode, Subsystem


@dataclass
class GateStep(ABC):
    """One pulse of a gate sequence acting on a declared subsystem."""

    STEP_NAMES: ClassVar[list[str]] = []
    levels: ClassVar[tuple[str, ...]] = ()
    gated: ClassVar[bool] = True  # optical steps obey inter-site blockade

    subsystem: Subsystem | str = Subsystem.TARGET

    @classmethod
    def from_name(cls, name: str, **params) -> "GateStep":
        return cls(**params)

    @property
    def name(self) -> str:
        return self.STEP_NAMES[0]

    @abstractmethod
    def local_map(self, context: GateContext, position: int):
        """Map over `self.level_pair` of one site, in the primed frame."""

    @property
    def level_pair(self) -> tuple[str, ...]:
        return self.levels

    def execute(self, context: GateContext) -> None:
        for position in context.register.resolve(self.subsystem):
            context.apply_local(position, self.level_pair, self.local_map(context, position), self.gated)
        context.record(self.name)

    def ideal(self, context: GateContext, position: int, matrix):
        """Barred-frame map expressed in the primed frame."""
        return context.encoding.to_primed(position, self.level_pair, matrix)

    @staticmethod
    def dynamical(context: GateContext) -> bool:
        if context.mode is GateMode.DYNAMICAL:
            if context.dynamics is None:
                raise ConstraintError("Dynamical mode needs a DynamicalMaps instance")
            return True
        return False

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(on={self.subsystem})"


class StepRegistry:
    """Registry for all available gate steps."""

    _steps: dict[str, Type[GateStep]] = {}

    @classmethod
    def register(cls, step_class: Type[GateStep]) -> None:
        for name in step_class.STEP_NAMES:
            cls._steps[name.lower()] = step_class

    @classmethod
    def get_step_class(cls, name: str) -> Type[GateStep] | None:
        return cls._steps.get(name.lower())

    @classmethod
    def create_step(cls, name: str, **params) -> GateStep:
        """Instantiate a step by name; names like "stirap_up" carry their direction."""
        step_class = cls.get_step_class(name)
        if step_class is None:
            raise ConstraintError(f"Unknown gate step {name!r}; known steps: {cls.get_all_step_names()}")
        return step_class.from_name(name.lower(), **params)

    @classmethod
    def get_all_step_names(cls) -> list[str]:
        return sorted(cls._steps)
