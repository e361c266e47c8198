import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from numpy.typing import NDArray

from core.config import config
from core.errors import ConstraintError


class IntegrationMethod(Enum):
    RK4 = "rk4"
    MAGNUS4 = "magnus4"


@dataclass(frozen=True)
class TimeGrid:
    """Integration window split into segments at Hamiltonian discontinuities.

    Steps are shared between segments in proportion to their length, so
    every breakpoint is a grid node.
    """

    t_start: float
    t_end: float
    n_steps: int
    adaptive: bool = False
    rel_tol: float | None = None
    abs_tol: float | None = None
    breakpoints: tuple[float, ...] = ()
    method: IntegrationMethod = IntegrationMethod.RK4
    min_step: float | None = None
    _boundaries: tuple[float, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if not self.t_start < self.t_end:
            raise ConstraintError(f"Grid needs t_start < t_end, got [{self.t_start}, {self.t_end}]")
        if self.n_steps < 2:
            raise ConstraintError(f"Grid needs at least 2 steps, got {self.n_steps}")
        inner = sorted({float(b) for b in self.breakpoints if self.t_start < b < self.t_end})
        object.__setattr__(self, "breakpoints", tuple(inner))
        object.__setattr__(self, "_boundaries", (float(self.t_start), *inner, float(self.t_end)))
        if self.rel_tol is None:
            object.__setattr__(self, "rel_tol", config.adaptive_rel_tol)
        if self.abs_tol is None:
            object.__setattr__(self, "abs_tol", config.adaptive_abs_tol)
        if self.min_step is None:
            object.__setattr__(self, "min_step", config.adaptive_min_step)

    @classmethod
    def for_window(
        cls,
        t_start: float,
        t_end: float,
        steps_per_us: float | None = None,
        **kwargs,
    ) -> "TimeGrid":
        density = steps_per_us if steps_per_us is not None else config.steps_per_us
        n_steps = max(2, math.ceil((t_end - t_start) * density))
        return cls(t_start, t_end, n_steps, **kwargs)

    @classmethod
    def for_model(cls, model, steps_per_us: float | None = None, threshold: float | None = None, **kwargs) -> "TimeGrid":
        """Grid over the model's support with its breakpoints as nodes."""
        start, end = model.support(threshold)
        kwargs.setdefault("breakpoints", model.breakpoints())
        return cls.for_window(start, end, steps_per_us, **kwargs)

    @property
    def duration(self) -> float:
        return self.t_end - self.t_start

    def segments(self) -> list[tuple[float, float]]:
        bounds = self._boundaries
        return list(zip(bounds[:-1], bounds[1:]))

    def segment_steps(self) -> list[int]:
        return [max(1, round(self.n_steps * (b - a) / self.duration)) for a, b in self.segments()]

    def nodes(self) -> NDArray[np.float64]:
        pieces = [
            np.linspace(a, b, n + 1)[:-1] for (a, b), n in zip(self.segments(), self.segment_steps())
        ]
        return np.concatenate([*pieces, [self.t_end]])

    def step_end_times(self, nodes: NDArray[np.float64] | None = None) -> NDArray[np.float64]:
        """Right end of every step, taken as the left limit at segment ends."""
        nodes = self.nodes() if nodes is None else nodes
        ends = nodes[1:].copy()
        segment_ends = np.cumsum(self.segment_steps()) - 1
        ends[segment_ends] = np.nextafter(ends[segment_ends], -np.inf)
        return ends
