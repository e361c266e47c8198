"""Error hierarchy shared by all simulator packages."""


class SimulationError(Exception):
    """Base class for simulator errors."""


class CapacityError(SimulationError, ValueError):
    """A requested size exceeds what a representation supports."""


class ConstraintError(SimulationError, ValueError):
    """An input violates a physical or structural constraint."""


class ShapeError(SimulationError, ValueError):
    """Operands live on incompatible bases or dimensions."""


class ParameterError(SimulationError, ValueError):
    """A model parameter is outside its physical range."""


class ModelKindError(SimulationError, ValueError):
    """An operation was called on a model of the wrong kind."""


class UndefinedAngleError(SimulationError, ValueError):
    """The mixing angle is undefined when both Rabi frequency and detuning vanish."""


class ConfigError(SimulationError, ValueError):
    """A scenario configuration cannot be parsed or resolved."""


class IntegrationError(SimulationError, RuntimeError):
    """Time integration could not proceed."""

    def __init__(self, message: str, time: float):
        super().__init__(f"{message} (t = {time:.9g} µs)")
        self.time = time


EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_CONFIG_ERROR = 2
EXIT_INTEGRATION_ERROR = 3


def exit_code_for(error: BaseException | None) -> int:
    """Map a workflow error to the CLI exit code."""
    if error is None:
        return EXIT_SUCCESS
    if isinstance(error, IntegrationError):
        return EXIT_INTEGRATION_ERROR
    if isinstance(error, (ConfigError, FileNotFoundError)):
        return EXIT_CONFIG_ERROR
    return EXIT_FAILURE
