"""Core types and enums."""

from enum import Enum


class LogLevel(Enum):
    """Log levels for send_message function."""

    DEBUG = "debug"  # Verbose console only - per-run detail
    INFO = "info"  # General status updates
    SUCCESS = "success"  # Completed runs and written outputs
    WARNING = "warning"  # Flagged results and recoverable problems
    ERROR = "error"  # Failed workflows
