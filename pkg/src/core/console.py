import sys
from .types import LogLevel

_verbose: bool = False


def set_verbose(enabled: bool) -> None:
    """Show DEBUG messages on the console."""
    global _verbose
    _verbose = enabled


async def broadcast(message: str, level: LogLevel = LogLevel.INFO):
    """Print a workflow message to the console.

    Args:
        message: The message to print
        level: Log level - DEBUG only in verbose mode, WARNING and ERROR go to stderr
    """
    if level == LogLevel.DEBUG and not _verbose:
        return

    stream = sys.stderr if level in (LogLevel.WARNING, LogLevel.ERROR) else sys.stdout
    print(message, file=stream, flush=True)
