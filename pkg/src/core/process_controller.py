import asyncio
import contextlib
import time
from typing import Any, Awaitable, Callable, Optional, Protocol, TypeVar

from .types import LogLevel

T_co = TypeVar("T_co", covariant=True)
T = TypeVar("T")

SendMessage = Callable[[str, LogLevel], Awaitable[None]]

# time a cancelled run gets to unwind
CANCEL_GRACE = 0.5  # s


class WorkflowFunc(Protocol[T_co]):
    """A simulation run that reports progress through send_message."""

    async def __call__(self, send_message: SendMessage) -> T_co: ...


class ProcessController:
    """Runs simulation workflows one at a time.

    The outcome of the latest run is kept on the controller: its result,
    the exception that stopped it and its wall-clock duration. The CLI
    reads `last_error` to choose an exit code.
    """

    def __init__(self, send_message: SendMessage):
        self.send_message = send_message
        self._task: Optional[asyncio.Task] = None
        self._last_result: Any = None
        self._last_error: BaseException | None = None
        self._last_elapsed: float | None = None
        self._cancelling = False

    async def run_workflow(
        self,
        workflow: WorkflowFunc[T],
        name: str = "Workflow",
    ) -> tuple[bool, Optional[T]]:
        """Run `workflow` to completion and return (success, result).

        A failed or cancelled run returns (False, None); the exception is
        kept as `last_error` instead of being raised.
        """
        self._cancelling = False
        self._last_error = None
        started = time.perf_counter()

        try:
            await self.send_message(f"▶️ Starting {name}...", LogLevel.INFO)
            self._task = asyncio.create_task(workflow(self.send_message))
            result = await self._task
        except asyncio.CancelledError as e:
            self._last_error = e
            await self.send_message(f"\n❌ {name} was cancelled", LogLevel.ERROR)
            return False, None
        except Exception as e:
            self._last_error = e
            await self.send_message(f"\n❌ {name} failed ({type(e).__name__}): {e}", LogLevel.ERROR)
            return False, None
        finally:
            self._last_elapsed = time.perf_counter() - started
            self._task = None
            self._cancelling = False

        self._last_result = result
        await self.send_message(f"⏱️ {name} finished in {self._last_elapsed:.2f}s", LogLevel.DEBUG)
        return True, result

    async def cancel(self):
        """Stop the active run, waiting briefly for it to unwind."""
        if self.is_running:
            self._cancelling = True
            await self.send_message("🛑 Cancelling current run...", LogLevel.INFO)
            self._task.cancel()
            with contextlib.suppress(asyncio.CancelledError, asyncio.TimeoutError):
                await asyncio.wait_for(self._task, timeout=CANCEL_GRACE)
        elif self._cancelling:
            await self.send_message("🛑 Cancellation already in progress...", LogLevel.INFO)
        else:
            await self.send_message("⚠️ No active run to cancel", LogLevel.WARNING)

    @property
    def is_running(self) -> bool:
        return self._task is not None and not self._task.done()

    @property
    def is_cancelling(self) -> bool:
        return self._cancelling

    @property
    def last_result(self) -> Any:
        """Result of the latest successful run."""
        return self._last_result

    @property
    def last_error(self) -> BaseException | None:
        """Exception that ended the latest run; None after a success."""
        return self._last_error

    @property
    def last_elapsed(self) -> float | None:
        """Wall-clock seconds of the latest run, failed runs included."""
        return self._last_elapsed
