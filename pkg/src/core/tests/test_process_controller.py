import asyncio
import pytest
from core import ProcessController
from core.errors import ConfigError, IntegrationError
from core.types import LogLevel


@pytest.fixture
def messages():
    """Fixture to collect messages."""
    return []


@pytest.fixture
def controller(messages):
    """Fixture for ProcessController instance."""

    async def capture_messages(msg: str, level: LogLevel):
        messages.append(msg)

    return ProcessController(capture_messages)


@pytest.mark.asyncio
async def test_successful_workflow(controller, messages):
    """A finished workflow returns its result and stores it."""

    async def simple_workflow(send_message):
        await send_message("Propagating", LogLevel.INFO)
        await asyncio.sleep(0.01)
        return {"p1": 0.999}

    success, result = await controller.run_workflow(simple_workflow, "ARP run")

    assert success is True
    assert result == {"p1": 0.999}
    assert controller.last_result == {"p1": 0.999}
    assert controller.last_error is None
    assert any("Starting ARP run" in m for m in messages)
    assert any("Propagating" in m for m in messages)


@pytest.mark.asyncio
async def test_workflow_cancellation(controller, messages):
    """Cancelling a running workflow reports it and records the error."""

    async def long_workflow(send_message):
        await send_message("Starting sweep", LogLevel.INFO)
        await asyncio.sleep(2)
        return "done"

    task = asyncio.create_task(controller.run_workflow(long_workflow, "Sweep"))
    await asyncio.sleep(0.05)
    assert controller.is_running

    await controller.cancel()
    success, result = await task

    assert success is False
    assert result is None
    assert not controller.is_running
    assert isinstance(controller.last_error, asyncio.CancelledError)
    assert any("Sweep was cancelled" in m for m in messages)


@pytest.mark.asyncio
async def test_workflow_error_is_recorded(controller, messages):
    """Failures keep the exception so the CLI can map an exit code."""

    async def failing_workflow(send_message):
        raise IntegrationError("step size underflow", time=0.25)

    success, result = await controller.run_workflow(failing_workflow, "Passage")

    assert success is False
    assert result is None
    assert isinstance(controller.last_error, IntegrationError)
    assert controller.last_error.time == 0.25
    assert any("❌ Passage failed" in m for m in messages)


@pytest.mark.asyncio
async def test_error_cleared_on_next_run(controller):
    """A successful run clears the previous error."""

    async def failing_workflow(send_message):
        raise ConfigError("bad path")

    async def ok_workflow(send_message):
        return 1

    await controller.run_workflow(failing_workflow, "Bad")
    assert isinstance(controller.last_error, ConfigError)

    await controller.run_workflow(ok_workflow, "Good")
    assert controller.last_error is None


@pytest.mark.asyncio
async def test_cancel_without_running_workflow(controller, messages):
    """Cancelling with nothing running only warns."""
    await controller.cancel()

    assert any("No active run to cancel" in m for m in messages)
    assert not controller.is_cancelling


@pytest.mark.asyncio
async def test_is_running_property(controller):
    """is_running is true only while the workflow executes."""

    async def check_running_workflow(send_message):
        assert controller.is_running
        await asyncio.sleep(0.01)

    assert not controller.is_running
    await controller.run_workflow(check_running_workflow, "Running Check")
    assert not controller.is_running


@pytest.mark.asyncio
async def test_elapsed_time_and_error_type(controller, messages):
    """Every run records its duration; failures name the error class."""

    async def failing_workflow(send_message):
        await asyncio.sleep(0.01)
        raise ConfigError("missing scenario file")

    assert controller.last_elapsed is None
    await controller.run_workflow(failing_workflow, "Preset")

    assert controller.last_elapsed >= 0.01
    assert any("Preset failed (ConfigError): missing scenario file" in m for m in messages)
