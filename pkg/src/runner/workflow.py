from typing import Any, Awaitable, Callable
import asyncio

from core.types import LogLevel

from .config import ScenarioConfig
from .execute import execute
from .output import write_outputs
from .presets import run_preset
from .sweep import parse_value, sweep

SendMessage = Callable[[str, LogLevel], Awaitable[None]]


async def _report_warnings(send_message: SendMessage, warnings) -> None:
    for message in warnings:
        await send_message(f"⚠️ {message}", LogLevel.WARNING)


async def _report_outputs(send_message: SendMessage, paths) -> None:
    for path in paths:
        await send_message(f"  {path}", LogLevel.DEBUG)
    if paths:
        await send_message(f"💾 Wrote {len(paths)} files to {paths[0].parent}", LogLevel.SUCCESS)


async def run_workflow(
    send_message: SendMessage,
    scenario: ScenarioConfig,
    out: str | None = None,
    steps_per_us: float | None = None,
) -> dict[str, Any]:
    """Propagate one scenario config and write its tables.

    Args:
        send_message: Callback for status messages
        scenario: Validated scenario config
        out: Output root, config.output_dir when None
        steps_per_us: Integration density override

    Returns:
        Dictionary with the run summary and written paths
    """
    await send_message(f"\n⚛️ Scenario {scenario.name}: {scenario.model.value}, N = {scenario.n_atoms}", LogLevel.INFO)
    result = await asyncio.to_thread(execute, scenario, steps_per_us)
    summary = result.summary()
    await _report_warnings(send_message, result.warnings)

    for label, population in summary["final_populations"].items():
        await send_message(f"  P_{label} = {population:.6f}", LogLevel.INFO)
    if "predicted_phase" in summary:
        await send_message(f"  predicted phase {summary['predicted_phase']:+.6f}", LogLevel.INFO)

    paths = await asyncio.to_thread(write_outputs, scenario.name, result.tables(), summary, out)
    await _report_outputs(send_message, paths)
    return {"success": True, "outputs": [str(p) for p in paths], "summary": summary}


async def preset_workflow(
    send_message: SendMessage,
    name: str,
    out: str | None = None,
    steps_per_us: float | None = None,
) -> dict[str, Any]:
    """Run one named preset and write its tables and summary."""
    await send_message(f"\n🧪 Preset {name}", LogLevel.INFO)
    result = await asyncio.to_thread(run_preset, name, steps_per_us)
    for table in result.tables:
        await send_message(f"\n📊 {table.name}\n{table.format(max_rows=8)}", LogLevel.DEBUG)

    paths = await asyncio.to_thread(write_outputs, result.name, result.tables, result.summary, out)
    await _report_outputs(send_message, paths)
    return {"success": True, "outputs": [str(p) for p in paths], "summary": result.summary}


async def sweep_workflow(
    send_message: SendMessage,
    scenario: ScenarioConfig,
    parameter: str,
    values: list[str],
    out: str | None = None,
    steps_per_us: float | None = None,
    max_workers: int | None = None,
) -> dict[str, Any]:
    """Sweep one dotted config field; values are JSON literals or strings."""
    parsed = [parse_value(v) for v in values]
    await send_message(f"\n🔁 Sweeping {parameter} of {scenario.name} over {len(parsed)} values", LogLevel.INFO)
    result = await asyncio.to_thread(sweep, scenario, parameter, parsed, steps_per_us, max_workers)
    table = result.as_table()
    await send_message(f"\n📊 {table.format()}", LogLevel.INFO)

    name = f"{scenario.name}_sweep_{parameter.replace('.', '_')}"
    paths = await asyncio.to_thread(write_outputs, name, [table], result.summary(), out)
    await _report_outputs(send_message, paths)
    return {"success": True, "outputs": [str(p) for p in paths], "summary": result.summary()}
