import argparse
import asyncio
import logging
import sys
from functools import partial
from pathlib import Path

from core import ProcessController, broadcast, config, set_verbose
from core.errors import exit_code_for
from core.types import LogLevel
from runner import PRESETS, SCENARIOS, builtin_scenario, load_config
from runner.workflow import preset_workflow, run_workflow, sweep_workflow


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rydsim",
        description="Adiabatic passage and Rydberg gate simulator",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help=f"output directory (default: {config.output_dir})")
    common.add_argument("--steps-per-us", type=float, help="integration steps per µs")
    common.add_argument("--workers", type=int, help="worker processes for sweeps")
    common.add_argument("-v", "--verbose", action="store_true", help="show debug messages")

    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", parents=[common], help="run a scenario config file")
    run.add_argument("config", help="path to a JSON scenario config")

    preset = commands.add_parser("preset", parents=[common], help="run a named reproduction preset")
    preset.add_argument("name", choices=sorted(PRESETS))

    sweep = commands.add_parser("sweep", parents=[common], help="sweep one config field")
    sweep.add_argument("config", help=f"JSON config path or built-in scenario ({', '.join(sorted(SCENARIOS))})")
    sweep.add_argument("--param", required=True, help="dotted field path, e.g. pulse.peak_rabi_mhz")
    sweep.add_argument("--values", required=True, help="comma-separated values, JSON literals or strings")

    commands.add_parser("presets", help="list presets and built-in scenarios")
    return parser


def resolve_scenario(source: str):
    """Config file path, or a built-in scenario name when no such file exists."""
    if source in SCENARIOS and not Path(source).exists():
        return builtin_scenario(source)
    return load_config(source)


def split_values(text: str) -> list[str]:
    return [v.strip() for v in text.split(",") if v.strip()]


def list_presets() -> None:
    print("Presets:")
    for name, preset in PRESETS.items():
        doc = (preset.__doc__ or "").strip().splitlines()
        print(f"  {name:26s} {doc[0] if doc else ''}")
    print("\nBuilt-in scenarios:")
    for name, factory in SCENARIOS.items():
        print(f"  {name:26s} {factory().description}")


def configure(args: argparse.Namespace) -> None:
    if args.out is not None:
        config.output_dir = args.out
    if args.workers is not None:
        config.max_workers = args.workers
    set_verbose(args.verbose)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )


async def main(argv: list[str] | None = None) -> int:
    """Parse the command line, run one workflow and return its exit code."""
    args = build_parser().parse_args(argv)
    if args.command == "presets":
        list_presets()
        return 0

    configure(args)
    controller = ProcessController(broadcast)
    steps = args.steps_per_us

    if args.command == "preset":
        workflow = partial(preset_workflow, name=args.name, steps_per_us=steps)
        name = f"preset {args.name}"
    else:
        try:
            scenario = resolve_scenario(args.config)
        except Exception as e:
            await broadcast(f"❌ {e}", LogLevel.ERROR)
            return exit_code_for(e)

        if args.command == "run":
            workflow = partial(run_workflow, scenario=scenario, steps_per_us=steps)
            name = f"run {scenario.name}"
        else:
            values = split_values(args.values)
            workflow = partial(
                sweep_workflow, scenario=scenario, parameter=args.param, values=values, steps_per_us=steps
            )
            name = f"sweep {args.param}"

    success, _ = await controller.run_workflow(workflow, name)
    return 0 if success else exit_code_for(controller.last_error)


if __name__ == "__main__":
    sys.exit(asyncio.run(main()))
