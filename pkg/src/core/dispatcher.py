# src/core/dispatcher.py
import argparse
import logging
from typing import Any, Dict, List, Optional, Type

from src.commands.algebra_commands import CoeffCommand, FormulaCommand, PredCommand
from src.commands.base_command import BaseCommand, CommandOutput
from src.commands.harness_commands import SweepCommand, VerifyCommand
from src.commands.iteration_commands import CycleCommand, GraphCommand, OrbitCommand, StepCommand
from src.core.models import Budget
from src.harness.sweep import SweepRunner

logger = logging.getLogger(__name__)

COMMAND_CLASSES: List[Type[BaseCommand]] = [
    StepCommand,
    OrbitCommand,
    CycleCommand,
    CoeffCommand,
    PredCommand,
    FormulaCommand,
    GraphCommand,
    SweepCommand,
    VerifyCommand,
]


class CommandDispatcher:
    """
    Owns the shared services, builds the argument parser and routes a parsed
    subcommand to its command object.
    """

    def __init__(self, budget: Optional[Budget] = None, sweep_runner: Optional[SweepRunner] = None):
        self.budget = budget or Budget()
        self.sweep_runner = sweep_runner or SweepRunner()

        self.available_services: Dict[str, Any] = {
            'budget': self.budget,
            'sweep_runner': self.sweep_runner,
        }
        self.commands: Dict[str, BaseCommand] = self._load_commands()
        logger.debug(f"CommandDispatcher ready with commands: {list(self.commands.keys())}")

    def _load_commands(self) -> Dict[str, BaseCommand]:
        """Instantiates each command with the services it declares."""
        commands = {}
        for command_cls in COMMAND_CLASSES:
            required_keys = command_cls.get_required_service_keys()
            missing = set(required_keys) - set(self.available_services)
            if missing:
                logger.error(f"Cannot initialize command {command_cls.command_name}. Missing services: {missing}")
                continue
            services = {key: self.available_services[key] for key in required_keys}
            commands[command_cls.command_name] = command_cls(**services)
        return commands

    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="ducci",
            description="Ducci sequences on Z_m^n: iteration, pre-periods, predecessors and closed forms.",
        )
        parser.add_argument("--log-level", default=None, help="Overrides DUCCI_LOG_LEVEL (e.g. INFO).")
        subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
        for name, command in self.commands.items():
            sub = subparsers.add_parser(name, help=command.command_description,
                                        description=command.command_description)
            command.add_arguments(sub)
        return parser

    async def dispatch(self, args: argparse.Namespace) -> CommandOutput:
        command = self.commands.get(args.command)
        if command is None:
            raise argparse.ArgumentTypeError(f"unknown command '{args.command}'")
        logger.info(f"Dispatching '{args.command}'")
        return await command.run(args)
