# src/commands/base_command.py
import argparse
import logging
from abc import ABC, abstractmethod
from typing import List, Optional

from pydantic import BaseModel, Field

from src.core.models import Budget

logger = logging.getLogger(__name__)


class CommandOutput(BaseModel):
    """Lines for stdout plus the exit status the CLI should return."""

    lines: List[str] = Field(default_factory=list)
    status: int = 0


class BaseCommand(ABC):
    """Abstract base class for all CLI subcommands."""

    command_name: str = "base"  # Override in subclasses
    command_description: str = "Base command functionality."  # Override in subclasses

    def __init__(self, **kwargs):
        """
        Services are injected by the CommandDispatcher according to
        get_required_service_keys(); unknown keys are ignored.
        """
        self.budget: Optional[Budget] = kwargs.get('budget')
        self.sweep_runner = kwargs.get('sweep_runner')
        logger.debug(f"Initialized {self.command_name} with services: {list(kwargs.keys())}")

    @staticmethod
    @abstractmethod
    def get_required_service_keys() -> List[str]:
        """Keys of the services this command needs, e.g. ['budget']."""

    @classmethod
    @abstractmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        """Registers the subcommand's options."""

    @abstractmethod
    async def run(self, args: argparse.Namespace) -> CommandOutput:
        """Executes the subcommand; domain errors propagate to the CLI."""

    def budget_for(self, args: argparse.Namespace) -> Budget:
        """The injected budget, with --max-steps / --max-states overrides applied."""
        base = self.budget or Budget()
        overrides = {}
        if getattr(args, "max_steps", None) is not None:
            overrides["max_steps"] = args.max_steps
        if getattr(args, "max_states", None) is not None:
            overrides["max_states"] = args.max_states
        return Budget(**{**base.model_dump(), **overrides}) if overrides else base

    def __str__(self) -> str:
        return f"{self.command_name}: {self.command_description}"


def add_budget_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-steps", type=int, default=None, help="Iteration cap for cycle detection.")
    parser.add_argument("--max-states", type=int, default=None, help="Cap on stored visited states.")


def non_negative_int(text: str) -> int:
    """argparse type for step counts and depths."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value
