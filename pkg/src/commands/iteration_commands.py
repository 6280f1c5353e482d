# src/commands/iteration_commands.py
import argparse
import logging
from typing import List, Optional

from src.commands.base_command import BaseCommand, CommandOutput, add_budget_arguments, non_negative_int
from src.core.models import ZmTuple
from src.core.zmod import basic_tuple, ducci_iterate
from src.services.cycles import cycle_info, orbit
from src.services.transition_graph import basic_cycle_graph, to_dot, write_dot
from src.utils.helpers import parse_tuple

logger = logging.getLogger(__name__)


def _start_tuple(args: argparse.Namespace) -> ZmTuple:
    """--tuple when given, otherwise the basic tuple of length --n."""
    if args.tuple:
        return parse_tuple(args.tuple, args.m, getattr(args, "n", None))
    if getattr(args, "n", None) is None:
        raise argparse.ArgumentTypeError("either --tuple or --n is required")
    return basic_tuple(args.n, args.m)


class StepCommand(BaseCommand):
    command_name = "step"
    command_description = "Applies the Ducci map r times to a tuple."

    @staticmethod
    def get_required_service_keys() -> List[str]:
        return []

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--m", type=int, required=True)
        parser.add_argument("--tuple", required=True, help='Entries such as "0,0,0,1".')
        parser.add_argument("--n", type=int, default=None, help="Expected length (optional check).")
        parser.add_argument("--r", type=non_negative_int, default=1, help="Number of steps (default 1).")

    async def run(self, args: argparse.Namespace) -> CommandOutput:
        u = parse_tuple(args.tuple, args.m, args.n)
        return CommandOutput(lines=[str(ducci_iterate(u, args.r))])


class OrbitCommand(BaseCommand):
    command_name = "orbit"
    command_description = "Lists a tuple's orbit up to its first repeated state."

    @staticmethod
    def get_required_service_keys() -> List[str]:
        return ['budget']

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--m", type=int, required=True)
        parser.add_argument("--n", type=int, default=None, help="Length of the basic tuple when --tuple is omitted.")
        parser.add_argument("--tuple", default=None)
        add_budget_arguments(parser)

    async def run(self, args: argparse.Namespace) -> CommandOutput:
        u = _start_tuple(args)
        states = orbit(u, self.budget_for(args))
        # the last state is the first repeat; its earlier index is Len
        pre_period = states.index(states[-1])
        period = len(states) - 1 - pre_period
        return CommandOutput(lines=[str(s) for s in states] + [f"len={pre_period} per={period}"])


class CycleCommand(BaseCommand):
    command_name = "cycle"
    command_description = "Reports Len and Per of a tuple (the basic tuple by default)."

    @staticmethod
    def get_required_service_keys() -> List[str]:
        return ['budget']

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--n", type=int, default=None)
        parser.add_argument("--m", type=int, required=True)
        parser.add_argument("--tuple", default=None)
        parser.add_argument("--strategy", choices=["index", "brent", "auto"], default=None)
        parser.add_argument("--verbose-steps", action="store_true", help="Also print steps_used.")
        add_budget_arguments(parser)

    async def run(self, args: argparse.Namespace) -> CommandOutput:
        u = _start_tuple(args)
        info = cycle_info(u, self.budget_for(args), args.strategy)
        line = f"len={info.len} per={info.per}"
        if args.verbose_steps:
            line += f" steps_used={info.steps_used} strategy={info.strategy}"
        return CommandOutput(lines=[line])


class GraphCommand(BaseCommand):
    command_name = "graph"
    command_description = "Exports the basic cycle and its predecessor layers as DOT."

    @staticmethod
    def get_required_service_keys() -> List[str]:
        return ['budget']

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--m", type=int, required=True)
        parser.add_argument("--depth", type=non_negative_int, default=0)
        parser.add_argument("--out", default=None, help="DOT file; stdout when omitted.")
        add_budget_arguments(parser)

    async def run(self, args: argparse.Namespace) -> CommandOutput:
        graph = basic_cycle_graph(args.n, args.m, args.depth, self.budget_for(args))
        if not args.out:
            return CommandOutput(lines=to_dot(graph).rstrip("\n").split("\n"))
        path: Optional[str] = write_dot(graph, args.out)
        return CommandOutput(lines=[
            f"nodes={graph.node_count} edges={graph.edge_count} cycle={len(graph.cycle_nodes)} out={path}"
        ])
