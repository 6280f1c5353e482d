# src/commands/algebra_commands.py
import argparse
import logging
from typing import List

from src.commands.base_command import BaseCommand, CommandOutput, add_budget_arguments, non_negative_int
from src.core.errors import BudgetExceeded
from src.services.closed_form import l_formula
from src.services.coefficients import coeff_row
from src.services.cycles import lp_values
from src.services.predecessors import (
    all_predecessors,
    construct_predecessor,
    has_predecessor,
    solve_predecessors_general,
)
from src.utils.helpers import parse_tuple

logger = logging.getLogger(__name__)


class CoeffCommand(BaseCommand):
    command_name = "coeff"
    command_description = "Prints the coefficient row a_{r,1..n} mod m."

    @staticmethod
    def get_required_service_keys() -> List[str]:
        return []

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--m", type=int, required=True)
        parser.add_argument("--r", type=non_negative_int, required=True)
        parser.add_argument("--reverse", action="store_true", help="Print in D^r(0,...,0,1) order.")

    async def run(self, args: argparse.Namespace) -> CommandOutput:
        row = coeff_row(args.n, args.m, args.r)
        return CommandOutput(lines=[str(row.reversed_tuple()) if args.reverse else str(row)])


class PredCommand(BaseCommand):
    command_name = "pred"
    command_description = "Predecessors of a tuple under the Ducci map."

    @staticmethod
    def get_required_service_keys() -> List[str]:
        return []

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--n", type=int, default=None)
        parser.add_argument("--m", type=int, required=True)
        parser.add_argument("--tuple", required=True)
        mode = parser.add_mutually_exclusive_group()
        mode.add_argument("--all", dest="mode", action="store_const", const="all")
        mode.add_argument("--construct", dest="mode", action="store_const", const="construct")
        mode.add_argument("--exists", dest="mode", action="store_const", const="exists")
        mode.add_argument("--general", dest="mode", action="store_const", const="general",
                          help="Brute-force scan; also works for odd n.")
        parser.set_defaults(mode="all")

    async def run(self, args: argparse.Namespace) -> CommandOutput:
        u = parse_tuple(args.tuple, args.m, args.n)
        if args.mode == "exists":
            return CommandOutput(lines=["yes" if has_predecessor(u) else "no"])
        if args.mode == "construct":
            return CommandOutput(lines=[str(construct_predecessor(u))])
        family = solve_predecessors_general(u) if args.mode == "general" else all_predecessors(u)
        logger.info(f"{family.size} predecessors of {u} ({family.method})")
        return CommandOutput(lines=[str(v) for v in family.members])


class FormulaCommand(BaseCommand):
    command_name = "formula"
    command_description = "Closed-form value of L_m(n), optionally checked against cycle detection."

    @staticmethod
    def get_required_service_keys() -> List[str]:
        return ['budget']

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--m", type=int, required=True)
        parser.add_argument("--computed", action="store_true", help="Also run cycle detection.")
        add_budget_arguments(parser)

    async def run(self, args: argparse.Namespace) -> CommandOutput:
        lines = [l_formula(args.n, args.m).summary_line()]
        if args.computed:
            try:
                info = lp_values(args.n, args.m, self.budget_for(args))
                lines.append(f"computed_L={info.len} computed_P={info.per}")
            except BudgetExceeded as e:
                logger.warning(f"Cycle detection for (n={args.n}, m={args.m}) ran out of budget")
                lines.append(f"computed=budget-exceeded steps_used={e.steps_used}")
        return CommandOutput(lines=lines)
