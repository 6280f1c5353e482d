# src/commands/harness_commands.py
import argparse
import logging
from typing import List

from src.commands.base_command import BaseCommand, CommandOutput, add_budget_arguments
from src.core.config import (
    LEMMA_C_MAX,
    LEMMA_K_MAX,
    LEMMA_N1_VALUES,
    LEMMA_PRIMES,
    SWEEP_CSV_PATH,
    SWEEP_JSONL_PATH,
    SWEEP_M_MAX,
    SWEEP_M_MIN,
    SWEEP_N_MAX,
    SWEEP_N_MIN,
    SWEEP_WORKERS,
)
from src.core.models import SweepConfig, SweepRecord
from src.harness.lemmas import verify_all_lemmas
from src.harness.sweep import SweepRunner, summarize
from src.utils.helpers import parse_int_list

logger = logging.getLogger(__name__)


def format_record(record: SweepRecord) -> str:
    fields = record.model_dump()
    return " ".join(f"{key}={'' if value is None else value}" for key, value in fields.items())


class SweepCommand(BaseCommand):
    command_name = "sweep"
    command_description = "Compares the closed form with cycle detection over an (n, m) grid."

    @staticmethod
    def get_required_service_keys() -> List[str]:
        return ['budget', 'sweep_runner']

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--n-min", type=int, default=SWEEP_N_MIN)
        parser.add_argument("--n-max", type=int, default=SWEEP_N_MAX)
        parser.add_argument("--m-min", type=int, default=SWEEP_M_MIN)
        parser.add_argument("--m-max", type=int, default=SWEEP_M_MAX)
        parser.add_argument("--out", default=SWEEP_CSV_PATH, help="CSV output (appended, resumable).")
        parser.add_argument("--jsonl", default=SWEEP_JSONL_PATH, help="JSON-lines mirror; empty string disables it.")
        parser.add_argument("--filter", choices=["all", "prime-power-gcf", "coprime"], default="all")
        parser.add_argument("--workers", type=int, default=SWEEP_WORKERS)
        parser.add_argument("--show-all", action="store_true", help="Print every row, not only failures.")
        add_budget_arguments(parser)

    async def run(self, args: argparse.Namespace) -> CommandOutput:
        cfg = SweepConfig.from_ranges(
            args.n_min, args.n_max, args.m_min, args.m_max, args.out,
            jsonl_path=args.jsonl or None,
            budget=self.budget_for(args),
            filter=args.filter,
            workers=args.workers,
        )
        runner = self.sweep_runner or SweepRunner()
        records = await runner.run_async(cfg) if cfg.workers > 1 else runner.run(cfg)

        lines = [format_record(r) for r in records if args.show_all or r.agrees != "yes"]
        summary = summarize(records)
        lines.append(" ".join(f"{key}={value}" for key, value in summary.items()))
        return CommandOutput(lines=lines, status=1 if summary["disagree"] else 0)


class VerifyCommand(BaseCommand):
    command_name = "verify"
    command_description = "Runs the binomial and coefficient lemma suite."

    @staticmethod
    def get_required_service_keys() -> List[str]:
        return []

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--primes", default=",".join(map(str, LEMMA_PRIMES)))
        parser.add_argument("--k-max", type=int, default=LEMMA_K_MAX)
        parser.add_argument("--n1", default=",".join(map(str, LEMMA_N1_VALUES)))
        parser.add_argument("--c-max", type=int, default=LEMMA_C_MAX)
        parser.add_argument("--show-all", action="store_true", help="Print skipped and passing checks too.")

    async def run(self, args: argparse.Namespace) -> CommandOutput:
        suite = verify_all_lemmas(parse_int_list(args.primes), args.k_max, parse_int_list(args.n1), args.c_max)
        shown = suite.reports if args.show_all else suite.failures
        lines = [r.summary_line() for r in shown] + [suite.summary_line()]
        return CommandOutput(lines=lines, status=0 if suite.passed else 1)
