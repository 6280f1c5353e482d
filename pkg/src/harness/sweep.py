# src/harness/sweep.py
import asyncio
import logging
import math
from collections import Counter
from typing import Callable, Dict, List, Optional, Tuple

from sympy import primefactors

from src.core.errors import BudgetExceeded
from src.core.models import BoundKind, Budget, SweepConfig, SweepRecord
from src.harness.records import SweepRecordStore
from src.services.closed_form import l_formula
from src.services.cycles import lp_values

logger = logging.getLogger(__name__)


def gcf_category(n: int, m: int) -> str:
    """'coprime', 'prime-power-gcf' (one shared prime) or 'several-primes'."""
    g = math.gcd(n, m)
    if g == 1:
        return "coprime"
    return "prime-power-gcf" if len(primefactors(g)) == 1 else "several-primes"


def cell_selected(n: int, m: int, cell_filter: str) -> bool:
    return cell_filter == "all" or gcf_category(n, m) == cell_filter


def evaluate_cell(n: int, m: int, budget: Optional[Budget] = None) -> SweepRecord:
    """Closed form versus cycle detection for one (n, m)."""
    formula = l_formula(n, m)
    base = {"n": n, "m": m, "case": formula.case_id, "formula": formula.value, "kind": formula.kind.value}
    try:
        info = lp_values(n, m, budget)
    except BudgetExceeded as e:
        logger.warning(f"Budget exceeded for (n={n}, m={m}) after {e.steps_used} steps")
        return SweepRecord(**base, agrees="budget-exceeded", steps_used=e.steps_used)

    if formula.kind is BoundKind.EXACT:
        agrees = "yes" if info.len == formula.value else "no"
        conjecture = None
    else:
        agrees = "yes" if info.len <= formula.value else "no"
        conjecture = "yes" if info.len == formula.value else "no"
    if agrees == "no":
        logger.error(f"Closed form disagrees at (n={n}, m={m}): formula {formula.value} ({formula.kind.value}), computed {info.len}")
    return SweepRecord(**base, computed_L=info.len, computed_P=info.per, agrees=agrees,
                       conjecture_equality=conjecture, steps_used=info.steps_used)


def summarize(records: List[SweepRecord]) -> Dict[str, int]:
    counts = Counter(r.agrees for r in records)
    conjecture = Counter(r.conjecture_equality for r in records if r.conjecture_equality)
    return {
        "cells": len(records),
        "agree": counts.get("yes", 0),
        "disagree": counts.get("no", 0),
        "budget_exceeded": counts.get("budget-exceeded", 0),
        "conjecture_equal": conjecture.get("yes", 0),
        "conjecture_strict": conjecture.get("no", 0),
    }


class SweepRunner:
    """
    Runs a closed-form-versus-brute-force sweep into a record store.

    Cells already present in the output are skipped, so re-running a sweep
    only fills the gaps. Rows are appended in (n, m) order by one writer.
    """

    def __init__(self, store_factory: Callable[[str, Optional[str]], SweepRecordStore] = SweepRecordStore,
                 evaluator: Callable[[int, int, Optional[Budget]], SweepRecord] = evaluate_cell):
        self.store_factory = store_factory
        self.evaluator = evaluator

    def _plan(self, cfg: SweepConfig) -> Tuple[SweepRecordStore, Dict[Tuple[int, int], SweepRecord], List[Tuple[int, int]]]:
        store = self.store_factory(cfg.output_path, cfg.jsonl_path)
        existing = {(r.n, r.m): r for r in store.load()}
        selected = [cell for cell in cfg.cells() if cell_selected(*cell, cfg.filter)]
        pending = [cell for cell in selected if cell not in existing]
        logger.info(f"Sweep over {len(selected)} cells: {len(selected) - len(pending)} already stored, {len(pending)} to compute.")
        return store, existing, pending

    def _collect(self, cfg: SweepConfig, existing: Dict[Tuple[int, int], SweepRecord],
                 fresh: Dict[Tuple[int, int], SweepRecord]) -> List[SweepRecord]:
        merged = {**existing, **fresh}
        return [merged[cell] for cell in cfg.cells() if cell_selected(*cell, cfg.filter)]

    def run(self, cfg: SweepConfig) -> List[SweepRecord]:
        store, existing, pending = self._plan(cfg)
        fresh = {}
        for n, m in pending:
            record = self.evaluator(n, m, cfg.budget)
            store.append([record])
            fresh[(n, m)] = record
        return self._collect(cfg, existing, fresh)

    async def run_async(self, cfg: SweepConfig) -> List[SweepRecord]:
        """Evaluates cells on up to cfg.workers threads; the writer still appends in order."""
        store, existing, pending = self._plan(cfg)
        gate = asyncio.Semaphore(cfg.workers)

        async def evaluate(n: int, m: int) -> SweepRecord:
            async with gate:
                return await asyncio.to_thread(self.evaluator, n, m, cfg.budget)

        tasks = {cell: asyncio.create_task(evaluate(*cell)) for cell in pending}
        fresh = {}
        try:
            for cell, task in tasks.items():
                record = await task
                store.append([record])
                fresh[cell] = record
        finally:
            for task in tasks.values():
                task.cancel()
        return self._collect(cfg, existing, fresh)


def sweep_theorem1(cfg: SweepConfig) -> List[SweepRecord]:
    """
    Compares the closed form with cycle detection over every selected (n, m).

    Cells already in the output are skipped; a cell that runs out of budget is
    recorded as budget-exceeded instead of stopping the sweep.

    Args:
        cfg: Ranges, filter, budget, output paths and worker count.

    Returns:
        One record per selected cell, in (n, m) order.

    Raises:
        OutputUnwritable: If the CSV or its mirror cannot be written.
    """
    if cfg.workers > 1:
        return asyncio.run(SweepRunner().run_async(cfg))
    return SweepRunner().run(cfg)
