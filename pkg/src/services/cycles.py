# src/services/cycles.py
import logging
import math
import random
from typing import Iterable, List, Literal, Optional, Tuple

import numpy as np
from sympy import isprime

from src.core.config import CYCLE_STRATEGY
from src.core.errors import BudgetExceeded, InvalidDimensions, NotPrime, PreconditionViolated
from src.core.models import Budget, CheckReport, CycleInfo, ZmTuple
from src.core.zmod import add_tuples, all_tuples, basic_tuple, ducci_iterate, step_array, zero_tuple

logger = logging.getLogger(__name__)

Strategy = Literal["index", "brent", "auto"]


class _StateIndexFull(Exception):
    """Internal signal: the visited-state index reached max_states."""

    def __init__(self, steps_used: int):
        self.steps_used = steps_used


def _key(values: np.ndarray) -> bytes:
    return values.astype("<i8", copy=False).tobytes()


def _detect_with_index(start: np.ndarray, m: int, budget: Budget) -> CycleInfo:
    """Records state -> first step; the first repeat gives len and per exactly."""
    seen = {}
    values = start
    step = 0
    while True:
        key = _key(values)
        first = seen.get(key)
        if first is not None:
            return CycleInfo(len=first, per=step - first, steps_used=step, strategy="index")
        if step >= budget.max_steps:
            raise BudgetExceeded(f"orbit did not close within {budget.max_steps} steps",
                                 steps_used=step, states_stored=len(seen))
        if len(seen) >= budget.max_states:
            raise _StateIndexFull(step)
        seen[key] = step
        values = step_array(values, m)
        step += 1


def _detect_with_brent(start: np.ndarray, m: int, max_steps: int, spent: int = 0) -> CycleInfo:
    """Brent's constant-memory detection, then exact pre-period by lockstep walk."""
    steps = spent

    def advance(values: np.ndarray) -> np.ndarray:
        nonlocal steps
        if steps >= max_steps:
            raise BudgetExceeded(f"orbit did not close within {max_steps} steps", steps_used=steps)
        steps += 1
        return step_array(values, m)

    # Phase 1: period
    power = period = 1
    tortoise = start
    hare = advance(start)
    while not np.array_equal(tortoise, hare):
        if power == period:
            tortoise = hare
            power *= 2
            period = 0
        hare = advance(hare)
        period += 1

    # Phase 2: pre-period, with the hare `period` steps ahead
    tortoise = start
    hare = start
    for _ in range(period):
        hare = advance(hare)
    pre_period = 0
    while not np.array_equal(tortoise, hare):
        tortoise = advance(tortoise)
        hare = advance(hare)
        pre_period += 1
    return CycleInfo(len=pre_period, per=period, steps_used=steps, strategy="brent")


def cycle_info(u: ZmTuple, budget: Optional[Budget] = None, strategy: Optional[Strategy] = None) -> CycleInfo:
    """
    Exact Len(u) and Per(u).

    'index' keeps every visited state; 'brent' uses constant memory; 'auto' starts
    with the index and restarts with Brent when the index would exceed max_states.

    Args:
        u: Starting tuple.
        budget: Step and stored-state caps; defaults from config.
        strategy: 'index', 'brent' or 'auto'; defaults to DUCCI_CYCLE_STRATEGY.

    Returns:
        CycleInfo with len, per and the steps spent.

    Raises:
        BudgetExceeded: Instead of reporting a partial result.
    """
    budget = budget or Budget()
    strategy = strategy or CYCLE_STRATEGY
    start = u.to_array()
    logger.debug(f"Cycle detection ({strategy}) for {u} in Z_{u.m}^{u.n}")

    if strategy == "brent":
        return _detect_with_brent(start, u.m, budget.max_steps)
    try:
        return _detect_with_index(start, u.m, budget)
    except _StateIndexFull as full:
        if strategy == "index":
            raise BudgetExceeded(f"visited-state index reached {budget.max_states} states",
                                 steps_used=full.steps_used, states_stored=budget.max_states)
        logger.info(f"State index full after {full.steps_used} steps for Z_{u.m}^{u.n}; switching to Brent.")
        return _detect_with_brent(start, u.m, budget.max_steps, spent=full.steps_used)


def orbit(u: ZmTuple, budget: Optional[Budget] = None) -> List[ZmTuple]:
    """States at steps 0..len+per, ending at the first repeated state."""
    info = cycle_info(u, budget)
    states = [u]
    values = u.to_array()
    for _ in range(info.len + info.per):
        values = step_array(values, u.m)
        states.append(ZmTuple.from_array(values, u.m))
    return states


def lp_values(n: int, m: int, budget: Optional[Budget] = None, strategy: Optional[Strategy] = None) -> CycleInfo:
    """(L_m(n), P_m(n)): cycle_info of the basic tuple (0, ..., 0, 1)."""
    info = cycle_info(basic_tuple(n, m), budget, strategy)
    logger.info(f"L_{m}({n})={info.len} P_{m}({n})={info.per} after {info.steps_used} steps")
    return info


def is_in_cycle(u: ZmTuple, budget: Optional[Budget] = None) -> bool:
    """Membership in K(Z_m^n), the union of all Ducci cycles."""
    return cycle_info(u, budget).len == 0


def cycle_members(n: int, m: int, budget: Optional[Budget] = None) -> frozenset:
    """K(Z_m^n) by exhaustive enumeration; only sensible for small m^n."""
    return frozenset(u for u in all_tuples(n, m) if is_in_cycle(u, budget))


# --- Property Checks ---

def check_len_per_bounds(n: int, m: int, sample: Iterable[ZmTuple], budget: Optional[Budget] = None) -> CheckReport:
    """Len(u) <= L_m(n) and Per(u) | P_m(n) for each sampled u."""
    basic = lp_values(n, m, budget)
    params = {"n": n, "m": m, "L": basic.len, "P": basic.per}
    checked = 0
    for u in sample:
        if u.n != n or u.m != m:
            raise InvalidDimensions(f"sample tuple {u} is not in Z_{m}^{n}")
        info = cycle_info(u, budget)
        checked += 1
        if info.len > basic.len or basic.per % info.per:
            return CheckReport(name="len-per-bounds", passed=False, checked=checked, params=params,
                               counterexample={"u": str(u), "len": info.len, "per": info.per})
    return CheckReport(name="len-per-bounds", passed=True, checked=checked, params=params)


def check_period_facts(p: int, n1: int, k: int, m: int, budget: Optional[Budget] = None) -> CheckReport:
    """P_p(p^k n1) = p^k P_p(n1) and P_p(n) | P_m(n) for n = p^k n1."""
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if n1 < 2 or n1 % p == 0:
        raise PreconditionViolated(f"need n1 >= 2 with p not dividing n1, got n1={n1}, p={p}")
    if k < 1 or m % p:
        raise PreconditionViolated(f"need k >= 1 and p | m, got k={k}, m={m}")

    n = p ** k * n1
    per_small = lp_values(n1, p, budget).per
    per_prime = lp_values(n, p, budget).per
    per_full = per_prime if m == p else lp_values(n, m, budget).per
    params = {"p": p, "n1": n1, "k": k, "m": m}
    witness = {"P_p(n1)": per_small, "P_p(n)": per_prime, "P_m(n)": per_full}

    if per_prime != p ** k * per_small:
        return CheckReport(name="period-scaling", passed=False, checked=1, params=params, counterexample=witness)
    if per_full % per_prime:
        return CheckReport(name="period-divisibility", passed=False, checked=2, params=params, counterexample=witness)
    return CheckReport(name="period-facts", passed=True, checked=2, params=params,
                       detail=f"P_p(n1)={per_small} P_p(n)={per_prime} P_m(n)={per_full}")


def check_k_subgroup(
    n: int,
    m: int,
    trials: Optional[int] = None,
    budget: Optional[Budget] = None,
    seed: int = 0,
) -> CheckReport:
    """
    K(Z_m^n) is closed under addition and contains zero.

    With trials=None every pair of cycle tuples is checked; otherwise `trials`
    random pairs are drawn by pushing random tuples L_m(n) steps into their cycles.
    """
    params = {"n": n, "m": m}
    zero = zero_tuple(n, m)
    if not is_in_cycle(zero, budget):
        return CheckReport(name="k-subgroup", passed=False, checked=1, params=params,
                           counterexample={"u": str(zero)})

    if trials is None:
        members = cycle_members(n, m, budget)
        ordered = sorted(members, key=ZmTuple.sort_key)
        checked = 0
        for i, u in enumerate(ordered):
            for v in ordered[i:]:
                checked += 1
                if add_tuples(u, v) not in members:
                    return CheckReport(name="k-subgroup", passed=False, checked=checked, params=params,
                                       counterexample={"u": str(u), "v": str(v)})
        return CheckReport(name="k-subgroup", passed=True, checked=checked, params=params,
                           detail=f"|K|={len(members)}")

    depth = lp_values(n, m, budget).len
    rng = random.Random(seed)

    def random_cycle_tuple() -> ZmTuple:
        start = ZmTuple.of([rng.randrange(m) for _ in range(n)], m)
        return ducci_iterate(start, depth)

    for trial in range(1, trials + 1):
        u, v = random_cycle_tuple(), random_cycle_tuple()
        total = add_tuples(u, v)
        if not is_in_cycle(total, budget):
            return CheckReport(name="k-subgroup", passed=False, checked=trial, params=params,
                               counterexample={"u": str(u), "v": str(v), "sum": str(total)})
    return CheckReport(name="k-subgroup", passed=True, checked=trials, params=params)


def proper_divisors(value: int) -> List[int]:
    return [d for d in range(1, value) if value % d == 0]


def check_minimality(u: ZmTuple, info: CycleInfo) -> Tuple[bool, str]:
    """Re-derives the defining equalities of (len, per) by direct iteration."""
    anchor = ducci_iterate(u, info.len)
    if ducci_iterate(anchor, info.per) != anchor:
        return False, "D^(len+per)(u) != D^len(u)"
    if info.len >= 1:
        before = ducci_iterate(u, info.len - 1)
        if ducci_iterate(before, info.per) == before:
            return False, "len is not minimal"
    for d in proper_divisors(info.per):
        if ducci_iterate(anchor, d) == anchor:
            return False, f"per is not minimal (divisor {d} closes the cycle)"
    return True, ""


def lcm_with_prime_power(period: int, p: int, k: int) -> int:
    """Smallest multiple of `period` divisible by p^k."""
    return math.lcm(period, p ** k)
