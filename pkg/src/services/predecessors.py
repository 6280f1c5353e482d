# src/services/predecessors.py
"""
Predecessors v with D(v) = u.

For even n a tuple has a predecessor exactly when its alternating sum vanishes,
and then it has exactly m of them: y + z*(1, -1, 1, ..., -1) for z in Z_m.
"""
import logging
from fractions import Fraction

import numpy as np

from src.core.errors import NoPredecessor, OddLength
from src.core.models import PredecessorFamily, ZmTuple
from src.core.zmod import all_tuples, alternating_signs, alternating_sum

logger = logging.getLogger(__name__)


def _require_even(u: ZmTuple) -> None:
    if u.n % 2:
        raise OddLength(f"predecessor theory needs even n, got n={u.n}; use solve_predecessors_general")


def has_predecessor(u: ZmTuple) -> bool:
    _require_even(u)
    return alternating_sum(u) == 0


def _forward_substitute(x: np.ndarray, y1: int, m: int) -> np.ndarray:
    """y_1 given; y_{j+1} = x_j - y_j for j < n."""
    y = np.empty_like(x)
    y[0] = y1 % m
    for j in range(x.shape[0] - 1):
        y[j + 1] = (x[j] - y[j]) % m
    return y


def construct_predecessor(u: ZmTuple) -> ZmTuple:
    """
    The predecessor anchored at y_1 = 0:
    y_j = x_{j-1} - x_{j-2} + ... +/- x_1, which makes the first n-1 equations hold;
    the wrap equation y_n + y_1 = x_n holds because the alternating sum is 0.
    """
    _require_even(u)
    if alternating_sum(u) != 0:
        raise NoPredecessor(f"{u} has nonzero alternating sum mod {u.m}")
    return ZmTuple.from_array(_forward_substitute(u.to_array(), 0, u.m), u.m)


def all_predecessors(u: ZmTuple) -> PredecessorFamily:
    """Empty, or the m members y + z*(1,-1,...,-1) ordered by z = 0..m-1."""
    _require_even(u)
    if alternating_sum(u) != 0:
        return PredecessorFamily(target=u, members=(), method="theorem")
    base = construct_predecessor(u).to_array()
    shift = alternating_signs(u.n)
    members = tuple(
        ZmTuple.from_array((base + z * shift) % u.m, u.m) for z in range(u.m)
    )
    return PredecessorFamily(target=u, members=members, method="theorem")


def solve_predecessors_general(u: ZmTuple) -> PredecessorFamily:
    """Scans y_1 over Z_m, forward-substitutes, keeps solutions of y_n + y_1 = x_n. Any n."""
    x = u.to_array()
    members = []
    for y1 in range(u.m):
        y = _forward_substitute(x, y1, u.m)
        if (y[-1] + y[0]) % u.m == x[-1]:
            members.append(ZmTuple.from_array(y, u.m))
    return PredecessorFamily(target=u, members=tuple(members), method="scan")


def count_predecessors(u: ZmTuple) -> int:
    if u.n % 2:
        return solve_predecessors_general(u).size
    return all_predecessors(u).size


def predecessor_fraction(n: int, m: int) -> Fraction:
    """Share of Z_m^n (n even) that has a predecessor; 1/m by surjectivity of the alternating sum."""
    total = with_predecessor = 0
    for u in all_tuples(n, m):
        total += 1
        with_predecessor += has_predecessor(u)
    logger.debug(f"{with_predecessor}/{total} tuples of Z_{m}^{n} have a predecessor")
    return Fraction(with_predecessor, total)
