# src/core/zmod.py
"""Residue arithmetic on Z_m^n and the Ducci map D(x_1..x_n) = (x_1+x_2, ..., x_n+x_1) mod m."""
import itertools
import logging
from typing import Iterator

import numpy as np

from src.core.errors import InvalidDimensions, OddLength, ShapeMismatch
from src.core.models import Residue, ZmTuple

logger = logging.getLogger(__name__)


# --- Array Kernels ---
# Entries are < 2^31, so x_i + x_{i+1} fits in int64 before reduction.

def step_array(values: np.ndarray, m: int) -> np.ndarray:
    """One Ducci step on a raw int64 array; returns a new array."""
    return (values + np.roll(values, -1)) % m


def alternating_signs(n: int) -> np.ndarray:
    """(+1, -1, +1, ..., -1) of length n."""
    signs = np.ones(n, dtype=np.int64)
    signs[1::2] = -1
    return signs


# --- Operations on ZmTuple ---

def ducci_step(u: ZmTuple) -> ZmTuple:
    """
    One Ducci step: (x_1 + x_2, x_2 + x_3, ..., x_n + x_1) mod m.

    Args:
        u: A tuple in Z_m^n.

    Returns:
        D(u), in the same Z_m^n.
    """
    return ZmTuple.from_array(step_array(u.to_array(), u.m), u.m)


def ducci_iterate(u: ZmTuple, r: int) -> ZmTuple:
    """D applied r times; r = 0 returns u itself."""
    if r < 0:
        raise ValueError(f"step count must be >= 0, got {r}")
    if r == 0:
        return u
    values = u.to_array()
    for _ in range(r):
        values = step_array(values, u.m)
    return ZmTuple.from_array(values, u.m)


def alternating_sum(u: ZmTuple) -> Residue:
    """x_1 - x_2 + x_3 - ... + x_{n-1} - x_n mod m (n even)."""
    if u.n % 2:
        raise OddLength(f"alternating sum needs even n, got n={u.n}")
    return int(np.sum(u.to_array() * alternating_signs(u.n)) % u.m)


def basic_tuple(n: int, m: int) -> ZmTuple:
    """(0, 0, ..., 0, 1) in Z_m^n."""
    if n < 2 or m < 2:
        raise InvalidDimensions(f"basic tuple needs n >= 2 and m >= 2, got n={n}, m={m}")
    return ZmTuple.of([0] * (n - 1) + [1], m)


def zero_tuple(n: int, m: int) -> ZmTuple:
    """(0, ..., 0) in Z_m^n; a fixed point of D."""
    if n < 2 or m < 2:
        raise InvalidDimensions(f"zero tuple needs n >= 2 and m >= 2, got n={n}, m={m}")
    return ZmTuple.of([0] * n, m)


def add_tuples(u: ZmTuple, v: ZmTuple) -> ZmTuple:
    """
    Entrywise sum mod m.

    Args:
        u: A tuple in Z_m^n.
        v: A tuple in the same Z_m^n.

    Returns:
        u + v in Z_m^n.

    Raises:
        ShapeMismatch: If n or m differ.
    """
    if u.n != v.n or u.m != v.m:
        raise ShapeMismatch(f"cannot add a tuple in Z_{u.m}^{u.n} to one in Z_{v.m}^{v.n}")
    return ZmTuple.from_array((u.to_array() + v.to_array()) % u.m, u.m)


def scale_tuple(u: ZmTuple, factor: int) -> ZmTuple:
    return ZmTuple.from_array((u.to_array() * (factor % u.m)) % u.m, u.m)


def all_tuples(n: int, m: int) -> Iterator[ZmTuple]:
    """Every element of Z_m^n in lexicographic order."""
    if n < 2 or m < 2:
        raise InvalidDimensions(f"Z_m^n needs n >= 2 and m >= 2, got n={n}, m={m}")
    logger.debug(f"Enumerating {m ** n} tuples of Z_{m}^{n}")
    for entries in itertools.product(range(m), repeat=n):
        yield ZmTuple.model_construct(m=m, entries=entries)
