# src/services/coefficients.py
"""
The a_{r,s} coefficient calculus.

Row r of the coefficients is the cyclic expansion of (1+x)^r in Z_m[x]/(x^n - 1):
a_{r,s} is the coefficient of x^{s-1}, and D^r(0,...,0,1) = (a_{r,n}, ..., a_{r,1}).
"""
import logging
import math
from functools import lru_cache
from typing import Literal

import numpy as np
from sympy import isprime

from src.core.errors import InvalidDimensions, NotPrime, PreconditionViolated, ShapeMismatch
from src.core.models import CheckReport, CoeffRow, Residue

logger = logging.getLogger(__name__)

BinomLemma = Literal["alt-sign", "gap-pattern", "chu-vandermonde"]
CoeffLemma = Literal["vanishing", "smaller-n", "combined"]

# Below this many steps per length, stepping the row is cheaper than squaring.
DIRECT_STEP_FACTOR = 4


# --- Binomials ---

@lru_cache(maxsize=256)
def _pascal_prefix(r: int, width: int, m: int) -> tuple:
    """C(r, 0..width-1) mod m via the Pascal recurrence; never divides."""
    row = np.zeros(width, dtype=np.int64)
    row[0] = 1
    for i in range(1, r + 1):
        upper = min(i, width - 1)
        if upper >= 1:
            row[1:upper + 1] = (row[1:upper + 1] + row[0:upper]) % m
    return tuple(row.tolist())


def pascal_row(r: int, m: int) -> np.ndarray:
    """C(r, j) mod m for j = 0..r."""
    if r < 0:
        raise ValueError(f"row index must be >= 0, got {r}")
    return np.asarray(_pascal_prefix(r, r + 1, m), dtype=np.int64)


def binom_mod(r: int, j: int, m: int) -> Residue:
    """C(r, j) mod m for any modulus m >= 2; j outside [0, r] gives 0."""
    if m < 2:
        raise InvalidDimensions(f"modulus must be >= 2, got {m}")
    if r < 0:
        raise ValueError(f"row index must be >= 0, got {r}")
    if j < 0 or j > r:
        return 0
    j = min(j, r - j)
    return int(_pascal_prefix(r, j + 1, m)[j] % m)


def _require_prime(p: int) -> None:
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")


def lucas_binom_mod_p(r: int, j: int, p: int) -> Residue:
    """C(r, j) mod p as the product of digitwise binomials in base p."""
    _require_prime(p)
    if r < 0 or j < 0:
        raise ValueError(f"Lucas binomial needs r, j >= 0, got r={r}, j={j}")
    result = 1
    while r or j:
        r, r_digit = divmod(r, p)
        j, j_digit = divmod(j, p)
        if j_digit > r_digit:
            return 0
        result = result * math.comb(r_digit, j_digit) % p
    return result


# --- Cyclic Ring Arithmetic ---

def cyclic_multiply(a: np.ndarray, b: np.ndarray, m: int) -> np.ndarray:
    """c_s = sum_i a_i * b_{s-i} with indices mod n, reduced mod m."""
    result = np.zeros_like(b)
    for i in np.flatnonzero(a):
        # each product is < m^2 < 2^62
        result = (result + int(a[i]) * np.roll(b, int(i))) % m
    return result


def cyclic_power(base: np.ndarray, exponent: int, m: int) -> np.ndarray:
    """base^exponent in Z_m[x]/(x^n - 1) by square-and-multiply."""
    result = np.zeros_like(base)
    result[0] = 1 % m
    while exponent:
        if exponent & 1:
            result = cyclic_multiply(result, base, m)
        exponent >>= 1
        if exponent:
            base = cyclic_multiply(base, base, m)
    return result


# --- Coefficient Rows ---

def identity_row(n: int, m: int) -> CoeffRow:
    values = np.zeros(n, dtype=np.int64)
    values[0] = 1
    return CoeffRow.from_array(values, m, 0)


def coeff_next(row: CoeffRow) -> CoeffRow:
    """a_{r+1,s} = a_{r,s} + a_{r,s-1}, with s-1 wrapping cyclically."""
    values = row.to_array()
    return CoeffRow.from_array((values + np.roll(values, 1)) % row.m, row.m, row.r + 1)


@lru_cache(maxsize=1024)
def coeff_row(n: int, m: int, r: int) -> CoeffRow:
    """Row r exactly: stepped for small r, by binary exponentiation of (1+x) otherwise."""
    if n < 2 or m < 2:
        raise InvalidDimensions(f"coefficient rows need n >= 2 and m >= 2, got n={n}, m={m}")
    if r < 0:
        raise ValueError(f"row index must be >= 0, got {r}")
    if r <= DIRECT_STEP_FACTOR * n:
        row = identity_row(n, m)
        for _ in range(r):
            row = coeff_next(row)
        return row
    logger.debug(f"Computing coefficient row r={r} for n={n}, m={m} by squaring")
    base = np.zeros(n, dtype=np.int64)
    base[0] = 1
    base[1] = 1
    return CoeffRow.from_array(cyclic_power(base, r, m), m, r)


def coeff_compose(row_t: CoeffRow, row_r: CoeffRow) -> CoeffRow:
    """a_{r+t,s} = sum_{i=1..n} a_{t,i} * a_{r,s-i+1}."""
    if row_t.n != row_r.n or row_t.m != row_r.m:
        raise ShapeMismatch(
            f"cannot compose rows for (n={row_t.n}, m={row_t.m}) and (n={row_r.n}, m={row_r.m})"
        )
    values = cyclic_multiply(row_t.to_array(), row_r.to_array(), row_t.m)
    return CoeffRow.from_array(values, row_t.m, row_t.r + row_r.r)


def prime_power_row(n1: int, p: int, k: int, c: int) -> CoeffRow:
    """
    Predicted row c*p^k for length n = p^k * n1 mod p: zero everywhere except
    positions b*p^k + 1, which carry a*_{c,b+1} from the length-n1 row.
    """
    stride = p ** k
    small = coeff_row(n1, p, c)
    values = np.zeros(stride * n1, dtype=np.int64)
    values[::stride] = small.to_array()
    return CoeffRow.from_array(values, p, c * stride)


# --- Lemma Verifiers ---

def verify_binom_lemmas(p: int, k: int, which: BinomLemma) -> CheckReport:
    """Checks one binomial congruence exhaustively over its j range."""
    _require_prime(p)
    if k < 1:
        raise PreconditionViolated(f"exponent k must be >= 1, got {k}")
    params = {"p": p, "k": k}
    q = p ** k

    if which == "alt-sign":
        # C(p^k - 1, j) == (-1)^j mod p
        row = pascal_row(q - 1, p)
        for j, value in enumerate(row.tolist()):
            expected = 1 if j % 2 == 0 else (p - 1) % p
            if value != expected:
                return CheckReport(name=which, passed=False, checked=j + 1, params=params,
                                   counterexample={"j": j, "got": value, "expected": expected})
        return CheckReport(name=which, passed=True, checked=q, params=params)

    if which == "gap-pattern":
        if p == 2 or k == 1:
            raise PreconditionViolated(f"gap-pattern needs an odd prime and k > 1, got p={p}, k={k}")
        gap = p ** (k - 1)
        row = pascal_row(q - gap, p)
        nonzero = []
        for j, value in enumerate(row.tolist()):
            if j % gap == 0:
                expected = 1 if (j // gap) % 2 == 0 else p - 1
            else:
                expected = 0
            if value != expected:
                return CheckReport(name=which, passed=False, checked=j + 1, params=params,
                                   counterexample={"j": j, "got": value, "expected": expected})
            if value:
                nonzero.append(j)
        return CheckReport(name=which, passed=True, checked=len(row), params=params,
                           detail=f"nonzero at j in {nonzero}" if len(nonzero) <= 12 else "")

    if which == "chu-vandermonde":
        # Exact integer identity with a = p^(k-1), b = p^k - p^(k-1).
        a, b = p ** (k - 1), q - p ** (k - 1)
        for j in range(q + 1):
            lhs = sum(math.comb(a, i) * math.comb(b, j - i) for i in range(0, min(j, a) + 1))
            rhs = math.comb(q, j)
            if lhs != rhs:
                return CheckReport(name=which, passed=False, checked=j + 1, params=params,
                                   counterexample={"j": j, "lhs": lhs, "rhs": rhs})
        return CheckReport(name=which, passed=True, checked=q + 1, params=params)

    raise PreconditionViolated(f"unknown binomial lemma '{which}'")


def verify_coeff_lemmas(p: int, k: int, n1: int, c: int, which: CoeffLemma) -> CheckReport:
    """Checks the row c*p^k for length p^k*n1 mod p against the vanishing / smaller-n pattern."""
    _require_prime(p)
    if k < 1 or c < 1:
        raise PreconditionViolated(f"need k >= 1 and c >= 1, got k={k}, c={c}")
    if n1 <= 1 or n1 % p == 0:
        raise PreconditionViolated(f"need n1 > 1 with p not dividing n1, got n1={n1}, p={p}")

    stride = p ** k
    n = stride * n1
    row = coeff_row(n, p, c * stride)
    params = {"p": p, "k": k, "n1": n1, "c": c}

    if which == "vanishing":
        checked = 0
        for s in range(1, n + 1):
            if (s - 1) % stride == 0:
                continue
            checked += 1
            if row.coefficient(s):
                return CheckReport(name=which, passed=False, checked=checked, params=params,
                                   counterexample={"s": s, "a": row.coefficient(s)})
        return CheckReport(name=which, passed=True, checked=checked, params=params)

    if which == "smaller-n":
        small = coeff_row(n1, p, c)
        for b in range(n1):
            got, expected = row.coefficient(b * stride + 1), small.coefficient(b + 1)
            if got != expected:
                return CheckReport(name=which, passed=False, checked=b + 1, params=params,
                                   counterexample={"b": b, "got": got, "expected": expected})
        return CheckReport(name=which, passed=True, checked=n1, params=params)

    if which == "combined":
        predicted = prime_power_row(n1, p, k, c)
        for s, (got, expected) in enumerate(zip(row.coeffs, predicted.coeffs), start=1):
            if got != expected:
                return CheckReport(name=which, passed=False, checked=s, params=params,
                                   counterexample={"s": s, "got": got, "expected": expected})
        return CheckReport(name=which, passed=True, checked=n, params=params)

    raise PreconditionViolated(f"unknown coefficient lemma '{which}'")
