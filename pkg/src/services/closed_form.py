# src/services/closed_form.py
"""
Closed-form values of L_m(n), the pre-period of the basic Ducci sequence.

Even n, with the common primes p_i of n and m (p^k || n, p^l || m):
  case 1  no common prime                 L = 1
  case 2  one common prime, l = 1         L = p^k
  case 3  one common prime, l >= 2        L <= p^(k-1) * (l(p-1) + 1)
  case 4  several common primes           L = max_i L_{p_i^l_i}(n)
Odd n with m = 2^l * m1, m1 odd, l >= 1: L = l.
"""
import logging
from typing import List, Optional

from sympy import factorint

from src.core.errors import InvalidDimensions, UnsupportedOddN
from src.core.models import (
    BoundKind,
    Budget,
    CheckReport,
    LBoundResult,
    LComponent,
    PrimePowerComponent,
    PrimePowerSplit,
)
from src.services.coefficients import coeff_row
from src.services.cycles import lcm_with_prime_power, lp_values

logger = logging.getLogger(__name__)


def split_prime_common(n: int, m: int) -> PrimePowerSplit:
    """Factors n and m and separates the primes they share from the coprime cofactors."""
    if n < 2 or m < 2:
        raise InvalidDimensions(f"need n >= 2 and m >= 2, got n={n}, m={m}")
    n_factors = factorint(n)
    m_factors = factorint(m)
    pairs = []
    n1, m1 = n, m
    for p in sorted(set(n_factors) & set(m_factors)):
        k, l = n_factors[p], m_factors[p]
        pairs.append(PrimePowerComponent(p=int(p), k=int(k), l=int(l)))
        n1 //= p ** k
        m1 //= p ** l
    return PrimePowerSplit(n=n, m=m, pairs=tuple(pairs), n1=n1, m1=m1)


def _component(c: PrimePowerComponent) -> LComponent:
    """L_{p^l}(n) for one common prime: exact p^k when l = 1, else the bound."""
    if c.l == 1:
        return LComponent(p=c.p, k=c.k, l=c.l, value=c.p ** c.k, kind=BoundKind.EXACT)
    bound = c.p ** (c.k - 1) * (c.l * (c.p - 1) + 1)
    return LComponent(p=c.p, k=c.k, l=c.l, value=bound, kind=BoundKind.UPPER_BOUND)


def _aggregate_kind(components: List[LComponent]) -> BoundKind:
    """
    Max of exact values and bounds. The max is exact when every component is,
    or when an exact component strictly exceeds every bound.
    """
    bounds = [c.value for c in components if c.kind is BoundKind.UPPER_BOUND]
    if not bounds:
        return BoundKind.EXACT
    exact = [c.value for c in components if c.kind is BoundKind.EXACT]
    if exact and max(exact) > max(bounds):
        return BoundKind.EXACT
    return BoundKind.UPPER_BOUND


def l_formula(n: int, m: int) -> LBoundResult:
    """
    Evaluates the closed form for L_m(n); the case is derived, never supplied.

    Args:
        n: Tuple length, >= 2.
        m: Modulus, >= 2.

    Returns:
        LBoundResult carrying the value, whether it is exact or an upper bound,
        the case id and the per-prime components.

    Raises:
        InvalidDimensions: If n or m is below 2.
        UnsupportedOddN: For odd n with odd m.
    """
    if n < 2 or m < 2:
        raise InvalidDimensions(f"need n >= 2 and m >= 2, got n={n}, m={m}")

    if n % 2:
        two_adic = (m & -m).bit_length() - 1
        if two_adic == 0:
            raise UnsupportedOddN(f"no closed form for odd n={n} with odd m={m}")
        return LBoundResult(n=n, m=m, value=two_adic, kind=BoundKind.EXACT, case_id="odd-n")

    split = split_prime_common(n, m)
    if not split.pairs:
        return LBoundResult(n=n, m=m, value=1, kind=BoundKind.EXACT, case_id="1")

    components = [_component(c) for c in split.pairs]
    if len(components) == 1:
        only = components[0]
        case_id = "2" if only.kind is BoundKind.EXACT else "3"
        return LBoundResult(n=n, m=m, value=only.value, kind=only.kind, case_id=case_id,
                            components=tuple(components))

    value = max(c.value for c in components)
    return LBoundResult(n=n, m=m, value=value, kind=_aggregate_kind(components), case_id="4",
                        components=tuple(components))


def l_exact_via_components(n: int, m: int, budget: Optional[Budget] = None) -> int:
    """max_i L_{p_i^l_i}(n), each component computed by cycle detection."""
    if n % 2:
        raise InvalidDimensions(f"component decomposition is stated for even n, got n={n}")
    split = split_prime_common(n, m)
    if not split.pairs:
        raise InvalidDimensions(f"n={n} and m={m} share no prime")
    values = []
    for c in split.pairs:
        modulus = c.p ** c.l
        value = lp_values(n, modulus, budget).len
        logger.debug(f"L_{modulus}({n}) = {value}")
        values.append(value)
    return max(values)


def check_period_shift(n: int, m: int, budget: Optional[Budget] = None) -> CheckReport:
    """
    Re-derives (L, P) of the basic tuple from coefficient rows:
    row(L + d) = row(L) and, for L >= 1, row(L - 1 + d) != row(L - 1), where d is
    P raised to the smallest multiple divisible by p^k of the largest common prime power.
    """
    info = lp_values(n, m, budget)
    split = split_prime_common(n, m)
    shift = info.per
    if split.pairs:
        widest = max(split.pairs, key=lambda c: c.p ** c.k)
        shift = lcm_with_prime_power(info.per, widest.p, widest.k)
    params = {"n": n, "m": m, "L": info.len, "P": info.per, "d": shift}

    if coeff_row(n, m, info.len + shift).coeffs != coeff_row(n, m, info.len).coeffs:
        return CheckReport(name="period-shift", passed=False, checked=1, params=params,
                           counterexample={"r": info.len, "reason": "row(L+d) != row(L)"})
    if info.len >= 1 and coeff_row(n, m, info.len - 1 + shift).coeffs == coeff_row(n, m, info.len - 1).coeffs:
        return CheckReport(name="period-shift", passed=False, checked=2, params=params,
                           counterexample={"r": info.len - 1, "reason": "row(L-1+d) == row(L-1)"})
    return CheckReport(name="period-shift", passed=True, checked=2, params=params)
