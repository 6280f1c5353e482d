# src/harness/lemmas.py
import logging
from typing import Iterable, List, Optional

from src.core.config import LEMMA_C_MAX, LEMMA_K_MAX, LEMMA_N1_VALUES, LEMMA_PRIMES
from src.core.errors import DucciError
from src.core.models import CheckReport, SuiteReport
from src.services.coefficients import verify_binom_lemmas, verify_coeff_lemmas

logger = logging.getLogger(__name__)

BINOM_LEMMAS = ("alt-sign", "gap-pattern", "chu-vandermonde")
COEFF_LEMMAS = ("vanishing", "smaller-n", "combined")


def _skipped(name: str, params: dict, reason: str) -> CheckReport:
    return CheckReport(name=name, passed=True, skipped=True, params=params, detail=reason)


def _run(name: str, params: dict, check) -> CheckReport:
    """Runs one check; a violated hypothesis becomes a skipped report, not an error."""
    try:
        report = check()
    except DucciError as e:
        logger.debug(f"Skipping {name} {params}: {e}")
        return _skipped(name, params, str(e))
    if not report.passed:
        logger.warning(f"Lemma check failed: {report.summary_line()}")
    return report


def verify_all_lemmas(
    p_set: Iterable[int] = LEMMA_PRIMES,
    k_max: int = LEMMA_K_MAX,
    n1_set: Iterable[int] = LEMMA_N1_VALUES,
    c_max: int = LEMMA_C_MAX,
    binom_lemmas: Optional[Iterable[str]] = None,
    coeff_lemmas: Optional[Iterable[str]] = None,
) -> SuiteReport:
    """
    The binomial and coefficient lemmas over the grid p in p_set, 1 <= k <= k_max,
    n1 in n1_set, 1 <= c <= c_max. Cells whose hypotheses fail are skipped with a note.
    """
    p_values = sorted(set(p_set))
    n1_values = sorted(set(n1_set))
    binom_names = tuple(binom_lemmas or BINOM_LEMMAS)
    coeff_names = tuple(coeff_lemmas or COEFF_LEMMAS)
    logger.info(f"Lemma grid: p={p_values}, k<={k_max}, n1={n1_values}, c<={c_max}")

    reports: List[CheckReport] = []
    for p in p_values:
        for k in range(1, k_max + 1):
            for name in binom_names:
                reports.append(_run(name, {"p": p, "k": k},
                                    lambda: verify_binom_lemmas(p, k, name)))
            for n1 in n1_values:
                for c in range(1, c_max + 1):
                    params = {"p": p, "k": k, "n1": n1, "c": c}
                    for name in coeff_names:
                        reports.append(_run(name, params,
                                            lambda: verify_coeff_lemmas(p, k, n1, c, name)))

    suite = SuiteReport(name="lemmas", reports=reports)
    logger.info(suite.summary_line())
    return suite
