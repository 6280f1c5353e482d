# src/utils/helpers.py
import logging
from typing import List

import regex as re

from src.core.errors import TupleParseError
from src.core.models import ZmTuple

logger = logging.getLogger(__name__)

# "0,0,0,1", optionally wrapped in parentheses, whitespace tolerated around entries
TUPLE_TEXT_PATTERN = re.compile(r'^\s*\(?\s*(\d+(?:\s*,\s*\d+)+)\s*\)?\s*$')
INTEGER_LIST_PATTERN = re.compile(r'^\s*\d+(?:\s*,\s*\d+)*\s*$')


def parse_entries(text: str) -> List[int]:
    """Splits comma-separated decimal entries; needs at least two of them."""
    if not isinstance(text, str) or not text.strip():
        raise TupleParseError("tuple text is empty")
    match = TUPLE_TEXT_PATTERN.match(text)
    if not match:
        logger.debug(f"Rejected tuple text: '{text}'")
        raise TupleParseError(f"'{text}' is not a comma-separated list of at least two decimal entries")
    return [int(part) for part in re.split(r'\s*,\s*', match.group(1))]


def parse_tuple(text: str, m: int, n: int | None = None) -> ZmTuple:
    """
    Parses tuple text such as "0,0,0,1" into an element of Z_m^n.
    Entries >= m are rejected rather than reduced.
    """
    entries = parse_entries(text)
    if n is not None and len(entries) != n:
        raise TupleParseError(f"expected {n} entries, got {len(entries)} in '{text}'")
    too_big = [e for e in entries if e >= m]
    if too_big:
        raise TupleParseError(f"entries {too_big} are not residues mod {m}")
    return ZmTuple.of(entries, m)


def parse_int_list(text: str) -> List[int]:
    """Parses "2,3,5" style option values."""
    if not INTEGER_LIST_PATTERN.match(text or ""):
        raise TupleParseError(f"'{text}' is not a comma-separated list of integers")
    return [int(part) for part in re.split(r'\s*,\s*', text.strip())]
