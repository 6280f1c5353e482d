# src/harness/records.py
import json
import logging
import os
from typing import Dict, Iterable, List, Optional, Set, Tuple

import pandas as pd

from src.core.config import SWEEP_COLUMNS
from src.core.errors import OutputUnwritable
from src.core.models import SweepRecord

logger = logging.getLogger(__name__)

_INT_COLUMNS = ("n", "m", "formula", "steps_used")
_OPTIONAL_INT_COLUMNS = ("computed_L", "computed_P")


def record_to_row(record: SweepRecord) -> Dict[str, str]:
    """Flattens a record into CSV cells; absent values become empty strings."""
    data = record.model_dump()
    return {column: "" if data[column] is None else str(data[column]) for column in SWEEP_COLUMNS}


def row_to_record(row: Dict[str, str]) -> SweepRecord:
    data: Dict[str, object] = {column: row.get(column, "") for column in SWEEP_COLUMNS}
    for column in _INT_COLUMNS:
        data[column] = int(data[column])
    for column in _OPTIONAL_INT_COLUMNS:
        data[column] = int(data[column]) if data[column] != "" else None
    if data["conjecture_equality"] == "":
        data["conjecture_equality"] = None
    return SweepRecord(**data)


class SweepRecordStore:
    """Append-only CSV of sweep rows, with an optional JSON-lines mirror."""

    def __init__(self, csv_path: str, jsonl_path: Optional[str] = None):
        self.csv_path = csv_path
        self.jsonl_path = jsonl_path

    def load(self) -> List[SweepRecord]:
        """Reads every stored row; a missing file is an empty store."""
        if not os.path.exists(self.csv_path):
            logger.info(f"No existing sweep file at {self.csv_path}; starting fresh.")
            return []
        try:
            # Read as strings so empty cells stay empty instead of turning into NaN floats.
            df = pd.read_csv(self.csv_path, dtype=str, keep_default_na=False)
        except pd.errors.EmptyDataError:
            return []
        missing = [c for c in SWEEP_COLUMNS if c not in df.columns]
        if missing:
            raise OutputUnwritable(f"{self.csv_path} is not a sweep file (missing columns {missing})")
        records = [row_to_record(row) for row in df.to_dict(orient="records")]
        logger.info(f"Loaded {len(records)} sweep rows from {self.csv_path}")
        return records

    def completed_cells(self) -> Set[Tuple[int, int]]:
        return {(r.n, r.m) for r in self.load()}

    def mirrored_cells(self) -> Set[Tuple[int, int]]:
        """(n, m) pairs already present in the JSON-lines mirror."""
        if not self.jsonl_path or not os.path.exists(self.jsonl_path):
            return set()
        cells = set()
        with open(self.jsonl_path, encoding="utf-8") as f:
            for line in f:
                if line.strip():
                    data = json.loads(line)
                    cells.add((data["n"], data["m"]))
        return cells

    def append(self, records: Iterable[SweepRecord]) -> int:
        """
        Appends rows to the mirror first, then to the CSV.

        The CSV decides which cells count as done on resume, so a row reaches it only
        after its mirror line is written. Cells already mirrored are not written twice.

        Args:
            records (Iterable[SweepRecord]): Rows to append.

        Returns:
            int: Number of rows appended to the CSV.

        Raises:
            OutputUnwritable: If either file cannot be written.
        """
        records = list(records)
        rows = [record_to_row(r) for r in records]
        if not rows:
            return 0
        try:
            if self.jsonl_path:
                os.makedirs(os.path.dirname(os.path.abspath(self.jsonl_path)), exist_ok=True)
                mirrored = self.mirrored_cells()
                with open(self.jsonl_path, "a", encoding="utf-8") as f:
                    for record in records:
                        if (record.n, record.m) not in mirrored:
                            f.write(json.dumps(record.model_dump()) + "\n")
            directory = os.path.dirname(os.path.abspath(self.csv_path))
            os.makedirs(directory, exist_ok=True)
            write_header = not os.path.exists(self.csv_path) or os.path.getsize(self.csv_path) == 0
            pd.DataFrame(rows, columns=SWEEP_COLUMNS).to_csv(
                self.csv_path, mode="a", header=write_header, index=False
            )
        except OSError as e:
            logger.error(f"Failed to append sweep rows to {self.csv_path}: {e}", exc_info=True)
            raise OutputUnwritable(f"cannot write sweep output {self.csv_path}: {e}") from e
        logger.debug(f"Appended {len(rows)} rows to {self.csv_path}")
        return len(rows)
