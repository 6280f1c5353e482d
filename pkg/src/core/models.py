# src/core/models.py
from enum import Enum
from typing import Any, Dict, Iterable, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from src.core.config import DEFAULT_MAX_STATES, DEFAULT_MAX_STEPS, MAX_LENGTH, MAX_MODULUS
from src.core.errors import InvalidDimensions, TupleParseError

Residue = int


class ZmTuple(BaseModel):
    """An element of Z_m^n, stored canonically with every entry in [0, m)."""

    m: int = Field(..., ge=2, le=MAX_MODULUS, description="Modulus.")
    entries: Tuple[int, ...] = Field(..., min_length=2, max_length=MAX_LENGTH, description="Residues x_1..x_n.")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_canonical(self) -> "ZmTuple":
        for position, entry in enumerate(self.entries, start=1):
            if not 0 <= entry < self.m:
                raise ValueError(f"entry x_{position}={entry} is outside [0, {self.m})")
        return self

    @classmethod
    def of(cls, entries: Iterable[int], m: int) -> "ZmTuple":
        """Validating constructor that maps pydantic errors onto domain errors."""
        values = [int(e) for e in entries]
        if m < 2 or m > MAX_MODULUS:
            raise InvalidDimensions(f"modulus m={m} must satisfy 2 <= m <= {MAX_MODULUS}")
        if len(values) < 2 or len(values) > MAX_LENGTH:
            raise InvalidDimensions(f"length n={len(values)} must satisfy 2 <= n <= {MAX_LENGTH}")
        try:
            return cls(m=m, entries=tuple(values))
        except ValidationError as e:
            raise TupleParseError(f"invalid tuple for m={m}: {e.errors()[0]['msg']}") from e

    @classmethod
    def from_array(cls, values: np.ndarray, m: int) -> "ZmTuple":
        # Trusted path: values already reduced mod m by the caller.
        return cls.model_construct(m=m, entries=tuple(values.tolist()))

    @property
    def n(self) -> int:
        return len(self.entries)

    def to_array(self) -> np.ndarray:
        return np.asarray(self.entries, dtype=np.int64)

    def sort_key(self) -> Tuple[int, ...]:
        return self.entries

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.entries)


class CoeffRow(BaseModel):
    """The row (a_{r,1}, ..., a_{r,n}) mod m: coefficients of (1+x)^r modulo x^n - 1."""

    n: int = Field(..., ge=2)
    m: int = Field(..., ge=2)
    r: int = Field(..., ge=0, description="Row index (number of Ducci steps).")
    coeffs: Tuple[int, ...]

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_row(self) -> "CoeffRow":
        if len(self.coeffs) != self.n:
            raise ValueError(f"row has {len(self.coeffs)} coefficients, expected n={self.n}")
        if any(not 0 <= a < self.m for a in self.coeffs):
            raise ValueError("coefficients must be canonical residues")
        return self

    @classmethod
    def from_array(cls, values: np.ndarray, m: int, r: int) -> "CoeffRow":
        return cls.model_construct(n=int(values.shape[0]), m=m, r=r, coeffs=tuple(values.tolist()))

    def to_array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=np.int64)

    def coefficient(self, s: int) -> int:
        """a_{r,s} with s reduced cyclically into 1..n (n stands in for 0)."""
        return self.coeffs[(s - 1) % self.n]

    def reversed_tuple(self) -> ZmTuple:
        """D^r(0,...,0,1) = (a_{r,n}, ..., a_{r,1})."""
        return ZmTuple.model_construct(m=self.m, entries=tuple(reversed(self.coeffs)))

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.coeffs)


class Budget(BaseModel):
    """Caps for one cycle detection run."""

    max_steps: int = Field(DEFAULT_MAX_STEPS, gt=0, description="Iteration cap.")
    max_states: int = Field(DEFAULT_MAX_STATES, gt=0, description="Cap on stored visited states.")

    model_config = ConfigDict(frozen=True)


class CycleInfo(BaseModel):
    """Len/Per of one orbit; on the basic tuple these are L_m(n) and P_m(n)."""

    len: int = Field(..., ge=0, description="Pre-period length (smallest alpha).")
    per: int = Field(..., ge=1, description="Period (smallest beta).")
    steps_used: int = Field(..., ge=0, description="Iterations of D performed.")
    strategy: str = Field("index", description="Detector that produced the result.")

    model_config = ConfigDict(frozen=True)


class CheckReport(BaseModel):
    """Outcome of one verification: pass/fail plus the first counterexample."""

    name: str
    passed: bool
    checked: int = 0
    counterexample: Optional[Dict[str, Any]] = None
    params: Dict[str, Any] = Field(default_factory=dict)
    skipped: bool = False
    detail: str = ""

    @property
    def status(self) -> str:
        if self.skipped:
            return "skipped"
        return "pass" if self.passed else "fail"

    def summary_line(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        line = f"check={self.name} {params} status={self.status} checked={self.checked}".replace("  ", " ")
        if self.counterexample:
            witness = ",".join(f"{k}:{v}" for k, v in self.counterexample.items())
            line += f" counterexample={witness}"
        if self.detail:
            line += f" note={self.detail.replace(' ', '_')}"
        return line


class PredecessorFamily(BaseModel):
    """All v with D(v) = target. Theorem-based families are empty or have exactly m members."""

    target: ZmTuple
    members: Tuple[ZmTuple, ...] = ()
    method: Literal["theorem", "scan"] = "theorem"

    model_config = ConfigDict(frozen=True)

    @property
    def size(self) -> int:
        return len(self.members)

    def as_set(self) -> frozenset:
        return frozenset(self.members)


class PrimePowerComponent(BaseModel):
    """One common prime p with p^k || n and p^l || m."""

    p: int = Field(..., ge=2)
    k: int = Field(..., ge=1)
    l: int = Field(..., ge=1)

    model_config = ConfigDict(frozen=True)


class PrimePowerSplit(BaseModel):
    """n = n1 * prod p_i^k_i and m = m1 * prod p_i^l_i over the common primes p_i."""

    n: int
    m: int
    pairs: Tuple[PrimePowerComponent, ...] = ()
    n1: int
    m1: int

    model_config = ConfigDict(frozen=True)

    @property
    def common_primes(self) -> List[int]:
        return [c.p for c in self.pairs]

    def rebuild(self) -> Tuple[int, int]:
        n, m = self.n1, self.m1
        for c in self.pairs:
            n *= c.p ** c.k
            m *= c.p ** c.l
        return n, m


class BoundKind(str, Enum):
    EXACT = "exact"
    UPPER_BOUND = "bound"


class LComponent(BaseModel):
    """Per-prime contribution L_{p^l}(n) used by the several-primes case."""

    p: int
    k: int
    l: int
    value: int
    kind: BoundKind

    model_config = ConfigDict(frozen=True)


class LBoundResult(BaseModel):
    """Closed-form value of L_m(n) with its case and whether it is exact or a bound."""

    n: int
    m: int
    value: int = Field(..., ge=0)
    kind: BoundKind
    case_id: Literal["1", "2", "3", "4", "odd-n"]
    components: Tuple[LComponent, ...] = ()

    model_config = ConfigDict(frozen=True)

    def summary_line(self) -> str:
        return f"L={self.value} kind={self.kind.value} case={self.case_id}"


class TransitionGraph(BaseModel):
    """Basic Ducci cycle plus `depth` layers of predecessors; edges are (u, D(u))."""

    n: int
    m: int
    depth: int = Field(0, ge=0)
    cycle_nodes: Tuple[ZmTuple, ...] = Field((), description="Basic cycle in iteration order.")
    layers: Tuple[Tuple[ZmTuple, ...], ...] = Field((), description="layers[d] holds nodes at backward distance d.")
    edges: Tuple[Tuple[ZmTuple, ZmTuple], ...] = ()

    model_config = ConfigDict(frozen=True)

    @property
    def nodes(self) -> List[ZmTuple]:
        return [node for layer in self.layers for node in layer]

    @property
    def node_count(self) -> int:
        return sum(len(layer) for layer in self.layers)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def in_degree(self, node: ZmTuple) -> int:
        return sum(1 for _, target in self.edges if target == node)

    def out_degree(self, node: ZmTuple) -> int:
        return sum(1 for source, _ in self.edges if source == node)

    def layer_sizes(self) -> List[int]:
        return [len(layer) for layer in self.layers]


class SweepRecord(BaseModel):
    """One (n, m) row of the closed-form evidence table."""

    n: int
    m: int
    case: str
    formula: int
    kind: str
    computed_L: Optional[int] = None
    computed_P: Optional[int] = None
    agrees: Literal["yes", "no", "budget-exceeded"]
    conjecture_equality: Optional[Literal["yes", "no"]] = None
    steps_used: int = 0

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_agreement(self) -> "SweepRecord":
        if self.agrees == "budget-exceeded" and self.computed_L is not None:
            raise ValueError("budget-exceeded rows carry no computed_L")
        if self.agrees != "budget-exceeded" and self.computed_L is None:
            raise ValueError("completed rows must carry computed_L")
        return self


SweepFilter = Literal["all", "prime-power-gcf", "coprime"]


class SweepConfig(BaseModel):
    """Range, budget and destination of one closed-form sweep."""

    n_values: Tuple[int, ...]
    m_values: Tuple[int, ...]
    budget: Budget = Field(default_factory=Budget)
    output_path: str
    jsonl_path: Optional[str] = None
    filter: SweepFilter = "all"
    workers: int = Field(1, ge=1)

    @field_validator("n_values")
    @classmethod
    def _even_lengths(cls, values: Tuple[int, ...]) -> Tuple[int, ...]:
        if not values:
            raise ValueError("n range is empty")
        odd = [n for n in values if n % 2 or n < 2]
        if odd:
            raise ValueError(f"n range must hold even lengths >= 2, got {odd}")
        return tuple(sorted(set(values)))

    @field_validator("m_values")
    @classmethod
    def _moduli(cls, values: Tuple[int, ...]) -> Tuple[int, ...]:
        if not values:
            raise ValueError("m range is empty")
        if any(m < 2 for m in values):
            raise ValueError("moduli must be >= 2")
        return tuple(sorted(set(values)))

    @classmethod
    def from_ranges(
        cls,
        n_min: int,
        n_max: int,
        m_min: int,
        m_max: int,
        output_path: str,
        **kwargs: Any,
    ) -> "SweepConfig":
        start = n_min + (n_min % 2)
        return cls(
            n_values=tuple(range(max(2, start), n_max + 1, 2)),
            m_values=tuple(range(max(2, m_min), m_max + 1)),
            output_path=output_path,
            **kwargs,
        )

    def cells(self) -> List[Tuple[int, int]]:
        return [(n, m) for n in self.n_values for m in self.m_values]


class SuiteReport(BaseModel):
    """A batch of CheckReports, e.g. one lemma grid."""

    name: str
    reports: List[CheckReport] = Field(default_factory=list)

    @property
    def failures(self) -> List[CheckReport]:
        return [r for r in self.reports if not r.skipped and not r.passed]

    @property
    def skipped(self) -> List[CheckReport]:
        return [r for r in self.reports if r.skipped]

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary_line(self) -> str:
        ran = len(self.reports) - len(self.skipped)
        return (f"suite={self.name} ran={ran} failed={len(self.failures)} "
                f"skipped={len(self.skipped)} status={'pass' if self.passed else 'fail'}")
