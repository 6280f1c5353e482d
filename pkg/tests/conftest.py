# tests/conftest.py
import pytest
from hypothesis import HealthCheck, settings

from src.core.dispatcher import CommandDispatcher
from src.core.models import Budget, ZmTuple
from src.harness.sweep import SweepRunner

# --- Hypothesis Profile ---

settings.register_profile(
    "ducci",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("ducci")


# --- Basic Fixtures ---

@pytest.fixture
def small_budget() -> Budget:
    """Tight enough to trip quickly, large enough for desk examples."""
    return Budget(max_steps=50_000, max_states=50_000)


@pytest.fixture
def tiny_budget() -> Budget:
    return Budget(max_steps=3, max_states=3)


@pytest.fixture
def worked_example() -> ZmTuple:
    """(0,0,0,1) in Z_5^4: len 1, per 4."""
    return ZmTuple.of([0, 0, 0, 1], 5)


@pytest.fixture
def worked_orbit() -> list:
    return [
        (0, 0, 0, 1),
        (0, 0, 1, 1),
        (0, 1, 2, 1),
        (1, 3, 3, 1),
        (4, 1, 4, 2),
        (0, 0, 1, 1),
    ]


@pytest.fixture
def z2_6_cycle() -> list:
    """The basic cycle of Z_2^6 in iteration order, starting at D^2(0,0,0,0,0,1)."""
    return [
        (0, 0, 0, 1, 0, 1),
        (0, 0, 1, 1, 1, 1),
        (0, 1, 0, 0, 0, 1),
        (1, 1, 0, 0, 1, 1),
        (0, 1, 0, 1, 0, 0),
        (1, 1, 1, 1, 0, 0),
    ]


# --- Output Paths ---

@pytest.fixture
def sweep_paths(tmp_path) -> dict:
    return {
        "csv": str(tmp_path / "sweep.csv"),
        "jsonl": str(tmp_path / "sweep.jsonl"),
    }


@pytest.fixture
def dot_path(tmp_path) -> str:
    return str(tmp_path / "graphs" / "basic.dot")


# --- Dispatcher Fixture ---

@pytest.fixture
def dispatcher(small_budget: Budget) -> CommandDispatcher:
    """A dispatcher with a test budget and a fresh sweep runner."""
    return CommandDispatcher(budget=small_budget, sweep_runner=SweepRunner())
