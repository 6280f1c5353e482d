# src/core/config.py
import os
import logging
from pathlib import Path
from dotenv import load_dotenv

load_dotenv()
logger = logging.getLogger(__name__)


def _int_from_env(name: str, default: int) -> int:
    """Reads a positive integer from the environment, falling back to the default."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw.replace("_", ""))
    except ValueError:
        logger.error(f"{name}={raw!r} is not an integer. Using default {default}.")
        return default
    if value <= 0:
        logger.error(f"{name}={value} must be positive. Using default {default}.")
        return default
    return value


# --- Cycle Detection Budget ---
# The default mirrors the desk-scale limits: 10^7 iterations, 10^6 stored states.
DEFAULT_MAX_STEPS = _int_from_env("DUCCI_MAX_STEPS", 10_000_000)
DEFAULT_MAX_STATES = _int_from_env("DUCCI_MAX_STATES", 1_000_000)
CYCLE_STRATEGY = os.getenv("DUCCI_CYCLE_STRATEGY", "auto").strip().lower()
if CYCLE_STRATEGY not in ("index", "brent", "auto"):
    logger.error(f"Unknown DUCCI_CYCLE_STRATEGY '{CYCLE_STRATEGY}'. Using 'auto'.")
    CYCLE_STRATEGY = "auto"

# --- Data Directory ---
IS_CONTAINER = os.environ.get("DUCCI_CONTAINER") == "true"

if IS_CONTAINER:
    # Absolute path inside the compose service
    DATA_DIR = "/app/data"
else:
    ROOT_DIR = Path(__file__).parent.parent.parent
    DATA_DIR = os.getenv("DUCCI_DATA_DIR", os.path.join(ROOT_DIR, "data"))

# --- Sweep Output Files ---
SWEEP_CSV_PATH = os.getenv("DUCCI_SWEEP_CSV", os.path.join(DATA_DIR, "lm_sweep.csv"))
SWEEP_JSONL_PATH = os.getenv("DUCCI_SWEEP_JSONL", os.path.join(DATA_DIR, "lm_sweep.jsonl"))

# Column order is part of the file format.
SWEEP_COLUMNS = [
    "n", "m", "case", "formula", "kind", "computed_L", "computed_P",
    "agrees", "conjecture_equality", "steps_used",
]

# --- Sweep Defaults ---
# The full published range (n <= 20, m <= 50) is reachable via --n-max/--m-max.
SWEEP_N_MIN = 2
SWEEP_N_MAX = _int_from_env("DUCCI_SWEEP_N_MAX", 16)
SWEEP_M_MIN = 2
SWEEP_M_MAX = _int_from_env("DUCCI_SWEEP_M_MAX", 30)
SWEEP_WORKERS = _int_from_env("DUCCI_SWEEP_WORKERS", 1)

# --- Lemma Suite Defaults ---
LEMMA_PRIMES = (2, 3, 5)
LEMMA_K_MAX = 3
LEMMA_N1_VALUES = (2, 3, 4, 5)
LEMMA_C_MAX = 6

# --- Size Limits ---
MAX_MODULUS = 2**31 - 1
MAX_LENGTH = 2**20

# --- Logging Configuration ---
LOGGING_LEVEL = getattr(logging, os.getenv("DUCCI_LOG_LEVEL", "WARNING").upper(), logging.WARNING)
LOGGING_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
