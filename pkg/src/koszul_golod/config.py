"""Environment-driven defaults, read once at import time."""

import logging
import os

logger = logging.getLogger(__name__)


def _int_env(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or not value.strip():
        return default
    try:
        return int(value)
    except ValueError:
        logger.warning(f"{name}={value!r} is not an integer; using {default}")
        return default


# Truncation bounds (N, J)
TRUNC_HOM = _int_env("KOSZUL_GOLOD_TRUNC_HOM", 8)
TRUNC_INT = _int_env("KOSZUL_GOLOD_TRUNC_INT", 10)

# Randomized steps and search budgets
SEED = _int_env("KOSZUL_GOLOD_SEED", 0)
BUDGET = _int_env("KOSZUL_GOLOD_BUDGET", 200)
ENUM_LIMIT = _int_env("KOSZUL_GOLOD_ENUM_LIMIT", 1_000_000)
RANDOM_TRIALS = _int_env("KOSZUL_GOLOD_RANDOM_TRIALS", 100_000)
STRUCTURE_BUDGET = _int_env("KOSZUL_GOLOD_STRUCTURE_BUDGET", 20_000)

# Depth of the 1/H(-z) sign test
OBSTRUCTION_DEPTH = _int_env("KOSZUL_GOLOD_OBSTRUCTION_DEPTH", 20)

# Response size limit
CHARACTER_LIMIT = _int_env("KOSZUL_GOLOD_CHARACTER_LIMIT", 50000)
