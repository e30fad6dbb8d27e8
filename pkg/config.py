import logging
import os

TYPE_TABLE_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data", "affine_types.txt")
SUPPORTED_TYPES = ["A1~", "A2~", "A3~", "B2~", "C2~", "B3~", "C3~", "G2~"]
DEFAULT_SEED = 0
DEFAULT_SAMPLES = 200
MAX_ENUMERATION_LENGTH = 6
DIVISION_BOUND = 2
ASSOCIATIVITY_TRIPLES = 300
MAX_WORKERS = 3
LOG_LEVEL = "INFO"


def _int_env(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or not value.strip():
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {value!r}")


def get_settings():
    """Defaults above, overridden by DAHA_* environment variables (a .env file is loaded by main.py)."""
    level = os.getenv("DAHA_LOG_LEVEL", LOG_LEVEL).upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ValueError(f"DAHA_LOG_LEVEL must be a logging level name, got {level!r}")
    return {
        "seed": _int_env("DAHA_SEED", DEFAULT_SEED),
        "samples": _int_env("DAHA_SAMPLES", DEFAULT_SAMPLES),
        "max_length": _int_env("DAHA_MAX_LENGTH", MAX_ENUMERATION_LENGTH),
        "division_bound": _int_env("DAHA_DIVISION_BOUND", DIVISION_BOUND),
        "triples": _int_env("DAHA_TRIPLES", ASSOCIATIVITY_TRIPLES),
        "workers": _int_env("DAHA_WORKERS", MAX_WORKERS),
        "log_level": level,
        "type_table": os.getenv("DAHA_TYPE_TABLE") or TYPE_TABLE_PATH,
    }
