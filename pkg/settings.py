"""
Environment configuration for critnum.
"""

import os

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _int_env(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        return default


class Settings:
    """Runtime settings; every value has a default so no variable is required."""

    # Default seed for fuzz campaigns (--seed overrides it)
    CRITNUM_SEED = _int_env("CRITNUM_SEED", 42)

    # LOG_LEVEL is accepted when the critnum-specific name is unset
    CRITNUM_LOG_LEVEL = os.environ.get("CRITNUM_LOG_LEVEL", os.environ.get("LOG_LEVEL", "WARNING"))

    # Largest number of interlacing weights branch_enumerate will produce
    CRITNUM_ENUM_CAP = _int_env("CRITNUM_ENUM_CAP", 1_000_000)

    # Full mismatch reports kept per campaign; the rest are only counted
    CRITNUM_MISMATCH_LIMIT = _int_env("CRITNUM_MISMATCH_LIMIT", 20)
