"""Environment-driven configuration."""

import logging
import os

from .errors import ConfigurationError

logger = logging.getLogger(__name__)

DEFAULT_WITNESS_CAP = 1000
DEFAULT_TRUNCATION_DEPTH = 40
DEFAULT_JOBS = 1
DEFAULT_LOG_LEVEL = "WARNING"

_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


def _read_int(name: str, default: int, minimum: int) -> int:
    """Read an integer environment variable, enforcing a lower bound."""
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as e:
        raise ConfigurationError(f"{name} must be an integer, got: {raw[:20]!r}") from e
    if value < minimum:
        raise ConfigurationError(f"{name} must be >= {minimum}, got: {value}")
    return value


class Config:
    """Runtime defaults for sweeps and series evaluation.

    Values come from the environment once, when the singleton is first
    requested. Command-line flags override them per invocation.
    """

    def __init__(self) -> None:
        """Initialize configuration from environment variables.

        Raises:
            ConfigurationError: If a variable is present but malformed.
        """
        self.witness_cap = _read_int("DIGITSUM_WITNESS_CAP", DEFAULT_WITNESS_CAP, 0)
        self.truncation_depth = _read_int(
            "DIGITSUM_TRUNCATION_DEPTH", DEFAULT_TRUNCATION_DEPTH, 1
        )
        self.jobs = _read_int("DIGITSUM_JOBS", DEFAULT_JOBS, 1)

        level = os.environ.get("DIGITSUM_LOG_LEVEL", DEFAULT_LOG_LEVEL).strip().upper()
        if level not in _LOG_LEVELS:
            raise ConfigurationError(
                f"DIGITSUM_LOG_LEVEL must be one of {sorted(_LOG_LEVELS)}, got: {level[:20]!r}"
            )
        self.log_level = level
        logger.info("Configuration loaded successfully")

    def __repr__(self) -> str:
        return (
            f"Config(witness_cap={self.witness_cap}, "
            f"truncation_depth={self.truncation_depth}, jobs={self.jobs}, "
            f"log_level={self.log_level!r})"
        )


_config: Config | None = None


def get_config() -> Config:
    """Get the global configuration instance.

    This function lazily initializes the configuration on first call.
    Subsequent calls return the same instance.

    Raises:
        ConfigurationError: If configuration is invalid.
    """
    global _config
    if _config is None:
        _config = Config()
    return _config
