"""Core configuration for the domaingauge CLI."""

from domaingauge_cli.core.config import (
    DEFAULT_HORIZONS,
    DEFAULT_INTERLEAVE_LENGTH,
    DEFAULT_PIPELINE_CLASSES,
    FLOAT_DIGITS,
    LOG_BACKUP_COUNT,
    LOG_DIR,
    LOG_FILE_NAME,
    LOG_MAX_BYTES,
    TOOL_NAME,
    ExitCode,
    console,
)

__all__ = [
    "DEFAULT_HORIZONS",
    "DEFAULT_INTERLEAVE_LENGTH",
    "DEFAULT_PIPELINE_CLASSES",
    "FLOAT_DIGITS",
    "LOG_BACKUP_COUNT",
    "LOG_DIR",
    "LOG_FILE_NAME",
    "LOG_MAX_BYTES",
    "TOOL_NAME",
    "ExitCode",
    "console",
]
