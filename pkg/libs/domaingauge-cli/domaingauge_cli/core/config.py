"""Configuration, constants, and settings for the domaingauge CLI."""

from enum import IntEnum
from pathlib import Path

import dotenv
from rich.console import Console

dotenv.load_dotenv()

TOOL_NAME = "domaingauge"


class ExitCode(IntEnum):
    """Process exit codes. Errors are never reported as "not equivalent"."""

    OK = 0
    NOT_EQUIVALENT = 1
    INPUT_ERROR = 2
    INTERNAL_ERROR = 3


# Log files rotate at 10MB, keeping 5 backups
LOG_DIR = Path.home() / ".domaingauge" / "logs"
LOG_FILE_NAME = "domaingauge.log"
LOG_MAX_BYTES = 10 * 1024 * 1024
LOG_BACKUP_COUNT = 5

# Significant digits kept for floats in canonical JSON and CSV
FLOAT_DIGITS = 12

# Default Wiener horizons and tables
DEFAULT_HORIZONS = (100.0, 1000.0, 10000.0)
DEFAULT_INTERLEAVE_LENGTH = 16
DEFAULT_PIPELINE_CLASSES = 4

# Human-facing messages go to stderr; stdout carries payloads only
console = Console(stderr=True, highlight=False)
