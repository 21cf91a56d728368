"""Locate and read config.yaml into a CoreConfig.

Without an explicit path, the first ``config.yaml`` found wins:

- SDK context: working directory, enclosing git checkout, ``~/.domaingauge/``
- CLI context: ``~/.domaingauge/``, then the working directory

``DOMAINGAUGE_CONFIG_FILE`` names a file that beats every search location, and
``DOMAINGAUGE_MAX_N`` caps matrix dimensions whether or not a file is found.
"""

import os
from enum import Enum
from pathlib import Path
from typing import Any

import structlog
from dotenv import load_dotenv

from domaingauge.config.core import CoreConfig, SpectraConfig
from domaingauge.config.utils import (
    apply_dimension_override,
    create_decision_config,
    create_harness_config,
    create_logging_config,
    create_spectra_config,
    load_yaml_file,
    validate_required_sections,
)

logger = structlog.get_logger(__name__)

CONFIG_FILE_ENV_VAR = "DOMAINGAUGE_CONFIG_FILE"
CONFIG_FILE_NAME = "config.yaml"

REQUIRED_SECTIONS = ["decision", "harness", "spectra", "logging"]


class ConfigContext(str, Enum):
    """Who is asking for configuration; decides the search order."""

    SDK = "sdk"
    CLI = "cli"


# =============================================================================
# Search locations
# =============================================================================


def get_default_config_dir() -> Path:
    """``~/.domaingauge``, shared with the CLI log directory."""
    return Path.home() / ".domaingauge"


def find_project_root(start_path: Path | None = None) -> Path | None:
    """Nearest ancestor of ``start_path`` (default: cwd) holding a ``.git`` entry."""
    start = start_path or Path.cwd()
    for directory in (start, *start.parents):
        if (directory / ".git").exists():
            return directory
    return None


def get_config_search_paths(
    start_path: Path | None = None,
    context: ConfigContext = ConfigContext.SDK,
) -> list[Path]:
    """Directories to probe for config.yaml, most preferred first.

    Args:
        start_path: Directory standing in for the working directory
        context: SDK or CLI search order
    """
    cwd = start_path or Path.cwd()
    home = get_default_config_dir()
    if context == ConfigContext.CLI:
        return [home, cwd]

    root = find_project_root(cwd)
    middle = [root] if root is not None and root != cwd else []
    return [cwd, *middle, home]


def _env_override(env_var: str | None) -> Path | None:
    raw = os.getenv(env_var) if env_var else None
    if not raw:
        return None
    path = Path(raw)
    if not path.exists():
        logger.warning("Config file named by environment does not exist", env_var=env_var, path=raw)
        return None
    return path


def find_config_file(
    filename: str,
    search_paths: list[Path] | None = None,
    env_var: str | None = None,
    context: ConfigContext = ConfigContext.SDK,
) -> Path | None:
    """First existing ``filename``, honoring ``env_var`` before the search paths.

    Args:
        filename: File to look for in each directory
        search_paths: Directories to probe; defaults to ``get_config_search_paths(context=context)``
        env_var: Environment variable that may name the file directly
        context: Search order used when ``search_paths`` is None

    Returns:
        The file, or None when nothing matched
    """
    override = _env_override(env_var)
    if override is not None:
        return override
    directories = get_config_search_paths(context=context) if search_paths is None else search_paths
    return next((d / filename for d in directories if (d / filename).exists()), None)


# =============================================================================
# Loading
# =============================================================================


def load_core_from_files(
    config_file: Path | None = None,
    env_file: Path | None = None,
    *,
    search_paths: bool = True,
    context: ConfigContext = ConfigContext.SDK,
) -> CoreConfig:
    """Build a CoreConfig from config.yaml and the environment.

    An explicit ``config_file`` must exist. When searching finds nothing the
    defaults are returned, with ``DOMAINGAUGE_MAX_N`` still applied.

    Args:
        config_file: config.yaml to read instead of searching
        env_file: .env file to load before reading overrides
        search_paths: Probe the context's search locations; otherwise only the working directory
        context: SDK or CLI search order

    Raises:
        FileNotFoundError: If an explicit config file does not exist
        ValueError: If required configuration is missing or invalid
    """
    if env_file:
        load_dotenv(env_file)
    else:
        load_dotenv()

    if config_file is not None and not config_file.exists():
        raise FileNotFoundError(
            f"Configuration file not found: {config_file}\n"
            f"Pass an existing file or drop the path to use defaults."
        )
    if config_file is None:
        if search_paths:
            config_file = find_config_file(CONFIG_FILE_NAME, None, CONFIG_FILE_ENV_VAR, context)
        else:
            config_file = find_config_file(CONFIG_FILE_NAME, [Path.cwd()])

    if config_file is None:
        logger.debug("No config.yaml found, using defaults", context=context.value)
        return CoreConfig(spectra=apply_dimension_override(SpectraConfig()))

    core_config = load_from_dict(load_yaml_file(config_file))
    # Relative paths inside the file resolve against its directory
    core_config.config_file_dir = config_file.parent
    logger.debug("Loaded configuration", path=str(config_file))
    return core_config


def load_from_dict(config_data: dict[str, Any]) -> CoreConfig:
    """CoreConfig from an already-parsed mapping with all four sections.

    Raises:
        ValueError: If a section or one of its required fields is missing
    """
    validate_required_sections(config_data, REQUIRED_SECTIONS)
    return CoreConfig(
        decision=create_decision_config(config_data["decision"]),
        harness=create_harness_config(config_data["harness"]),
        spectra=create_spectra_config(config_data["spectra"]),
        logging=create_logging_config(config_data["logging"]),
    )
