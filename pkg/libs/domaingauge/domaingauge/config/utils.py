"""YAML parsing, section validation and environment overrides for config.yaml."""

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import TYPE_CHECKING, Any

import structlog
import yaml

if TYPE_CHECKING:
    from domaingauge.config.core import DecisionConfig, HarnessConfig, LoggingConfig, SpectraConfig

MAX_DIMENSION_ENV_VAR = "DOMAINGAUGE_MAX_N"

# Fields each section must spell out; the rest fall back to model defaults
DECISION_REQUIRED_FIELDS = ["linf_threshold", "dom_log_threshold"]
HARNESS_REQUIRED_FIELDS = ["trials", "seed"]
SPECTRA_REQUIRED_FIELDS = ["max_dimension", "depth", "cf_terms", "tol"]
LOGGING_REQUIRED_FIELDS = ["level", "file"]


def load_yaml_file(file_path: Path) -> dict[str, Any]:
    """Parse a YAML file whose top level is a non-empty mapping.

    Raises:
        FileNotFoundError: If the file is missing
        ValueError: If the YAML is invalid, empty or not a mapping
    """
    if not file_path.exists():
        raise FileNotFoundError(
            f"Configuration file not found: {file_path}\n"
            f"Create it from the example config.yaml or rely on the defaults."
        )
    try:
        data = yaml.safe_load(file_path.read_text(encoding="utf-8"))
    except yaml.YAMLError as e:
        raise ValueError(f"Failed to parse {file_path.name}: {e}") from e

    if not data:
        raise ValueError(f"{file_path.name} is empty; it needs the decision, harness, spectra and logging sections.")
    if not isinstance(data, dict):
        raise ValueError(f"{file_path.name} must contain a mapping at the top level, got {type(data).__name__}")
    return data


def validate_required_sections(config_data: dict[str, Any], required_sections: list[str], config_name: str = "config.yaml") -> None:
    """Raise ValueError naming every absent top-level section."""
    missing = [name for name in required_sections if name not in config_data]
    if missing:
        raise ValueError(f"Missing required sections in {config_name}: {', '.join(missing)}")


def validate_section_fields(section_data: dict[str, Any], required_fields: list[str], section_name: str) -> None:
    """Raise ValueError naming every absent field of one section."""
    if not isinstance(section_data, dict):
        raise ValueError(f"The {section_name} section must be a mapping")
    missing = [name for name in required_fields if name not in section_data]
    if missing:
        raise ValueError(f"Missing required fields in {section_name} section: {', '.join(missing)}")


# =============================================================================
# Section factories
# =============================================================================


def create_decision_config(data: dict[str, Any]) -> DecisionConfig:
    """DecisionConfig from the ``decision`` section."""
    from domaingauge.config.core import DecisionConfig

    validate_section_fields(data, DECISION_REQUIRED_FIELDS, "decision")
    return DecisionConfig(**data)


def create_harness_config(data: dict[str, Any]) -> HarnessConfig:
    """HarnessConfig from the ``harness`` section."""
    from domaingauge.config.core import HarnessConfig

    validate_section_fields(data, HARNESS_REQUIRED_FIELDS, "harness")
    return HarnessConfig(**data)


def create_spectra_config(data: dict[str, Any]) -> SpectraConfig:
    """SpectraConfig from the ``spectra`` section, then ``DOMAINGAUGE_MAX_N``."""
    from domaingauge.config.core import SpectraConfig

    validate_section_fields(data, SPECTRA_REQUIRED_FIELDS, "spectra")
    return apply_dimension_override(SpectraConfig(**data))


def create_logging_config(data: dict[str, Any]) -> LoggingConfig:
    """LoggingConfig from the ``logging`` section."""
    from domaingauge.config.core import LoggingConfig

    validate_section_fields(data, LOGGING_REQUIRED_FIELDS, "logging")
    return LoggingConfig(level=data["level"], file=data["file"])


def apply_dimension_override(config: SpectraConfig) -> SpectraConfig:
    """Replace ``max_dimension`` with ``DOMAINGAUGE_MAX_N`` when it is set.

    Raises:
        ValueError: If the variable is set but not a positive integer
    """
    raw = os.getenv(MAX_DIMENSION_ENV_VAR)
    if not raw:
        return config
    try:
        value = int(raw)
    except ValueError as e:
        raise ValueError(f"{MAX_DIMENSION_ENV_VAR} must be an integer, got {raw!r}") from e
    if value < 1:
        raise ValueError(f"{MAX_DIMENSION_ENV_VAR} must be positive, got {value}")
    return config.model_copy(update={"max_dimension": value})


def configure_logging(level: str = "WARNING") -> None:
    """Drop library log records below ``level`` (unknown names mean WARNING).

    Sets the stdlib ``domaingauge`` logger, which filters structlog once it is
    routed through stdlib logging. When structlog is still unconfigured, its
    default printer is replaced by a filtering bound logger at the same level.
    """
    numeric = getattr(logging, level.upper(), logging.WARNING)
    logging.getLogger("domaingauge").setLevel(numeric)
    if not structlog.is_configured():
        structlog.configure(wrapper_class=structlog.make_filtering_bound_logger(numeric), cache_logger_on_first_use=True)
