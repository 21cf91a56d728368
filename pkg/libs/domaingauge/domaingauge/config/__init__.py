"""Configuration for domaingauge.

- core.py: pydantic sections (decision, harness, spectra, logging)
- loaders.py: config.yaml discovery and loading
- utils.py: YAML parsing, validation, environment overrides, structlog level

``CoreConfig()`` is always valid; ``load_core_from_files()`` layers config.yaml
and the environment on top of the defaults.
"""

from domaingauge.config.core import CoreConfig, DecisionConfig, HarnessConfig, LoggingConfig, SpectraConfig
from domaingauge.config.loaders import (
    CONFIG_FILE_ENV_VAR,
    ConfigContext,
    find_config_file,
    find_project_root,
    get_config_search_paths,
    get_default_config_dir,
    load_core_from_files,
    load_from_dict,
)
from domaingauge.config.utils import MAX_DIMENSION_ENV_VAR, configure_logging

__all__ = [
    "CONFIG_FILE_ENV_VAR",
    "MAX_DIMENSION_ENV_VAR",
    "ConfigContext",
    "CoreConfig",
    "DecisionConfig",
    "HarnessConfig",
    "LoggingConfig",
    "SpectraConfig",
    "configure_logging",
    "find_config_file",
    "find_project_root",
    "get_config_search_paths",
    "get_default_config_dir",
    "load_core_from_files",
    "load_from_dict",
]
