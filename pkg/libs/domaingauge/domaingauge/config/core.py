"""Core configuration classes for domaingauge.

This module defines pure data classes for configuration:
- Decision procedure thresholds and caps
- Randomized harness generator bounds
- Spectral numerics sizes and tolerances
- Logging settings

Use domaingauge.config.loaders for file-based loading.
"""

from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field


class DecisionConfig(BaseModel):
    """Settings for the certified decision procedures.

    Thresholds only shape refutation witnesses; verdicts never depend on them.
    """

    linf_threshold: int = 1_000_000  # |a_n - b_n| a refutation index must exceed
    dom_log_threshold: int = 20  # |log ratio| a domain refutation index must exceed
    witness_max_exponent: int = 256  # largest E tried for sample index base + stride * 2^E
    refutation_slack: int = 8  # added to K_cap for E_sigma refutations


class HarnessConfig(BaseModel):
    """Bounds for the seeded random generators behind the property harnesses."""

    trials: int = 1000
    seed: int = 0
    max_prefix: int = 4
    max_period: int = 3
    max_value: int = 6


class SpectraConfig(BaseModel):
    """Settings for the finite-truncation spectral numerics."""

    max_dimension: int = 4096  # 2^12, overridable via DOMAINGAUGE_MAX_N
    depth: int = 8
    cf_terms: int = 40
    wiener_samples: int = 1_000_001
    tol: float = 1e-8


class LoggingConfig(BaseModel):
    """Logging configuration with sensible defaults."""

    level: str = "WARNING"
    file: str = "logs/domaingauge.log"


class CoreConfig(BaseModel):
    """Complete domaingauge configuration.

    Every section has defaults, so ``CoreConfig()`` is a valid configuration.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    # Sub-configurations
    decision: DecisionConfig = Field(default_factory=DecisionConfig)
    harness: HarnessConfig = Field(default_factory=HarnessConfig)
    spectra: SpectraConfig = Field(default_factory=SpectraConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    config_file_dir: Path | None = Field(default=None, exclude=True)

    def resolve_log_file(self) -> Path:
        """Resolve the configured log file relative to the config file directory.

        Returns:
            Absolute path of the log file
        """
        path = Path(self.logging.file)
        if path.is_absolute():
            return path
        base = self.config_file_dir or Path.cwd()
        return base / path
