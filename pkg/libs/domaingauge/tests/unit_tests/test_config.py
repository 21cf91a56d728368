"""Tests for configuration loading."""

from pathlib import Path

import pytest

FULL_CONFIG = """\
decision:
  linf_threshold: 1000
  dom_log_threshold: 10
harness:
  trials: 50
  seed: 3
spectra:
  max_dimension: 512
  depth: 6
  cf_terms: 30
  tol: 1.0e-9
logging:
  level: INFO
  file: logs/run.log
"""


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Remove configuration overrides from the environment."""
    monkeypatch.delenv("DOMAINGAUGE_MAX_N", raising=False)
    monkeypatch.delenv("DOMAINGAUGE_CONFIG_FILE", raising=False)


@pytest.fixture
def config_path(tmp_path):
    """A complete config.yaml in a temporary directory."""
    path = tmp_path / "config.yaml"
    path.write_text(FULL_CONFIG, encoding="utf-8")
    return path


class TestDefaults:
    """Test the default configuration."""

    def test_core_defaults(self):
        """Every section has defaults."""
        from domaingauge.config import CoreConfig

        config = CoreConfig()
        assert config.decision.linf_threshold == 1_000_000
        assert config.decision.dom_log_threshold == 20
        assert config.harness.trials == 1000
        assert config.spectra.max_dimension == 4096
        assert config.logging.level == "WARNING"

    def test_no_file_uses_defaults(self, tmp_path, monkeypatch):
        """Without a config.yaml in the working directory the defaults apply."""
        from domaingauge.config import load_core_from_files

        monkeypatch.chdir(tmp_path)
        config = load_core_from_files(search_paths=False)
        assert config.config_file_dir is None
        assert config.spectra.max_dimension == 4096


class TestFileLoading:
    """Test loading from YAML."""

    def test_explicit_file(self, config_path):
        """Values come from the file and its directory is remembered."""
        from domaingauge.config import load_core_from_files

        config = load_core_from_files(config_path)
        assert config.decision.linf_threshold == 1000
        assert config.harness.seed == 3
        assert config.spectra.depth == 6
        assert config.config_file_dir == config_path.parent

    def test_explicit_missing_file(self, tmp_path):
        """A missing explicit path is an error, not a fallback."""
        from domaingauge.config import load_core_from_files

        with pytest.raises(FileNotFoundError):
            load_core_from_files(tmp_path / "absent.yaml")

    def test_env_var_locates_file(self, config_path, monkeypatch):
        """DOMAINGAUGE_CONFIG_FILE takes precedence over the search paths."""
        from domaingauge.config import CONFIG_FILE_ENV_VAR, find_config_file

        monkeypatch.setenv(CONFIG_FILE_ENV_VAR, str(config_path))
        assert find_config_file("config.yaml", [], CONFIG_FILE_ENV_VAR) == config_path

    def test_resolve_log_file(self, config_path):
        """Relative log paths resolve against the config directory."""
        from domaingauge.config import load_core_from_files

        config = load_core_from_files(config_path)
        assert config.resolve_log_file() == config_path.parent / "logs" / "run.log"

    def test_absolute_log_file(self):
        """Absolute log paths are kept."""
        from domaingauge.config import CoreConfig, LoggingConfig

        config = CoreConfig(logging=LoggingConfig(file="/var/log/dg.log"))
        assert config.resolve_log_file() == Path("/var/log/dg.log")

    def test_empty_file(self, tmp_path):
        """An empty file is rejected."""
        from domaingauge.config import load_core_from_files

        path = tmp_path / "config.yaml"
        path.write_text("", encoding="utf-8")
        with pytest.raises(ValueError, match="empty"):
            load_core_from_files(path)


class TestLoadFromDict:
    """Test section and field validation."""

    def test_missing_section(self):
        """All four sections are required."""
        from domaingauge.config import load_from_dict

        with pytest.raises(ValueError, match="Missing required sections"):
            load_from_dict({"decision": {}, "harness": {}})

    def test_missing_field(self):
        """Required fields inside a section are checked."""
        import yaml

        from domaingauge.config import load_from_dict

        data = yaml.safe_load(FULL_CONFIG)
        del data["harness"]["seed"]
        with pytest.raises(ValueError, match="harness"):
            load_from_dict(data)


class TestDimensionOverride:
    """Test DOMAINGAUGE_MAX_N."""

    def test_override_applies(self, config_path, monkeypatch):
        """The environment beats the file."""
        from domaingauge.config import MAX_DIMENSION_ENV_VAR, load_core_from_files

        monkeypatch.setenv(MAX_DIMENSION_ENV_VAR, "64")
        assert load_core_from_files(config_path).spectra.max_dimension == 64

    @pytest.mark.parametrize("raw", ["abc", "0", "-5"])
    def test_invalid_override(self, raw, monkeypatch):
        """Non-integers and nonpositive values are rejected."""
        from domaingauge.config import MAX_DIMENSION_ENV_VAR, SpectraConfig
        from domaingauge.config.utils import apply_dimension_override

        monkeypatch.setenv(MAX_DIMENSION_ENV_VAR, raw)
        with pytest.raises(ValueError):
            apply_dimension_override(SpectraConfig())


class TestSearchPaths:
    """Test the search order per context."""

    def test_cli_context(self, tmp_path):
        """The CLI searches the home directory before the working directory."""
        from domaingauge.config import ConfigContext, get_config_search_paths, get_default_config_dir

        assert get_config_search_paths(tmp_path, ConfigContext.CLI) == [get_default_config_dir(), tmp_path]

    def test_sdk_context_includes_project_root(self, tmp_path):
        """The SDK searches the working directory, then the git root, then home."""
        from domaingauge.config import get_config_search_paths, get_default_config_dir

        (tmp_path / ".git").mkdir()
        nested = tmp_path / "a" / "b"
        nested.mkdir(parents=True)
        assert get_config_search_paths(nested) == [nested, tmp_path, get_default_config_dir()]


class TestConfigureLogging:
    """Test library log level filtering."""

    def test_filters_below_level(self):
        """With structlog unconfigured, the bound logger class drops calls under the level."""
        import logging

        import structlog

        from domaingauge.config import configure_logging

        structlog.reset_defaults()
        try:
            configure_logging("error")
            logger = structlog.get_logger("domaingauge.test")
            assert logger.info("ignored") is None
            assert structlog.get_config()["wrapper_class"] is structlog.make_filtering_bound_logger(40)
            assert logging.getLogger("domaingauge").level == logging.ERROR
        finally:
            structlog.reset_defaults()
            logging.getLogger("domaingauge").setLevel(logging.NOTSET)

    def test_keeps_existing_structlog_setup(self):
        """An application's structlog setup is left alone; only the stdlib level changes."""
        import logging

        import structlog

        from domaingauge.config import configure_logging

        structlog.reset_defaults()
        try:
            structlog.configure(wrapper_class=structlog.stdlib.BoundLogger, logger_factory=structlog.stdlib.LoggerFactory())
            configure_logging("debug")
            assert structlog.get_config()["wrapper_class"] is structlog.stdlib.BoundLogger
            assert logging.getLogger("domaingauge").level == logging.DEBUG
        finally:
            structlog.reset_defaults()
            logging.getLogger("domaingauge").setLevel(logging.NOTSET)
