"""Pytest configuration and shared fixtures for domaingauge-cli tests."""

import json
import sys
from pathlib import Path

import pytest

# Add project root to path for imports
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))


# ============================================================================
# Input Fixtures
# ============================================================================

IDENTITY = {"prefix": [], "tail": {"kind": "affine", "slope": 1, "intercept": 0}}
SHIFTED_IDENTITY = {"prefix": [], "tail": {"kind": "affine", "slope": 1, "intercept": 3}}
POWERS_OF_TWO = {"prefix": [], "tail": {"kind": "geometric", "coeff": 1, "ratio": 2}}


def diag_seq(eigenvalues):
    """A diag_seq operator object with direct encoding."""
    return {"kind": "diag_seq", "eigenvalues": eigenvalues, "encoding": "direct"}


@pytest.fixture
def write_json(tmp_path):
    """Factory writing a JSON document into tmp_path and returning its path as a string."""

    def _write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def identity_seq():
    """The sequence a_n = n."""
    return IDENTITY


@pytest.fixture
def shifted_identity_seq():
    """The sequence a_n = n + 3."""
    return SHIFTED_IDENTITY


@pytest.fixture
def identity_op():
    """diag(n) as JSON."""
    return diag_seq(IDENTITY)


@pytest.fixture
def powers_of_two_op():
    """diag(2^n) as JSON."""
    return diag_seq(POWERS_OF_TWO)


# ============================================================================
# Configuration Fixtures
# ============================================================================


@pytest.fixture
def write_config(tmp_path, monkeypatch):
    """Factory writing a small config.yaml so runs never read the user's configuration."""
    monkeypatch.delenv("DOMAINGAUGE_MAX_N", raising=False)

    def _write(name="config.yaml", max_dimension=4096, level="WARNING"):
        path = tmp_path / name
        path.write_text(
            "decision:\n"
            "  linf_threshold: 1000000\n"
            "  dom_log_threshold: 20\n"
            "harness:\n"
            "  trials: 10\n"
            "  seed: 0\n"
            "  max_prefix: 3\n"
            "  max_period: 2\n"
            "  max_value: 4\n"
            "spectra:\n"
            f"  max_dimension: {max_dimension}\n"
            "  depth: 3\n"
            "  cf_terms: 20\n"
            "  wiener_samples: 2001\n"
            "  tol: 1.0e-8\n"
            "logging:\n"
            f"  level: {level}\n"
            "  file: logs/domaingauge.log\n",
            encoding="utf-8",
        )
        return str(path)

    return _write


@pytest.fixture
def cli_config(write_config):
    """Path of the default test config.yaml."""
    return write_config()


@pytest.fixture
def run_cli(cli_config, capsys):
    """Run the CLI with the test config and return (exit code, stdout)."""
    from domaingauge_cli import run

    def _run(*argv, config=None):
        code = run(["--config", config or cli_config, *argv])
        return int(code), capsys.readouterr().out

    return _run
