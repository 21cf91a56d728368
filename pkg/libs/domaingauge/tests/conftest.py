"""Pytest configuration and shared fixtures for test suite."""

import sys
from pathlib import Path

import pytest

# Add project root to path for imports
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from domaingauge.config import CoreConfig, DecisionConfig, HarnessConfig
from domaingauge.opmodel import DiagOpSeq, Encoding
from domaingauge.seqrep import RealTail, dim_seq, real_seq

# =============================================================================
# Shared Configuration Fixtures
# =============================================================================


@pytest.fixture
def core_config():
    """Default CoreConfig, independent of any config file on disk."""
    return CoreConfig()


@pytest.fixture
def decision_config():
    """Default decision thresholds."""
    return DecisionConfig()


@pytest.fixture
def small_harness():
    """Harness bounds small enough for fast unit runs."""
    return HarnessConfig(trials=20, seed=7, max_prefix=3, max_period=2, max_value=4)


# =============================================================================
# Sequence Fixtures
# =============================================================================


@pytest.fixture
def identity_seq():
    """a_n = n as an affine tail with no prefix."""
    return real_seq([], RealTail.affine(1, 0))


@pytest.fixture
def powers_of_two_seq():
    """a_n = 2^n as a geometric tail with no prefix."""
    return real_seq([], RealTail.geometric(1, 2))


@pytest.fixture
def inf_tail_dims():
    """Dimension sequence with a Const(INF) tail."""
    return dim_seq([], ["inf"])


@pytest.fixture
def unit_dims():
    """Dimension sequence with every entry equal to 1."""
    return dim_seq([], [1])


# =============================================================================
# Operator Fixtures
# =============================================================================


@pytest.fixture
def identity_op(identity_seq):
    """diag(n) with directly stored eigenvalues."""
    return DiagOpSeq(identity_seq, Encoding.DIRECT)


@pytest.fixture
def powers_of_two_op(powers_of_two_seq):
    """diag(2^n) with directly stored eigenvalues."""
    return DiagOpSeq(powers_of_two_seq, Encoding.DIRECT)
