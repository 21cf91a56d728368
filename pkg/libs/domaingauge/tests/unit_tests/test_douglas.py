"""Tests for the finite-dimensional range-inclusion oracle."""

import numpy as np
import pytest


class TestDouglasFindim:
    """Test douglas_findim against hand-built pairs."""

    def test_identity_pair(self):
        """Ran I ⊂ Ran I with λ = 1."""
        from domaingauge.opmodel import douglas_findim

        result = douglas_findim(np.eye(3), np.eye(3))
        assert result.included
        assert result.lam == pytest.approx(1.0)
        assert result.verified
        assert result.rank_b == result.rank_ab == 3

    def test_scaled_inclusion(self):
        """diag(2, 0) ⊂ diag(1, 0) needs λ = 4."""
        from domaingauge.opmodel import douglas_findim

        result = douglas_findim(np.diag([2.0, 0.0]), np.diag([1.0, 0.0]))
        assert result.included
        assert result.lam == pytest.approx(4.0)
        assert result.verified

    def test_orthogonal_ranges(self):
        """diag(0, 1) is not in the range of diag(1, 0)."""
        from domaingauge.opmodel import douglas_findim

        result = douglas_findim(np.diag([0.0, 1.0]), np.diag([1.0, 0.0]))
        assert not result.included
        assert result.lam is None
        assert result.verified
        assert result.to_dict()["rank_ab"] == 2

    def test_factored_pair(self):
        """A = B·C lies in Ran B for any C."""
        from domaingauge.opmodel import douglas_findim
        from domaingauge.reductions.harness import random_symmetric

        rng = np.random.default_rng(3)
        b = random_symmetric(rng, 5, rank=2)
        a = b @ random_symmetric(rng, 5)
        result = douglas_findim(a, b)
        assert result.included
        assert result.verified

    def test_shape_checks(self):
        """Non-square or mismatched matrices are rejected."""
        from domaingauge.errors import DimensionMismatchError
        from domaingauge.opmodel import douglas_findim

        with pytest.raises(DimensionMismatchError):
            douglas_findim(np.ones((2, 3)), np.ones((2, 3)))
        with pytest.raises(DimensionMismatchError):
            douglas_findim(np.eye(2), np.eye(3))

    def test_tolerance_must_be_positive(self):
        """A zero tolerance is rejected."""
        from domaingauge.errors import RepresentationError
        from domaingauge.opmodel import douglas_findim

        with pytest.raises(RepresentationError):
            douglas_findim(np.eye(2), np.eye(2), tol=0.0)


class TestRankAndPsd:
    """Test the helpers behind the oracle."""

    def test_numerical_rank(self):
        """Column-pivoted QR counts the rank of a rank-2 matrix."""
        from domaingauge.opmodel import numerical_rank

        m = np.array([[1.0, 2.0, 3.0], [2.0, 4.0, 6.0], [0.0, 1.0, 1.0]])
        assert numerical_rank(m, 1e-10) == 2
        assert numerical_rank(np.zeros((3, 3)), 1e-10) == 0

    def test_psd_dominates(self):
        """λ·BBᵀ dominates AAᵀ only for λ large enough."""
        from domaingauge.opmodel import psd_dominates

        assert psd_dominates(np.eye(2), np.eye(2), 1.0)
        assert not psd_dominates(np.eye(2), np.eye(2), 0.5)
