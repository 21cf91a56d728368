"""Tests for truncated operators and the strong resolvent distance."""

import numpy as np
import pytest


def _random_symmetric(seed, size):
    rng = np.random.default_rng(seed)
    m = rng.standard_normal((size, size))
    return (m + m.T) / 2


class TestTruncatedOp:
    """Test construction and resolvents."""

    def test_rejects_asymmetric(self):
        """Only exactly symmetric matrices are accepted."""
        from domaingauge.errors import RepresentationError
        from domaingauge.spectra import TruncatedOp

        with pytest.raises(RepresentationError):
            TruncatedOp(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_rejects_bad_weights(self):
        """One weight per basis vector."""
        from domaingauge.errors import DimensionMismatchError
        from domaingauge.spectra import TruncatedOp

        with pytest.raises(DimensionMismatchError):
            TruncatedOp(np.eye(3), np.ones(2))

    def test_default_weights(self):
        """Test vector n has weight 2^{-(n+1)}."""
        from domaingauge.spectra import TruncatedOp

        assert TruncatedOp(np.eye(3)).weights == pytest.approx([0.5, 0.25, 0.125])

    def test_dense_resolvent(self):
        """(A - i)^{-1} inverts A - i."""
        from domaingauge.spectra import TruncatedOp

        op = TruncatedOp(_random_symmetric(0, 5))
        product = op.resolvent() @ (op.matrix - 1j * np.eye(5))
        assert np.allclose(product, np.eye(5))

    def test_padded(self):
        """Padding embeds the operator in the upper-left block."""
        from domaingauge.errors import DimensionMismatchError
        from domaingauge.spectra import TruncatedOp

        op = TruncatedOp.diagonal([1.0, 2.0]).padded(4)
        assert op.eigenvalues() == pytest.approx([0.0, 0.0, 1.0, 2.0])
        with pytest.raises(DimensionMismatchError):
            op.padded(2)


class TestSrtDist:
    """Test the weighted strong resolvent distance."""

    def test_zero_on_equal_operators(self):
        """d(A, A) = 0."""
        from domaingauge.spectra import TruncatedOp, srt_dist

        op = TruncatedOp(_random_symmetric(1, 4))
        assert srt_dist(op, op) == pytest.approx(0.0)

    def test_bounded_by_norm_distance(self):
        """d(A, B) <= ‖A - B‖ since the weights sum below 1."""
        from domaingauge.spectra import TruncatedOp, srt_dist

        a, b = _random_symmetric(2, 6), _random_symmetric(3, 6)
        assert srt_dist(TruncatedOp(a), TruncatedOp(b)) <= np.linalg.norm(a - b, 2) + 1e-12

    def test_pseudo_metric(self):
        """Symmetry and the triangle inequality hold."""
        from domaingauge.spectra import TruncatedOp, srt_dist

        a, b, c = (TruncatedOp(_random_symmetric(s, 5)) for s in (4, 5, 6))
        assert srt_dist(a, b) == pytest.approx(srt_dist(b, a))
        assert srt_dist(a, c) <= srt_dist(a, b) + srt_dist(b, c) + 1e-12

    def test_diagonal_shortcut_matches_dense(self):
        """The diagonal formula agrees with the dense resolvent computation."""
        from domaingauge.spectra import TruncatedOp, srt_dist

        a = TruncatedOp.diagonal([0.0, 1.0, -2.0])
        b = TruncatedOp.diagonal([0.5, 1.0, 3.0])
        dense = a.weights @ np.linalg.norm(a.resolvent() - b.resolvent(), axis=0)
        assert srt_dist(a, b) == pytest.approx(dense)

    def test_size_mismatch(self):
        """Operators of different sizes are not compared."""
        from domaingauge.errors import DimensionMismatchError
        from domaingauge.spectra import TruncatedOp, srt_dist

        with pytest.raises(DimensionMismatchError):
            srt_dist(TruncatedOp(np.eye(2)), TruncatedOp(np.eye(3)))


class TestInterleave:
    """Test the round-robin interleaving."""

    def test_layout(self):
        """The head is followed by reps copies of itself."""
        from domaingauge.spectra import interleave_approx

        op = interleave_approx([1.0, 2.0, 3.0], 2, 2)
        assert np.diag(op.matrix) == pytest.approx([1.0, 2.0, 1.0, 2.0, 1.0, 2.0])

    @pytest.mark.parametrize(("k", "reps"), [(0, 2), (4, 2), (2, 0)])
    def test_validation(self, k, reps):
        """k lies in 1..len(a) and reps is positive."""
        from domaingauge.errors import RepresentationError
        from domaingauge.spectra import interleave_approx

        with pytest.raises(RepresentationError):
            interleave_approx([1.0, 2.0, 3.0], k, reps)

    def test_table_respects_bound(self):
        """Distances stay below 2^{1-k}."""
        from domaingauge.spectra import interleave_table

        rows = interleave_table(np.linspace(-3.0, 3.0, 10), 4)
        assert [row["k"] for row in rows] == list(range(1, 11))
        assert all(row["srt_dist"] <= row["bound"] + 1e-12 for row in rows)

    def test_table_classes_kept(self):
        """k_max stops the table early; the rows it keeps still meet the bound."""
        from domaingauge.errors import RepresentationError
        from domaingauge.spectra import interleave_table

        values = np.linspace(-3.0, 3.0, 10)
        rows = interleave_table(values, 4, k_max=3)
        assert [row["k"] for row in rows] == [1, 2, 3]
        assert all(row["srt_dist"] <= row["bound"] + 1e-12 for row in rows)
        with pytest.raises(RepresentationError):
            interleave_table(values, 4, k_max=11)


class TestDimensionCap:
    """Test the matrix size cap."""

    def test_explicit_cap(self):
        """An explicit cap overrides the configured one."""
        from domaingauge.errors import RepresentationError
        from domaingauge.spectra import check_dimension

        check_dimension(16, 16)
        with pytest.raises(RepresentationError):
            check_dimension(17, 16)

    def test_environment_cap(self, monkeypatch):
        """DOMAINGAUGE_MAX_N lowers the cap for interleavings."""
        from domaingauge.errors import RepresentationError
        from domaingauge.spectra import interleave_approx

        monkeypatch.setenv("DOMAINGAUGE_MAX_N", "8")
        interleave_approx([1.0, 2.0], 2, 3)
        with pytest.raises(RepresentationError):
            interleave_approx([1.0, 2.0], 2, 4)

    def test_tables_take_explicit_cap(self):
        """An explicit cap reaches the interleave and pipeline tables."""
        from domaingauge.errors import RepresentationError
        from domaingauge.spectra import density_pipeline, interleave_table

        with pytest.raises(RepresentationError, match="cap 8"):
            interleave_table([1.0, 2.0, 3.0], 2, max_dimension=8)
        with pytest.raises(RepresentationError, match="cap 8"):
            density_pipeline([1.0, 2.0], 2, 2, [1], max_dimension=8)
        assert len(interleave_table([1.0, 2.0, 3.0], 2, max_dimension=9)) == 3
