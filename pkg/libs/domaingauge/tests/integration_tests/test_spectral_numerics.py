"""Quantitative checks of the singular continuous spectrum numerics."""

from fractions import Fraction

import pytest


@pytest.mark.integration
@pytest.mark.slow
class TestLemmaSequence:
    """Test multiplication by x/n + 1 on the depth-8 cylinder basis."""

    def test_distance_bound(self):
        """srt_dist <= 1/n for n = 1..100, nonincreasing, and at most 1e-2 at n = 100."""
        from domaingauge.spectra import lemma44_table

        rows = lemma44_table(100, 8)
        assert all(row["srt_dist"] <= row["bound"] for row in rows)
        distances = [row["srt_dist"] for row in rows]
        assert all(x >= y for x, y in zip(distances, distances[1:], strict=False))
        assert distances[-1] <= 1e-2


@pytest.mark.integration
@pytest.mark.slow
class TestMomentConvergence:
    """Test empirical moments against the exact recursion."""

    def test_second_moment_error_shrinks_geometrically(self):
        """The m_2 error is (1/8)·9^{-d}, shrinking by 1/9 per level up to depth 10."""
        from domaingauge.spectra import cantor_moments, empirical_moments, mult_op

        exact = cantor_moments(2)
        assert exact[:2] == [1, Fraction(1, 2)]
        errors = [abs(empirical_moments(mult_op(d), 2)[2] - float(exact[2])) for d in range(1, 11)]
        for d, error in enumerate(errors, start=1):
            assert error == pytest.approx(1 / (8 * 9**d), rel=1e-4)
        assert all(later <= earlier / 8 for earlier, later in zip(errors, errors[1:], strict=False))


@pytest.mark.integration
@pytest.mark.slow
class TestWienerAtoms:
    """Test atom detection at a million quadrature nodes."""

    def test_cantor_average_decays(self):
        """The Cantor average strictly decreases over T = 1e2, 1e3, 1e4 and ends below 0.05."""
        from domaingauge.spectra import cantor_cf, wiener_table

        rows = wiener_table(lambda t: cantor_cf(t, terms=40), [1e2, 1e3, 1e4], 1_000_001)
        averages = [row["average"] for row in rows]
        assert averages[0] > averages[1] > averages[2]
        assert averages[2] < 0.05

    def test_point_mass_control(self):
        """δ_0 gives 1 within 1e-6."""
        from domaingauge.spectra import point_mass_cf, wiener_average

        assert wiener_average(point_mass_cf, 1e4, 1_000_001) == pytest.approx(1.0, abs=1e-6)
