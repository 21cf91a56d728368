"""Tests for tail equivalence of real sequences."""

from domaingauge.seqrep import RealTail, real_seq


class TestDecideE1:
    """Test decide_e1 and first_difference."""

    def test_equal_sequences_start_at_zero(self, identity_seq):
        """Pointwise-equal sequences agree from index 0."""
        from domaingauge.eqrel import decide_e1

        other = real_seq([0, 1], RealTail.affine(1, 2))
        verdict = decide_e1(identity_seq, other)
        assert verdict.equivalent
        assert verdict.start == 0

    def test_minimal_start_after_prefix_differences(self):
        """The start index is one past the last disagreement."""
        from domaingauge.eqrel import decide_e1

        verdict = decide_e1(real_seq([5, 7, 1], [1]), real_seq([], [1]))
        assert verdict.equivalent
        assert verdict.start == 2

    def test_disagreeing_residue_class(self):
        """Periodic(1, 2) and Const(1) disagree on every odd index."""
        from domaingauge.eqrel import decide_e1

        verdict = decide_e1(real_seq([], [1, 2]), real_seq([], [1]))
        assert not verdict.equivalent
        assert verdict.period == 2
        assert verdict.residue == 1
        assert verdict.sample_index == 1

    def test_lanes_crossing_once(self):
        """n and 10 - n meet at n = 5 but are not tail-equivalent."""
        from domaingauge.eqrel import decide_e1

        verdict = decide_e1(real_seq([], RealTail.affine(1, 0)), real_seq([], RealTail.affine(-1, 10)))
        assert not verdict.equivalent
        assert verdict.sample_index != 5

    def test_first_difference(self, identity_seq):
        """first_difference finds the smallest differing index."""
        from domaingauge.eqrel import first_difference

        assert first_difference(identity_seq, identity_seq) is None
        assert first_difference(identity_seq, real_seq([0, 1, 2, 9], RealTail.affine(1, 4))) == 3
