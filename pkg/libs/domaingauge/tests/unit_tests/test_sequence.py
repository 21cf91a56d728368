"""Tests for real and dimension sequence representations."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domaingauge.seqrep import INF, RealTail, dim_seq, real_seq, window_sum

finite_entries = st.integers(min_value=0, max_value=5)
entries = st.one_of(finite_entries, st.just("inf"))


@st.composite
def dim_sequences(draw):
    """Dimension sequences with INF in the prefix or a Const(INF) tail."""
    prefix = draw(st.lists(entries, max_size=4))
    if draw(st.booleans()):
        return dim_seq(prefix, ["inf"])
    return dim_seq(prefix, draw(st.lists(finite_entries, min_size=1, max_size=3)))


class TestRealSeqRep:
    """Test evaluation and structural operations on real sequences."""

    def test_prefix_then_tail(self):
        """Values come from the prefix first, then the tail."""
        seq = real_seq([7, 8], RealTail.affine(2, 1))
        assert [int(v.rational) for v in seq.values(5)] == [7, 8, 1, 3, 5]

    def test_negative_index_is_zero(self):
        """Negative indices evaluate to 0."""
        from domaingauge.seqrep import evaluate

        seq = real_seq([], RealTail.const(5))
        assert evaluate(seq, -3) == 0

    def test_periodic_tail_reduces_to_minimal_period(self):
        """Periodic(1, 2, 1, 2) is stored as Periodic(1, 2)."""
        tail = RealTail.periodic([1, 2, 1, 2])
        assert tail.period == 2
        assert RealTail.periodic([3, 3, 3]).kind == "const"

    def test_materialize_preserves_values(self):
        """Unrolling tail cycles into the prefix keeps every value."""
        seq = real_seq([1], RealTail((RealTail.affine(1, 0).lanes[0], RealTail.geometric(1, 3).lanes[0])))
        unrolled = seq.materialize(3)
        assert len(unrolled.prefix) == 7
        assert seq.values(20) == unrolled.values(20)

    def test_class_forms(self):
        """Residue-class lanes reproduce the sequence."""
        seq = real_seq([5], RealTail.periodic([1, 2, 3]))
        forms = seq.class_forms(2, 6)
        for r, lane in enumerate(forms):
            for q in range(3):
                assert lane.at(q) == seq.at(2 + r + 6 * q)

    def test_class_forms_rejects_short_start(self):
        """class_forms needs a start past the prefix."""
        from domaingauge.errors import RepresentationError

        seq = real_seq([5, 6], [1])
        with pytest.raises(RepresentationError):
            seq.class_forms(1, 1)

    def test_shifted(self):
        """Shifting adds a constant to every entry."""
        seq = real_seq([Fraction(1, 2)], RealTail.affine(1, 0))
        moved = seq.shifted(3)
        assert moved.values(4) == [v + 3 for v in seq.values(4)]

    def test_pointwise_equal_across_forms(self):
        """Different representations of the same sequence are equal."""
        from domaingauge.seqrep import pointwise_equal

        a = real_seq([0, 1], RealTail.affine(1, 2))
        b = real_seq([], RealTail.affine(1, 0))
        assert pointwise_equal(a, b)
        assert not pointwise_equal(a, real_seq([], RealTail.affine(1, 1)))

    def test_first_structural_difference_in_prefix_only(self):
        """Residue -1 reports a difference confined to the prefixes."""
        from domaingauge.seqrep import first_structural_difference

        a = real_seq([9], [0])
        b = real_seq([], [0])
        assert first_structural_difference(a, b) == (1, 1, -1)


class TestDimSeqRep:
    """Test dimension sequences, window sums and INF counts."""

    def test_periodic_inf_is_rejected(self):
        """Infinitely many INF entries must form a Const(INF) tail."""
        from domaingauge.errors import UnsupportedInfPatternError

        with pytest.raises(UnsupportedInfPatternError):
            dim_seq([], [1, "inf"])

    def test_const_inf_tail_is_accepted(self):
        """Const(INF) is a valid tail."""
        from domaingauge.seqrep import count_inf

        seq = dim_seq([1], "inf")
        assert seq.tail.is_inf
        assert count_inf(seq).is_inf

    def test_count_inf_in_prefix(self):
        """INF entries in the prefix are counted exactly."""
        from domaingauge.seqrep import count_inf

        assert count_inf(dim_seq(["inf", 2, "inf"], [0])) == 2

    def test_window_sum_examples(self):
        """Window sums cover n..n+length inclusive."""
        seq = dim_seq([1, 2, 3], [4, 5])
        assert window_sum(seq, 0, 0) == 1
        assert window_sum(seq, 0, 2) == 6
        assert window_sum(seq, 2, 3) == 3 + 4 + 5 + 4
        assert window_sum(seq, -2, 2) == 1

    def test_window_sum_hits_inf(self):
        """A window covering an INF entry sums to INF."""
        seq = dim_seq([1, "inf"], [0])
        assert window_sum(seq, 0, 1).is_inf
        assert window_sum(seq, 2, 100) == 0

    def test_window_sum_far_out(self):
        """Window sums far beyond the prefix are computed in closed form."""
        seq = dim_seq([], [1, 0, 2])
        assert window_sum(seq, 10**12, 3 * 10**9 - 1) == 3 * 10**9

    @settings(max_examples=200)
    @given(dim_sequences(), st.integers(min_value=-5, max_value=30), st.integers(min_value=0, max_value=20))
    def test_window_sum_matches_direct_sum(self, seq, n, length):
        """The closed-form window sum agrees with summing entries one by one."""
        from domaingauge.seqrep import extnat_sum

        direct = extnat_sum(seq.at(i) for i in range(n, n + length + 1))
        assert window_sum(seq, n, length) == direct

    def test_diverges(self):
        """A sequence lies in X_0 iff its total sum is INF."""
        from domaingauge.seqrep import diverges

        assert diverges(dim_seq([], [0, 1]))
        assert diverges(dim_seq(["inf"], [0]))
        assert not diverges(dim_seq([5, 6], [0]))

    def test_agree_on_box(self):
        """Sequences with different forms agree on the canonical box."""
        from domaingauge.seqrep import agree_on_box, canonical_box_length

        a = dim_seq([1, 2], [1, 2])
        b = dim_seq([], [1, 2])
        assert canonical_box_length(a, b) == 2 + 0 + 2 * 2 * 2
        assert agree_on_box(a, b)
        assert not agree_on_box(a, dim_seq([], [2, 1]))

    def test_cumulative_arrays(self):
        """Prefix sums split finite mass from INF counts."""
        finite, infs = dim_seq([2, "inf"], [1]).cumulative_arrays(4)
        assert list(finite) == [0, 2, 2, 3, 4]
        assert list(infs) == [0, 0, 1, 1, 1]

    def test_inf_compares_above_finite(self):
        """Tail INF entries are INF."""
        assert dim_seq([], "inf").at(50) == INF
