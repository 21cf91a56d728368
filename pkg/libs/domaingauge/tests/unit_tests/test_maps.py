"""Tests for the reduction maps between sequences and operators."""

from domaingauge.seqrep import Real, RealTail, real_seq


class TestTilde:
    """Test the sign-splitting map."""

    def test_splits_by_sign(self):
        """Negative entries move to the odd slot."""
        from domaingauge.reductions import tilde

        image = tilde(real_seq([-3, 2], [-1]))
        assert image.seq.values(8) == [0, 3, 2, 0, 0, 1, 0, 1]

    def test_unrolls_until_sign_settles(self):
        """An affine lane crossing zero is unrolled before splitting."""
        from domaingauge.reductions import tilde

        x = real_seq([], RealTail.affine(1, -3))
        image = tilde(x)
        assert all(v.sign() >= 0 for v in image.seq.values(30))
        assert [image.source_value(n) for n in range(10)] == x.values(10)

    def test_separating_index(self):
        """Distinct sequences have distinct images at 2n or 2n + 1."""
        from domaingauge.reductions import tilde_separating_index

        assert tilde_separating_index(real_seq([1], [0]), real_seq([-1], [0])) == 0
        assert tilde_separating_index(real_seq([1, 2], [0]), real_seq([1, 5], [0])) == 2
        assert tilde_separating_index(real_seq([1, -2], [0]), real_seq([1, -5], [0])) == 3
        assert tilde_separating_index(real_seq([1], [0]), real_seq([1], [0])) is None

    def test_preserves_bounded_difference(self):
        """x and y are boundedly close iff their images are."""
        from domaingauge.eqrel import decide_linf
        from domaingauge.reductions import tilde

        pairs = [
            (real_seq([], [1, -1]), real_seq([], [0])),
            (real_seq([], RealTail.affine(1, 0)), real_seq([], RealTail.affine(1, 3))),
            (real_seq([], RealTail.affine(1, 0)), real_seq([], RealTail.affine(-1, 0))),
        ]
        for x, y in pairs:
            assert decide_linf(x, y).equivalent == decide_linf(tilde(x).seq, tilde(y).seq).equivalent


class TestPhiPsi:
    """Test phi and psi."""

    def test_phi_reads_log_contraction(self, identity_op):
        """phi(A)_n = -2·log(|a_n| + 1)."""
        from domaingauge.reductions import phi

        assert phi(identity_op).at(3) == Real.log(4, -2)

    def test_psi_is_exp_half(self):
        """psi stores the tilde image as exp_half values."""
        from domaingauge.opmodel import Encoding
        from domaingauge.reductions import psi, tilde

        x = real_seq([2], [-1])
        op = psi(x)
        assert op.encoding is Encoding.EXP_HALF
        assert op.eigenvalues == tilde(x).seq
        assert op.eigenvalue(1) == 0

    def test_psi_reduces_linf_to_domains(self, identity_seq):
        """Bounded-apart sequences give equal domains under psi; drifting ones do not."""
        from domaingauge.opmodel import decide_edom
        from domaingauge.reductions import psi

        assert decide_edom(psi(identity_seq), psi(real_seq([], RealTail.affine(1, 3)))).equivalent
        assert not decide_edom(psi(identity_seq), psi(real_seq([], RealTail.affine(2, 0)))).equivalent

    def test_phi_reduces_domains_to_linf(self, identity_op, powers_of_two_op):
        """Domain equality matches bounded difference of phi images."""
        from domaingauge.eqrel import decide_linf
        from domaingauge.opmodel import decide_edom
        from domaingauge.reductions import phi

        for a, b in [(identity_op, identity_op), (identity_op, powers_of_two_op)]:
            assert decide_edom(a, b).equivalent == decide_linf(phi(a), phi(b)).equivalent
