"""Unit tests for certificate issue and verification."""

import copy

import pytest

DIMS_ONE = {"prefix": [], "tail": {"kind": "const", "value": 1}}
DIMS_TWO = {"prefix": [], "tail": {"kind": "const", "value": 2}}


def _issue(relation, a, b, power=1):
    from domaingauge_cli.certificates import decode_input, issue_certificate

    return issue_certificate(relation, decode_input(relation, a), decode_input(relation, b), power=power).to_dict()


class TestIssue:
    """Test certificate contents."""

    def test_linf_equivalent(self, identity_seq, shifted_identity_seq):
        """A bounded difference yields an equivalent verdict with its bound."""
        from domaingauge_cli.rendering import digest

        cert = _issue("linf", identity_seq, shifted_identity_seq)
        assert cert["tool"] == "domaingauge"
        assert cert["relation"] == "linf"
        assert cert["verdict"] == "equivalent"
        assert "bound" in cert["witness"]
        assert cert["sha256"] == {"a": digest(cert["inputs"]["a"]), "b": digest(cert["inputs"]["b"])}

    def test_dom_not_equivalent(self, identity_op, powers_of_two_op):
        """diag(n) and diag(2^n) have different domains."""
        cert = _issue("dom", identity_op, powers_of_two_op)
        assert cert["verdict"] == "not_equivalent"
        assert "sample" in cert["witness"]

    def test_esigma_refutation(self):
        """Constant densities 1 and 2 are refuted with a witness per shift."""
        cert = _issue("esigma", DIMS_ONE, DIMS_TWO)
        assert cert["verdict"] == "not_equivalent"
        assert cert["witness"]["witnesses"]

    def test_domu_records_power(self, powers_of_two_op):
        """The contraction power is kept in the options."""
        cert = _issue("domu", powers_of_two_op, powers_of_two_op, power=2)
        assert cert["options"] == {"power": 2}
        assert cert["verdict"] == "equivalent"

    def test_unknown_relation(self):
        """Only the listed relations are accepted."""
        from domaingauge.errors import RepresentationError

        from domaingauge_cli.certificates import decode_input

        with pytest.raises(RepresentationError):
            decode_input("e2", {})


class TestVerify:
    """Test re-checking certificates."""

    @pytest.mark.parametrize(
        ("relation", "a", "b"),
        [
            ("linf", "identity_seq", "shifted_identity_seq"),
            ("e1", "identity_seq", "shifted_identity_seq"),
            ("dom", "identity_op", "powers_of_two_op"),
            ("dom", "identity_op", "identity_op"),
        ],
    )
    def test_fresh_certificates_pass(self, request, relation, a, b):
        """Every issued certificate verifies."""
        from domaingauge_cli.certificates import verify_certificate

        cert = _issue(relation, request.getfixturevalue(a), request.getfixturevalue(b))
        report = verify_certificate(cert)
        assert report.ok, report.failures
        assert report.passed

    def test_esigma_certificates_pass(self):
        """Both E_sigma verdict kinds verify."""
        from domaingauge_cli.certificates import verify_certificate

        assert verify_certificate(_issue("esigma", DIMS_ONE, DIMS_TWO)).ok
        assert verify_certificate(_issue("esigma", DIMS_ONE, DIMS_ONE)).ok

    def test_tampered_input(self, identity_seq, shifted_identity_seq):
        """Changing an input breaks its hash."""
        from domaingauge_cli.certificates import verify_certificate

        cert = _issue("linf", identity_seq, shifted_identity_seq)
        tampered = copy.deepcopy(cert)
        tampered["inputs"]["b"]["tail"]["intercept"] = {"num": 4, "den": 1}
        report = verify_certificate(tampered)
        assert not report.ok
        assert any(f.startswith("sha256.b") for f in report.failures)

    def test_flipped_verdict(self, identity_seq, shifted_identity_seq):
        """A flipped verdict is caught."""
        from domaingauge_cli.certificates import verify_certificate

        cert = _issue("linf", identity_seq, shifted_identity_seq)
        cert["verdict"] = "not_equivalent"
        report = verify_certificate(cert)
        assert any(f.startswith("verdict") for f in report.failures)

    @pytest.mark.parametrize(
        "mutate",
        [
            lambda c: c.pop("sha256"),
            lambda c: c.update(tool="other"),
            lambda c: c.update(verdict="maybe"),
            lambda c: c["inputs"].pop("b"),
        ],
    )
    def test_malformed(self, identity_seq, mutate):
        """Structural problems are representation errors."""
        from domaingauge.errors import RepresentationError

        from domaingauge_cli.certificates import verify_certificate

        cert = _issue("linf", identity_seq, identity_seq)
        mutate(cert)
        with pytest.raises(RepresentationError):
            verify_certificate(cert)
