"""End-to-end runs of every subcommand through ``run``."""

import json

import pytest

DIMS = {"prefix": [1, 2], "tail": {"kind": "const", "value": 1}}


@pytest.mark.integration
class TestEqcheck:
    """Test verdict exit codes and certificate output."""

    def test_equivalent_exits_zero(self, run_cli, write_json, identity_seq, shifted_identity_seq):
        """Bounded difference: exit 0 and an equivalent certificate."""
        code, out = run_cli("eqcheck", "linf", write_json("a.json", identity_seq), write_json("b.json", shifted_identity_seq))
        assert code == 0
        assert json.loads(out)["verdict"] == "equivalent"

    def test_not_equivalent_exits_one(self, run_cli, write_json, identity_op, powers_of_two_op):
        """diag(n) against diag(2^n): exit 1."""
        code, out = run_cli("eqcheck", "dom", write_json("a.json", identity_op), write_json("b.json", powers_of_two_op))
        assert code == 1
        assert json.loads(out)["verdict"] == "not_equivalent"

    @pytest.mark.parametrize(("level", "expected"), [("ERROR", 40), ("debug", 10)])
    def test_config_log_level_applies(self, run_cli, write_json, write_config, identity_seq, level, expected):
        """logging.level from config.yaml sets the library logger level."""
        import logging

        config = write_config("levelled.yaml", level=level)
        a, b = write_json("a.json", identity_seq), write_json("b.json", identity_seq)
        try:
            code, out = run_cli("eqcheck", "linf", a, b, config=config)
            assert code == 0
            assert json.loads(out)["verdict"] == "equivalent"
            assert logging.getLogger("domaingauge").level == expected
        finally:
            logging.getLogger("domaingauge").setLevel(logging.NOTSET)

    def test_same_inputs_same_bytes(self, run_cli, write_json, identity_op, powers_of_two_op):
        """Output is byte-identical across runs."""
        a, b = write_json("a.json", identity_op), write_json("b.json", powers_of_two_op)
        assert run_cli("eqcheck", "dom", a, b) == run_cli("eqcheck", "dom", a, b)

    def test_malformed_json_exits_two(self, run_cli, tmp_path, write_json, identity_seq):
        """Unparseable input: exit 2 with an error object on stdout."""
        bad = tmp_path / "bad.json"
        bad.write_text("{not json", encoding="utf-8")
        code, out = run_cli("eqcheck", "linf", str(bad), write_json("b.json", identity_seq))
        assert code == 2
        assert json.loads(out)["error"]["type"] == "RepresentationError"

    def test_missing_file_exits_two(self, run_cli, tmp_path, write_json, identity_seq):
        """A missing input file is an input error."""
        code, out = run_cli("eqcheck", "linf", str(tmp_path / "absent.json"), write_json("b.json", identity_seq))
        assert code == 2
        assert json.loads(out)["error"]["type"] == "FileNotFoundError"

    def test_out_of_class_exits_two(self, run_cli, write_json):
        """Negative dimensions are rejected, never reported as not equivalent."""
        bad = {"prefix": [-1], "tail": {"kind": "const", "value": 0}}
        code, _ = run_cli("eqcheck", "esigma", write_json("a.json", bad), write_json("b.json", DIMS))
        assert code == 2

    def test_invariant_failure_exits_three(self, run_cli, write_json, identity_seq, monkeypatch):
        """A failed self-check maps to exit 3."""
        from domaingauge.errors import InvariantViolationError

        def broken(*args, **kwargs):
            raise InvariantViolationError("self-check failed")

        monkeypatch.setattr("domaingauge_cli.commands.eqcheck.issue_certificate", broken)
        path = write_json("a.json", identity_seq)
        code, out = run_cli("eqcheck", "linf", path, path)
        assert code == 3
        assert json.loads(out)["error"]["type"] == "InvariantViolationError"


@pytest.mark.integration
class TestVerify:
    """Test certificate round trips through files."""

    def test_issued_certificate_verifies(self, run_cli, write_json, tmp_path):
        """eqcheck --output then verify exits 0."""
        cert = tmp_path / "cert.json"
        a, b = write_json("a.json", DIMS), write_json("b.json", {"prefix": [], "tail": {"kind": "const", "value": 2}})
        code, out = run_cli("eqcheck", "esigma", a, b, "--output", str(cert))
        assert code == 1
        assert out == ""
        code, out = run_cli("verify", str(cert))
        assert code == 0
        assert json.loads(out)["ok"] is True

    def test_tampered_certificate_fails(self, run_cli, write_json, tmp_path, identity_seq, shifted_identity_seq):
        """A certificate whose verdict was edited exits 1."""
        cert = tmp_path / "cert.json"
        run_cli("eqcheck", "linf", write_json("a.json", identity_seq), write_json("b.json", shifted_identity_seq), "-o", str(cert))
        data = json.loads(cert.read_text(encoding="utf-8"))
        data["verdict"] = "not_equivalent"
        code, out = run_cli("verify", write_json("tampered.json", data))
        assert code == 1
        assert json.loads(out)["ok"] is False


@pytest.mark.integration
class TestReduceAndDims:
    """Test the reduction maps from the command line."""

    def test_psik_then_dims(self, run_cli, write_json, tmp_path):
        """dims of the psik image recovers the input."""
        from domaingauge.seqrep.codec import dim_seq_from_json

        image = tmp_path / "image.json"
        assert run_cli("reduce", "psik", write_json("dims.json", DIMS), "-o", str(image))[0] == 0
        code, out = run_cli("dims", str(image))
        assert code == 0
        assert dim_seq_from_json(json.loads(out)) == dim_seq_from_json(DIMS)

    def test_tilde(self, run_cli, write_json):
        """tilde of a constant negative sequence puts |x| in the odd slots."""
        from domaingauge.seqrep.codec import real_seq_from_json

        code, out = run_cli("reduce", "tilde", write_json("x.json", {"prefix": [], "tail": {"kind": "const", "value": -2}}))
        assert code == 0
        assert real_seq_from_json(json.loads(out)).values(4) == [0, 2, 0, 2]

    def test_phi_rejects_spectrum_operators(self, run_cli, write_json, tmp_path):
        """phi takes diag_seq operators only."""
        image = tmp_path / "image.json"
        run_cli("reduce", "psik", write_json("dims.json", DIMS), "-o", str(image))
        code, _ = run_cli("reduce", "phi", str(image))
        assert code == 2


@pytest.mark.integration
class TestWonderland:
    """Test the convergence tables."""

    def test_lemma44_csv(self, run_cli):
        """CSV with one row per n."""
        code, out = run_cli("wonderland", "lemma44", "--n-max", "3", "--depth", "3")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,bound,srt_dist"
        assert len(lines) == 4

    def test_wiener_json(self, run_cli):
        """The point mass control gives average 1."""
        code, out = run_cli("wonderland", "wiener", "--measure", "point", "--T", "10", "--samples", "1001", "--format", "json")
        assert code == 0
        rows = json.loads(out)["rows"]
        assert rows[0]["measure"] == "point"
        assert rows[0]["average"] == pytest.approx(1.0)

    def test_wiener_comma_separated_horizons(self, run_cli):
        """The horizons may be given as one comma-separated list."""
        code, out = run_cli("wonderland", "wiener", "--T", "1e2,1e3,1e4", "--measure", "point", "--samples", "1001", "--format", "json")
        assert code == 0
        rows = json.loads(out)["rows"]
        assert [row["T"] for row in rows] == [100.0, 1000.0, 10000.0]

    def test_interleave_from_array(self, run_cli, write_json):
        """A plain JSON array supplies the diagonal values."""
        code, out = run_cli("wonderland", "interleave", "--spec", write_json("a.json", [1, 2, 3]), "--reps", "2", "--format", "json")
        assert code == 0
        assert [row["k"] for row in json.loads(out)["rows"]] == [1, 2, 3]

    def test_interleave_classes_kept(self, run_cli, write_json):
        """--k limits the interleave table to k = 1 .. K."""
        spec = write_json("a.json", [1, 2, 3, 4])
        _, all_rows = run_cli("wonderland", "interleave", "--spec", spec, "--reps", "2", "--format", "json")
        code, out = run_cli("wonderland", "interleave", "--spec", spec, "--reps", "2", "--k", "2", "--format", "json")
        assert code == 0
        assert [row["k"] for row in json.loads(out)["rows"]] == [1, 2]
        assert out != all_rows

    @pytest.mark.parametrize(
        "argv",
        [
            ["interleave", "--reps", "2"],
            ["pipeline", "--k", "2", "--depth", "2", "--m-max", "2"],
        ],
    )
    def test_config_dimension_cap(self, run_cli, write_json, write_config, argv):
        """A max_dimension set in config.yaml bounds the interleave and pipeline matrices."""
        spec = write_json("a.json", [1, 2, 3])
        capped = write_config("capped.yaml", max_dimension=8)
        code, out = run_cli("wonderland", *argv, "--spec", spec, config=capped)
        assert code == 2
        assert "exceeds the cap 8" in json.loads(out)["error"]["message"]
        assert run_cli("wonderland", *argv, "--spec", spec)[0] == 0

    def test_pipeline_from_sequence(self, run_cli, write_json, identity_seq):
        """A RealSeqRep spec is sampled for its first values."""
        spec = write_json("a.json", identity_seq)
        code, out = run_cli("wonderland", "pipeline", "--spec", spec, "--length", "6", "--k", "2", "--depth", "2", "--m-max", "3")
        assert code == 0
        assert out.splitlines()[0] == "m,bound,interleave_dist,sc_dist,total_dist"

    def test_missing_spec(self, run_cli):
        """interleave without --spec is an input error."""
        code, _ = run_cli("wonderland", "interleave")
        assert code == 2


@pytest.mark.integration
class TestVerifyBireduction:
    """Test the harness command."""

    def test_single_suite(self, run_cli):
        """A small psik run passes."""
        code, out = run_cli("verify-bireduction", "--suite", "psik", "--trials", "5", "--seed", "1")
        assert code == 0
        data = json.loads(out)
        assert data["ok"] is True
        assert [s["harness"] for s in data["suites"]] == ["psik"]

    def test_douglas_tolerance(self, run_cli):
        """The Douglas suite accepts an explicit tolerance."""
        code, out = run_cli("verify-bireduction", "--suite", "douglas", "--trials", "60", "--tol", "1e-8")
        assert code == 0
        assert json.loads(out)["suites"][0]["trials"] == 60
