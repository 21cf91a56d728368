"""Unit tests for argument parsing."""

import pytest


class TestParseArgs:
    """Test the subcommand surface."""

    def test_eqcheck(self):
        """Relation and both inputs are positional."""
        from domaingauge_cli.main import parse_args

        args = parse_args(["eqcheck", "esigma", "a.json", "b.json"])
        assert (args.command, args.relation, args.a, args.b, args.power) == ("eqcheck", "esigma", "a.json", "b.json", 1)

    def test_reduce_power(self):
        """psik takes a band power."""
        from domaingauge_cli.main import parse_args

        args = parse_args(["reduce", "psik", "-", "--power", "2"])
        assert args.map == "psik"
        assert args.power == 2

    def test_wonderland_defaults(self):
        """Tables default to CSV and the standard horizons."""
        from domaingauge_cli.main import parse_args

        args = parse_args(["wonderland", "wiener"])
        assert args.format == "csv"
        assert args.T is None
        assert args.k is None
        assert args.measure == "cantor"
        assert args.depth is None

    @pytest.mark.parametrize(
        "horizons",
        [["1e2,1e3,1e4"], ["1e2", "1e3", "1e4"], ["1e2,1e3", "1e4"]],
    )
    def test_horizon_forms(self, horizons):
        """--T accepts comma-separated and space-separated horizons alike."""
        from domaingauge_cli.main import parse_args

        args = parse_args(["wonderland", "wiener", "--T", *horizons])
        assert [t for group in args.T for t in group] == [100.0, 1000.0, 10000.0]

    def test_bad_horizon(self):
        """A non-numeric horizon is a usage error."""
        from domaingauge_cli.main import parse_args

        with pytest.raises(SystemExit) as excinfo:
            parse_args(["wonderland", "wiener", "--T", "1e2,soon"])
        assert excinfo.value.code == 2

    def test_harness_defaults(self):
        """verify-bireduction runs every suite unless told otherwise."""
        from domaingauge_cli.main import parse_args

        args = parse_args(["verify-bireduction"])
        assert args.suite == "all"
        assert args.trials is None

    @pytest.mark.parametrize("argv", [[], ["eqcheck", "e2", "a", "b"], ["reduce", "psik", "-", "--power", "3"]])
    def test_invalid(self, argv):
        """Usage errors exit with code 2."""
        from domaingauge_cli.main import parse_args

        with pytest.raises(SystemExit) as excinfo:
            parse_args(argv)
        assert excinfo.value.code == 2

    def test_run_maps_usage_errors(self):
        """run returns the usage exit code instead of raising."""
        from domaingauge_cli import run

        assert run(["wonderland", "nope"]) == 2
