"""Allow running as python -m domaingauge_cli."""

from domaingauge_cli.main import cli_main

if __name__ == "__main__":
    cli_main()
