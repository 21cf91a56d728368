"""Command handlers for the CLI.

Each handler takes the parsed arguments and the loaded configuration and
returns the process exit code.
"""

from domaingauge_cli.commands.eqcheck import run_eqcheck
from domaingauge_cli.commands.reduce import run_dims, run_reduce
from domaingauge_cli.commands.verify import run_verify, run_verify_bireduction
from domaingauge_cli.commands.wonderland import run_wonderland

__all__ = ["run_dims", "run_eqcheck", "run_reduce", "run_verify", "run_verify_bireduction", "run_wonderland"]
