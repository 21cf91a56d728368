"""``eqcheck``: decide a relation and print its certificate."""

from __future__ import annotations

import argparse

import structlog
from domaingauge.config.core import CoreConfig

from domaingauge_cli.certificates import decode_input, issue_certificate
from domaingauge_cli.core import ExitCode
from domaingauge_cli.rendering import dumps, read_json, write_output

logger = structlog.get_logger(__name__)


def run_eqcheck(args: argparse.Namespace, config: CoreConfig) -> int:
    """Exit 0 when the inputs are equivalent, 1 when they are not."""
    a = decode_input(args.relation, read_json(args.a))
    b = decode_input(args.relation, read_json(args.b))
    certificate = issue_certificate(args.relation, a, b, config.decision, args.power)
    write_output(dumps(certificate.to_dict()), args.output)
    logger.info("Issued certificate", relation=args.relation, equivalent=certificate.equivalent)
    return ExitCode.OK if certificate.equivalent else ExitCode.NOT_EQUIVALENT
