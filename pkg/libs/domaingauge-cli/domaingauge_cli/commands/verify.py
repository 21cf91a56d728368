"""``verify`` and ``verify-bireduction``: re-check certificates and run the seeded harnesses."""

from __future__ import annotations

import argparse
from collections.abc import Callable

import structlog
from domaingauge.config.core import CoreConfig
from domaingauge.reductions import HarnessReport, verify_bireduction, verify_douglas, verify_esigma, verify_psik_roundtrip

from domaingauge_cli.certificates import verify_certificate
from domaingauge_cli.core import ExitCode, console
from domaingauge_cli.rendering import dumps, read_json, write_output

logger = structlog.get_logger(__name__)

# Trials per suite when --trials is not given
SUITE_TRIALS = {"bireduction": 1000, "esigma": 500, "psik": 500, "douglas": 500}
SUITES = (*SUITE_TRIALS, "all")


def run_verify(args: argparse.Namespace, config: CoreConfig) -> int:
    """Exit 0 when every check on the certificate passes, 1 otherwise."""
    report = verify_certificate(read_json(args.certificate), config.decision)
    write_output(dumps(report.to_dict()), args.output)
    if not report.ok:
        for failure in report.failures:
            console.print(f"[red]✗[/red] {failure}")
    return ExitCode.OK if report.ok else ExitCode.NOT_EQUIVALENT


def _suite_runner(name: str, config: CoreConfig, tol: float) -> Callable[[int, int], HarnessReport]:
    if name == "bireduction":
        return lambda trials, seed: verify_bireduction(trials, seed, config.decision, config.harness)
    if name == "esigma":
        return lambda trials, seed: verify_esigma(trials, seed, config.decision, config.harness)
    if name == "psik":
        return lambda trials, seed: verify_psik_roundtrip(trials, seed, config.harness)
    return lambda trials, seed: verify_douglas(trials, seed, tol=tol)


def run_harnesses(suite: str, config: CoreConfig, trials: int | None = None, seed: int | None = None, tol: float | None = None) -> list[HarnessReport]:
    """Run one suite, or all of them, with a shared seed."""
    names = list(SUITE_TRIALS) if suite == "all" else [suite]
    seed = config.harness.seed if seed is None else seed
    tol = config.spectra.tol if tol is None else tol
    reports = []
    for name in names:
        count = SUITE_TRIALS[name] if trials is None else trials
        reports.append(_suite_runner(name, config, tol)(count, seed))
        logger.info("Harness finished", suite=name, trials=count, ok=reports[-1].ok)
    return reports


def run_verify_bireduction(args: argparse.Namespace, config: CoreConfig) -> int:
    """Exit 1 when any harness records a discrepancy."""
    reports = run_harnesses(args.suite, config, args.trials, args.seed, args.tol)
    ok = all(r.ok for r in reports)
    write_output(dumps({"ok": ok, "suites": [r.to_dict() for r in reports]}), args.output)
    return ExitCode.OK if ok else ExitCode.NOT_EQUIVALENT
