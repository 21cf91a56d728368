"""``wonderland``: convergence tables for the singular continuous numerics."""

from __future__ import annotations

import argparse
from typing import Any

import numpy as np
import structlog
from domaingauge.config.core import CoreConfig
from domaingauge.errors import RepresentationError
from domaingauge.seqrep.codec import real_seq_from_json
from domaingauge.seqrep.reals import as_fraction
from domaingauge.spectra import cantor_cf, density_pipeline, interleave_table, lebesgue_cf, lemma44_table, point_mass_cf, wiener_table
from domaingauge.spectra.wiener import CharacteristicFunction

from domaingauge_cli.core import DEFAULT_HORIZONS, DEFAULT_INTERLEAVE_LENGTH, DEFAULT_PIPELINE_CLASSES, ExitCode
from domaingauge_cli.rendering import dumps, read_json, rows_to_csv, write_output

logger = structlog.get_logger(__name__)

TABLES = ("lemma44", "wiener", "interleave", "pipeline")
MEASURES = ("cantor", "lebesgue", "point")


def load_values(data: Any, length: int = DEFAULT_INTERLEAVE_LENGTH) -> np.ndarray:
    """Read ``a_0 ... a_{N-1}`` from a JSON array of numbers or the first ``length`` values of a RealSeqRep."""
    if isinstance(data, list):
        if not data:
            raise RepresentationError("The value list is empty")
        return np.array([float(as_fraction(v)) for v in data])
    seq = real_seq_from_json(data)
    return np.array([float(v) for v in seq.values(length)])


def parse_horizons(text: str) -> list[float]:
    """Parse one ``--T`` token; commas separate several horizons, as in ``1e2,1e3,1e4``."""
    try:
        horizons = [float(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"invalid horizon list {text!r}") from e
    if not horizons:
        raise argparse.ArgumentTypeError("empty horizon list")
    return horizons


def characteristic_function(measure: str, terms: int) -> CharacteristicFunction:
    """The characteristic function of the named probability measure."""
    if measure == "cantor":
        return lambda t: cantor_cf(t, terms)
    if measure == "lebesgue":
        return lebesgue_cf
    if measure == "point":
        return point_mass_cf
    raise RepresentationError(f"Unknown measure {measure!r}; expected one of {', '.join(MEASURES)}")


def build_table(args: argparse.Namespace, config: CoreConfig) -> list[dict[str, Any]]:
    """Compute the rows of the requested table."""
    spectra = config.spectra
    depth = spectra.depth if args.depth is None else args.depth
    if args.table == "lemma44":
        return lemma44_table(args.n_max, depth, spectra.max_dimension)
    if args.table == "wiener":
        samples = spectra.wiener_samples if args.samples is None else args.samples
        terms = spectra.cf_terms if args.terms is None else args.terms
        horizons = list(DEFAULT_HORIZONS) if args.T is None else [t for group in args.T for t in group]
        rows = wiener_table(characteristic_function(args.measure, terms), horizons, samples)
        return [{"measure": args.measure, **row} for row in rows]
    if args.spec is None:
        raise RepresentationError(f"wonderland {args.table} needs --spec")
    values = load_values(read_json(args.spec), args.length)
    if args.table == "interleave":
        return interleave_table(values, args.reps, args.k, spectra.max_dimension)
    k = DEFAULT_PIPELINE_CLASSES if args.k is None else args.k
    return density_pipeline(values, k, depth, range(1, args.m_max + 1), spectra.max_dimension)


def run_wonderland(args: argparse.Namespace, config: CoreConfig) -> int:
    """Print the table as CSV, or as JSON with ``--format json``."""
    rows = build_table(args, config)
    text = dumps({"table": args.table, "rows": rows}) if args.format == "json" else rows_to_csv(rows)
    write_output(text, args.output)
    logger.info("Built table", table=args.table, rows=len(rows))
    return ExitCode.OK
