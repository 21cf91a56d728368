"""``reduce`` and ``dims``: apply a reduction map or compute band dimensions."""

from __future__ import annotations

import argparse
from typing import Any

from domaingauge.config.core import CoreConfig
from domaingauge.errors import RepresentationError
from domaingauge.opmodel import DiagOpSeq, assoc_dims, operator_from_json, operator_to_json
from domaingauge.reductions import phi, psi, psi_k, tilde
from domaingauge.seqrep.codec import dim_seq_from_json, dim_seq_to_json, real_seq_from_json, real_seq_to_json

from domaingauge_cli.core import ExitCode
from domaingauge_cli.rendering import dumps, read_json, write_output

MAPS = ("tilde", "phi", "psi", "psik")


def apply_map(name: str, data: Any, power: int = 1) -> dict[str, Any]:
    """Apply a reduction map to a decoded JSON input and encode the image.

    - ``tilde``: RealSeqRep to RealSeqRep
    - ``phi``: diag_seq operator to RealSeqRep
    - ``psi``: RealSeqRep to diag_seq operator
    - ``psik``: DimSeqRep in X0 to spectrum operator
    """
    if name == "tilde":
        return real_seq_to_json(tilde(real_seq_from_json(data)).seq)
    if name == "phi":
        op = operator_from_json(data)
        if not isinstance(op, DiagOpSeq):
            raise RepresentationError("phi takes a diag_seq operator")
        return real_seq_to_json(phi(op))
    if name == "psi":
        return operator_to_json(psi(real_seq_from_json(data)))
    if name == "psik":
        return operator_to_json(psi_k(dim_seq_from_json(data), power))
    raise RepresentationError(f"Unknown map {name!r}; expected one of {', '.join(MAPS)}")


def run_reduce(args: argparse.Namespace, config: CoreConfig) -> int:  # noqa: ARG001
    """Write the image of the input under the chosen map."""
    write_output(dumps(apply_map(args.map, read_json(args.input), args.power)), args.output)
    return ExitCode.OK


def run_dims(args: argparse.Namespace, config: CoreConfig) -> int:  # noqa: ARG001
    """Print ``assoc_dims`` of an operator."""
    dims = assoc_dims(operator_from_json(read_json(args.input)), args.power)
    write_output(dumps(dim_seq_to_json(dims)), args.output)
    return ExitCode.OK
