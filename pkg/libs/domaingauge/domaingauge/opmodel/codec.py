"""JSON encoding of operators.

``{"kind": "diag_seq", "eigenvalues": <RealSeqRep>, "encoding": "direct", "index_scheme": "std"}``
or ``{"kind": "spectrum", "blocks": [{"value": v, "multiplicity": m}], "rule": {...} | null, "index_scheme": "std"}``.
"""

from __future__ import annotations

from typing import Any

from domaingauge.errors import RepresentationError
from domaingauge.opmodel.operators import DEFAULT_INDEX_SCHEME, DiagOpSeq, Encoding, SpectrumBlock, SpectrumRep, ValueRule
from domaingauge.seqrep.codec import dim_seq_from_json, dim_seq_to_json, rational_from_json, rational_to_json, real_seq_from_json, real_seq_to_json
from domaingauge.seqrep.extnat import extnat

Operator = DiagOpSeq | SpectrumRep


def operator_to_json(op: Operator) -> dict[str, Any]:
    """Encode a DiagOpSeq or SpectrumRep."""
    if isinstance(op, DiagOpSeq):
        return {
            "kind": "diag_seq",
            "eigenvalues": real_seq_to_json(op.eigenvalues),
            "encoding": op.encoding.value,
            "index_scheme": op.index_scheme,
        }
    rule = None
    if op.rule is not None:
        rule = {"power": op.rule.power, "multiplicities": dim_seq_to_json(op.rule.multiplicities)}
    return {
        "kind": "spectrum",
        "blocks": [{"value": rational_to_json(b.value), "multiplicity": b.multiplicity.to_json()} for b in op.blocks],
        "rule": rule,
        "index_scheme": op.index_scheme,
    }


def operator_from_json(data: Any) -> Operator:
    """Decode an operator by its ``kind``.

    Raises:
        RepresentationError: On unknown kinds or missing fields
    """
    if not isinstance(data, dict):
        raise RepresentationError(f"Operators are JSON objects, got {data!r}")
    kind = data.get("kind")
    scheme = data.get("index_scheme", DEFAULT_INDEX_SCHEME)
    if not isinstance(scheme, str):
        raise RepresentationError("'index_scheme' must be a string")
    try:
        if kind == "diag_seq":
            encoding = data.get("encoding", Encoding.DIRECT.value)
            if encoding not in {e.value for e in Encoding}:
                raise RepresentationError(f"Unknown encoding {encoding!r}")
            return DiagOpSeq(real_seq_from_json(data["eigenvalues"]), Encoding(encoding), scheme)
        if kind == "spectrum":
            return SpectrumRep(tuple(_block(b) for b in data.get("blocks", [])), _rule(data.get("rule")), scheme)
    except KeyError as e:
        raise RepresentationError(f"Operator of kind {kind!r} is missing field {e}") from e
    raise RepresentationError(f"Unknown operator kind {kind!r}")


def _block(data: Any) -> SpectrumBlock:
    if not isinstance(data, dict):
        raise RepresentationError(f"Spectrum blocks are objects, got {data!r}")
    return SpectrumBlock(rational_from_json(data["value"]), extnat(data["multiplicity"]))


def _rule(data: Any) -> ValueRule | None:
    if data is None:
        return None
    if not isinstance(data, dict):
        raise RepresentationError(f"Value rules are objects, got {data!r}")
    power = data.get("power", 2)
    if not isinstance(power, int):
        raise RepresentationError(f"Value rule power must be an integer, got {power!r}")
    return ValueRule(power, dim_seq_from_json(data["multiplicities"]))
