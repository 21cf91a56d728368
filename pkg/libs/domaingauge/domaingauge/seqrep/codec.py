"""JSON encoding of exact reals, lanes and sequence representations.

Rationals are ``{"num": n, "den": d}`` (ints and exact decimal strings are also
accepted on input). Reals with log terms add ``"logs": [{"arg": r, "coef": c}]``.
INF is the string ``"inf"``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from domaingauge.errors import RepresentationError
from domaingauge.seqrep.extnat import ExtNat, extnat
from domaingauge.seqrep.lanes import AffineLane, ConstLane, GeometricLane, Lane, LogLane, affine, log_lane
from domaingauge.seqrep.reals import Real, as_fraction
from domaingauge.seqrep.sequence import DimSeqRep, DimTail, RealSeqRep, RealTail


def loads(text: str) -> Any:
    """Parse JSON text, reading decimal literals as exact Fractions.

    Raises:
        RepresentationError: If the text is not valid JSON
    """
    try:
        return json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as e:
        raise RepresentationError(f"Malformed JSON: {e}") from e


def rational_to_json(value: Fraction) -> dict[str, int]:
    """Encode a rational."""
    return {"num": value.numerator, "den": value.denominator}


def rational_from_json(data: Any) -> Fraction:
    """Decode a rational from an int, string, Fraction or ``{"num", "den"}`` object."""
    if isinstance(data, dict):
        if set(data) - {"num", "den"} or "num" not in data:
            raise RepresentationError(f"Rational objects need 'num' and optional 'den', got {sorted(data)}")
        den = data.get("den", 1)
        if not isinstance(data["num"], int) or not isinstance(den, int) or den == 0:
            raise RepresentationError(f"Invalid rational {data!r}")
        return Fraction(data["num"], den)
    return as_fraction(data)


def real_to_json(value: Real) -> dict[str, Any]:
    """Encode an exact real."""
    payload: dict[str, Any] = rational_to_json(value.rational)
    if value.logs:
        payload["logs"] = [{"arg": rational_to_json(a), "coef": rational_to_json(c)} for a, c in value.logs]
    return payload


def real_from_json(data: Any) -> Real:
    """Decode an exact real."""
    if isinstance(data, dict) and "logs" in data:
        rational = rational_from_json({k: v for k, v in data.items() if k != "logs"})
        terms = data["logs"]
        if not isinstance(terms, list):
            raise RepresentationError("'logs' must be a list")
        try:
            logs = [(rational_from_json(t["arg"]), rational_from_json(t["coef"])) for t in terms]
        except (KeyError, TypeError) as e:
            raise RepresentationError(f"Invalid log term in {terms!r}") from e
        return Real(rational, logs)
    return Real(rational_from_json(data))


def extnat_to_json(value: ExtNat) -> int | str:
    """Encode an extended natural."""
    return value.to_json()


def lane_to_json(lane: Lane) -> dict[str, Any]:
    """Encode a lane."""
    if isinstance(lane, ConstLane):
        return {"kind": "const", "value": real_to_json(lane.value)}
    if isinstance(lane, AffineLane):
        return {"kind": "affine", "slope": real_to_json(lane.slope), "intercept": real_to_json(lane.intercept)}
    if isinstance(lane, GeometricLane):
        return {"kind": "geometric", "coeff": rational_to_json(lane.coeff), "ratio": rational_to_json(lane.ratio)}
    if isinstance(lane, LogLane):
        return {"kind": "log", "scale": rational_to_json(lane.scale), "inner": lane_to_json(lane.inner)}
    raise RepresentationError(f"Unknown lane {lane!r}")


def lane_from_json(data: Any) -> Lane:
    """Decode a lane."""
    kind = _kind(data)
    try:
        if kind == "const":
            return ConstLane(real_from_json(data["value"]))
        if kind == "affine":
            return affine(real_from_json(data["slope"]), real_from_json(data["intercept"]))
        if kind == "geometric":
            return GeometricLane(rational_from_json(data["coeff"]), rational_from_json(data["ratio"]))
        if kind == "log":
            return log_lane(rational_from_json(data["scale"]), lane_from_json(data["inner"]))
    except KeyError as e:
        raise RepresentationError(f"Lane of kind {kind!r} is missing field {e}") from e
    raise RepresentationError(f"Unknown lane kind {kind!r}")


def real_tail_to_json(tail: RealTail) -> dict[str, Any]:
    """Encode a real tail using the most specific kind."""
    kind = tail.kind
    if kind in {"const", "periodic"}:
        values = [real_to_json(lane.value) for lane in tail.lanes if isinstance(lane, ConstLane)]
        return {"kind": "const", "value": values[0]} if kind == "const" else {"kind": "periodic", "values": values}
    if kind in {"affine", "geometric"}:
        return lane_to_json(tail.lanes[0])
    return {"kind": "laned", "lanes": [lane_to_json(lane) for lane in tail.lanes]}


def real_tail_from_json(data: Any) -> RealTail:
    """Decode a real tail.

    Raises:
        RepresentationError: On unknown kinds, missing fields or invalid parameters
    """
    kind = _kind(data)
    try:
        if kind == "const":
            return RealTail((ConstLane(real_from_json(data["value"])),))
        if kind == "periodic":
            values = data["values"]
            if not isinstance(values, list) or not values:
                raise RepresentationError("Periodic tails need a nonempty 'values' list")
            return RealTail(tuple(ConstLane(real_from_json(v)) for v in values))
        if kind == "affine":
            return RealTail((affine(real_from_json(data["slope"]), real_from_json(data["intercept"])),))
        if kind == "geometric":
            coeff = rational_from_json(data["coeff"])
            if coeff <= 0:
                raise RepresentationError(f"Geometric tails need coeff > 0, got {coeff}")
            return RealTail((GeometricLane(coeff, rational_from_json(data["ratio"])),))
        if kind == "laned":
            lanes = data["lanes"]
            if not isinstance(lanes, list) or not lanes:
                raise RepresentationError("Laned tails need a nonempty 'lanes' list")
            return RealTail(tuple(lane_from_json(lane) for lane in lanes))
    except KeyError as e:
        raise RepresentationError(f"Tail of kind {kind!r} is missing field {e}") from e
    raise RepresentationError(f"Unknown real tail kind {kind!r}")


def real_seq_to_json(seq: RealSeqRep) -> dict[str, Any]:
    """Encode a RealSeqRep."""
    return {"prefix": [real_to_json(v) for v in seq.prefix], "tail": real_tail_to_json(seq.tail)}


def real_seq_from_json(data: Any) -> RealSeqRep:
    """Decode a RealSeqRep."""
    prefix, tail = _split_seq(data)
    return RealSeqRep(tuple(real_from_json(v) for v in prefix), real_tail_from_json(tail))


def dim_seq_to_json(seq: DimSeqRep) -> dict[str, Any]:
    """Encode a DimSeqRep."""
    values = [v.to_json() for v in seq.tail.values]
    tail = {"kind": "const", "value": values[0]} if seq.tail.kind == "const" else {"kind": "periodic", "values": values}
    return {"prefix": [v.to_json() for v in seq.prefix], "tail": tail}


def dim_seq_from_json(data: Any) -> DimSeqRep:
    """Decode a DimSeqRep; only Const and Periodic tails are admitted."""
    prefix, tail = _split_seq(data)
    kind = _kind(tail)
    try:
        if kind == "const":
            dim_tail = DimTail((extnat(tail["value"]),))
        elif kind == "periodic":
            if not isinstance(tail["values"], list) or not tail["values"]:
                raise RepresentationError("Periodic tails need a nonempty 'values' list")
            dim_tail = DimTail(tuple(extnat(v) for v in tail["values"]))
        else:
            raise RepresentationError(f"Dimension sequences admit only const and periodic tails, got {kind!r}")
    except KeyError as e:
        raise RepresentationError(f"Tail of kind {kind!r} is missing field {e}") from e
    return DimSeqRep(tuple(extnat(v) for v in prefix), dim_tail)


def _kind(data: Any) -> str:
    if not isinstance(data, dict) or not isinstance(data.get("kind"), str):
        raise RepresentationError(f"Expected an object with a string 'kind', got {data!r}")
    return data["kind"]


def _split_seq(data: Any) -> tuple[list[Any], Any]:
    if not isinstance(data, dict) or "tail" not in data:
        raise RepresentationError("Sequences are objects with 'prefix' and 'tail'")
    prefix = data.get("prefix", [])
    if not isinstance(prefix, list):
        raise RepresentationError("'prefix' must be a list")
    return prefix, data["tail"]
