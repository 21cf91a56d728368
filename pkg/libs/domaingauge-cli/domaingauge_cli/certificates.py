"""Certificates for equivalence verdicts and their independent re-check.

A certificate records the relation, the verdict, the witness payload, both
inputs inline and the SHA-256 of each input's canonical JSON. ``verify``
re-runs the decision and then checks the witness directly against ``evaluate``
and ``window_sum``; a certificate passes only when both agree. Sample indices
whose values would take millions of bits are checked against rigorous bounds
instead of exact values.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

import structlog
from domaingauge.config.core import DecisionConfig
from domaingauge.eqrel import (
    SampleIndex,
    SigmaWitness,
    decide_e1,
    decide_esigma,
    decide_linf,
    esigma_box,
    linf_box,
    sequence_gap_lower_bound,
    stabilization_box,
    violates,
)
from domaingauge.errors import InvariantViolationError, RepresentationError
from domaingauge.opmodel import DiagOpSeq, assoc_dims, decide_edom, operator_from_json, operator_to_json
from domaingauge.seqrep import DimSeqRep, RealSeqRep, canonical_box_length
from domaingauge.seqrep.codec import dim_seq_from_json, dim_seq_to_json, rational_from_json, real_seq_from_json, real_seq_to_json
from domaingauge.seqrep.reals import Real

from domaingauge_cli.core import TOOL_NAME
from domaingauge_cli.rendering import canonicalize, digest

logger = structlog.get_logger(__name__)

RELATIONS = ("linf", "e1", "esigma", "dom", "domu")

EQUIVALENT = "equivalent"
NOT_EQUIVALENT = "not_equivalent"


def _version() -> str:
    from domaingauge_cli import __version__

    return __version__


# =============================================================================
# Inputs
# =============================================================================

_DECODERS: dict[str, Callable[[Any], Any]] = {
    "linf": real_seq_from_json,
    "e1": real_seq_from_json,
    "esigma": dim_seq_from_json,
    "dom": operator_from_json,
    "domu": operator_from_json,
}

_ENCODERS: dict[str, Callable[[Any], dict[str, Any]]] = {
    "linf": real_seq_to_json,
    "e1": real_seq_to_json,
    "esigma": dim_seq_to_json,
    "dom": operator_to_json,
    "domu": operator_to_json,
}


def _check_relation(relation: str) -> None:
    if relation not in RELATIONS:
        raise RepresentationError(f"Unknown relation {relation!r}; expected one of {', '.join(RELATIONS)}")


def decode_input(relation: str, data: Any) -> Any:
    """Decode one input of ``relation`` from JSON."""
    _check_relation(relation)
    return _DECODERS[relation](data)


def decide(relation: str, a: Any, b: Any, config: DecisionConfig | None = None, power: int = 1) -> Any:
    """Run the decision procedure for ``relation``.

    Raises:
        RepresentationError: If the inputs do not fit the relation
    """
    _check_relation(relation)
    if relation == "linf":
        return decide_linf(a, b, config)
    if relation == "e1":
        return decide_e1(a, b)
    if relation == "esigma":
        return decide_esigma(a, b, config)
    if relation == "dom":
        if not isinstance(a, DiagOpSeq) or not isinstance(b, DiagOpSeq):
            raise RepresentationError("Domain equality compares two diag_seq operators")
        return decide_edom(a, b, config)
    return decide_esigma(assoc_dims(a, power), assoc_dims(b, power), config)


# =============================================================================
# Certificates
# =============================================================================


@dataclass(frozen=True)
class Certificate:
    """A verdict with everything needed to re-check it."""

    relation: str
    equivalent: bool
    witness: dict[str, Any]
    inputs: dict[str, Any]
    options: dict[str, Any] = field(default_factory=dict)
    version: str = field(default_factory=_version)

    def to_dict(self) -> dict[str, Any]:
        """Serialize, hashing each input."""
        return {
            "tool": TOOL_NAME,
            "version": self.version,
            "relation": self.relation,
            "verdict": EQUIVALENT if self.equivalent else NOT_EQUIVALENT,
            "witness": canonicalize(self.witness),
            "options": self.options,
            "inputs": self.inputs,
            "sha256": {name: digest(value) for name, value in self.inputs.items()},
        }

    @classmethod
    def from_dict(cls, data: Any) -> Certificate:
        """Deserialize without checking hashes.

        Raises:
            RepresentationError: If fields are missing or malformed
        """
        if not isinstance(data, dict):
            raise RepresentationError("Certificates are JSON objects")
        missing = {"tool", "version", "relation", "verdict", "witness", "inputs", "sha256"} - set(data)
        if missing:
            raise RepresentationError(f"Certificate is missing fields: {', '.join(sorted(missing))}")
        if data["tool"] != TOOL_NAME:
            raise RepresentationError(f"Not a {TOOL_NAME} certificate: tool={data['tool']!r}")
        _check_relation(data["relation"])
        if data["verdict"] not in (EQUIVALENT, NOT_EQUIVALENT):
            raise RepresentationError(f"Unknown verdict {data['verdict']!r}")
        inputs = data["inputs"]
        if not isinstance(inputs, dict) or set(inputs) != {"a", "b"}:
            raise RepresentationError("Certificate inputs must hold exactly 'a' and 'b'")
        return cls(
            relation=data["relation"],
            equivalent=data["verdict"] == EQUIVALENT,
            witness=data["witness"],
            inputs=inputs,
            options=data.get("options", {}),
            version=str(data["version"]),
        )


def issue_certificate(relation: str, a: Any, b: Any, config: DecisionConfig | None = None, power: int = 1) -> Certificate:
    """Decide ``relation`` on ``(a, b)`` and wrap the verdict.

    Raises:
        InvariantViolationError: If the fresh certificate fails its own re-check
    """
    verdict = decide(relation, a, b, config, power)
    encode = _ENCODERS[relation]
    certificate = Certificate(
        relation=relation,
        equivalent=verdict.equivalent,
        witness=verdict.to_dict(),
        inputs={"a": canonicalize(encode(a)), "b": canonicalize(encode(b))},
        options={"power": power} if relation == "domu" else {},
    )
    report = _verify_witness(certificate, a, b)
    if not report.ok:
        raise InvariantViolationError(f"Issued {relation} certificate fails its own witness check: {'; '.join(report.failures)}")
    return certificate


# =============================================================================
# Verification
# =============================================================================


@dataclass
class VerificationReport:
    """Named checks run against a certificate, with the ones that failed."""

    passed: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """Whether every check passed."""
        return not self.failures

    def check(self, name: str, condition: bool, detail: str = "") -> None:
        """Record the outcome of one check."""
        if condition:
            self.passed.append(name)
        else:
            self.failures.append(f"{name}: {detail}" if detail else name)

    def to_dict(self) -> dict[str, Any]:
        """Serialize."""
        return {"ok": self.ok, "passed": self.passed, "failures": self.failures}


def verify_certificate(data: Any, config: DecisionConfig | None = None) -> VerificationReport:
    """Re-check a certificate: input hashes, the verdict, then the witness itself.

    Raises:
        RepresentationError: If the certificate or its inputs are malformed
    """
    certificate = Certificate.from_dict(data)
    report = VerificationReport()
    hashes = data["sha256"]
    for name, value in certificate.inputs.items():
        report.check(f"sha256.{name}", isinstance(hashes, dict) and hashes.get(name) == digest(value), "input hash mismatch")

    a = decode_input(certificate.relation, certificate.inputs["a"])
    b = decode_input(certificate.relation, certificate.inputs["b"])
    power = int(certificate.options.get("power", 1))
    verdict = decide(certificate.relation, a, b, config, power)
    report.check("verdict", verdict.equivalent == certificate.equivalent, "re-decided verdict differs")
    report.check("witness", canonicalize(verdict.to_dict()) == canonicalize(certificate.witness), "re-derived witness differs")

    direct = _verify_witness(certificate, a, b)
    report.passed.extend(direct.passed)
    report.failures.extend(direct.failures)
    logger.info("Verified certificate", relation=certificate.relation, ok=report.ok, failures=len(report.failures))
    return report


def _verify_witness(certificate: Certificate, a: Any, b: Any) -> VerificationReport:
    report = VerificationReport()
    witness = certificate.witness
    try:
        if certificate.relation == "linf":
            _check_linf(report, certificate.equivalent, witness, a, b)
        elif certificate.relation == "e1":
            _check_e1(report, certificate.equivalent, witness, a, b)
        elif certificate.relation == "dom":
            _check_dom(report, certificate.equivalent, witness, a, b)
        else:
            if certificate.relation == "domu":
                power = int(certificate.options.get("power", 1))
                a, b = assoc_dims(a, power), assoc_dims(b, power)
            _check_sigma(report, certificate.equivalent, witness, a, b)
    except (KeyError, TypeError, ValueError) as e:
        report.check("witness.shape", False, f"malformed witness: {e}")
    return report


def _in_class(n: int, witness: dict[str, Any]) -> bool:
    start, period, residue = int(witness["start"]), int(witness["period"]), int(witness["residue"])
    return n >= start and (n - start) % period == residue


def _check_linf(report: VerificationReport, equivalent: bool, witness: dict[str, Any], a: RealSeqRep, b: RealSeqRep) -> None:
    if equivalent:
        bound = rational_from_json(witness["bound"])
        report.check("linf.bound", linf_box(a, b) <= bound, "a sampled difference exceeds the bound")
        return
    n = SampleIndex.from_dict(witness["sample"]).value
    report.check("linf.sample_class", _in_class(n, witness), "sample index outside its residue class")
    gap = sequence_gap_lower_bound(a, b, n)
    report.check("linf.sample", gap > int(witness["threshold"]), "sampled difference is below the threshold")


def _check_e1(report: VerificationReport, equivalent: bool, witness: dict[str, Any], a: RealSeqRep, b: RealSeqRep) -> None:
    if equivalent:
        start = int(witness["start"])
        span = canonical_box_length(a, b) * 2
        report.check("e1.agree", all(a.at(n) == b.at(n) for n in range(start, start + span)), "values differ after start")
        report.check("e1.minimal", start == 0 or a.at(start - 1) != b.at(start - 1), "start is not minimal")
        return
    n = int(witness["sample_index"])
    report.check("e1.sample_class", _in_class(n, witness), "sample index outside its residue class")
    report.check("e1.sample", a.at(n) != b.at(n), "sequences agree at the sample index")


def _check_sigma(report: VerificationReport, equivalent: bool, witness: dict[str, Any], a: DimSeqRep, b: DimSeqRep) -> None:
    if equivalent:
        k = int(witness["k"])
        box = witness["box"]
        report.check("esigma.box", esigma_box(a, b, k, int(box["n_max"]), int(box["l_max"])).holds, "window inequality fails inside the box")
        if k > 0:
            side = stabilization_box(a, b, k - 1)
            report.check("esigma.minimal", not esigma_box(a, b, k - 1, side, side).holds, "a smaller shift also works")
        return
    witnesses = [SigmaWitness(int(w["k"]), int(w["n"]), int(w["l"]), str(w["direction"])) for w in witness["witnesses"]]
    k_cap = int(witness["k_cap"])
    report.check("esigma.coverage", {w.k for w in witnesses} >= set(range(k_cap + 1)), "some shift has no witness")
    bad = [w for w in witnesses if not violates(a, b, w)]
    report.check("esigma.violations", not bad, f"{len(bad)} witnesses do not violate their inequality")


def _check_dom(report: VerificationReport, equivalent: bool, witness: dict[str, Any], a: DiagOpSeq, b: DiagOpSeq) -> None:
    if equivalent:
        low = Real.log(rational_from_json(witness["lower"]))
        high = Real.log(rational_from_json(witness["upper"]))
        ea, eb = a.eigenvalues, b.eigenvalues
        span = len(ea.prefix) + len(eb.prefix) + 2 * math.lcm(ea.period, eb.period)
        ratios = [(b.log_magnitude(n) - a.log_magnitude(n)) * 2 for n in range(span)]
        report.check("dom.bounds", all(low <= r <= high for r in ratios), "a sampled ratio T_A/T_B leaves the bounds")
        return
    n = SampleIndex.from_dict(witness["sample"]).value
    report.check("dom.sample_class", _in_class(n, witness), "sample index outside its residue class")
    gap = b.log_magnitude(n) - a.log_magnitude(n)
    report.check("dom.sample", abs(gap) > int(witness["threshold"]), "sampled log-ratio is below the threshold")
