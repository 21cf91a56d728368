"""Seeded harnesses that check the reduction chains verdict for verdict.

Each harness draws its inputs from a ``numpy.random.Generator`` seeded per
trial, so a report is reproducible from ``(seed, trials)`` and any single trial
can be replayed on its own. Disagreements and unexpected errors become report
entries; they never abort the run.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np
import structlog

from domaingauge.config.core import DecisionConfig, HarnessConfig
from domaingauge.eqrel.esigma import compose_sigma_witnesses, decide_esigma, esigma_box, stabilization_box, violates
from domaingauge.eqrel.linf import decide_linf
from domaingauge.eqrel.verdicts import SigmaEquivalent
from domaingauge.errors import DomainGaugeError
from domaingauge.opmodel.dims import assoc_dims, enumerate_spectrum
from domaingauge.opmodel.domains import decide_edom
from domaingauge.opmodel.douglas import douglas_findim
from domaingauge.opmodel.operators import DiagOpSeq, Encoding
from domaingauge.reductions.maps import phi, psi, tilde
from domaingauge.reductions.packing import psi_k
from domaingauge.seqrep.codec import dim_seq_to_json, real_seq_to_json
from domaingauge.seqrep.extnat import INF, ExtNat
from domaingauge.seqrep.lanes import AffineLane, ConstLane, GeometricLane, Lane, affine
from domaingauge.seqrep.reals import Real
from domaingauge.seqrep.sequence import DimSeqRep, DimTail, RealSeqRep, RealTail, agree_on_box

logger = structlog.get_logger(__name__)

RealPairSource = Callable[[np.random.Generator], tuple[RealSeqRep, RealSeqRep]]
OpPairSource = Callable[[np.random.Generator], tuple[DiagOpSeq, DiagOpSeq]]

_RATIOS = (Fraction(2), Fraction(3), Fraction(3, 2), Fraction(4))
_DENOMINATORS = (1, 1, 2, 3)


@dataclass
class HarnessReport:
    """Outcome of one harness run."""

    name: str
    trials: int
    seed: int
    checks: Counter[str] = field(default_factory=Counter)
    discrepancies: list[dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """True when no trial disagreed or failed."""
        return not self.discrepancies

    def agree(self, check: str) -> None:
        """Count one passing check."""
        self.checks[check] += 1

    def disagree(self, check: str, trial: int, **details: Any) -> None:
        """Record a failing check."""
        self.discrepancies.append({"check": check, "trial": trial, **details})
        logger.warning("Harness discrepancy", harness=self.name, check=check, trial=trial)

    def to_dict(self) -> dict[str, Any]:
        """JSON form."""
        return {
            "harness": self.name,
            "trials": self.trials,
            "seed": self.seed,
            "checks": dict(sorted(self.checks.items())),
            "discrepancies": self.discrepancies,
            "ok": self.ok,
        }


def _trial_rngs(seed: int, trials: int) -> list[np.random.Generator]:
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(trials)]


# =============================================================================
# Generators
# =============================================================================


def random_rational(rng: np.random.Generator, bound: int, *, nonzero: bool = False) -> Fraction:
    """A rational ``p/q`` with ``|p/q| <= bound`` and a small denominator."""
    den = int(rng.choice(_DENOMINATORS))
    while True:
        value = Fraction(int(rng.integers(-bound * den, bound * den + 1)), den)
        if value or not nonzero:
            return value


def random_lane(rng: np.random.Generator, cfg: HarnessConfig, kinds: tuple[str, ...] = ("const", "affine", "geometric")) -> Lane:
    """A rational Const, Affine or Geometric lane."""
    kind = kinds[int(rng.integers(len(kinds)))]
    if kind == "affine":
        return affine(random_rational(rng, cfg.max_value, nonzero=True), random_rational(rng, cfg.max_value))
    if kind == "geometric":
        return GeometricLane(random_rational(rng, cfg.max_value, nonzero=True), _RATIOS[int(rng.integers(len(_RATIOS)))])
    return ConstLane(Real(random_rational(rng, cfg.max_value)))


def random_real_seq(rng: np.random.Generator, cfg: HarnessConfig | None = None) -> RealSeqRep:
    """A rational sequence over every tail kind: const, periodic, affine, geometric and mixed lanes."""
    cfg = cfg or HarnessConfig()
    prefix = [random_rational(rng, cfg.max_value) for _ in range(int(rng.integers(cfg.max_prefix + 1)))]
    shape = int(rng.integers(4))
    period = int(rng.integers(1, cfg.max_period + 1))
    if shape == 0:
        lanes = [random_lane(rng, cfg, ("const",)) for _ in range(period)]
    elif shape == 1:
        lanes = [random_lane(rng, cfg, ("affine",))]
    elif shape == 2:
        lanes = [random_lane(rng, cfg, ("geometric",))]
    else:
        lanes = [random_lane(rng, cfg) for _ in range(period)]
    return RealSeqRep(tuple(Real(v) for v in prefix), RealTail(tuple(lanes)))


def _perturb_lane(rng: np.random.Generator, lane: Lane, cfg: HarnessConfig, *, bounded: bool) -> Lane:
    """Shift a lane by a constant, or (when not ``bounded``) change its growth."""
    if bounded:
        if isinstance(lane, GeometricLane):
            return lane
        return lane.shifted(Real(random_rational(rng, cfg.max_value)))
    if isinstance(lane, AffineLane):
        return affine(lane.slope + Real(random_rational(rng, cfg.max_value, nonzero=True)), lane.intercept)
    if isinstance(lane, GeometricLane):
        return GeometricLane(lane.coeff + random_rational(rng, cfg.max_value, nonzero=True) or 1, lane.ratio)
    return random_lane(rng, cfg, ("affine", "geometric"))


def related_real_seq(rng: np.random.Generator, seq: RealSeqRep, cfg: HarnessConfig | None = None) -> RealSeqRep:
    """A sequence built from ``seq`` that is equal, a bounded distance away, or unboundedly far."""
    cfg = cfg or HarnessConfig()
    mode = int(rng.integers(4))
    if mode == 0:
        return seq
    if mode == 3:
        return random_real_seq(rng, cfg)
    prefix = tuple(v + Real(random_rational(rng, cfg.max_value)) for v in seq.prefix)
    lanes = list(seq.tail.lanes)
    if mode == 1:
        lanes = [_perturb_lane(rng, lane, cfg, bounded=True) for lane in lanes]
    else:
        j = int(rng.integers(len(lanes)))
        lanes[j] = _perturb_lane(rng, lanes[j], cfg, bounded=False)
    return RealSeqRep(prefix, RealTail(tuple(lanes)))


def random_real_pair(rng: np.random.Generator, cfg: HarnessConfig | None = None) -> tuple[RealSeqRep, RealSeqRep]:
    """A pair of sequences, related often enough that both verdicts occur."""
    a = random_real_seq(rng, cfg)
    return a, related_real_seq(rng, a, cfg)


def random_op_pair(rng: np.random.Generator, cfg: HarnessConfig | None = None) -> tuple[DiagOpSeq, DiagOpSeq]:
    """A pair of direct diagonal operators over the standard index scheme."""
    a, b = random_real_pair(rng, cfg)
    return DiagOpSeq(a, Encoding.DIRECT), DiagOpSeq(b, Encoding.DIRECT)


def random_dim_seq(rng: np.random.Generator, cfg: HarnessConfig | None = None, inf_count: int | None = 0) -> DimSeqRep:
    """A divergent dimension sequence with ``inf_count`` INF entries, or a Const(INF) tail when None."""
    cfg = cfg or HarnessConfig()
    size = int(rng.integers(cfg.max_prefix + 1))
    prefix: list[ExtNat] = [ExtNat(int(v)) for v in rng.integers(0, cfg.max_value + 1, size=size)]
    if inf_count is None:
        return DimSeqRep(tuple(prefix), DimTail.const(INF))
    for _ in range(inf_count):
        prefix.insert(int(rng.integers(len(prefix) + 1)), INF)
    period = int(rng.integers(1, cfg.max_period + 1))
    tail = [int(v) for v in rng.integers(0, cfg.max_value + 1, size=period)]
    if not inf_count and not any(tail):
        tail[int(rng.integers(period))] = 1
    return DimSeqRep(tuple(prefix), DimTail.periodic(tail))


def related_dim_seq(rng: np.random.Generator, seq: DimSeqRep, cfg: HarnessConfig | None = None) -> DimSeqRep:
    """A dimension sequence near ``seq``: shifted, rearranged with the same tail mean, or unrelated."""
    cfg = cfg or HarnessConfig()
    mode = int(rng.integers(3))
    if mode == 0:
        pad = int(rng.integers(cfg.max_period + 1))
        return DimSeqRep((ExtNat(0),) * pad + seq.prefix, seq.tail)
    if mode == 1:
        values = [seq.tail.values[int(i)] for i in rng.permutation(seq.period)]
        prefix = [v if v.is_inf else ExtNat(int(rng.integers(cfg.max_value + 1))) for v in seq.prefix]
        return DimSeqRep(tuple(prefix), DimTail(tuple(values)))
    return random_dim_seq(rng, cfg, len(seq.inf_positions()) if not seq.tail.is_inf else None)


# =============================================================================
# Harnesses
# =============================================================================


def verify_bireduction(
    trials: int,
    seed: int = 0,
    config: DecisionConfig | None = None,
    harness: HarnessConfig | None = None,
    real_pairs: RealPairSource | None = None,
    op_pairs: OpPairSource | None = None,
) -> HarnessReport:
    """Check both reduction chains and the tilde property on ``trials`` sampled pairs.

    Per trial:

    - ``psi``: ``decide_edom(psi(α), psi(β))`` agrees with ``decide_linf(α, β)``
    - ``tilde``: ``decide_linf(α̃, β̃)`` agrees with ``decide_linf(α, β)``
    - ``phi``: ``decide_linf(phi(A), phi(B))`` agrees with ``decide_edom(A, B)``
    """
    cfg = harness or HarnessConfig()
    draw_reals = real_pairs or (lambda rng: random_real_pair(rng, cfg))
    draw_ops = op_pairs or (lambda rng: random_op_pair(rng, cfg))
    report = HarnessReport("bireduction", trials, seed)
    for trial, rng in enumerate(_trial_rngs(seed, trials)):
        alpha, beta = draw_reals(rng)
        op_a, op_b = draw_ops(rng)
        try:
            expected = decide_linf(alpha, beta, config).equivalent
            _compare(report, "psi", trial, expected, decide_edom(psi(alpha), psi(beta), config).equivalent, alpha, beta)
            _compare(report, "tilde", trial, expected, decide_linf(tilde(alpha).seq, tilde(beta).seq, config).equivalent, alpha, beta)
            domain_equal = decide_edom(op_a, op_b, config).equivalent
            _compare(report, "phi", trial, domain_equal, decide_linf(phi(op_a), phi(op_b), config).equivalent, op_a.eigenvalues, op_b.eigenvalues)
        except DomainGaugeError as e:
            report.disagree("error", trial, error=type(e).__name__, message=str(e))
    logger.info("Bireduction harness finished", trials=trials, discrepancies=len(report.discrepancies))
    return report


def _compare(report: HarnessReport, check: str, trial: int, expected: bool, actual: bool, a: RealSeqRep, b: RealSeqRep) -> None:
    if expected == actual:
        report.agree(check)
    else:
        report.disagree(check, trial, expected=expected, actual=actual, a=real_seq_to_json(a), b=real_seq_to_json(b))


def verify_esigma(trials: int, seed: int = 0, config: DecisionConfig | None = None, harness: HarnessConfig | None = None) -> HarnessReport:
    """Check E_sigma verdicts against the box oracle, refutation witnesses and witness composition.

    - equivalent: the box holds at the returned k on the stabilization box and on three times it
    - not equivalent: every witness violates its inequality under direct window sums
    - transitivity: for equivalent ``(a, b)`` and ``(b, c)`` the box holds for ``(a, c)`` at ``k1 + k2``
    """
    cfg = harness or HarnessConfig()
    report = HarnessReport("esigma", trials, seed)
    for trial, rng in enumerate(_trial_rngs(seed, trials)):
        inf_count = [0, 0, 1, 2, None][int(rng.integers(5))]
        a = random_dim_seq(rng, cfg, inf_count)
        b = related_dim_seq(rng, a, cfg)
        c = related_dim_seq(rng, b, cfg)
        try:
            ab = decide_esigma(a, b, config)
            if isinstance(ab, SigmaEquivalent):
                box = stabilization_box(a, b, ab.k)
                holds = esigma_box(a, b, ab.k, box, box).holds and esigma_box(a, b, ab.k, 3 * box, 3 * box).holds
                _record(report, "box", trial, holds, a, b)
                bc = decide_esigma(b, c, config)
                if isinstance(bc, SigmaEquivalent):
                    k = compose_sigma_witnesses(ab, bc)
                    box = stabilization_box(a, c, k)
                    _record(report, "transitivity", trial, esigma_box(a, c, k, box, box).holds, a, c)
            else:
                _record(report, "witness", trial, all(violates(a, b, w) for w in ab.witnesses), a, b)
        except DomainGaugeError as e:
            report.disagree("error", trial, error=type(e).__name__, message=str(e))
    return report


def _record(report: HarnessReport, check: str, trial: int, passed: bool, a: DimSeqRep, b: DimSeqRep) -> None:
    if passed:
        report.agree(check)
    else:
        report.disagree(check, trial, a=dim_seq_to_json(a), b=dim_seq_to_json(b))


def verify_psik_roundtrip(trials: int, seed: int = 0, harness: HarnessConfig | None = None) -> HarnessReport:
    """Check ``assoc_dims(psi_k(α, p), p) == α`` and the same through ``enumerate_spectrum``.

    ``count_inf(α)`` ranges over 0..3 and the Const(INF) tail.
    """
    cfg = harness or HarnessConfig()
    report = HarnessReport("psik", trials, seed)
    for trial, rng in enumerate(_trial_rngs(seed, trials)):
        inf_count = [0, 1, 2, 3, None][trial % 5]
        alpha = random_dim_seq(rng, cfg, inf_count)
        power = 1 + int(rng.integers(2))
        try:
            spectrum = psi_k(alpha, power)
            _record(report, "assoc_dims", trial, assoc_dims(spectrum, power) == alpha, alpha, alpha)
            if not alpha.tail.is_inf:
                listed = assoc_dims(enumerate_spectrum(spectrum), power)
                _record(report, "enumerate", trial, agree_on_box(listed, alpha), listed, alpha)
        except DomainGaugeError as e:
            report.disagree("error", trial, error=type(e).__name__, message=str(e))
    return report


def random_symmetric(rng: np.random.Generator, size: int, rank: int | None = None) -> np.ndarray:
    """A random symmetric matrix, of the given rank when ``rank`` is set."""
    if rank is None:
        m = rng.standard_normal((size, size))
        return (m + m.T) / 2
    q, _ = np.linalg.qr(rng.standard_normal((size, size)))
    spectrum = np.zeros(size)
    spectrum[:rank] = rng.uniform(0.5, 2.0, size=rank) * rng.choice([-1.0, 1.0], size=rank)
    return (q * spectrum) @ q.T


def verify_douglas(trials: int, seed: int = 0, size: int = 6, engineered: int = 50, tol: float = 1e-8) -> HarnessReport:
    """Check that the rank criterion and the λ-PSD criterion agree on random symmetric pairs.

    The first ``engineered`` trials use a rank-deficient B, with A inside Ran B
    on even trials and generic on odd ones.
    """
    report = HarnessReport("douglas", trials, seed)
    for trial, rng in enumerate(_trial_rngs(seed, trials)):
        if trial < engineered:
            rank = int(rng.integers(1, size))
            b = random_symmetric(rng, size, rank)
            a = b @ random_symmetric(rng, size) @ b if trial % 2 == 0 else random_symmetric(rng, size)
            expected: bool | None = trial % 2 == 0
        else:
            a, b = random_symmetric(rng, size), random_symmetric(rng, size)
            expected = None
        result = douglas_findim(a, b, tol)
        passed = result.verified and (expected is None or result.included == expected)
        if passed:
            report.agree("engineered" if expected is not None else "random")
        else:
            report.disagree("douglas", trial, included=result.included, lam=result.lam, verified=result.verified, expected=expected)
    return report
