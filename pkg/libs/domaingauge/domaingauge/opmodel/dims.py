"""Associated dimension sequences and spectrum enumeration.

An eigenvalue ``λ`` falls in band ``n = floor(power·log2(|λ|+1))``; at power 1
band 0 is ``(-1, 1)`` and band ``n`` is ``(1-2^{n+1}, 1-2^n] ∪ [2^n-1, 2^{n+1}-1)``.
``assoc_dims`` counts eigenvalues per band as a DimSeqRep. Tails are resolved
exactly when the band of each lane is eventually arithmetic in the cycle index:

- Const lanes put INF in one band;
- direct Geometric lanes with ratio ``2^m`` advance ``m`` bands per cycle;
- exp_half Affine lanes with slope ``σ·log 2`` (σ rational) advance ``power·σ/2``
  bands per cycle.

Everything else raises UnsupportedTailError.
"""

from __future__ import annotations

import math
from collections import defaultdict
from collections.abc import Callable
from fractions import Fraction

import structlog

from domaingauge.config.core import DecisionConfig
from domaingauge.eqrel.esigma import decide_esigma
from domaingauge.eqrel.verdicts import SigmaVerdict
from domaingauge.errors import RepresentationError, UnsupportedSpectrumError, UnsupportedTailError
from domaingauge.opmodel.operators import DiagOpSeq, Encoding, SpectrumRep, ValueRule
from domaingauge.seqrep.extnat import INF, ZERO, ExtNat
from domaingauge.seqrep.lanes import AffineLane, ConstLane, GeometricLane, Lane, affine, const
from domaingauge.seqrep.reals import Real, as_fraction, floor_ratio
from domaingauge.seqrep.sequence import DimSeqRep, DimTail, RealSeqRep, RealTail

logger = structlog.get_logger(__name__)

DimBandSeq = DimSeqRep

_LOG2 = Real.log(2)
# Cycles scanned before a direct geometric lane must have stabilized.
_MAX_STABILIZATION_SCAN = 1 << 12


def band_of(log_magnitude: Real, power: int = 1) -> int:
    """Band index of an eigenvalue given ``log(|λ|+1)``."""
    return floor_ratio(log_magnitude * power, _LOG2)


class _Stream:
    """A lane whose band is ``band(q)``, with ``band(q + cycle) = band(q) + advance`` for ``q >= settled``."""

    def __init__(self, band: Callable[[int], int], cycle: int, advance: int, settled: int) -> None:
        self.band = band
        self.cycle = cycle
        self.advance = advance
        self.first_periodic_band = band(settled) + 1

    def counts(self, limit: int) -> dict[int, int]:
        """Count cycle indices per band for bands below ``limit``."""
        found: dict[int, int] = defaultdict(int)
        q = 0
        while (n := self.band(q)) < limit:
            found[n] += 1
            q += 1
        return found


def assoc_dims(op: DiagOpSeq | SpectrumRep, power: int = 1) -> DimBandSeq:
    """Dimension of every spectral band of ``(|A|+1)^{-power}``.

    Raises:
        UnsupportedTailError: If some lane's band pattern is not eventually periodic
    """
    if power not in (1, 2):
        raise RepresentationError(f"power must be 1 or 2, got {power}")
    if isinstance(op, SpectrumRep):
        return _spectrum_dims(op, power)

    counts: dict[int, ExtNat] = defaultdict(lambda: ZERO)
    for n in range(len(op.eigenvalues.prefix)):
        counts[band_of(op.log_magnitude(n), power)] += 1
    streams: list[_Stream] = []
    for lane in op.eigenvalues.tail.lanes:
        if isinstance(lane, ConstLane):
            log_mag = lane.value * Fraction(1, 2) if op.encoding is Encoding.EXP_HALF else Real.log1p_abs(as_fraction(lane.value))
            counts[band_of(log_mag, power)] = INF
        else:
            streams.append(_lane_stream(lane, op.encoding, power))
    dims = _assemble(counts, streams)
    logger.debug("Computed band dimensions", prefix=len(dims.prefix), period=dims.period)
    return dims


def decide_edomu(a: DiagOpSeq | SpectrumRep, b: DiagOpSeq | SpectrumRep, config: DecisionConfig | None = None, power: int = 1) -> SigmaVerdict:
    """Decide equality of domains up to a unitary: E_sigma on the band dimensions."""
    return decide_esigma(assoc_dims(a, power), assoc_dims(b, power), config)


# =============================================================================
# Lane streams
# =============================================================================


def _lane_stream(lane: Lane, encoding: Encoding, power: int) -> _Stream:
    if encoding is Encoding.DIRECT and isinstance(lane, GeometricLane):
        return _geometric_stream(lane, power)
    if encoding is Encoding.EXP_HALF and isinstance(lane, AffineLane):
        return _exp_affine_stream(lane, power)
    raise UnsupportedTailError(f"Band dimensions of a {encoding.value} {lane.kind} lane are not eventually periodic")


def _geometric_stream(lane: GeometricLane, power: int) -> _Stream:
    ratio = lane.ratio
    if ratio.denominator != 1 or ratio.numerator & (ratio.numerator - 1):
        raise UnsupportedTailError(f"Band dimensions need a geometric ratio 2^m, got {ratio}")
    advance = power * (ratio.numerator.bit_length() - 1)
    magnitude = abs(lane.coeff)

    def band(q: int) -> int:
        return band_of(Real.log1p_abs(magnitude * ratio**q), power)

    # band(q) - advance·q decreases to floor(power·log2|c|) and stays there once reached.
    settled_offset = band_of(Real.log(magnitude), power)
    for q in range(_MAX_STABILIZATION_SCAN):
        if band(q) - advance * q == settled_offset:
            return _Stream(band, 1, advance, q)
    raise UnsupportedTailError("Geometric lane did not settle into one band per cycle")


def _exp_affine_stream(lane: AffineLane, power: int) -> _Stream:
    sigma = lane.slope.ratio_to_log2()
    if sigma is None:
        raise UnsupportedTailError(f"Band dimensions need an exp_half slope that is a rational multiple of log 2, got {lane.slope}")
    rate = sigma * power / 2
    intercept = lane.intercept * Fraction(power, 2)

    def band(q: int) -> int:
        return floor_ratio(intercept + _LOG2 * (rate * q), _LOG2)

    # floor(rate·q + u) advances by rate.numerator every rate.denominator cycles.
    return _Stream(band, rate.denominator, rate.numerator, 0)


def _assemble(counts: dict[int, ExtNat], streams: list[_Stream]) -> DimSeqRep:
    if not streams:
        size = max(counts) + 1
        return DimSeqRep(tuple(counts.get(n, ZERO) for n in range(size)), DimTail.const(0))
    period = math.lcm(*(s.advance for s in streams))
    start = max([max(counts, default=-1) + 1, *(s.first_periodic_band for s in streams)])
    limit = start + period
    totals: dict[int, ExtNat] = defaultdict(lambda: ZERO, counts)
    for stream in streams:
        for n, found in stream.counts(limit).items():
            totals[n] += found
    values = [totals[n] for n in range(limit)]
    return DimSeqRep(tuple(values[:start]), DimTail(tuple(values[start:])))


# =============================================================================
# Spectra
# =============================================================================


def _spectrum_dims(spectrum: SpectrumRep, power: int) -> DimSeqRep:
    counts: dict[int, ExtNat] = defaultdict(lambda: ZERO)
    for block in spectrum.blocks:
        counts[band_of(Real.log1p_abs(block.value), power)] += block.multiplicity
    if spectrum.rule is None:
        size = max(counts) + 1
        return DimSeqRep(tuple(counts.get(n, ZERO) for n in range(size)), DimTail.const(0))
    base = rescale_bands(spectrum.rule.multiplicities, power, spectrum.rule.power)
    size = max(len(base.prefix), max(counts, default=-1) + 1)
    rotated = tuple(base.at(size + i) for i in range(base.period))
    return DimSeqRep(tuple(base.at(n) + counts.get(n, ZERO) for n in range(size)), DimTail(rotated))


def rescale_bands(source: DimSeqRep, numerator: int, denominator: int) -> DimSeqRep:
    """Move ``source[n]`` to band ``floor(numerator·n/denominator)``, summing collisions.

    Raises:
        UnsupportedTailError: If an INF tail would have to be spread out
    """
    ratio = Fraction(numerator, denominator)
    a, b = ratio.numerator, ratio.denominator
    if ratio == 1:
        return source
    source_start = -(-len(source.prefix) // b) * b
    source_cycle = math.lcm(source.period, b)
    target_start = a * source_start // b
    target_period = a * source_cycle // b
    values: list[ExtNat] = [ZERO] * (target_start + target_period)
    for n in range(source_start + source_cycle):
        values[a * n // b] += source.at(n)
    tail = values[target_start:]
    if any(v.is_inf for v in tail) and not all(v.is_inf for v in tail):
        raise UnsupportedTailError("Spreading an INF tail over several bands leaves a mixed tail")
    return DimSeqRep(tuple(values[:target_start]), DimTail(tuple(tail)))


def enumerate_spectrum(spectrum: SpectrumRep) -> DiagOpSeq:
    """List the eigenvalues of a spectrum as a diagonal operator.

    Finite blocks are packed into the prefix. INF blocks become constant lanes
    interleaved round-robin with the rule's periodic block stream, so
    ``assoc_dims(enumerate_spectrum(S)) == assoc_dims(S)``.

    Raises:
        UnsupportedSpectrumError: If no representable interleaving exists
    """
    if spectrum.rule is None:
        prefix = [b.value for b in spectrum.blocks for _ in range(0 if b.multiplicity.is_inf else b.multiplicity.finite())]
        inf_values = [b.value for b in spectrum.blocks if b.multiplicity.is_inf]
        return DiagOpSeq(RealSeqRep(tuple(Real(v) for v in prefix), RealTail.periodic(inf_values)), Encoding.DIRECT, spectrum.index_scheme)

    if any(b.value < 0 for b in spectrum.blocks):
        raise UnsupportedSpectrumError("Negative eigenvalues cannot share the exp_half encoding of a value rule")
    rule = spectrum.rule
    multiplicities = rule.multiplicities
    if multiplicities.tail.is_inf:
        raise UnsupportedSpectrumError("A value rule whose multiplicities end in Const(INF) has no lane enumeration")

    finite: list[Real] = []
    infinite: list[Real] = []
    for block in spectrum.blocks:
        x = Real.log(block.value + 1, 2)
        _place(x, block.multiplicity, finite, infinite)
    for n, multiplicity in enumerate(multiplicities.prefix):
        _place(_rule_value(rule, n), multiplicity, finite, infinite)

    lanes: list[Lane] = [const(x) for x in infinite]
    lanes.extend(_rule_stream(rule))
    if not lanes:
        raise UnsupportedSpectrumError("Spectrum has finitely many eigenvalues")
    return DiagOpSeq(RealSeqRep(tuple(finite), RealTail(tuple(lanes))), Encoding.EXP_HALF, spectrum.index_scheme)


def _rule_value(rule: ValueRule, n: int) -> Real:
    """exp_half value ``2·log(2^{n/power})`` of rule block n."""
    return rule.log_magnitude(n) * 2


def _place(x: Real, multiplicity: ExtNat, finite: list[Real], infinite: list[Real]) -> None:
    if multiplicity.is_inf:
        infinite.append(x)
    else:
        finite.extend([x] * multiplicity.finite())


def _rule_stream(rule: ValueRule) -> list[Lane]:
    """Affine lanes listing the rule's tail blocks with their periodic multiplicities."""
    seq = rule.multiplicities
    start, period = len(seq.prefix), seq.period
    lanes: list[Lane] = []
    for j, multiplicity in enumerate(seq.tail.values):
        # Block start + j + period·c has exp_half value (2/power)(start + j + period·c)·log 2.
        slope = _LOG2 * Fraction(2 * period, rule.power)
        intercept = _LOG2 * Fraction(2 * (start + j), rule.power)
        lanes.extend([affine(slope, intercept)] * multiplicity.finite())
    return lanes

