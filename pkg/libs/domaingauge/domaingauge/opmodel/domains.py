"""Equality of operator domains for diagonal operators over one index scheme.

``dom A = dom B`` iff ``C1·T_B <= T_A <= C2·T_B`` for ``T = (|·|+1)^{-2}``, i.e. iff
``log((|b_n|+1)/(|a_n|+1))`` is bounded. Each residue class is classified by the
growth signature of ``log(|λ|+1)`` read off the eigenvalue lane:

=========  =============  ==========================
encoding   lane           growth of log(|λ|+1)
=========  =============  ==========================
direct     Const          bounded
direct     Affine         log q, coefficient 1
direct     Geometric      linear, slope log r
exp_half   Const          bounded
exp_half   Affine(s, t)   linear, slope s/2
exp_half   Geometric      exponential, (c/2, r)
exp_half   Log(k, aff)    log q, coefficient k/2
exp_half   Log(k, geo)    linear, slope (k/2)·log r
=========  =============  ==========================

Two classes are bounded apart iff their signatures coincide.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

import structlog

from domaingauge.config.core import DecisionConfig
from domaingauge.eqrel.linf import DifferenceRange, difference_range, sample_unbounded
from domaingauge.eqrel.verdicts import DomEqual, DomNotEqual, DomVerdict
from domaingauge.errors import IndexSchemeMismatchError, UnsupportedTailError
from domaingauge.opmodel.operators import DiagOpSeq, Encoding
from domaingauge.opmodel.transforms import t_transform
from domaingauge.seqrep.lanes import AffineLane, ConstLane, GeometricLane, Lane, LogLane
from domaingauge.seqrep.reals import Real, exp_interval
from domaingauge.seqrep.sequence import RealSeqRep, RealTail

logger = structlog.get_logger(__name__)

_BOUND_DIGITS = 12


class GrowthSignature(NamedTuple):
    """Unbounded part of ``log(|λ|+1)`` on one residue class."""

    exponential: tuple[Fraction, Fraction] | None
    log_coefficient: Fraction
    slope: Real


def growth_signature(lane: Lane, encoding: Encoding) -> GrowthSignature:
    """Classify a lane of eigenvalues (or exp_half values).

    Raises:
        UnsupportedTailError: For lanes outside the table
    """
    zero = Real(0)
    if isinstance(lane, ConstLane):
        return GrowthSignature(None, Fraction(0), zero)
    if encoding is Encoding.DIRECT:
        if isinstance(lane, AffineLane):
            return GrowthSignature(None, Fraction(1), zero)
        if isinstance(lane, GeometricLane):
            return GrowthSignature(None, Fraction(0), Real.log(lane.ratio))
    else:
        half = Fraction(1, 2)
        if isinstance(lane, AffineLane):
            return GrowthSignature(None, Fraction(0), lane.slope * half)
        if isinstance(lane, GeometricLane):
            return GrowthSignature((lane.coeff * half, lane.ratio), Fraction(0), zero)
        if isinstance(lane, LogLane) and isinstance(lane.inner, AffineLane):
            return GrowthSignature(None, lane.scale * half, zero)
        if isinstance(lane, LogLane) and isinstance(lane.inner, GeometricLane):
            return GrowthSignature(None, Fraction(0), Real.log(lane.inner.ratio, lane.scale * half))
    raise UnsupportedTailError(f"No domain growth class for a {encoding.value} {lane.kind} lane")


def log_magnitudes(op: DiagOpSeq) -> RealSeqRep:
    """The exact sequence ``log(|λ_n| + 1)``."""
    seq = t_transform(op, 1).log_values
    return RealSeqRep(tuple(-v for v in seq.prefix), RealTail(tuple(lane.scaled(Fraction(-1)) for lane in seq.tail.lanes)))


def decide_edom(a: DiagOpSeq, b: DiagOpSeq, config: DecisionConfig | None = None) -> DomVerdict:
    """Decide ``dom A = dom B``.

    Returns:
        DomEqual with ``C1 <= T_A/T_B <= C2``, or DomNotEqual with a residue class
        where the log-ratio is unbounded and a sample index beyond the threshold

    Raises:
        IndexSchemeMismatchError: If the operators use different index schemes
    """
    if a.index_scheme != b.index_scheme:
        raise IndexSchemeMismatchError(a.index_scheme, b.index_scheme)
    cfg = config or DecisionConfig()
    ea, eb = a.eigenvalues, b.eigenvalues
    start = max(len(ea.prefix), len(eb.prefix))
    period = math.lcm(ea.period, eb.period)
    lanes_a, lanes_b = ea.class_forms(start, period), eb.class_forms(start, period)
    ell_a = log_magnitudes(a).class_forms(start, period)
    ell_b = log_magnitudes(b).class_forms(start, period)

    ranges: list[DifferenceRange] = []
    for residue in range(period):
        sig_a = growth_signature(lanes_a[residue], a.encoding)
        sig_b = growth_signature(lanes_b[residue], b.encoding)
        if sig_a != sig_b:
            sample, threshold = sample_unbounded(
                ell_b[residue], ell_a[residue], start + residue, period, cfg.dom_log_threshold, cfg.witness_max_exponent
            )
            logger.debug("Decided E_dom", equal=False, residue=residue)
            return DomNotEqual(start, period, residue, sample, threshold, _describe(sig_a, sig_b))
        ranges.append(difference_range(ell_b[residue], ell_a[residue]))
    for n in range(start):
        gap = b.log_magnitude(n) - a.log_magnitude(n)
        ranges.append(DifferenceRange(gap, gap, True))

    verdict = _bounds(ranges)
    logger.debug("Decided E_dom", equal=True, lower=str(verdict.lower), upper=str(verdict.upper), exact=verdict.exact)
    return verdict


def _describe(sig_a: GrowthSignature, sig_b: GrowthSignature) -> str:
    if sig_a.exponential != sig_b.exponential:
        return "log-ratio grows exponentially"
    if sig_a.log_coefficient != sig_b.log_coefficient:
        return f"log-ratio grows like log n: coefficients {sig_a.log_coefficient} vs {sig_b.log_coefficient}"
    return f"log-ratio grows linearly: slopes {sig_a.slope} vs {sig_b.slope}"


def _bounds(ranges: list[DifferenceRange]) -> DomEqual:
    """Turn the range of ``log ρ`` into bounds on ``ρ² = T_A/T_B``."""
    low = min(r.low for r in ranges) * 2
    high = max(r.high for r in ranges) * 2
    exact = all(r.exact for r in ranges)
    lower, lower_exact = _exp_bound(low, upper=False)
    upper, upper_exact = _exp_bound(high, upper=True)
    return DomEqual(lower, upper, exact and lower_exact and upper_exact)


def _exp_bound(value: Real, *, upper: bool) -> tuple[Fraction, bool]:
    exact = value.exp_rational()
    if exact is not None:
        return exact, True
    lo, hi = exp_interval(value)
    scale = 10**_BOUND_DIGITS
    if upper:
        return Fraction(int(math.ceil(hi * scale)), scale), False
    rounded = Fraction(int(math.floor(lo * scale)), scale)
    return (rounded if rounded > 0 else lo), False
