"""Bounded-difference equivalence of real sequences.

Both sequences are aligned past their prefixes on the common period, so every
residue class is a pair of lanes. A pair is bounded iff its unbounded parts
cancel: geometric lanes must coincide, log-of-affine coefficients must match,
and linear slopes (including the ``k·log r`` slope of a log-of-geometric lane)
must be equal. The range of a bounded difference is exact when it is monotone
or a Möbius function of the cycle index, and an enclosing interval otherwise.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

import structlog

from domaingauge.config.core import DecisionConfig
from domaingauge.eqrel.verdicts import LinfEquivalent, LinfNotEquivalent, LinfVerdict, SampleIndex
from domaingauge.seqrep.lanes import AffineLane, ConstLane, GeometricLane, Lane, LogLane
from domaingauge.seqrep.reals import Real, ceil_fraction
from domaingauge.seqrep.sequence import RealSeqRep

logger = structlog.get_logger(__name__)


class DifferenceRange(NamedTuple):
    """Signed range ``[low, high]`` of a bounded difference.

    With ``exact`` set, ``low`` and ``high`` are the infimum and supremum;
    otherwise they only enclose the values.
    """

    low: Real
    high: Real
    exact: bool

    @property
    def magnitude(self) -> Real:
        """``max(|low|, |high|)``."""
        return max(abs(self.low), abs(self.high))


def decide_linf(a: RealSeqRep, b: RealSeqRep, config: DecisionConfig | None = None) -> LinfVerdict:
    """Decide whether ``sup_n |a_n - b_n| < ∞``.

    Args:
        a: First sequence
        b: Second sequence
        config: Witness thresholds (defaults apply when omitted)

    Returns:
        LinfEquivalent with a rational bound, or LinfNotEquivalent with the
        unbounded residue class and a sample index beyond the threshold
    """
    cfg = config or DecisionConfig()
    start = max(len(a.prefix), len(b.prefix))
    period = math.lcm(a.period, b.period)
    forms_a = a.class_forms(start, period)
    forms_b = b.class_forms(start, period)

    ranges: list[DifferenceRange] = []
    for residue, (x, y) in enumerate(zip(forms_a, forms_b, strict=True)):
        growth = unbounded_growth(x, y)
        if growth is not None:
            sample, threshold = sample_unbounded(x, y, start + residue, period, cfg.linf_threshold, cfg.witness_max_exponent)
            logger.debug("Decided E_linf", equivalent=False, residue=residue, growth=growth)
            return LinfNotEquivalent(start, period, residue, sample, threshold, growth)
        ranges.append(difference_range(x, y))
    for n in range(start):
        gap = a.at(n) - b.at(n)
        ranges.append(DifferenceRange(gap, gap, True))

    verdict = _combine(ranges)
    logger.debug("Decided E_linf", equivalent=True, bound=str(verdict.bound), exact=verdict.exact)
    return verdict


def linf_box(a: RealSeqRep, b: RealSeqRep, length: int | None = None) -> Real:
    """Return ``max_{n < length} |a_n - b_n|`` by direct evaluation.

    The default length covers both prefixes plus two cycles of the common period.
    """
    size = length if length is not None else max(len(a.prefix), len(b.prefix)) + 2 * math.lcm(a.period, b.period)
    return max((abs(a.at(n) - b.at(n)) for n in range(size)), default=Real(0))


# =============================================================================
# Growth analysis
# =============================================================================


def _log_affine_scale(lane: Lane) -> Fraction:
    if isinstance(lane, LogLane) and isinstance(lane.inner, AffineLane):
        return lane.scale
    return Fraction(0)


def _slope(lane: Lane) -> Real:
    if isinstance(lane, AffineLane):
        return lane.slope
    if isinstance(lane, LogLane) and isinstance(lane.inner, GeometricLane):
        return Real.log(lane.inner.ratio, lane.scale)
    return Real(0)


def unbounded_growth(x: Lane, y: Lane) -> str | None:
    """Describe why ``x - y`` is unbounded, or None when it is bounded."""
    if x == y:
        return None
    if isinstance(x, GeometricLane) or isinstance(y, GeometricLane):
        return "exponential growth: geometric lanes differ"
    kx, ky = _log_affine_scale(x), _log_affine_scale(y)
    if kx != ky:
        return f"logarithmic growth: log coefficients {kx} vs {ky}"
    if kx == 0:
        sx, sy = _slope(x), _slope(y)
        if sx != sy:
            return f"linear growth: slopes {sx} vs {sy}"
    return None


# =============================================================================
# Ranges of bounded pairs
# =============================================================================


def _intercept(lane: Lane) -> Real:
    if isinstance(lane, ConstLane):
        return lane.value
    if isinstance(lane, AffineLane):
        return lane.intercept
    assert isinstance(lane, LogLane) and isinstance(lane.inner, GeometricLane)
    return Real.log(lane.inner.coeff, lane.scale)


def _remainder_at_zero(lane: Lane) -> Real:
    """``k·log(1 + 1/c)`` for a log-of-geometric lane; the remainder decays monotonically to 0."""
    if isinstance(lane, LogLane) and isinstance(lane.inner, GeometricLane):
        c = lane.inner.coeff
        return Real.log((c + 1) / c, lane.scale)
    return Real(0)


def _span(values: list[Real], exact: bool) -> DifferenceRange:
    return DifferenceRange(min(values), max(values), exact)


def difference_range(x: Lane, y: Lane) -> DifferenceRange:
    """Range of ``q ↦ x(q) - y(q)`` over ``q >= 0`` for a pair with bounded difference."""
    if x == y:
        return DifferenceRange(Real(0), Real(0), True)
    if isinstance(x, LogLane) and isinstance(y, LogLane) and x.scale == y.scale:
        if isinstance(x.inner, AffineLane) and isinstance(y.inner, AffineLane):
            return _affine_mobius_range(x, y)
        if isinstance(x.inner, GeometricLane) and isinstance(y.inner, GeometricLane) and x.inner.ratio == y.inner.ratio:
            # (c_x·u + 1)/(c_y·u + 1) is monotone in u = r^q >= 1.
            at_zero = Real.log((x.inner.coeff + 1) / (y.inner.coeff + 1), x.scale)
            limit = Real.log(x.inner.coeff / y.inner.coeff, x.scale)
            return _span([at_zero, limit], True)

    # d(q) = Δt + R_x(q) - R_y(q) with each R decaying monotonically from R(0) to 0.
    delta = _intercept(x) - _intercept(y)
    rx, ry = _remainder_at_zero(x), _remainder_at_zero(y)
    if rx.is_zero() or ry.is_zero():
        return _span([delta + rx - ry, delta], True)
    zero = Real(0)
    return DifferenceRange(delta + min(rx, zero) - max(ry, zero), delta + max(rx, zero) - min(ry, zero), False)


def _affine_mobius_range(x: LogLane, y: LogLane) -> DifferenceRange:
    """Range of ``k·log((|s_x q + t_x| + 1)/(|s_y q + t_y| + 1))`` over q >= 0."""
    assert isinstance(x.inner, AffineLane) and isinstance(y.inner, AffineLane)
    px, py = x.inner.rational_params(), y.inner.rational_params()
    assert px is not None and py is not None
    (sx, tx), (sy, ty) = px, py
    # Beyond q1 both inner values are nonnegative and the ratio is a Möbius map.
    q1 = max(0, ceil_fraction(-tx / sx), ceil_fraction(-ty / sy))
    ratio_q1 = (sx * q1 + tx + 1) / (sy * q1 + ty + 1)
    candidates = [Real.log(ratio_q1, x.scale), Real.log(sx / sy, x.scale)]
    candidates.extend(x.at(q) - y.at(q) for q in range(q1))
    return _span(candidates, True)


def _combine(ranges: list[DifferenceRange]) -> LinfEquivalent:
    magnitudes = [r.magnitude for r in ranges]
    if all(r.exact for r in ranges):
        supremum = max(magnitudes, default=Real(0))
        rational = supremum.rational_value()
        if rational is not None:
            return LinfEquivalent(rational, True, supremum)
        return LinfEquivalent(supremum.upper_bound(), False, supremum)
    return LinfEquivalent(max(m.upper_bound() for m in magnitudes), False, None)


# =============================================================================
# Refutation witnesses
# =============================================================================


def gap_lower_bound(x: tuple[Real, Real], y: tuple[Real, Real]) -> Fraction:
    """A rational lower bound on ``|u - v|`` for any ``u`` in ``x`` and ``v`` in ``y``, given as ``(low, high)`` bounds."""
    below, _ = (x[0] - y[1]).interval()
    if below > 0:
        return below
    _, above = (x[1] - y[0]).interval()
    if above < 0:
        return -above
    return Fraction(0)


def sequence_gap_lower_bound(a: RealSeqRep, b: RealSeqRep, n: int) -> Fraction:
    """A rational lower bound on ``|a_n - b_n|`` that stays cheap at huge ``n``."""
    return gap_lower_bound(a.enclose(n), b.enclose(n))


def _float_at(lane: Lane, q: int) -> float | None:
    """Floating estimate of ``lane.at(q)`` that never builds ``r^q``; None on overflow."""
    try:
        if isinstance(lane, ConstLane):
            return float(lane.value)
        if isinstance(lane, AffineLane):
            return float(lane.slope) * float(q) + float(lane.intercept)
        if isinstance(lane, GeometricLane):
            return float(lane.coeff) * math.exp(float(q) * math.log(lane.ratio))
        assert isinstance(lane, LogLane)
        inner = lane.inner
        if isinstance(inner, AffineLane):
            return float(lane.scale) * math.log1p(abs(float(inner.slope) * float(q) + float(inner.intercept)))
        # log(|c|·r^q + 1) is log|c| + q·log r to double precision once |c|·r^q > e^40
        log_magnitude = math.log(abs(inner.coeff)) + float(q) * math.log(inner.ratio)
        return float(lane.scale) * (log_magnitude if log_magnitude > 40 else math.log1p(math.exp(log_magnitude)))
    except OverflowError:
        return None


def _estimated_gap(x: Lane, y: Lane, q: int) -> float:
    fx, fy = _float_at(x, q), _float_at(y, q)
    if fx is None or fy is None:
        return math.inf
    return abs(fx - fy)


def sample_unbounded(x: Lane, y: Lane, base: int, stride: int, threshold: int, max_exponent: int) -> tuple[SampleIndex, int]:
    """Find the least ``E`` whose ``q = 2^E`` gives ``|x(q) - y(q)| > threshold``.

    E steps by one. Lane values at ``2^E`` can take ``2^E`` bits, so each E is
    screened with a floating estimate, and only candidates that clear the
    threshold are checked against the rigorous bounds of ``Lane.enclose``.

    Returns:
        The sample index ``base + stride·2^E`` and the threshold it certifies,
        lowered to the gap reached at the best estimate when E hits ``max_exponent``
    """
    best_exponent, best_estimate = 0, -1.0
    for exponent in range(max_exponent + 1):
        q = 1 << exponent
        estimate = _estimated_gap(x, y, q)
        if estimate > best_estimate:
            best_exponent, best_estimate = exponent, estimate
        if estimate <= threshold:
            continue
        if gap_lower_bound(x.enclose(q), y.enclose(q)) > threshold:
            return SampleIndex(base, stride, exponent), threshold
    q = 1 << best_exponent
    best = gap_lower_bound(x.enclose(q), y.enclose(q))
    logger.warning("Refutation sample stays below threshold", threshold=threshold, reached=float(best), exponent=best_exponent)
    return SampleIndex(base, stride, best_exponent), math.ceil(best) - 1
