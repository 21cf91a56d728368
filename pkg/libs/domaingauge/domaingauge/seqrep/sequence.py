"""Finitely represented infinite sequences: explicit prefix plus closed-form tail.

``RealSeqRep`` holds exact reals with a lane tail; ``DimSeqRep`` holds extended
naturals with a Const or Periodic tail. Negative indices evaluate to 0.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np

from domaingauge.errors import RepresentationError, UnsupportedInfPatternError
from domaingauge.seqrep.extnat import INF, ZERO, ExtNat, extnat, extnat_sum
from domaingauge.seqrep.lanes import AffineLane, ConstLane, GeometricLane, Lane, affine, const
from domaingauge.seqrep.reals import Real, as_fraction


def _minimal_period(values: Sequence[Any]) -> int:
    size = len(values)
    for d in range(1, size):
        if size % d == 0 and all(values[i] == values[i % d] for i in range(size)):
            return d
    return size


# =============================================================================
# Real sequences
# =============================================================================


@dataclass(frozen=True)
class RealTail:
    """Tail of period ``len(lanes)``: offset ``m`` takes ``lanes[m % p].at(m // p)``.

    All-constant tails are reduced to their minimal period.
    """

    lanes: tuple[Lane, ...]

    def __post_init__(self) -> None:
        """Validate and normalize the lane tuple."""
        lanes = tuple(self.lanes)
        if not lanes:
            raise RepresentationError("A tail needs at least one lane")
        if not all(isinstance(lane, Lane) for lane in lanes):
            raise RepresentationError("Tail lanes must be Lane instances")
        if all(isinstance(lane, ConstLane) for lane in lanes):
            lanes = lanes[: _minimal_period(lanes)]
        object.__setattr__(self, "lanes", lanes)

    @classmethod
    def const(cls, value: Any) -> RealTail:
        """Const(v)."""
        return cls((const(value),))

    @classmethod
    def periodic(cls, values: Iterable[Any]) -> RealTail:
        """Periodic(v_1 ... v_p)."""
        return cls(tuple(const(v) for v in values))

    @classmethod
    def affine(cls, slope: Any, intercept: Any) -> RealTail:
        """Affine(s, t): offset m takes s·m + t."""
        return cls((affine(slope, intercept),))

    @classmethod
    def geometric(cls, coeff: Any, ratio: Any) -> RealTail:
        """Geometric(c, r): offset m takes c·r^m."""
        return cls((GeometricLane(as_fraction(coeff), as_fraction(ratio)),))

    @property
    def period(self) -> int:
        """Number of lanes."""
        return len(self.lanes)

    @property
    def kind(self) -> str:
        """The user-facing tail kind."""
        if all(isinstance(lane, ConstLane) for lane in self.lanes):
            return "const" if self.period == 1 else "periodic"
        if self.period == 1 and isinstance(self.lanes[0], (AffineLane, GeometricLane)):
            return self.lanes[0].kind
        return "laned"

    def at(self, offset: int) -> Real:
        """Tail value at ``offset >= 0``."""
        q, j = divmod(offset, self.period)
        return self.lanes[j].at(q)

    def enclose(self, offset: int) -> tuple[Real, Real]:
        """Bounds on the tail value at ``offset``; see ``Lane.enclose``."""
        q, j = divmod(offset, self.period)
        return self.lanes[j].enclose(q)


@dataclass(frozen=True)
class RealSeqRep:
    """Exact real sequence ``prefix ++ tail``."""

    prefix: tuple[Real, ...]
    tail: RealTail

    def __post_init__(self) -> None:
        """Coerce prefix entries to Real."""
        object.__setattr__(self, "prefix", tuple(Real.of(v) for v in self.prefix))

    @classmethod
    def build(cls, prefix: Iterable[Any], tail: RealTail) -> RealSeqRep:
        """Convenience constructor from any iterable prefix."""
        return cls(tuple(prefix), tail)

    @property
    def period(self) -> int:
        """Tail period."""
        return self.tail.period

    def at(self, n: int) -> Real:
        """Value at index ``n``; 0 for ``n < 0``."""
        if n < 0:
            return Real(0)
        if n < len(self.prefix):
            return self.prefix[n]
        return self.tail.at(n - len(self.prefix))

    def enclose(self, n: int) -> tuple[Real, Real]:
        """Bounds ``(low, high)`` on ``at(n)``, exact for prefix entries and small tail offsets."""
        if n < len(self.prefix):
            value = self.at(n)
            return value, value
        return self.tail.enclose(n - len(self.prefix))

    def values(self, count: int) -> list[Real]:
        """The first ``count`` values."""
        return [self.at(n) for n in range(count)]

    def materialize(self, cycles: int) -> RealSeqRep:
        """Move ``cycles`` full tail periods into the prefix without changing the sequence."""
        if cycles <= 0:
            return self
        extra = [self.tail.at(m) for m in range(cycles * self.period)]
        lanes = tuple(lane.reparam(cycles, 1) for lane in self.tail.lanes)
        return RealSeqRep((*self.prefix, *extra), RealTail(lanes))

    def class_forms(self, start: int, period: int) -> tuple[Lane, ...]:
        """Lanes describing ``q ↦ a[start + r + period·q]`` for each residue ``r < period``.

        ``start`` must be at least the prefix length and ``period`` a multiple of the tail period.
        """
        if start < len(self.prefix) or period % self.period:
            raise RepresentationError("class_forms needs start >= prefix length and a multiple of the tail period")
        stride = period // self.period
        forms = []
        for r in range(period):
            cycle, j = divmod(start - len(self.prefix) + r, self.period)
            forms.append(self.tail.lanes[j].reparam(cycle, stride))
        return tuple(forms)

    def shifted(self, offset: Any) -> RealSeqRep:
        """Add a constant to every entry.

        Raises:
            UnsupportedTailError: If some lane is not closed under shifts
        """
        delta = Real.of(offset)
        return RealSeqRep(
            tuple(v + delta for v in self.prefix),
            RealTail(tuple(lane.shifted(delta) for lane in self.tail.lanes)),
        )

    def is_rational(self) -> bool:
        """Whether every entry is rational and every lane has rational parameters."""
        if not all(v.is_rational for v in self.prefix):
            return False
        return all(_lane_is_rational(lane) for lane in self.tail.lanes)


def _lane_is_rational(lane: Lane) -> bool:
    if isinstance(lane, ConstLane):
        return lane.value.is_rational
    if isinstance(lane, AffineLane):
        return lane.rational_params() is not None
    return isinstance(lane, GeometricLane)


def first_structural_difference(a: RealSeqRep, b: RealSeqRep) -> tuple[int, int, int] | None:
    """Locate where two real sequences stop agreeing structurally.

    Returns:
        None if the sequences are pointwise equal, else ``(start, period, residue)``
        of the first differing residue class beyond both prefixes, with residue ``-1``
        when every class agrees and only the prefix region differs.
    """
    start = max(len(a.prefix), len(b.prefix))
    period = math.lcm(a.period, b.period)
    forms_a = a.class_forms(start, period)
    forms_b = b.class_forms(start, period)
    for r, (x, y) in enumerate(zip(forms_a, forms_b, strict=True)):
        if x != y:
            return start, period, r
    if any(a.at(n) != b.at(n) for n in range(start)):
        return start, period, -1
    return None


def pointwise_equal(a: RealSeqRep, b: RealSeqRep) -> bool:
    """Exact pointwise equality of two real sequences."""
    return first_structural_difference(a, b) is None


# =============================================================================
# Dimension sequences over ExtNat
# =============================================================================


@dataclass(frozen=True)
class DimTail:
    """Const(c) with c an ExtNat, or Periodic over finite values; reduced to the minimal period."""

    values: tuple[ExtNat, ...]

    def __post_init__(self) -> None:
        """Validate and normalize."""
        values = tuple(extnat(v) for v in self.values)
        if not values:
            raise RepresentationError("A tail needs at least one value")
        values = values[: _minimal_period(values)]
        if len(values) > 1 and any(v.is_inf for v in values):
            raise UnsupportedInfPatternError("Periodic dimension tails must have finite entries; infinitely many INF entries need a Const(INF) tail")
        object.__setattr__(self, "values", values)

    @classmethod
    def const(cls, value: Any) -> DimTail:
        """Const(c)."""
        return cls((extnat(value),))

    @classmethod
    def periodic(cls, values: Iterable[Any]) -> DimTail:
        """Periodic(v_1 ... v_p)."""
        return cls(tuple(extnat(v) for v in values))

    @property
    def period(self) -> int:
        """Tail period."""
        return len(self.values)

    @property
    def kind(self) -> str:
        """``const`` or ``periodic``."""
        return "const" if self.period == 1 else "periodic"

    @property
    def is_inf(self) -> bool:
        """Whether the tail is Const(INF)."""
        return self.values[0].is_inf

    def at(self, offset: int) -> ExtNat:
        """Tail value at ``offset >= 0``."""
        return self.values[offset % self.period]

    def cycle_sum(self) -> int:
        """Sum of one period of a finite tail."""
        return sum(v.finite() for v in self.values)

    def mean(self) -> Fraction:
        """Exact mean of a finite tail."""
        return Fraction(self.cycle_sum(), self.period)

    def partial(self, length: int) -> int:
        """Sum of the first ``length`` tail values of a finite tail."""
        full, rest = divmod(length, self.period)
        return full * self.cycle_sum() + sum(v.finite() for v in self.values[:rest])


@dataclass(frozen=True)
class DimSeqRep:
    """Extended-natural sequence ``prefix ++ tail``."""

    prefix: tuple[ExtNat, ...]
    tail: DimTail

    def __post_init__(self) -> None:
        """Coerce prefix entries to ExtNat."""
        object.__setattr__(self, "prefix", tuple(extnat(v) for v in self.prefix))

    @classmethod
    def build(cls, prefix: Iterable[Any], tail: DimTail) -> DimSeqRep:
        """Convenience constructor from any iterable prefix."""
        return cls(tuple(prefix), tail)

    @property
    def period(self) -> int:
        """Tail period."""
        return self.tail.period

    def at(self, n: int) -> ExtNat:
        """Value at index ``n``; 0 for ``n < 0``."""
        if n < 0:
            return ZERO
        if n < len(self.prefix):
            return self.prefix[n]
        return self.tail.at(n - len(self.prefix))

    def values(self, count: int) -> list[ExtNat]:
        """The first ``count`` values."""
        return [self.at(n) for n in range(count)]

    def inf_positions(self) -> list[int]:
        """Indices of INF entries in the prefix."""
        return [i for i, v in enumerate(self.prefix) if v.is_inf]

    def finite_prefix_sum(self) -> int:
        """Sum of the prefix with INF entries counted as 0."""
        return sum(v.value for v in self.prefix if v.value is not None)

    def cumulative_arrays(self, length: int) -> tuple[np.ndarray, np.ndarray]:
        """Prefix-sum arrays over indices ``[0, length)``.

        Returns:
            ``(finite, infs)`` of size ``length + 1`` where ``finite[i]`` sums the finite
            values below ``i`` and ``infs[i]`` counts the INF entries below ``i``.
        """
        entries = self.values(length)
        finite_values = [0 if v.value is None else v.value for v in entries]
        inf_flags = np.fromiter((v.is_inf for v in entries), dtype=np.int64, count=length)
        total = sum(finite_values)
        dtype: Any = np.int64 if total < (1 << 62) else object
        finite = np.zeros(length + 1, dtype=dtype)
        finite[1:] = np.cumsum(np.asarray(finite_values, dtype=dtype))
        infs = np.zeros(length + 1, dtype=np.int64)
        infs[1:] = np.cumsum(inf_flags)
        return finite, infs


def evaluate(s: RealSeqRep | DimSeqRep, n: int) -> Real | ExtNat:
    """Return ``s_n``, with 0 for negative indices."""
    return s.at(n)


def window_sum(s: DimSeqRep, n: int, length: int) -> ExtNat:
    """Return ``Σ_{i=0}^{length} s_{n+i}`` with negative indices contributing 0.

    Runs in time linear in prefix length plus period, independent of ``n`` and ``length``.
    """
    if length < 0:
        raise RepresentationError(f"window length must be nonnegative, got {length}")
    lo = max(n, 0)
    hi = n + length
    if hi < lo:
        return ZERO
    split = len(s.prefix)
    explicit = s.prefix[lo : min(hi, split - 1) + 1] if lo < split else ()
    total = extnat_sum(explicit)
    if total.is_inf:
        return INF
    if hi < split:
        return total
    first = max(lo - split, 0)
    last = hi - split
    if s.tail.is_inf:
        return INF
    return ExtNat(total.finite() + s.tail.partial(last + 1) - s.tail.partial(first))


def count_inf(s: DimSeqRep) -> ExtNat:
    """Number of INF entries; INF iff the tail is Const(INF)."""
    if s.tail.is_inf:
        return INF
    return ExtNat(len(s.inf_positions()))


def diverges(s: DimSeqRep) -> bool:
    """Whether the total sum is INF."""
    if s.tail.is_inf or s.inf_positions():
        return True
    return s.tail.cycle_sum() > 0


def canonical_box_length(a: DimSeqRep | RealSeqRep, b: DimSeqRep | RealSeqRep) -> int:
    """Length of the finite box that decides pointwise equality of two dimension sequences."""
    return len(a.prefix) + len(b.prefix) + 2 * a.period * b.period


def agree_on_box(a: DimSeqRep, b: DimSeqRep, length: int | None = None) -> bool:
    """Whether two dimension sequences agree on indices below ``length`` (default: the canonical box)."""
    size = canonical_box_length(a, b) if length is None else length
    return all(a.at(n) == b.at(n) for n in range(size))


def dim_seq(prefix: Iterable[Any], tail: Iterable[Any] | Any) -> DimSeqRep:
    """Shorthand: ``dim_seq([2, "inf"], [1])`` builds prefix [2, INF] with tail Periodic(1)."""
    values = list(tail) if isinstance(tail, (list, tuple)) else [tail]
    return DimSeqRep(tuple(prefix), DimTail(tuple(values)))


def real_seq(prefix: Iterable[Any], tail: RealTail | Iterable[Any] | Any) -> RealSeqRep:
    """Shorthand: a RealTail, or a list of values for a constant/periodic tail."""
    if isinstance(tail, RealTail):
        return RealSeqRep(tuple(prefix), tail)
    values = list(tail) if isinstance(tail, (list, tuple)) else [tail]
    return RealSeqRep(tuple(prefix), RealTail.periodic(values))
