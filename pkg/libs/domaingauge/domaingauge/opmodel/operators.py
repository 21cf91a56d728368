"""Diagonal stand-ins for self-adjoint operators.

A ``DiagOpSeq`` lists the eigenvalue of each basis vector. Under the ``direct``
encoding the sequence holds the eigenvalues themselves (rational values,
Const/Affine/Geometric lanes). Under ``exp_half`` it holds ``x_n >= 0`` with
eigenvalue ``exp(x_n/2) - 1``, which keeps the images of the reduction maps exact.

A ``SpectrumRep`` lists eigenvalues with multiplicities instead: explicit
``(value, multiplicity)`` blocks plus an optional ``ValueRule`` whose block
``n`` has eigenvalue ``2^{n/power} - 1``.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any

from domaingauge.errors import RepresentationError
from domaingauge.seqrep.extnat import INF, ZERO, ExtNat, extnat, extnat_sum
from domaingauge.seqrep.lanes import AffineLane, ConstLane, GeometricLane, Lane
from domaingauge.seqrep.reals import Real, as_fraction, exp_interval
from domaingauge.seqrep.sequence import DimSeqRep, RealSeqRep, diverges

DEFAULT_INDEX_SCHEME = "std"


class Encoding(str, Enum):
    """How a DiagOpSeq stores its eigenvalues."""

    DIRECT = "direct"
    EXP_HALF = "exp_half"


@dataclass(frozen=True)
class DiagOpSeq:
    """Diagonal operator: eigenvalue of basis vector n read from ``eigenvalues``."""

    eigenvalues: RealSeqRep
    encoding: Encoding = Encoding.DIRECT
    index_scheme: str = DEFAULT_INDEX_SCHEME

    def __post_init__(self) -> None:
        """Validate the sequence against the encoding."""
        object.__setattr__(self, "encoding", Encoding(self.encoding))
        if self.encoding is Encoding.DIRECT:
            _validate_direct(self.eigenvalues)
        else:
            _validate_exp_half(self.eigenvalues)

    def log_magnitude(self, n: int) -> Real:
        """Exact ``log(|λ_n| + 1)``."""
        value = self.eigenvalues.at(n)
        if self.encoding is Encoding.EXP_HALF:
            return value * Fraction(1, 2)
        return Real.log1p_abs(as_fraction(value))

    def eigenvalue(self, n: int) -> Fraction | None:
        """Exact eigenvalue when rational, else None."""
        value = self.eigenvalues.at(n)
        if self.encoding is Encoding.DIRECT:
            return as_fraction(value)
        shifted = (value * Fraction(1, 2)).exp_rational()
        return None if shifted is None else shifted - 1

    def eigenvalue_float(self, n: int) -> float:
        """Floating-point eigenvalue."""
        exact = self.eigenvalue(n)
        if exact is not None:
            return float(exact)
        lo, hi = exp_interval(self.eigenvalues.at(n) * Fraction(1, 2))
        return float((lo + hi) / 2) - 1.0


def _validate_direct(seq: RealSeqRep) -> None:
    if not seq.is_rational():
        raise RepresentationError("Direct eigenvalue sequences must be rational")
    for lane in seq.tail.lanes:
        if not isinstance(lane, (ConstLane, AffineLane, GeometricLane)):
            raise RepresentationError(f"Direct eigenvalue tails admit Const, Affine and Geometric lanes, got {lane.kind}")


def _validate_exp_half(seq: RealSeqRep) -> None:
    if any(v.sign() < 0 for v in seq.prefix):
        raise RepresentationError("exp_half values must be nonnegative")
    for lane in seq.tail.lanes:
        if not _lane_nonnegative(lane):
            raise RepresentationError(f"exp_half lane {lane!r} takes negative values")


def _lane_nonnegative(lane: Lane) -> bool:
    q0, sign = lane.eventual_sign()
    if sign < 0:
        return False
    return all(lane.at(q).sign() >= 0 for q in range(q0))


# =============================================================================
# Spectra with multiplicities
# =============================================================================


@dataclass(frozen=True)
class SpectrumBlock:
    """An eigenvalue with its multiplicity."""

    value: Fraction
    multiplicity: ExtNat

    def __post_init__(self) -> None:
        """Coerce fields."""
        object.__setattr__(self, "value", as_fraction(self.value))
        object.__setattr__(self, "multiplicity", extnat(self.multiplicity))


@dataclass(frozen=True)
class ValueRule:
    """Block ``n >= 0`` has eigenvalue ``2^{n/power} - 1`` and multiplicity ``multiplicities[n]``."""

    power: int
    multiplicities: DimSeqRep

    def __post_init__(self) -> None:
        """Validate the power."""
        if self.power not in (1, 2):
            raise RepresentationError(f"ValueRule power must be 1 or 2, got {self.power}")

    def log_magnitude(self, n: int) -> Real:
        """Exact ``log(|value_n| + 1) = (n/power)·log 2``."""
        return Real.log(2, Fraction(n, self.power))


@dataclass(frozen=True)
class SpectrumRep:
    """Explicit blocks plus an optional rule-generated block tail.

    Blocks are merged by value, sorted, and stripped of zero multiplicities.
    The total multiplicity must be INF.
    """

    blocks: tuple[SpectrumBlock, ...] = ()
    rule: ValueRule | None = None
    index_scheme: str = DEFAULT_INDEX_SCHEME

    def __post_init__(self) -> None:
        """Normalize blocks and check the total multiplicity."""
        merged: dict[Fraction, list[ExtNat]] = {}
        for block in self.blocks:
            merged.setdefault(block.value, []).append(block.multiplicity)
        blocks = tuple(
            SpectrumBlock(value, total)
            for value, total in sorted((v, extnat_sum(ms)) for v, ms in merged.items())
            if total != ZERO
        )
        object.__setattr__(self, "blocks", blocks)
        if not self.total_multiplicity().is_inf:
            raise RepresentationError("A spectrum on an infinite-dimensional space needs total multiplicity INF")

    @classmethod
    def build(cls, blocks: Iterable[tuple[Any, Any]], rule: ValueRule | None = None, index_scheme: str = DEFAULT_INDEX_SCHEME) -> SpectrumRep:
        """Build from ``(value, multiplicity)`` pairs."""
        return cls(tuple(SpectrumBlock(as_fraction(v), extnat(m)) for v, m in blocks), rule, index_scheme)

    def total_multiplicity(self) -> ExtNat:
        """ExtNat sum of every multiplicity."""
        explicit = extnat_sum(b.multiplicity for b in self.blocks)
        if self.rule is not None and diverges(self.rule.multiplicities):
            return INF
        return explicit
