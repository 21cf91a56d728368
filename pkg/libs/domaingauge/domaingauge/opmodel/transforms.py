"""The contraction ``T = (|A| + 1)^{-power}`` of a diagonal operator, kept in log form."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from domaingauge.errors import RepresentationError, UnsupportedTailError
from domaingauge.opmodel.operators import DiagOpSeq, Encoding
from domaingauge.seqrep.lanes import ConstLane, Lane, log_lane
from domaingauge.seqrep.reals import Real, as_fraction, exp_interval
from domaingauge.seqrep.sequence import RealSeqRep, RealTail


@dataclass(frozen=True)
class ContractionSeq:
    """Diagonal of ``(|A| + 1)^{-power}`` stored as the exact sequence of its logarithms."""

    log_values: RealSeqRep
    power: int

    def exact_value(self, n: int) -> Fraction | None:
        """Entry ``n`` as a Fraction when it is rational."""
        return self.log_values.at(n).exp_rational()

    def value_bounds(self, n: int) -> tuple[Fraction, Fraction]:
        """Rational bounds on entry ``n``."""
        exact = self.exact_value(n)
        if exact is not None:
            return exact, exact
        return exp_interval(self.log_values.at(n))

    def values_float(self, count: int) -> np.ndarray:
        """Floating-point view of the first ``count`` entries."""
        return np.exp(np.array([float(v) for v in self.log_values.values(count)], dtype=np.float64))

    def as_rational_seq(self) -> RealSeqRep:
        """The entries as a rational RealSeqRep.

        Raises:
            UnsupportedTailError: If some lane has no rational closed form
        """
        prefix = []
        for n in range(len(self.log_values.prefix)):
            value = self.exact_value(n)
            if value is None:
                raise UnsupportedTailError(f"Entry {n} of the contraction is irrational")
            prefix.append(value)
        lanes = []
        for lane in self.log_values.tail.lanes:
            value = lane.value.exp_rational() if isinstance(lane, ConstLane) else None
            if value is None:
                raise UnsupportedTailError(f"The contraction of a {lane.kind} lane has no rational closed form")
            lanes.append(ConstLane(Real(value)))
        return RealSeqRep(tuple(prefix), RealTail(tuple(lanes)))


def t_transform(op: DiagOpSeq, power: int) -> ContractionSeq:
    """Map ``a_n ↦ (|a_n| + 1)^{-power}``, exactly, as logarithms.

    Direct lanes map through ``-power·log(|·| + 1)``: Const stays Const, while
    Affine and Geometric lanes become log lanes. ``exp_half`` values ``x`` map
    to ``-(power/2)·x``.

    Raises:
        RepresentationError: If power is not 1 or 2
    """
    if power not in (1, 2):
        raise RepresentationError(f"power must be 1 or 2, got {power}")
    seq = op.eigenvalues
    if op.encoding is Encoding.EXP_HALF:
        factor = Fraction(-power, 2)
        prefix = tuple(v * factor for v in seq.prefix)
        lanes: tuple[Lane, ...] = tuple(lane.scaled(factor) for lane in seq.tail.lanes)
    else:
        prefix = tuple(Real.log1p_abs(as_fraction(v), -power) for v in seq.prefix)
        lanes = tuple(log_lane(-power, lane) for lane in seq.tail.lanes)
    return ContractionSeq(RealSeqRep(prefix, RealTail(lanes)), power)
