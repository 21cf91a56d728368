"""Reduction maps between sequences and diagonal operators.

``tilde`` splits each entry into a nonnegative pair that remembers its sign:
``x_n >= 0`` goes to ``(x_n, 0)`` and ``x_n < 0`` to ``(0, -x_n)`` at positions
``2n`` and ``2n+1``. ``psi`` turns a sequence into the diagonal operator with
eigenvalues ``exp(x̃_n/2) - 1``; ``phi`` reads ``log <ξ_n, T_A ξ_n>`` off the
contraction ``T_A = (|A|+1)^{-2}`` in the operator's own basis.
"""

from __future__ import annotations

from dataclasses import dataclass

import structlog

from domaingauge.eqrel.e1 import first_difference
from domaingauge.errors import InvariantViolationError, RepresentationError, UnsupportedTailError
from domaingauge.opmodel.operators import DEFAULT_INDEX_SCHEME, DiagOpSeq, Encoding
from domaingauge.opmodel.transforms import t_transform
from domaingauge.seqrep.lanes import ConstLane, Lane
from domaingauge.seqrep.reals import Real
from domaingauge.seqrep.sequence import RealSeqRep, RealTail

logger = structlog.get_logger(__name__)

# Largest number of tail cycles unrolled before every lane has constant sign.
MAX_SIGN_SETTLING = 1 << 16

_ZERO_LANE = ConstLane(Real(0))


@dataclass(frozen=True)
class TildeImage:
    """Nonnegative sequence produced by ``tilde``."""

    seq: RealSeqRep

    def __post_init__(self) -> None:
        """Check that entries are nonnegative and paired."""
        if any(v.sign() < 0 for v in self.seq.prefix) or len(self.seq.prefix) % 2:
            raise RepresentationError("Tilde images need an even-length nonnegative prefix")

    def pair(self, n: int) -> tuple[Real, Real]:
        """Entries ``(2n, 2n+1)`` coming from source index ``n``."""
        return self.seq.at(2 * n), self.seq.at(2 * n + 1)

    def source_value(self, n: int) -> Real:
        """Recover ``x_n`` from its pair."""
        positive, negative = self.pair(n)
        return positive - negative


def tilde(x: RealSeqRep) -> TildeImage:
    """Interleave ``(|x_n|, 0)`` or ``(0, |x_n|)`` by the sign of ``x_n``.

    Tail cycles are unrolled into the prefix until every lane keeps one sign,
    then each lane of period ``p`` becomes two lanes of period ``2p``.

    Raises:
        UnsupportedTailError: If some lane changes sign too late to unroll
    """
    settle = max((lane.eventual_sign()[0] for lane in x.tail.lanes), default=0)
    if settle > MAX_SIGN_SETTLING:
        raise UnsupportedTailError(f"A lane keeps changing sign for {settle} cycles")
    seq = x.materialize(settle)

    prefix: list[Real] = []
    for value in seq.prefix:
        prefix.extend(_split(value))
    lanes: list[Lane] = []
    for lane in seq.tail.lanes:
        _, sign = lane.eventual_sign()
        if sign > 0:
            lanes.extend((lane, _ZERO_LANE))
        elif sign < 0:
            lanes.extend((_ZERO_LANE, lane.scaled(-1)))
        else:
            lanes.extend((_ZERO_LANE, _ZERO_LANE))
    if settle:
        logger.debug("Unrolled tail cycles before tilde", cycles=settle)
    return TildeImage(RealSeqRep(tuple(prefix), RealTail(tuple(lanes))))


def _split(value: Real) -> tuple[Real, Real]:
    if value.sign() < 0:
        return Real(0), -value
    return value, Real(0)


def tilde_separating_index(x: RealSeqRep, y: RealSeqRep) -> int | None:
    """An index where ``tilde(x)`` and ``tilde(y)`` differ, or None when ``x == y``.

    Built from the first ``n`` with ``x_n != y_n``: one of ``2n``, ``2n+1`` separates.
    """
    n = first_difference(x, y)
    if n is None:
        return None
    tx, ty = tilde(x).pair(n), tilde(y).pair(n)
    if tx[0] != ty[0]:
        return 2 * n
    if tx[1] != ty[1]:
        return 2 * n + 1
    raise InvariantViolationError(f"tilde images agree at both positions of source index {n}")


def phi(op: DiagOpSeq) -> RealSeqRep:
    """``φ(A)_n = log((|a_n|+1)^{-2}) = -2·log(|a_n|+1)``, exactly."""
    return t_transform(op, 2).log_values


def psi(alpha: RealSeqRep, index_scheme: str = DEFAULT_INDEX_SCHEME) -> DiagOpSeq:
    """Diagonal operator with eigenvalues ``exp(x̃_n/2) - 1``, kept in exp_half form."""
    return DiagOpSeq(tilde(alpha).seq, Encoding.EXP_HALF, index_scheme)
