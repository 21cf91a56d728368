"""From dimension sequences to spectra.

``psi_k(α)`` is the operator whose band ``n`` holds ``α_n`` copies of the
eigenvalue ``2^{n/power} - 1``, so ``assoc_dims(psi_k(α, p), p) == α``. The
stratum ``k = count_inf(α)`` only changes how the basis is laid out, which
``cumulative_packing`` spells out.
"""

from __future__ import annotations

from dataclasses import dataclass

import structlog

from domaingauge.errors import NotInX0Error, UnsupportedInfPatternError
from domaingauge.opmodel.operators import DEFAULT_INDEX_SCHEME, SpectrumRep, ValueRule
from domaingauge.seqrep.extnat import ExtNat
from domaingauge.seqrep.sequence import DimSeqRep, count_inf, diverges

logger = structlog.get_logger(__name__)


def psi_k(alpha: DimSeqRep, power: int = 1, index_scheme: str = DEFAULT_INDEX_SCHEME) -> SpectrumRep:
    """Spectrum with ``α_n`` eigenvalues ``2^{n/power} - 1`` for every ``n``.

    The default power 1 puts block ``n`` at ``2^n - 1``, the left edge of band
    ``n`` under the default bands of ``assoc_dims``, so that
    ``assoc_dims(psi_k(α)) == α``. Power 2 gives the values ``2^{n/2} - 1``,
    which read back as ``α`` only through ``assoc_dims(·, 2)``.

    Raises:
        NotInX0Error: If ``Σ α_n < ∞``
        UnsupportedInfPatternError: If infinitely many entries are INF without a Const(INF) tail
    """
    if not diverges(alpha):
        raise NotInX0Error("psi_k needs a dimension sequence with infinite total sum")
    if count_inf(alpha).is_inf and not alpha.tail.is_inf:
        raise UnsupportedInfPatternError("Infinitely many INF entries must form a Const(INF) tail")
    logger.debug("Built psi_k spectrum", k=str(count_inf(alpha)), power=power)
    return SpectrumRep((), ValueRule(power, alpha), index_scheme)


@dataclass(frozen=True)
class PackedBlock:
    """Where block ``n`` lives in the basis.

    Finite blocks take the contiguous range ``eta`` of the primary basis;
    INF blocks take the whole auxiliary class ``zeta_class``.
    """

    band: int
    multiplicity: ExtNat
    eta: range | None
    zeta_class: int | None


def cumulative_packing(alpha: DimSeqRep, blocks: int) -> tuple[PackedBlock, ...]:
    """Lay out the first ``blocks`` blocks of ``psi_k(α)``.

    With ``b_{n} = b_{n-1} + α_n`` for finite ``α_n`` and ``b_n = b_{n-1}``
    otherwise, finite block ``n`` occupies ``[b_{n-1}, b_n)``. The ``p``-th INF
    block (counting from 1) occupies class ``p``.
    """
    layout: list[PackedBlock] = []
    filled = 0
    classes = 0
    for n in range(blocks):
        value = alpha.at(n)
        if value.is_inf:
            classes += 1
            layout.append(PackedBlock(n, value, None, classes))
        else:
            size = value.finite()
            layout.append(PackedBlock(n, value, range(filled, filled + size), None))
            filled += size
    return tuple(layout)
