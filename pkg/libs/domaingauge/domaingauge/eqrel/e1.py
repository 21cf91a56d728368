"""Tail equivalence: sequences that agree from some index on."""

from __future__ import annotations

import structlog

from domaingauge.eqrel.verdicts import E1Equivalent, E1NotEquivalent, E1Verdict
from domaingauge.errors import InvariantViolationError
from domaingauge.seqrep.lanes import Lane
from domaingauge.seqrep.sequence import RealSeqRep, first_structural_difference

logger = structlog.get_logger(__name__)

# Distinct closed-form lanes agree at only a handful of cycle indices.
_MAX_AGREEMENT_RUN = 1 << 12


def decide_e1(a: RealSeqRep, b: RealSeqRep) -> E1Verdict:
    """Decide whether ``a_n = b_n`` for all sufficiently large ``n``.

    Returns:
        E1Equivalent with the minimal such ``n``, or E1NotEquivalent naming a
        residue class on which the sequences disagree infinitely often
    """
    diff = first_structural_difference(a, b)
    if diff is None:
        return E1Equivalent(0)
    start, period, residue = diff
    if residue < 0:
        last = max(n for n in range(start) if a.at(n) != b.at(n))
        logger.debug("Decided E_1", equivalent=True, start=last + 1)
        return E1Equivalent(last + 1)

    x = a.class_forms(start, period)[residue]
    y = b.class_forms(start, period)[residue]
    q = _first_disagreement(x, y)
    logger.debug("Decided E_1", equivalent=False, residue=residue, period=period)
    return E1NotEquivalent(
        start=start,
        period=period,
        residue=residue,
        sample_index=start + residue + period * q,
        description=f"indices {start} + {residue} + {period}·q disagree for all but finitely many q",
    )


def first_difference(a: RealSeqRep, b: RealSeqRep) -> int | None:
    """Return the smallest index where the sequences differ, or None if they are equal."""
    diff = first_structural_difference(a, b)
    if diff is None:
        return None
    start, period, _ = diff
    for n in range(start):
        if a.at(n) != b.at(n):
            return n
    forms = zip(a.class_forms(start, period), b.class_forms(start, period), strict=True)
    candidates = [start + r + period * _first_disagreement(x, y) for r, (x, y) in enumerate(forms) if x != y]
    return min(candidates)


def _first_disagreement(x: Lane, y: Lane) -> int:
    for q in range(_MAX_AGREEMENT_RUN):
        if x.at(q) != y.at(q):
            return q
    raise InvariantViolationError(f"Distinct lanes {x!r} and {y!r} agree on {_MAX_AGREEMENT_RUN} cycle indices")
