"""Convergence tables for the finite approximation steps.

- ``lemma44_table``: multiplication by ``x/n + 1`` approaches the identity with
  ``srt_dist <= 1/n``
- ``interleave_table``: the round-robin interleaving agrees with the diagonal
  operator on the first ``k`` test vectors, so its distance is at most ``2^{1-k}``
- ``density_pipeline``: interleave, then replace each class block ``a_i·I`` by
  multiplication by ``a_i + x/m`` on the Cantor cylinder basis, which moves the
  operator by at most ``1/m``
"""

from __future__ import annotations

from collections.abc import Iterable
from typing import Any

import numpy as np
import structlog
from numpy.typing import ArrayLike

from domaingauge.errors import RepresentationError
from domaingauge.spectra.cantor import CantorMeasure, lemma_sequence_op
from domaingauge.spectra.truncation import TruncatedOp, check_dimension, interleave_approx, srt_dist

logger = structlog.get_logger(__name__)


def lemma44_table(n_max: int, depth: int, max_dimension: int | None = None) -> list[dict[str, Any]]:
    """Rows ``{"n", "bound", "srt_dist"}`` for ``n = 1 .. n_max``."""
    if n_max < 1:
        raise RepresentationError(f"n_max must be positive, got {n_max}")
    identity = TruncatedOp.diagonal(np.ones(1 << depth), label="identity")
    rows = []
    for n in range(1, n_max + 1):
        rows.append({"n": n, "bound": 1.0 / n, "srt_dist": srt_dist(lemma_sequence_op(n, depth, max_dimension), identity)})
    return rows


def _reference(values: np.ndarray, size: int) -> TruncatedOp:
    return TruncatedOp.diagonal(values, label="diag(a)").padded(size)


def interleave_table(
    a: ArrayLike, reps: int, k_max: int | None = None, max_dimension: int | None = None
) -> list[dict[str, Any]]:
    """Rows ``{"k", "bound", "srt_dist"}`` comparing ``interleave_approx(a, k, reps)`` with ``diag(a)``.

    ``k`` runs from 1 to ``k_max`` (default: every class, ``N``). Both operators
    are padded with zeros to the size of the ``k = k_max`` interleaving.
    """
    values = np.asarray(a, dtype=np.float64)
    k_max = values.size if k_max is None else k_max
    if not 1 <= k_max <= values.size:
        raise RepresentationError(f"k_max must lie in 1..{values.size}, got {k_max}")
    size = max(values.size, k_max * (reps + 1))
    check_dimension(size, max_dimension)
    reference = _reference(values, size)
    rows = []
    for k in range(1, k_max + 1):
        approx = interleave_approx(values, k, reps, max_dimension).padded(size)
        rows.append({"k": k, "bound": 2.0 ** (1 - k), "srt_dist": srt_dist(approx, reference)})
    return rows


def density_pipeline(
    a: ArrayLike, k: int, depth: int, m_values: Iterable[int], max_dimension: int | None = None
) -> list[dict[str, Any]]:
    """Distances along ``diag(a) → interleaving → singular continuous blocks`` for each ``m``.

    Each class carries ``2^depth`` copies, one per Cantor cylinder; copy ``r`` of
    class ``i`` becomes ``a_i + mean_r/m``.

    Returns:
        Rows ``{"m", "bound", "interleave_dist", "sc_dist", "total_dist"}``
    """
    values = np.asarray(a, dtype=np.float64)
    reps = 1 << depth
    check_dimension(k * (reps + 1), max_dimension)
    interleaved = interleave_approx(values, k, reps, max_dimension)
    size = max(interleaved.size, values.size)
    reference = _reference(values, size)
    base = interleaved.padded(size)
    means = CantorMeasure(depth).means()
    head = values[:k]

    first_step = srt_dist(reference, base)
    rows = []
    for m in m_values:
        if m < 1:
            raise RepresentationError(f"m must be positive, got {m}")
        diagonal = np.zeros(size)
        diagonal[:k] = head
        # Position k + i + k·r holds copy r of class i.
        diagonal[k : k * (reps + 1)] = (head[None, :] + means[:, None] / m).reshape(-1)
        singular = TruncatedOp.diagonal(diagonal, label=f"sc(m={m})")
        rows.append(
            {
                "m": m,
                "bound": 1.0 / m,
                "interleave_dist": first_step,
                "sc_dist": srt_dist(base, singular),
                "total_dist": srt_dist(reference, singular),
            }
        )
    logger.debug("Ran density pipeline", k=k, depth=depth, rows=len(rows))
    return rows
