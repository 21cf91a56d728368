"""Finite-dimensional range inclusion.

``Ran A ⊂ Ran B`` iff ``AAᵀ <= λ·BBᵀ`` for some ``λ > 0``. The rank criterion
decides inclusion; the smallest such λ is ``‖Σ_r⁻¹ U_rᵀ A‖₂²`` over the
truncated SVD ``B = U_r Σ_r V_rᵀ``, and the PSD test confirms it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np
import scipy.linalg
import structlog
from numpy.typing import ArrayLike

from domaingauge.errors import DimensionMismatchError, RepresentationError

logger = structlog.get_logger(__name__)

# λ tried when refuting inclusion.
REFUTATION_LAMBDA = 1e6
_ROUNDOFF = 64 * np.finfo(np.float64).eps


@dataclass(frozen=True)
class DouglasResult:
    """Outcome of the range-inclusion oracle."""

    included: bool
    lam: float | None
    rank_b: int
    rank_ab: int
    verified: bool

    def to_dict(self) -> dict[str, Any]:
        """JSON form."""
        return {
            "included": self.included,
            "lambda": self.lam,
            "rank_b": self.rank_b,
            "rank_ab": self.rank_ab,
            "verified": self.verified,
        }


def numerical_rank(matrix: np.ndarray, tol: float, scale: float | None = None) -> int:
    """Rank by column-pivoted QR: count ``|R_ii| > tol·scale``.

    ``scale`` defaults to ``|R_00|``.
    """
    if matrix.size == 0:
        return 0
    r = scipy.linalg.qr(matrix, mode="r", pivoting=True)[0]
    diagonal = np.abs(np.diag(r))
    reference = scale if scale is not None else float(diagonal[0]) if diagonal.size else 0.0
    if reference == 0.0:
        return 0
    return int(np.count_nonzero(diagonal > tol * reference))


def psd_dominates(a: ArrayLike, b: ArrayLike, lam: float, tol: float = 1e-8) -> bool:
    """Check ``λ·BBᵀ - AAᵀ >= 0`` up to ``tol·max(‖AAᵀ‖, 1)`` plus roundoff of the ``λ·BBᵀ`` term."""
    am, bm = _as_square_pair(a, b)
    aat, bbt = am @ am.T, bm @ bm.T
    gap = lam * bbt - aat
    smallest = float(scipy.linalg.eigvalsh((gap + gap.T) / 2)[0])
    slack = tol * max(float(np.linalg.norm(aat, 2)), 1.0) + _ROUNDOFF * lam * float(np.linalg.norm(bbt, 2)) * am.shape[0]
    return smallest >= -slack


def douglas_findim(a: ArrayLike, b: ArrayLike, tol: float = 1e-8) -> DouglasResult:
    """Decide ``Ran A ⊂ Ran B`` for square matrices of equal size.

    Args:
        a: Matrix A
        b: Matrix B
        tol: Relative tolerance for ranks and the PSD test

    Returns:
        DouglasResult. ``lam`` is the smallest dominating λ when included.
        ``verified`` records that the PSD test agrees: it passes at ``lam``
        when included and fails at ``REFUTATION_LAMBDA`` otherwise.

    Raises:
        DimensionMismatchError: If the matrices are not square of equal size
    """
    if tol <= 0:
        raise RepresentationError(f"tol must be positive, got {tol}")
    am, bm = _as_square_pair(a, b)
    scale = max(float(np.linalg.norm(am, 2)), float(np.linalg.norm(bm, 2)))
    rank_b = numerical_rank(bm, tol, scale)
    rank_ab = numerical_rank(np.hstack([bm, am]), tol, scale)
    included = rank_ab == rank_b

    if not included:
        verified = not psd_dominates(am, bm, REFUTATION_LAMBDA, tol)
        logger.debug("Decided range inclusion", included=False, rank_b=rank_b, rank_ab=rank_ab, verified=verified)
        return DouglasResult(False, None, rank_b, rank_ab, verified)

    u, sigma, _ = scipy.linalg.svd(bm)
    kept = sigma > tol * scale if scale > 0 else np.zeros_like(sigma, dtype=bool)
    if not kept.any():
        lam = 0.0
    else:
        coords = (u[:, kept].T @ am) / sigma[kept][:, None]
        lam = float(np.linalg.norm(coords, 2)) ** 2
    verified = psd_dominates(am, bm, lam, tol)
    logger.debug("Decided range inclusion", included=True, lam=lam, rank_b=rank_b, verified=verified)
    return DouglasResult(True, lam, rank_b, rank_ab, verified)


def _as_square_pair(a: ArrayLike, b: ArrayLike) -> tuple[np.ndarray, np.ndarray]:
    am = np.asarray(a, dtype=np.float64)
    bm = np.asarray(b, dtype=np.float64)
    if am.ndim != 2 or am.shape[0] != am.shape[1]:
        raise DimensionMismatchError(f"A must be square, got shape {am.shape}")
    if am.shape != bm.shape:
        raise DimensionMismatchError(f"Shapes differ: {am.shape} vs {bm.shape}")
    return am, bm
