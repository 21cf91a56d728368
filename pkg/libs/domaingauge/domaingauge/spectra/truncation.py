"""Finite truncations of self-adjoint operators and the strong resolvent distance.

A ``TruncatedOp`` is a real symmetric matrix together with weights ``2^{-(n+1)}``
on the standard basis vectors ``e_0, e_1, ...``, which play the role of the
dense test family. The distance

    d(A, B) = Σ_n w_n·‖(A - i)^{-1} e_n - (B - i)^{-1} e_n‖

is a pseudo-metric, and ``‖(A - i)^{-1} - (B - i)^{-1}‖ <= ‖A - B‖`` bounds it by
the operator-norm distance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg
import structlog
from numpy.typing import ArrayLike

from domaingauge.config.core import SpectraConfig
from domaingauge.config.utils import apply_dimension_override
from domaingauge.errors import DimensionMismatchError, RepresentationError

logger = structlog.get_logger(__name__)


def check_dimension(size: int, max_dimension: int | None = None) -> None:
    """Reject matrices above the configured cap (``DOMAINGAUGE_MAX_N`` when set).

    Raises:
        RepresentationError: If ``size`` exceeds the cap
    """
    cap = max_dimension if max_dimension is not None else apply_dimension_override(SpectraConfig()).max_dimension
    if size > cap:
        raise RepresentationError(f"Matrix dimension {size} exceeds the cap {cap}")


def default_weights(size: int) -> np.ndarray:
    """Weights ``2^{-(n+1)}`` for ``n < size``."""
    return 0.5 ** np.arange(1, size + 1, dtype=np.float64)


@dataclass(frozen=True, eq=False)
class TruncatedOp:
    """Symmetric matrix with weighted standard test vectors."""

    matrix: np.ndarray
    weights: np.ndarray = field(default_factory=lambda: np.empty(0))
    label: str = ""

    def __post_init__(self) -> None:
        """Validate symmetry and freeze the arrays."""
        matrix = np.array(self.matrix, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise DimensionMismatchError(f"Truncated operators are square, got shape {matrix.shape}")
        if not np.array_equal(matrix, matrix.T):
            raise RepresentationError("Truncated operators must be exactly symmetric")
        weights = np.array(self.weights, dtype=np.float64) if np.size(self.weights) else default_weights(matrix.shape[0])
        if weights.shape != (matrix.shape[0],):
            raise DimensionMismatchError(f"Expected {matrix.shape[0]} test weights, got {weights.shape}")
        matrix.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def diagonal(cls, values: ArrayLike, label: str = "") -> TruncatedOp:
        """Diagonal operator with the given eigenvalues."""
        return cls(np.diag(np.asarray(values, dtype=np.float64)), label=label)

    @property
    def size(self) -> int:
        """Dimension N."""
        return int(self.matrix.shape[0])

    @property
    def is_diagonal(self) -> bool:
        """Whether every off-diagonal entry is zero."""
        return not np.count_nonzero(self.matrix - np.diag(np.diag(self.matrix)))

    def eigenvalues(self) -> np.ndarray:
        """Eigenvalues in ascending order."""
        if self.is_diagonal:
            return np.sort(np.diag(self.matrix))
        return scipy.linalg.eigvalsh(self.matrix)

    def resolvent(self) -> np.ndarray:
        """``(A - i)^{-1}`` as a dense complex matrix."""
        if self.is_diagonal:
            return np.diag(1.0 / (np.diag(self.matrix) - 1j))
        shifted = self.matrix - 1j * np.eye(self.size)
        return scipy.linalg.solve(shifted, np.eye(self.size, dtype=np.complex128))

    def padded(self, size: int) -> TruncatedOp:
        """Embed as the upper-left block of a ``size × size`` operator, zero elsewhere."""
        if size < self.size:
            raise DimensionMismatchError(f"Cannot pad a {self.size}-dimensional operator to {size}")
        matrix = np.zeros((size, size))
        matrix[: self.size, : self.size] = self.matrix
        return TruncatedOp(matrix, label=self.label)


def srt_dist(a: TruncatedOp, b: TruncatedOp) -> float:
    """Weighted strong resolvent distance over the shared test vectors.

    Raises:
        DimensionMismatchError: If sizes or test weights differ
    """
    if a.size != b.size:
        raise DimensionMismatchError(f"Sizes differ: {a.size} vs {b.size}")
    if not np.array_equal(a.weights, b.weights):
        raise DimensionMismatchError("Operators use different test vector weights")
    if a.is_diagonal and b.is_diagonal:
        gaps = np.abs(1.0 / (np.diag(a.matrix) - 1j) - 1.0 / (np.diag(b.matrix) - 1j))
        return float(a.weights @ gaps)
    difference = a.resolvent() - b.resolvent()
    return float(a.weights @ np.linalg.norm(difference, axis=0))


def interleave_approx(a: ArrayLike, k: int, reps: int, max_dimension: int | None = None) -> TruncatedOp:
    """Keep ``a_1 ... a_k`` on the first ``k`` basis vectors and repeat each ``a_i`` ``reps`` times on its class.

    Class ``i`` holds positions ``k + i + k·r`` for ``r < reps``, a round-robin truncation
    of a partition into ``k`` infinite classes.

    Raises:
        RepresentationError: If ``k`` is outside ``1..len(a)``, ``reps < 1`` or the size exceeds the cap
    """
    values = np.asarray(a, dtype=np.float64)
    if not 1 <= k <= values.size:
        raise RepresentationError(f"k must lie in 1..{values.size}, got {k}")
    if reps < 1:
        raise RepresentationError(f"reps must be positive, got {reps}")
    check_dimension(k * (reps + 1), max_dimension)
    head = values[:k]
    return TruncatedOp.diagonal(np.concatenate([head, np.tile(head, reps)]), label=f"interleave(k={k}, reps={reps})")
