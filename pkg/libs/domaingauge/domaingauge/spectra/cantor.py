"""The middle-thirds Cantor measure and its finite models.

``μ`` is the invariant measure of ``S0(x) = x/3`` and ``S1(x) = (x+2)/3`` with
weights 1/2. The cylinder of a binary word ``w`` of length ``d`` is
``S_w([0, 1])``; it has mass ``2^{-d}`` and conditional mean ``S_w(1/2)``.
Normalized cylinder indicators are orthonormal in ``L²(μ)``, and the
conditional expectation of multiplication by an affine ``f`` onto their span is
``diag(f(S_w(1/2)))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np
from numpy.typing import ArrayLike

from domaingauge.errors import RepresentationError
from domaingauge.spectra.truncation import TruncatedOp, check_dimension


def cantor_moments(p_max: int) -> list[Fraction]:
    """Exact moments ``m_0 ... m_{p_max}`` of ``μ``.

    Self-similarity gives ``m_p = (m_p + Σ_j C(p, j)·2^{p-j}·m_j) / (2·3^p)``;
    moving the ``j = p`` term over leaves a recursion in lower moments.
    """
    if p_max < 0:
        raise RepresentationError(f"p_max must be nonnegative, got {p_max}")
    moments = [Fraction(1)]
    for p in range(1, p_max + 1):
        lower = sum(comb(p, j) * 2 ** (p - j) * moments[j] for j in range(p))
        moments.append(Fraction(lower) / (2 * 3**p - 2))
    return moments


def cylinder_means(depth: int) -> list[Fraction]:
    """Exact conditional means ``S_w(m_1)`` of the ``2^depth`` cylinders, in binary order of ``w``."""
    if depth < 0:
        raise RepresentationError(f"depth must be nonnegative, got {depth}")
    mean = cantor_moments(1)[1]
    scale = Fraction(1, 3**depth)
    means = []
    for index in range(1 << depth):
        left = sum((Fraction(2, 3 ** (i + 1)) for i in range(depth) if index >> (depth - 1 - i) & 1), Fraction(0))
        means.append(left + scale * mean)
    return means


def cylinder_means_float(depth: int) -> np.ndarray:
    """Floating-point conditional means, computed from the binary digits of each cylinder index."""
    index = np.arange(1 << depth)
    digits = (index[:, None] >> np.arange(depth - 1, -1, -1)[None, :]) & 1
    left = digits @ (2.0 / 3.0 ** np.arange(1, depth + 1)) if depth else np.zeros(1)
    return left + 0.5 / 3.0**depth


@dataclass(frozen=True)
class CantorMeasure:
    """``μ`` resolved down to cylinders of a fixed depth."""

    depth: int

    def __post_init__(self) -> None:
        """Validate the depth."""
        if self.depth < 0:
            raise RepresentationError(f"depth must be nonnegative, got {self.depth}")

    @property
    def cylinders(self) -> int:
        """Number of cylinders, ``2^depth``."""
        return 1 << self.depth

    @property
    def cylinder_mass(self) -> Fraction:
        """Mass of each cylinder."""
        return Fraction(1, self.cylinders)

    def means(self) -> np.ndarray:
        """Conditional means of the cylinders."""
        return cylinder_means_float(self.depth)

    def intervals(self) -> np.ndarray:
        """``(left, right)`` endpoints of each cylinder."""
        width = 3.0**-self.depth
        left = self.means() - 0.5 * width
        return np.column_stack([left, left + width])


def mult_op(depth: int, slope: float = 1.0, intercept: float = 0.0, max_dimension: int | None = None) -> TruncatedOp:
    """Multiplication by ``f(x) = slope·x + intercept`` on the depth-``d`` cylinder basis.

    Raises:
        RepresentationError: If depth < 1 or ``2^depth`` exceeds the dimension cap
    """
    if depth < 1:
        raise RepresentationError(f"depth must be at least 1, got {depth}")
    check_dimension(1 << depth, max_dimension)
    values = slope * CantorMeasure(depth).means() + intercept
    return TruncatedOp.diagonal(values, label=f"mult({slope}x+{intercept}, depth={depth})")


def lemma_sequence_op(n: int, depth: int, max_dimension: int | None = None) -> TruncatedOp:
    """Multiplication by ``f_n(x) = x/n + 1``."""
    if n < 1:
        raise RepresentationError(f"n must be positive, got {n}")
    return mult_op(depth, 1.0 / n, 1.0, max_dimension)


def empirical_moments(op: TruncatedOp, p_max: int) -> np.ndarray:
    """``p``-th moments of the eigenvalue distribution, each eigenvalue weighted equally."""
    eigenvalues = op.eigenvalues()
    return np.array([np.mean(eigenvalues**p) for p in range(p_max + 1)])


# =============================================================================
# Characteristic functions
# =============================================================================


def cantor_cf(t: ArrayLike, terms: int = 40) -> np.ndarray:
    """``e^{it/2}·Π_{k=1}^{K} cos(t·3^{-k})``, the ``K``-term truncation of ``μ̂(t)``."""
    if terms < 1:
        raise RepresentationError(f"terms must be at least 1, got {terms}")
    t = np.asarray(t, dtype=np.float64)
    product = np.ones_like(t)
    for k in range(1, terms + 1):
        product *= np.cos(t / 3.0**k)
    return np.exp(0.5j * t) * product


def lebesgue_cf(t: ArrayLike) -> np.ndarray:
    """``(e^{it} - 1)/(it)`` for the uniform measure on ``[0, 1]``, with value 1 at ``t = 0``."""
    t = np.asarray(t, dtype=np.float64)
    safe = np.where(t == 0, 1.0, t)
    return np.where(t == 0, 1.0 + 0.0j, (np.exp(1j * safe) - 1.0) / (1j * safe))


def point_mass_cf(t: ArrayLike, atom: float = 0.0) -> np.ndarray:
    """``e^{i·t·atom}`` for the point mass at ``atom``."""
    return np.exp(1j * atom * np.asarray(t, dtype=np.float64))
