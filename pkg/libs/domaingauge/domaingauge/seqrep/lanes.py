"""Closed-form lanes: the per-residue-class building blocks of real tails.

A tail of period ``p`` is a tuple of ``p`` lanes; the tail value at offset ``m``
is ``lanes[m % p].at(m // p)``. Each lane is one of

- ``ConstLane(v)``
- ``AffineLane(s, t)``: ``s·q + t`` with ``s != 0``
- ``GeometricLane(c, r)``: ``c·r^q`` with rational ``c != 0`` and ``r > 1``
- ``LogLane(k, inner)``: ``k·log(|inner(q)| + 1)`` with a rational Affine or Geometric inner lane

Constructors normalize degenerate parameters (zero slope, zero scale, sign of the
inner lane), so two lanes compare equal iff they define the same function on q >= 0.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, ClassVar

from domaingauge.errors import RepresentationError, UnsupportedTailError
from domaingauge.seqrep.reals import Real, as_fraction, floor_ratio

# Geometric powers above this size are bounded instead of evaluated
_EXACT_POWER_BITS = 4096


class Lane(ABC):
    """A closed-form function of the cycle index q >= 0."""

    kind: ClassVar[str]

    @abstractmethod
    def at(self, q: int) -> Real:
        """Value at cycle index ``q``."""

    @abstractmethod
    def reparam(self, start: int, stride: int) -> Lane:
        """Return the lane ``q ↦ self.at(start + stride·q)``."""

    @abstractmethod
    def scaled(self, factor: Fraction) -> Lane:
        """Return the lane ``q ↦ factor·self.at(q)``."""

    @abstractmethod
    def eventual_sign(self) -> tuple[int, int]:
        """Return ``(q0, s)`` such that ``s·at(q) >= 0`` for every ``q >= q0``.

        ``s`` is 0 only when the lane is identically zero.
        """

    def shifted(self, offset: Real) -> Lane:
        """Return the lane ``q ↦ self.at(q) + offset``.

        Raises:
            UnsupportedTailError: If the lane kind is not closed under shifts
        """
        raise UnsupportedTailError(f"{self.kind} lanes are not closed under adding a constant")

    def enclose(self, q: int) -> tuple[Real, Real]:
        """Bounds ``(low, high)`` on ``at(q)``; exact unless a lane can bound itself more cheaply."""
        value = self.at(q)
        return value, value


@dataclass(frozen=True)
class ConstLane(Lane):
    """Constant lane."""

    kind: ClassVar[str] = "const"
    value: Real

    def at(self, q: int) -> Real:
        return self.value

    def reparam(self, start: int, stride: int) -> Lane:
        return self

    def scaled(self, factor: Fraction) -> Lane:
        return ConstLane(self.value * factor)

    def eventual_sign(self) -> tuple[int, int]:
        return 0, self.value.sign()

    def shifted(self, offset: Real) -> Lane:
        return ConstLane(self.value + offset)


@dataclass(frozen=True)
class AffineLane(Lane):
    """``slope·q + intercept`` with a nonzero slope; build through ``affine``."""

    kind: ClassVar[str] = "affine"
    slope: Real
    intercept: Real

    def at(self, q: int) -> Real:
        return self.slope * q + self.intercept

    def reparam(self, start: int, stride: int) -> Lane:
        return affine(self.slope * stride, self.intercept + self.slope * start)

    def scaled(self, factor: Fraction) -> Lane:
        return affine(self.slope * factor, self.intercept * factor)

    def eventual_sign(self) -> tuple[int, int]:
        direction = self.slope.sign()
        magnitude = self.slope * direction
        q0 = max(0, -floor_ratio(self.intercept * direction, magnitude))
        return q0, direction

    def shifted(self, offset: Real) -> Lane:
        return affine(self.slope, self.intercept + offset)

    def rational_params(self) -> tuple[Fraction, Fraction] | None:
        """Return ``(slope, intercept)`` as Fractions when both are rational."""
        s = self.slope.rational_value()
        t = self.intercept.rational_value()
        if s is None or t is None:
            return None
        return s, t


@dataclass(frozen=True)
class GeometricLane(Lane):
    """``coeff·ratio^q`` with rational ``coeff != 0`` and ``ratio > 1``."""

    kind: ClassVar[str] = "geometric"
    coeff: Fraction
    ratio: Fraction

    def __post_init__(self) -> None:
        """Validate the parameters."""
        if self.coeff == 0:
            raise RepresentationError("Geometric coefficient must be nonzero")
        if self.ratio <= 1:
            raise RepresentationError(f"Geometric ratio must exceed 1, got {self.ratio}")

    def at(self, q: int) -> Real:
        return Real(self.coeff * self.ratio**q)

    def value(self, q: int) -> Fraction:
        """Exact rational value at ``q``."""
        return self.coeff * self.ratio**q

    def reparam(self, start: int, stride: int) -> Lane:
        return GeometricLane(self.coeff * self.ratio**start, self.ratio**stride)

    def scaled(self, factor: Fraction) -> Lane:
        if factor == 0:
            return ConstLane(Real(0))
        return GeometricLane(self.coeff * factor, self.ratio)

    def eventual_sign(self) -> tuple[int, int]:
        return 0, 1 if self.coeff > 0 else -1


@dataclass(frozen=True)
class LogLane(Lane):
    """``scale·log(|inner(q)| + 1)``; build through ``log_lane``."""

    kind: ClassVar[str] = "log"
    scale: Fraction
    inner: AffineLane | GeometricLane

    def at(self, q: int) -> Real:
        return Real.log1p_abs(self.inner_value(q), self.scale)

    def enclose(self, q: int) -> tuple[Real, Real]:
        """Bounds on ``at(q)`` that skip building ``r^q`` once it runs past a few thousand bits."""
        inner = self.inner
        if not isinstance(inner, GeometricLane) or q * inner.ratio.numerator.bit_length() < _EXACT_POWER_BITS:
            return super().enclose(q)
        # log(c·r^q) < log(c·r^q + 1) < log(c·r^q) + 1/c
        c = abs(inner.coeff)
        core = Real.log(c) + Real.log(inner.ratio, q)
        low, high = core * self.scale, (core + Real(1 / c)) * self.scale
        return (low, high) if self.scale > 0 else (high, low)

    def inner_value(self, q: int) -> Fraction:
        """Exact rational value of the inner lane at ``q``."""
        if isinstance(self.inner, GeometricLane):
            return self.inner.value(q)
        params = self.inner.rational_params()
        assert params is not None
        slope, intercept = params
        return slope * q + intercept

    def reparam(self, start: int, stride: int) -> Lane:
        inner = self.inner.reparam(start, stride)
        assert isinstance(inner, (AffineLane, GeometricLane))
        return log_lane(self.scale, inner)

    def scaled(self, factor: Fraction) -> Lane:
        return log_lane(self.scale * factor, self.inner)

    def eventual_sign(self) -> tuple[int, int]:
        return 0, 1 if self.scale > 0 else -1


def affine(slope: Any, intercept: Any) -> Lane:
    """Build an affine lane, collapsing a zero slope to a ConstLane."""
    s = Real.of(slope)
    t = Real.of(intercept)
    if s.is_zero():
        return ConstLane(t)
    return AffineLane(s, t)


def log_lane(scale: Any, inner: Lane) -> Lane:
    """Build ``scale·log(|inner|+1)``, normalizing the inner sign and degenerate cases.

    Raises:
        UnsupportedTailError: If the inner lane is not a rational Affine or Geometric lane
    """
    k = as_fraction(scale)
    if isinstance(inner, ConstLane):
        value = inner.value.rational_value()
        if value is None:
            raise UnsupportedTailError("log of an irrational constant is outside the exact class")
        return ConstLane(Real.log1p_abs(value, k))
    if k == 0:
        return ConstLane(Real(0))
    if isinstance(inner, GeometricLane):
        return LogLane(k, inner if inner.coeff > 0 else GeometricLane(-inner.coeff, inner.ratio))
    if isinstance(inner, AffineLane):
        params = inner.rational_params()
        if params is None:
            raise UnsupportedTailError("log of an irrational affine lane is outside the exact class")
        slope, intercept = params
        if slope < 0:
            slope, intercept = -slope, -intercept
        return LogLane(k, AffineLane(Real(slope), Real(intercept)))
    raise UnsupportedTailError(f"log of a {inner.kind} lane is outside the exact class")


def const(value: Any) -> ConstLane:
    """Build a constant lane from a Real or rational-like value."""
    return ConstLane(Real.of(value))
