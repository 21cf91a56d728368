"""Exact reals of the form ``q + Σ c_i·log(r_i)`` with rational q, c_i and r_i > 0.

This class is closed under addition, subtraction and rational scaling, and it
contains every ``log(|a|+1)`` for rational ``a``. Equality is decided exactly.
A value is zero iff ``q = 0`` and ``Π r_i^{c_i} = 1``, since a nonzero rational
never equals a logarithm of a rational. Signs of nonzero values come from
mpmath interval arithmetic at increasing precision.
"""

from __future__ import annotations

import math
import numbers
from collections.abc import Iterable, Mapping
from fractions import Fraction
from functools import cache
from typing import Any

from mpmath import libmp
from mpmath.ctx_iv import MPIntervalContext

from domaingauge.errors import InvariantViolationError, RepresentationError

_START_PRECISION = 64
_MAX_PRECISION = 1 << 22
# Above this many bits the exact product comparison is slower than intervals.
_EXACT_PRODUCT_BITS = 1 << 23


def as_fraction(value: Any) -> Fraction:
    """Convert an int, Fraction, decimal/ratio string, float or rational Real to a Fraction.

    Raises:
        RepresentationError: If the value is not an exact rational
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise RepresentationError("Booleans are not rationals")
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise RepresentationError(f"Cannot parse {value!r} as an exact rational") from e
    if isinstance(value, float):
        if not math.isfinite(value):
            raise RepresentationError(f"Non-finite value {value!r}")
        return Fraction(repr(value))
    if isinstance(value, Real):
        rational = value.rational_value()
        if rational is None:
            raise RepresentationError(f"{value} is not rational")
        return rational
    raise RepresentationError(f"Cannot interpret {value!r} as an exact rational")


@cache
def _interval_context(prec: int) -> MPIntervalContext:
    ctx = MPIntervalContext()
    ctx.prec = prec
    return ctx


def _endpoint(raw: tuple[int, int, int, int]) -> Fraction:
    try:
        p, q = libmp.to_rational(raw)
    except ValueError as e:
        raise InvariantViolationError("Interval evaluation produced an unbounded endpoint") from e
    # gmpy2 backends hand back mpz parts
    return Fraction(int(p), int(q))


class Real:
    """Exact value ``rational + Σ coef·log(arg)``.

    Log terms are kept with ``arg > 1`` and merged per argument. Distinct
    arguments are never merged, so ``log 4`` and ``2·log 2`` have different
    representations but compare equal.
    """

    __slots__ = ("_logs", "_rational")

    def __init__(self, rational: Any = 0, logs: Mapping[Any, Any] | Iterable[tuple[Any, Any]] = ()) -> None:
        """Build from a rational part and ``(arg, coef)`` log terms."""
        self._rational = as_fraction(rational)
        merged: dict[Fraction, Fraction] = {}
        items = logs.items() if isinstance(logs, Mapping) else logs
        for raw_arg, raw_coef in items:
            arg = as_fraction(raw_arg)
            coef = as_fraction(raw_coef)
            if arg <= 0:
                raise RepresentationError(f"log argument must be positive, got {arg}")
            if arg == 1 or coef == 0:
                continue
            if arg < 1:
                arg, coef = 1 / arg, -coef
            merged[arg] = merged.get(arg, Fraction(0)) + coef
        self._logs: tuple[tuple[Fraction, Fraction], ...] = tuple(sorted((a, c) for a, c in merged.items() if c != 0))

    @classmethod
    def log(cls, arg: Any, coef: Any = 1) -> Real:
        """Return ``coef·log(arg)``."""
        return cls(0, [(arg, coef)])

    @classmethod
    def log1p_abs(cls, value: Any, coef: Any = 1) -> Real:
        """Return ``coef·log(|value|+1)`` for a rational value."""
        return cls.log(abs(as_fraction(value)) + 1, coef)

    @classmethod
    def of(cls, value: Any) -> Real:
        """Coerce a Real or rational-like value."""
        if isinstance(value, Real):
            return value
        return cls(value)

    # -- structure -----------------------------------------------------------

    @property
    def rational(self) -> Fraction:
        """The rational part."""
        return self._rational

    @property
    def logs(self) -> tuple[tuple[Fraction, Fraction], ...]:
        """The ``(arg, coef)`` log terms, args > 1, sorted by arg."""
        return self._logs

    @property
    def is_rational(self) -> bool:
        """Whether the value is rational."""
        return not self._logs or self.rational_value() is not None

    def rational_value(self) -> Fraction | None:
        """Return the value as a Fraction if it is rational."""
        if not self._logs:
            return self._rational
        if self._log_part_is_zero():
            return self._rational
        return None

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: object) -> Real:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return Real(self._rational + rhs._rational, [*self._logs, *rhs._logs])

    __radd__ = __add__

    def __neg__(self) -> Real:
        return Real(-self._rational, [(a, -c) for a, c in self._logs])

    def __pos__(self) -> Real:
        return self

    def __sub__(self, other: object) -> Real:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> Real:
        lhs = _coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> Real:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        if not rhs._logs:
            factor = rhs._rational
            return Real(self._rational * factor, [(a, c * factor) for a, c in self._logs])
        if not self._logs:
            return rhs * self
        raise TypeError("Products of two logarithmic reals are outside the exact class")

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> Real:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        if rhs._logs:
            raise TypeError("Division by a logarithmic real is outside the exact class")
        if rhs._rational == 0:
            raise ZeroDivisionError("Real division by zero")
        return self * (1 / rhs._rational)

    def __abs__(self) -> Real:
        return -self if self.sign() < 0 else self

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        if self._logs == rhs._logs:
            return self._rational == rhs._rational
        if self._rational != rhs._rational:
            return False
        return (self - rhs)._log_part_is_zero()

    def __hash__(self) -> int:
        # Equal values always share the rational part.
        return hash(self._rational)

    def __lt__(self, other: object) -> bool:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs).sign() < 0

    def __le__(self, other: object) -> bool:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs).sign() <= 0

    def __gt__(self, other: object) -> bool:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs).sign() > 0

    def __ge__(self, other: object) -> bool:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs).sign() >= 0

    def sign(self) -> int:
        """Return -1, 0 or 1 exactly.

        Raises:
            InvariantViolationError: If intervals fail to separate a nonzero value from 0
        """
        if not self._logs:
            return (self._rational > 0) - (self._rational < 0)
        lo, hi = self.interval(_START_PRECISION)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        if self._rational == 0:
            exact = self._log_part_sign()
            if exact is not None:
                return exact
        prec = 2 * _START_PRECISION
        while prec <= _MAX_PRECISION:
            lo, hi = self.interval(prec)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            prec *= 2
        raise InvariantViolationError(f"Could not decide the sign of {self}")

    def is_zero(self) -> bool:
        """Exact zero test."""
        return self._rational == 0 and self._log_part_is_zero()

    # -- exact helpers -------------------------------------------------------

    def _power_split(self) -> tuple[list[tuple[Fraction, int]], list[tuple[Fraction, int]]] | None:
        denominator = math.lcm(*(c.denominator for _, c in self._logs)) if self._logs else 1
        positive: list[tuple[Fraction, int]] = []
        negative: list[tuple[Fraction, int]] = []
        bits = 0
        for arg, coef in self._logs:
            exponent = int(coef * denominator)
            bits += abs(exponent) * (arg.numerator.bit_length() + arg.denominator.bit_length())
            (positive if exponent > 0 else negative).append((arg, abs(exponent)))
        if bits > _EXACT_PRODUCT_BITS:
            return None
        return positive, negative

    def _log_part_sign(self) -> int | None:
        split = self._power_split()
        if split is None:
            return None
        positive, negative = split
        lhs = math.prod((a**e for a, e in positive), start=Fraction(1))
        rhs = math.prod((a**e for a, e in negative), start=Fraction(1))
        return (lhs > rhs) - (lhs < rhs)

    def _log_part_is_zero(self) -> bool:
        if not self._logs:
            return True
        sign = self._log_part_sign()
        if sign is not None:
            return sign == 0
        prec = _START_PRECISION
        while prec <= _MAX_PRECISION:
            lo, hi = _log_interval(self._logs, prec)
            if lo > 0 or hi < 0:
                return False
            prec *= 4
        raise InvariantViolationError("Zero test exceeded the exact product budget")

    def exp_rational(self) -> Fraction | None:
        """Return ``exp(self)`` when it is rational, otherwise None.

        A nonzero rational part always makes the exponential irrational.
        """
        if self._rational != 0:
            return None
        if any(c.denominator != 1 for _, c in self._logs):
            reduced = _reduce_to_integer_powers(self._logs)
            if reduced is None:
                return None
            return reduced
        return math.prod((a ** int(c) for a, c in self._logs), start=Fraction(1))

    def ratio_to_log2(self) -> Fraction | None:
        """Return ``e`` with ``self == e·log 2`` exactly, or None."""
        if self._rational != 0:
            return None
        candidate = sum((c * _two_adic_valuation(a) for a, c in self._logs), Fraction(0))
        if (self - Real.log(2, candidate)).is_zero():
            return candidate
        return None

    # -- numeric views -------------------------------------------------------

    def interval(self, prec: int = _START_PRECISION) -> tuple[Fraction, Fraction]:
        """Return rational bounds ``lo <= self <= hi`` from interval arithmetic."""
        if not self._logs:
            return self._rational, self._rational
        lo, hi = _log_interval(self._logs, prec)
        return lo + self._rational, hi + self._rational

    def upper_bound(self, digits: int = 12) -> Fraction:
        """A rational upper bound, rounded up to a grid of ``10^-digits`` when inexact."""
        rational = self.rational_value()
        if rational is not None:
            return rational
        _, hi = self.interval()
        scale = 10**digits
        return Fraction(int(math.ceil(hi * scale)), scale)

    def lower_bound(self, digits: int = 12) -> Fraction:
        """A rational lower bound, rounded down to a grid of ``10^-digits`` when inexact."""
        rational = self.rational_value()
        if rational is not None:
            return rational
        lo, _ = self.interval()
        scale = 10**digits
        rounded = Fraction(int(math.floor(lo * scale)), scale)
        return lo if rounded <= 0 < lo else rounded

    def __float__(self) -> float:
        total = float(self._rational)
        for arg, coef in self._logs:
            total += float(coef) * (math.log(arg.numerator) - math.log(arg.denominator))
        return total

    def __repr__(self) -> str:
        return f"Real({self})"

    def __str__(self) -> str:
        parts = [str(self._rational)] if self._rational or not self._logs else []
        parts.extend(f"{c}*log({a})" for a, c in self._logs)
        return " + ".join(parts)


def _coerce(value: object) -> Real | None:
    if isinstance(value, Real):
        return value
    if isinstance(value, (numbers.Integral, Fraction)) and not isinstance(value, bool):
        return Real(as_fraction(value))
    return None


def _log_interval(logs: tuple[tuple[Fraction, Fraction], ...], prec: int) -> tuple[Fraction, Fraction]:
    ctx = _interval_context(prec)
    total = ctx.zero
    for arg, coef in logs:
        total += ctx._mpq((coef.numerator, coef.denominator)) * ctx.ln(ctx._mpq((arg.numerator, arg.denominator)))
    lo, hi = total._mpi_
    return _endpoint(lo), _endpoint(hi)


def exp_interval(value: Real, prec: int = _START_PRECISION) -> tuple[Fraction, Fraction]:
    """Return rational bounds on ``exp(value)``."""
    ctx = _interval_context(prec)
    lo, hi = value.interval(prec)
    low = ctx.exp(ctx._mpq((lo.numerator, lo.denominator)))._mpi_[0]
    high = ctx.exp(ctx._mpq((hi.numerator, hi.denominator)))._mpi_[1]
    return _endpoint(low), _endpoint(high)


def _two_adic_valuation(value: Fraction) -> int:
    num, den = value.numerator, value.denominator
    return ((num & -num).bit_length() - 1) - ((den & -den).bit_length() - 1)


def _reduce_to_integer_powers(logs: tuple[tuple[Fraction, Fraction], ...]) -> Fraction | None:
    denominator = math.lcm(*(c.denominator for _, c in logs))
    power = math.prod((a ** int(c * denominator) for a, c in logs), start=Fraction(1))
    root = rational_root(power, denominator)
    return root


def rational_root(value: Fraction, degree: int) -> Fraction | None:
    """Return the exact positive ``degree``-th root of a positive rational, or None."""
    if value <= 0:
        return None
    num = _integer_root(value.numerator, degree)
    den = _integer_root(value.denominator, degree)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _integer_root(value: int, degree: int) -> int | None:
    if degree == 1:
        return value
    guess = round(value ** (1 / degree)) if value.bit_length() < 1000 else _newton_root(value, degree)
    for candidate in (guess - 1, guess, guess + 1):
        if candidate >= 0 and candidate**degree == value:
            return candidate
    return None


def _newton_root(value: int, degree: int) -> int:
    x = 1 << ((value.bit_length() + degree - 1) // degree)
    while True:
        y = ((degree - 1) * x + value // x ** (degree - 1)) // degree
        if y >= x:
            return x
        x = y


def ceil_fraction(value: Fraction) -> int:
    """Ceiling of a Fraction as an int."""
    return -((-value.numerator) // value.denominator)


def floor_ratio(x: Real, y: Real) -> int:
    """Return ``floor(x / y)`` exactly for ``y > 0``."""
    if y.sign() <= 0:
        raise RepresentationError("floor_ratio needs a positive divisor")
    lo_x, hi_x = x.interval()
    lo_y, hi_y = y.interval()
    guess = int(math.floor((lo_x + hi_x) / (lo_y + hi_y))) if lo_y + hi_y > 0 else 0
    while (x - y * guess).sign() < 0:
        guess -= 1
    while (x - y * (guess + 1)).sign() >= 0:
        guess += 1
    return guess
