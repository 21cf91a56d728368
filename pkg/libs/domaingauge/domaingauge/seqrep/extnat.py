"""Extended natural numbers {0, 1, 2, ...} ∪ {INF} with saturating addition."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import total_ordering
from typing import Any

from domaingauge.errors import RepresentationError


@total_ordering
@dataclass(frozen=True, slots=True, eq=False)
class ExtNat:
    """An element of ℕ ∪ {0, INF}.

    ``value`` is the finite value or ``None`` for INF. Instances compare and
    hash equal to the matching ``int`` so they can key dictionaries alongside
    plain counts.
    """

    value: int | None

    def __post_init__(self) -> None:
        """Reject negative or non-integral finite values."""
        if self.value is not None and (not isinstance(self.value, int) or isinstance(self.value, bool) or self.value < 0):
            raise RepresentationError(f"ExtNat value must be a natural number or INF, got {self.value!r}")

    @property
    def is_inf(self) -> bool:
        """Whether this is INF."""
        return self.value is None

    def finite(self) -> int:
        """Return the finite value.

        Raises:
            RepresentationError: If this is INF
        """
        if self.value is None:
            raise RepresentationError("INF has no finite value")
        return self.value

    def __add__(self, other: object) -> ExtNat:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        if self.value is None or rhs.value is None:
            return INF
        return ExtNat(self.value + rhs.value)

    __radd__ = __add__

    def __eq__(self, other: object) -> bool:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return self.value == rhs.value

    def __lt__(self, other: object) -> bool:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        if self.value is None:
            return False
        if rhs.value is None:
            return True
        return self.value < rhs.value

    def __hash__(self) -> int:
        return hash(self.value) if self.value is not None else hash(float("inf"))

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)

    def __repr__(self) -> str:
        return "INF" if self.value is None else f"ExtNat({self.value})"

    def to_json(self) -> int | str:
        """Encode as an int, or the string ``"inf"``."""
        return "inf" if self.value is None else self.value


INF = ExtNat(None)
ZERO = ExtNat(0)


def _coerce(value: object) -> ExtNat | None:
    if isinstance(value, ExtNat):
        return value
    if isinstance(value, int) and not isinstance(value, bool) and value >= 0:
        return ExtNat(value)
    return None


def extnat(value: Any) -> ExtNat:
    """Coerce ``value`` to an ExtNat.

    Accepts ExtNat, non-negative ints, and the strings ``"inf"`` or digits.

    Raises:
        RepresentationError: If the value is not an extended natural
    """
    if isinstance(value, ExtNat):
        return value
    if isinstance(value, str):
        text = value.strip().lower()
        if text in {"inf", "infinity", "∞"}:
            return INF
        if text.isdigit():
            return ExtNat(int(text))
        raise RepresentationError(f"Cannot parse {value!r} as an extended natural")
    if isinstance(value, int) and not isinstance(value, bool):
        return ExtNat(value)
    raise RepresentationError(f"Cannot interpret {value!r} as an extended natural")


def extnat_sum(values: Iterable[ExtNat | int]) -> ExtNat:
    """Saturating sum; INF iff some summand is INF, 0 for an empty input."""
    total = 0
    for item in values:
        v = extnat(item)
        if v.value is None:
            return INF
        total += v.value
    return ExtNat(total)
