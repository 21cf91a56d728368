"""Verdicts returned by the decision procedures.

Every verdict is a frozen dataclass with a class-level ``equivalent`` flag and a
``to_dict()`` payload that the certificate layer serializes verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, ClassVar

from domaingauge.seqrep.codec import rational_to_json, real_to_json
from domaingauge.seqrep.reals import Real


@dataclass(frozen=True)
class SampleIndex:
    """The index ``base + stride·2^exponent``, kept symbolic so huge indices stay small."""

    base: int
    stride: int
    exponent: int

    @property
    def value(self) -> int:
        """The index as an integer."""
        return self.base + self.stride * (1 << self.exponent)

    def to_dict(self) -> dict[str, int]:
        """Serialize."""
        return {"base": self.base, "stride": self.stride, "exponent": self.exponent}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> SampleIndex:
        """Deserialize."""
        return cls(int(data["base"]), int(data["stride"]), int(data["exponent"]))


# =============================================================================
# E_linf
# =============================================================================


@dataclass(frozen=True)
class LinfEquivalent:
    """``sup |a_n - b_n| <= bound``.

    ``supremum`` is the exact supremum when the tail algebra determines it, and
    ``exact`` marks ``bound == supremum``.
    """

    equivalent: ClassVar[bool] = True
    bound: Fraction
    exact: bool
    supremum: Real | None = None

    def to_dict(self) -> dict[str, Any]:
        """Serialize."""
        payload: dict[str, Any] = {"bound": rational_to_json(self.bound), "exact": self.exact}
        if self.supremum is not None:
            payload["supremum"] = real_to_json(self.supremum)
        return payload


@dataclass(frozen=True)
class LinfNotEquivalent:
    """Residue class ``start + residue + period·q`` on which the difference is unbounded."""

    equivalent: ClassVar[bool] = False
    start: int
    period: int
    residue: int
    sample: SampleIndex
    threshold: int
    description: str

    def to_dict(self) -> dict[str, Any]:
        """Serialize."""
        return {
            "start": self.start,
            "period": self.period,
            "residue": self.residue,
            "sample": self.sample.to_dict(),
            "threshold": self.threshold,
            "description": self.description,
        }


LinfVerdict = LinfEquivalent | LinfNotEquivalent


# =============================================================================
# E_1
# =============================================================================


@dataclass(frozen=True)
class E1Equivalent:
    """``a_n = b_n`` for every ``n >= start``, and ``start`` is minimal."""

    equivalent: ClassVar[bool] = True
    start: int

    def to_dict(self) -> dict[str, Any]:
        """Serialize."""
        return {"start": self.start}


@dataclass(frozen=True)
class E1NotEquivalent:
    """A residue class on which the sequences disagree infinitely often."""

    equivalent: ClassVar[bool] = False
    start: int
    period: int
    residue: int
    sample_index: int
    description: str

    def to_dict(self) -> dict[str, Any]:
        """Serialize."""
        return {
            "start": self.start,
            "period": self.period,
            "residue": self.residue,
            "sample_index": self.sample_index,
            "description": self.description,
        }


E1Verdict = E1Equivalent | E1NotEquivalent


# =============================================================================
# E_sigma
# =============================================================================


class SigmaReason(str, Enum):
    """Why two dimension sequences are not E_sigma-equivalent."""

    INF_COUNT_MISMATCH = "inf_count_mismatch"
    DENSITY_MISMATCH = "density_mismatch"
    PREFIX_OBSTRUCTION = "prefix_obstruction"


@dataclass(frozen=True)
class SigmaWitness:
    """A violated window inequality for shift ``k``.

    ``direction`` is ``"ab"`` when ``Σ_{i<=l} a_{n+i} > Σ_{-k<=j<=l+k} b_{n+j}``,
    and ``"ba"`` for the mirrored inequality.
    """

    k: int
    n: int
    l: int  # noqa: E741
    direction: str

    def to_dict(self) -> dict[str, Any]:
        """Serialize."""
        return {"k": self.k, "n": self.n, "l": self.l, "direction": self.direction}


@dataclass(frozen=True)
class SigmaEquivalent:
    """Both window inequalities hold with shift ``k``; ``k`` is minimal."""

    equivalent: ClassVar[bool] = True
    k: int
    n_max: int
    l_max: int

    def to_dict(self) -> dict[str, Any]:
        """Serialize."""
        return {"k": self.k, "box": {"n_max": self.n_max, "l_max": self.l_max}}


@dataclass(frozen=True)
class SigmaNotEquivalent:
    """No shift works; one violating window for every ``k <= k_cap``."""

    equivalent: ClassVar[bool] = False
    reason: SigmaReason
    witnesses: tuple[SigmaWitness, ...]
    k_cap: int

    def to_dict(self) -> dict[str, Any]:
        """Serialize."""
        return {
            "reason": self.reason.value,
            "k_cap": self.k_cap,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


SigmaVerdict = SigmaEquivalent | SigmaNotEquivalent


@dataclass(frozen=True)
class BoxResult:
    """Outcome of a finite-box check of the E_sigma inequalities."""

    holds: bool
    first_violation: SigmaWitness | None = None


# =============================================================================
# E_dom
# =============================================================================


@dataclass(frozen=True)
class DomEqual:
    """``lower·T_B <= T_A <= upper·T_B`` for ``T = (|A|+1)^-2``.

    ``exact`` marks bounds that equal the infimum and supremum.
    """

    equivalent: ClassVar[bool] = True
    lower: Fraction
    upper: Fraction
    exact: bool

    def to_dict(self) -> dict[str, Any]:
        """Serialize."""
        return {"lower": rational_to_json(self.lower), "upper": rational_to_json(self.upper), "exact": self.exact}


@dataclass(frozen=True)
class DomNotEqual:
    """A residue class on which ``log((|b_n|+1)/(|a_n|+1))`` is unbounded."""

    equivalent: ClassVar[bool] = False
    start: int
    period: int
    residue: int
    sample: SampleIndex
    threshold: int
    description: str

    def to_dict(self) -> dict[str, Any]:
        """Serialize."""
        return {
            "start": self.start,
            "period": self.period,
            "residue": self.residue,
            "sample": self.sample.to_dict(),
            "threshold": self.threshold,
            "description": self.description,
        }


DomVerdict = DomEqual | DomNotEqual
