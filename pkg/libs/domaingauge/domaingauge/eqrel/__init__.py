"""Certified decision procedures for E_linf, E_1 and E_sigma.

- linf.py: bounded-difference equivalence with exact suprema
- e1.py: tail equivalence
- esigma.py: window-sum domination, its box oracle and witness checks
- verdicts.py: verdict and witness types
"""

from domaingauge.eqrel.e1 import decide_e1, first_difference
from domaingauge.eqrel.esigma import (
    compose_sigma_witnesses,
    decide_esigma,
    esigma_box,
    refutation_cap,
    stabilization_box,
    violates,
)
from domaingauge.eqrel.linf import decide_linf, linf_box, sequence_gap_lower_bound
from domaingauge.eqrel.verdicts import (
    BoxResult,
    DomEqual,
    DomNotEqual,
    DomVerdict,
    E1Equivalent,
    E1NotEquivalent,
    E1Verdict,
    LinfEquivalent,
    LinfNotEquivalent,
    LinfVerdict,
    SampleIndex,
    SigmaEquivalent,
    SigmaNotEquivalent,
    SigmaReason,
    SigmaVerdict,
    SigmaWitness,
)

__all__ = [
    "BoxResult",
    "DomEqual",
    "DomNotEqual",
    "DomVerdict",
    "E1Equivalent",
    "E1NotEquivalent",
    "E1Verdict",
    "LinfEquivalent",
    "LinfNotEquivalent",
    "LinfVerdict",
    "SampleIndex",
    "SigmaEquivalent",
    "SigmaNotEquivalent",
    "SigmaReason",
    "SigmaVerdict",
    "SigmaWitness",
    "compose_sigma_witnesses",
    "decide_e1",
    "decide_esigma",
    "decide_linf",
    "esigma_box",
    "first_difference",
    "linf_box",
    "refutation_cap",
    "sequence_gap_lower_bound",
    "stabilization_box",
    "violates",
]
