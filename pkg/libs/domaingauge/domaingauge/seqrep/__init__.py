"""Sequence representations and exact arithmetic.

- extnat.py: extended naturals with saturating addition
- reals.py: exact reals ``q + Σ c·log(r)``
- lanes.py: closed-form lanes that make up tails
- sequence.py: RealSeqRep, DimSeqRep, window sums and INF counts
- codec.py: JSON encoding
"""

from domaingauge.seqrep.extnat import INF, ZERO, ExtNat, extnat, extnat_sum
from domaingauge.seqrep.lanes import AffineLane, ConstLane, GeometricLane, Lane, LogLane, affine, const, log_lane
from domaingauge.seqrep.reals import Real, as_fraction
from domaingauge.seqrep.sequence import (
    DimSeqRep,
    DimTail,
    RealSeqRep,
    RealTail,
    agree_on_box,
    canonical_box_length,
    count_inf,
    dim_seq,
    diverges,
    evaluate,
    first_structural_difference,
    pointwise_equal,
    real_seq,
    window_sum,
)

__all__ = [
    "INF",
    "ZERO",
    "AffineLane",
    "ConstLane",
    "DimSeqRep",
    "DimTail",
    "ExtNat",
    "GeometricLane",
    "Lane",
    "LogLane",
    "Real",
    "RealSeqRep",
    "RealTail",
    "affine",
    "agree_on_box",
    "as_fraction",
    "canonical_box_length",
    "const",
    "count_inf",
    "dim_seq",
    "diverges",
    "evaluate",
    "extnat",
    "extnat_sum",
    "first_structural_difference",
    "log_lane",
    "pointwise_equal",
    "real_seq",
    "window_sum",
]
