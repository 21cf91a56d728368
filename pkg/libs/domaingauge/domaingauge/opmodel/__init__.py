"""Diagonal operators, their domains, band dimensions and a range-inclusion oracle.

- operators.py: DiagOpSeq, SpectrumRep and value rules
- transforms.py: the contraction ``(|A|+1)^{-power}`` in log form
- domains.py: equality of domains
- dims.py: band dimensions, E_dom,u and spectrum enumeration
- douglas.py: finite-dimensional range inclusion
- codec.py: JSON encoding
"""

from domaingauge.opmodel.codec import Operator, operator_from_json, operator_to_json
from domaingauge.opmodel.dims import DimBandSeq, assoc_dims, band_of, decide_edomu, enumerate_spectrum, rescale_bands
from domaingauge.opmodel.domains import GrowthSignature, decide_edom, growth_signature, log_magnitudes
from domaingauge.opmodel.douglas import DouglasResult, douglas_findim, numerical_rank, psd_dominates
from domaingauge.opmodel.operators import DEFAULT_INDEX_SCHEME, DiagOpSeq, Encoding, SpectrumBlock, SpectrumRep, ValueRule
from domaingauge.opmodel.transforms import ContractionSeq, t_transform

__all__ = [
    "DEFAULT_INDEX_SCHEME",
    "ContractionSeq",
    "DiagOpSeq",
    "DimBandSeq",
    "DouglasResult",
    "Encoding",
    "GrowthSignature",
    "Operator",
    "SpectrumBlock",
    "SpectrumRep",
    "ValueRule",
    "assoc_dims",
    "band_of",
    "decide_edom",
    "decide_edomu",
    "douglas_findim",
    "enumerate_spectrum",
    "growth_signature",
    "log_magnitudes",
    "numerical_rank",
    "operator_from_json",
    "operator_to_json",
    "psd_dominates",
    "rescale_bands",
    "t_transform",
]
