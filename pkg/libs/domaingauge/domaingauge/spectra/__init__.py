"""Desk-scale numerics for singular continuous spectra.

- cantor.py: the Cantor measure, its moments, cylinder models and characteristic function
- truncation.py: truncated operators, the strong resolvent distance, interleaving
- wiener.py: Wiener averages for atom detection
- pipeline.py: convergence tables
"""

from domaingauge.spectra.cantor import (
    CantorMeasure,
    cantor_cf,
    cantor_moments,
    cylinder_means,
    cylinder_means_float,
    empirical_moments,
    lebesgue_cf,
    lemma_sequence_op,
    mult_op,
    point_mass_cf,
)
from domaingauge.spectra.pipeline import density_pipeline, interleave_table, lemma44_table
from domaingauge.spectra.truncation import TruncatedOp, check_dimension, interleave_approx, srt_dist
from domaingauge.spectra.wiener import wiener_average, wiener_table

__all__ = [
    "CantorMeasure",
    "TruncatedOp",
    "cantor_cf",
    "cantor_moments",
    "check_dimension",
    "cylinder_means",
    "cylinder_means_float",
    "density_pipeline",
    "empirical_moments",
    "interleave_approx",
    "interleave_table",
    "lebesgue_cf",
    "lemma44_table",
    "lemma_sequence_op",
    "mult_op",
    "point_mass_cf",
    "srt_dist",
    "wiener_average",
    "wiener_table",
]
