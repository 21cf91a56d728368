"""domaingauge - certified decisions on sequence and operator-domain equivalences.

This package provides:
- Exact sequence representations (seqrep)
- Decision procedures with witnesses for E_linf, E_1 and E_sigma (eqrel)
- Diagonal operators, domain equality, band dimensions and range inclusion (opmodel)
- The reduction maps tilde, phi, psi, psi_k and their harnesses (reductions)
- Finite-truncation numerics for singular continuous spectra (spectra)
- Configuration system

Quick start:
    from domaingauge import decide_esigma, dim_seq

    verdict = decide_esigma(dim_seq([], ["inf"]), dim_seq([0], ["inf"]))
    verdict.to_dict()  # {"k": 1, ...}
"""

__version__ = "0.1.0"

from domaingauge.config import CoreConfig, load_core_from_files
from domaingauge.eqrel import decide_e1, decide_esigma, decide_linf, esigma_box
from domaingauge.errors import DomainGaugeError, InvariantViolationError, RepresentationError
from domaingauge.opmodel import (
    DiagOpSeq,
    SpectrumRep,
    assoc_dims,
    decide_edom,
    decide_edomu,
    douglas_findim,
    enumerate_spectrum,
    t_transform,
)
from domaingauge.reductions import phi, psi, psi_k, tilde, verify_bireduction
from domaingauge.seqrep import DimSeqRep, RealSeqRep, dim_seq, real_seq, window_sum

__all__ = [
    "CoreConfig",
    "DiagOpSeq",
    "DimSeqRep",
    "DomainGaugeError",
    "InvariantViolationError",
    "RealSeqRep",
    "RepresentationError",
    "SpectrumRep",
    "__version__",
    "assoc_dims",
    "decide_e1",
    "decide_edom",
    "decide_edomu",
    "decide_esigma",
    "decide_linf",
    "dim_seq",
    "douglas_findim",
    "enumerate_spectrum",
    "esigma_box",
    "load_core_from_files",
    "phi",
    "psi",
    "psi_k",
    "real_seq",
    "t_transform",
    "tilde",
    "verify_bireduction",
    "window_sum",
]
