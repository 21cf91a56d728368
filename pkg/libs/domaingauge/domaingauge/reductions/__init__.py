"""Reduction maps and the harnesses that check them.

- maps.py: tilde, phi and psi
- packing.py: psi_k and the cumulative basis layout
- harness.py: seeded generators and verdict-for-verdict checks
"""

from domaingauge.reductions.harness import (
    HarnessReport,
    random_dim_seq,
    random_op_pair,
    random_real_pair,
    random_real_seq,
    verify_bireduction,
    verify_douglas,
    verify_esigma,
    verify_psik_roundtrip,
)
from domaingauge.reductions.maps import TildeImage, phi, psi, tilde, tilde_separating_index
from domaingauge.reductions.packing import PackedBlock, cumulative_packing, psi_k

__all__ = [
    "HarnessReport",
    "PackedBlock",
    "TildeImage",
    "cumulative_packing",
    "phi",
    "psi",
    "psi_k",
    "random_dim_seq",
    "random_op_pair",
    "random_real_pair",
    "random_real_seq",
    "tilde",
    "tilde_separating_index",
    "verify_bireduction",
    "verify_douglas",
    "verify_esigma",
    "verify_psik_roundtrip",
]
