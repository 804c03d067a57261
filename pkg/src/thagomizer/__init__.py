"""Hyperoctahedral-equivariant Kazhdan-Lusztig data for thagomizer matroids.

Representations of ``B_n`` are stored through their Frobenius characteristic in
the two-alphabet Schur basis ``s_lam[X] s_mu[Y]``.
"""

from thagomizer.partitions import Bipartition, Partition
from thagomizer.schur import SchurPoly, backend, lr_coefficient, set_backend
from thagomizer.bi_ring import (
    BiSchurPoly,
    GradedBiSchur,
    TruncatedBiSeries,
    bi_multiply,
    dimension_poly,
    render_latex,
    render_text,
)
from thagomizer.closed_forms import (
    c_cycle,
    char_poly_thagomizer,
    p_thagomizer,
    q_from_p,
    q_thagomizer,
    verify_series_identities,
    z_cycle,
    z_thagomizer,
)
from thagomizer.oracle import p_cycle_oracle, p_thagomizer_oracle, q_thagomizer_oracle
from thagomizer.positivity import ilc_difference, is_multiplicity_free, is_schur_positive, verify_strong_ilc

__version__ = "0.1.0"

__all__ = [
    "Bipartition", "Partition", "SchurPoly", "BiSchurPoly", "GradedBiSchur", "TruncatedBiSeries",
    "backend", "set_backend", "lr_coefficient", "bi_multiply", "dimension_poly", "render_text",
    "render_latex", "p_thagomizer", "q_thagomizer", "z_thagomizer", "q_from_p", "char_poly_thagomizer",
    "c_cycle", "z_cycle", "verify_series_identities", "p_thagomizer_oracle", "q_thagomizer_oracle",
    "p_cycle_oracle", "is_schur_positive", "is_multiplicity_free", "ilc_difference", "verify_strong_ilc",
]
