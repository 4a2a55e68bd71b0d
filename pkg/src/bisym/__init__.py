"""Exact calculus of symmetric and bisymmetric functions with plethysm, box products and prop characters."""
from .applications import (
    VariantSpec,
    albanese_counts,
    ch_generator,
    ch_H,
    decomposition_report,
)
from .bases import (
    DecompositionReport,
    adjoint_apply,
    char_value,
    e_to_p,
    h_to_p,
    hall_inner,
    schur_pair_expansion,
    schur_to_p,
)
from .characters import ch_lie, ch_lie_d, ch_sgn, ch_specht, ch_triv, ch_ucom, ch_upois, log_ch_pois
from .exprlang import evaluate, parse, render, to_source
from .partitions import mobius, partitions_of, stretch, transpose, z_of
from .plethysm import (
    E_series,
    L_series,
    adams,
    koike_pleth,
    omega,
    omega_x,
    omega_xy,
    omega_y,
    pleth,
    plethystic_exp,
    plethystic_log,
    relpleth,
)
from .propcalc import (
    bidim_from_char,
    box,
    connected_box,
    psi_inverse,
    psi_regrade,
    regular_rep_char,
    saturate,
)
from .series import BiSymSeries, SymSeries, TCoeff, Truncation, TruncationError, WindowOverflow

__version__ = "0.1.0"
