"""Entropy-drop bounds for spectra constrained by partial majorization.

Spectra are handled through :mod:`majorbound.spectrum`; the bounds live in
:mod:`majorbound.bounds` and :mod:`majorbound.gibbs`, and
:mod:`majorbound.oracle` checks them by brute force.
"""
from .bounds import (
    BoundResult,
    delta,
    gap_bound,
    min_f_lower_bound,
    mr_hat,
    renyi_gap,
    tightness_holds,
    vn_bound_closed,
    vn_m_bound,
)
from .entropy import Renyi, Tsallis, VonNeumann, binary_entropy, eta, evaluate, parse_functional, s_hat, tail_entropy
from .gibbs import figure_data, gibbs_mr_hat, gibbs_spectrum, gibbs_vn_bound
from .majorization import (
    MmEpsCase,
    head_truncation,
    majorizes,
    minimal_majorizer,
    partially_majorizes,
    rho_m_eps,
    tail_operator,
)
from .spectrum import (
    AlignedState,
    Finite,
    Geometric,
    MajorboundError,
    canonicalize,
    eigen_at,
    ell_epsilon,
    parse_spectrum,
    rank,
    tail_weight,
    total_variation,
)

__version__ = "0.1.0"
