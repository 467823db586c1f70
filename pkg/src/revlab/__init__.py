"""Numerical laboratory for revivals and fractality of the periodic linear
Benjamin-Ono and Schrodinger equations."""

__version__ = "0.1.0"

from .boxdim import DimensionFit, SampledGraph, fit_dimension, numbox
from .contfrac import CFExpansion, Convergent, expand, levy_rate, select_for_scale
from .evolution import bo_from_schrodinger, evolve_bo, evolve_schrodinger
from .gauss import gauss_weights, incomplete_weighted_sum_bound, weyl_scan
from .initial_data import (PiecewiseConstant, SignedInfinity, fourier_coefficient,
                           hilbert_closed_form, hilbert_piecewise, to_series)
from .phase import RationalTime
from .regularity import (LittlewoodPaleyBank, besov_seminorm, bernstein_check, build_bank,
                         holder_exponent_estimate, project)
from .revival import bo_revival, lattice_safe_grid, schrodinger_revival
from .series import (FourierSeries, TorusGrid, evaluate, hilbert, l2_norm, szego_project)

__all__ = [
    "CFExpansion", "Convergent", "DimensionFit", "FourierSeries", "LittlewoodPaleyBank",
    "PiecewiseConstant", "RationalTime", "SampledGraph", "SignedInfinity", "TorusGrid",
    "besov_seminorm", "bernstein_check", "bo_from_schrodinger", "bo_revival", "build_bank",
    "evaluate", "evolve_bo", "evolve_schrodinger", "expand", "fit_dimension",
    "fourier_coefficient", "gauss_weights", "hilbert", "hilbert_closed_form",
    "hilbert_piecewise", "holder_exponent_estimate", "incomplete_weighted_sum_bound",
    "l2_norm", "lattice_safe_grid", "levy_rate", "numbox", "project", "schrodinger_revival",
    "select_for_scale", "szego_project", "to_series", "weyl_scan",
]
