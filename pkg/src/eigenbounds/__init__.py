"""Numerical exploration of eigenvalue bounds for 1D Schrodinger operators
with complex potentials: spectra of discretized operators, Birman-Schwinger
and regularized-determinant machinery, and per-inequality bound reports."""

from .geometry import delta, dist_to_segment, koebe_lower, psi, psi_inv, resolvent_dist_lower, sqrt_neg
from .numerics import Contour, ConvergenceError, eig, schatten_norm, singular_values, solve, winding_number, zero_centroid
from .reports import BoundReport, make_report, reports_to_csv, reports_to_json
from .schrodinger import (
    EigRecord,
    EnsembleSpec,
    Grid1D,
    Potential,
    SpectralParams,
    assemble_h,
    assemble_h0,
    birman_schwinger,
    eigenvalues_offaxis,
    free_resolvent_kernel_1d,
    lp_norm,
    lp_norm_power,
    potential_ensemble,
    square_well,
)
from .determinants import AnalyticFamily, det_n, detprod_correction, gohberg_rouche_mult, jordan_test_family, verify_detprod, zero_order
from .zeros import AFParams, DiskZero, af_large_sum, af_rho0_check, af_shifted_sum, af_small_sum, bgk_sum, find_zeros_in_disk
from .scenario import Scenario, ScenarioError, load_scenario

__version__ = "0.1.0"
