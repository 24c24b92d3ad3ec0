"""Variational phase recovery from phase-shifting interferometry data.

Recovers a continuous phase map from the quadrature fringe pair
(I^c, I^s) by minimizing an energy that couples a gradient-field
fidelity term, cos/sin data terms, and quadratic smoothing, solved with
an accelerated first-order method.  Also ships fringe synthesis, two
least-squares baselines, error metrics, and PFM/PGM + CLI plumbing.
"""

from .baselines import integrate_gradient, poisson_unwrap
from .demodulate import gradient_field, wrap, wrapped_phase
from .errors import DivergenceError, FormatError, InvalidInputError, PhaseRecError
from .fringes import FringeSet
from .grid import GridSpec, ScalarField, VectorField
from .kernels import BACKEND
from .metrics import mean_align, q_error, snr_db
from .operators import apply_flux_bc, div_half, grad_half
from .solver import (
    SolverConfig,
    SolverReport,
    energy,
    energy_gradient,
    estimate_step,
    minimize,
)
from .synthesis import NoiseSpec, make_fringes, peaks_phase, wavefront_phase

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DivergenceError",
    "FormatError",
    "FringeSet",
    "GridSpec",
    "InvalidInputError",
    "NoiseSpec",
    "PhaseRecError",
    "ScalarField",
    "SolverConfig",
    "SolverReport",
    "VectorField",
    "apply_flux_bc",
    "div_half",
    "energy",
    "energy_gradient",
    "estimate_step",
    "grad_half",
    "gradient_field",
    "integrate_gradient",
    "make_fringes",
    "mean_align",
    "minimize",
    "peaks_phase",
    "poisson_unwrap",
    "q_error",
    "snr_db",
    "wavefront_phase",
    "wrap",
    "wrapped_phase",
]
