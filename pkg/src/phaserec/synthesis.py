"""Synthetic benchmark data: ground-truth phase maps and fringe pairs."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError
from .fringes import FringeSet
from .grid import GridSpec, ScalarField

WAVEFRONT_DOMAIN = (-1.0, 1.0, -1.0, 1.0)
PEAKS_DOMAIN = (-2.3, 2.3, -2.3, 2.3)


@dataclass(frozen=True)
class NoiseSpec:
    """Additive white Gaussian noise at a target SNR (dB).

    ``target_snr_db=None`` means noiseless.  The drawn noise is rescaled
    so the measured SNR hits the target exactly; the seed makes runs
    bit-reproducible.
    """

    target_snr_db: float | None = None
    seed: int = 0

    def __post_init__(self):
        if self.target_snr_db is not None and not np.isfinite(self.target_snr_db):
            raise InvalidInputError("target_snr_db must be finite or None")


def _eval_coords(grid: GridSpec, domain, natural, name: str):
    """Coordinate arrays for evaluating a generator on ``domain`` while
    storing the samples on ``grid`` (the two differ when the grid uses
    pixel-unit spacing)."""
    if domain is None:
        domain = (grid.a, grid.b, grid.c, grid.d)
    if tuple(domain) != natural:
        warnings.warn(f"{name} is calibrated for the domain {natural}", stacklevel=3)
    a, b, c, d = domain
    x = np.linspace(a, b, grid.m)
    y = np.linspace(c, d, grid.n)
    return np.meshgrid(x, y)


def wavefront_phase(
    grid: GridSpec, domain=None, symmetric_quartic: bool = False
) -> ScalarField:
    """Polynomial wavefront benchmark phase, in radians.

    ``domain`` is the rectangle the polynomial is evaluated on (defaults
    to the grid's own bounds; natural domain [-1,1]^2, warn otherwise).
    ``symmetric_quartic`` swaps the -15x^4 monomial for -15x^4*y, the
    variant matching the symmetry of the neighboring terms.
    """
    X, Y = _eval_coords(grid, domain, WAVEFRONT_DOMAIN, "wavefront_phase")
    x2, y2 = X**2, Y**2
    last = -15.0 * X**4 * (Y if symmetric_quartic else 1.0)
    p = (
        1.3
        - 1.9 * X
        - 1.3 * (1.0 - 6.0 * y2 - 6.0 * x2 + 6.0 * y2**2 + 12.0 * x2 * y2 + 6.0 * x2**2)
        + 3.415 * (5.0 * X * Y**4 - 10.0 * X**3 * y2 + X**5)
        + 0.43 * (3.0 * X - 12.0 * X * y2 - 12.0 * X**3 + 10.0 * X * Y**4 + 20.0 * X**3 * y2 + 10.0 * X**5)
        + 2.6 * (-4.0 * Y**3 + 12.0 * x2 * Y + 5.0 * Y**5 - 10.0 * x2 * Y**3 + last)
    )
    return ScalarField(grid, p)


def wavefront_gradient(grid: GridSpec, domain=None, symmetric_quartic: bool = False):
    """Analytic gradient of wavefront_phase, in domain units (test oracle)."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        X, Y = _eval_coords(grid, domain, WAVEFRONT_DOMAIN, "wavefront_gradient")
    x2, y2 = X**2, Y**2
    if symmetric_quartic:
        dlast_x = -60.0 * X**3 * Y
        dlast_y = -15.0 * X**4
    else:
        dlast_x = -60.0 * X**3
        dlast_y = np.zeros_like(X)
    px = (
        -1.9
        - 1.3 * (-12.0 * X + 24.0 * X * y2 + 24.0 * X**3)
        + 3.415 * (5.0 * Y**4 - 30.0 * x2 * y2 + 5.0 * X**4)
        + 0.43 * (3.0 - 12.0 * y2 - 36.0 * x2 + 10.0 * Y**4 + 60.0 * x2 * y2 + 50.0 * X**4)
        + 2.6 * (24.0 * X * Y - 20.0 * X * Y**3 + dlast_x)
    )
    py = (
        -1.3 * (-12.0 * Y + 24.0 * Y**3 + 24.0 * x2 * Y)
        + 3.415 * (20.0 * X * Y**3 - 20.0 * X**3 * Y)
        + 0.43 * (-24.0 * X * Y + 40.0 * X * Y**3 + 40.0 * X**3 * Y)
        + 2.6 * (-12.0 * y2 + 12.0 * x2 + 25.0 * Y**4 - 30.0 * x2 * y2 + dlast_y)
    )
    return px, py


def peaks_phase(grid: GridSpec, domain=None) -> ScalarField:
    """MATLAB-style peaks surface used directly as phase (radians).

    Natural domain is [-2.3, 2.3]^2; other domains evaluate with a warning.
    """
    X, Y = _eval_coords(grid, domain, PEAKS_DOMAIN, "peaks_phase")
    p = (
        3.0 * (1.0 - X) ** 2 * np.exp(-(X**2) - (Y + 1.0) ** 2)
        - 10.0 * (X / 5.0 - X**3 - Y**5) * np.exp(-(X**2) - Y**2)
        - (1.0 / 3.0) * np.exp(-((X + 1.0) ** 2) - Y**2)
    )
    return ScalarField(grid, p)


def _add_noise_exact_snr(clean: np.ndarray, snr_db: float, rng: np.random.Generator) -> np.ndarray:
    """Add Gaussian noise rescaled so the measured SNR equals snr_db exactly."""
    signal_power = np.sum((clean - clean.mean()) ** 2)
    noise = rng.standard_normal(clean.shape)
    want = signal_power / 10.0 ** (snr_db / 10.0)
    noise *= np.sqrt(want / np.sum(noise**2))
    return clean + noise


def make_fringes(
    phi: ScalarField,
    b: ScalarField | float = 1.0,
    noise: NoiseSpec | None = None,
) -> FringeSet:
    """Quadrature fringe pair I^c = b cos(phi), I^s = b sin(phi).

    Noise, when requested, is zero-mean white Gaussian added to I^c and
    I^s independently, scaled per image to the requested SNR.
    """
    grid = phi.grid
    if isinstance(b, (int, float)):
        b = ScalarField.full(grid, float(b))
    if np.any(b.values <= 0.0):
        raise InvalidInputError("amplitude b must be positive everywhere")

    ic = b.values * np.cos(phi.values)
    is_ = b.values * np.sin(phi.values)
    provenance = {"source": "synthetic"}
    if noise is not None and noise.target_snr_db is not None:
        rng = np.random.default_rng(noise.seed)
        ic = _add_noise_exact_snr(ic, noise.target_snr_db, rng)
        is_ = _add_noise_exact_snr(is_, noise.target_snr_db, rng)
        provenance.update(noise_seed=noise.seed, target_snr_db=noise.target_snr_db)
    return FringeSet.from_arrays(grid, ic, is_, provenance)
