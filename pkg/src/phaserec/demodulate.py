"""Quantities computed directly from the fringe pair: wrapped phase and
the phase-gradient field."""

from __future__ import annotations

import numpy as np

from .fringes import FringeSet
from .grid import ScalarField, VectorField


def wrap(values: np.ndarray) -> np.ndarray:
    """Wrap radians into (-pi, pi]."""
    return np.arctan2(np.sin(values), np.cos(values))


def wrapped_phase(f: FringeSet) -> tuple[ScalarField, np.ndarray]:
    """atan2(I^s, I^c) in (-pi, pi].

    Samples with b exactly zero are set to 0 and flagged in the returned
    boolean mask.
    """
    degenerate = f.b.values == 0.0
    psi = np.arctan2(f.is_.values, f.ic.values)
    psi[degenerate] = 0.0
    return ScalarField(f.grid, psi), degenerate


def _partial_x(a: np.ndarray, hx: float) -> np.ndarray:
    out = np.empty_like(a)
    out[:, 1:-1] = (a[:, 2:] - a[:, :-2]) / (2.0 * hx)
    out[:, 0] = (a[:, 1] - a[:, 0]) / hx
    out[:, -1] = (a[:, -1] - a[:, -2]) / hx
    return out


def _partial_y(a: np.ndarray, hy: float) -> np.ndarray:
    out = np.empty_like(a)
    out[1:-1, :] = (a[2:, :] - a[:-2, :]) / (2.0 * hy)
    out[0, :] = (a[1, :] - a[0, :]) / hy
    out[-1, :] = (a[-1, :] - a[-2, :]) / hy
    return out


def gradient_field(
    f: FringeSet, eps_floor: float | None = None
) -> tuple[VectorField, np.ndarray]:
    """Pointwise phase-gradient estimate from the fringe pair.

    Each component is (d I^s * I^c - I^s * d I^c) / (ic^2 + is^2), with
    central differences in the interior and one-sided differences at the
    edges.  Samples whose squared amplitude falls below ``eps_floor``
    (default 1e-9 * max amplitude^2) are zeroed and flagged in the
    returned mask.
    """
    g = f.grid
    ic, is_ = f.ic.values, f.is_.values
    denom = ic**2 + is_**2
    if eps_floor is None:
        eps_floor = 1e-9 * float(denom.max())
    degenerate = denom < eps_floor
    safe = np.where(degenerate, 1.0, denom)
    u = (_partial_x(is_, g.hx) * ic - is_ * _partial_x(ic, g.hx)) / safe
    v = (_partial_y(is_, g.hy) * ic - is_ * _partial_y(ic, g.hy)) / safe
    u[degenerate] = 0.0
    v[degenerate] = 0.0
    return VectorField(g, u, v), degenerate
