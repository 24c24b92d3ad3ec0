"""Pure-numpy evaluation of the solver's per-iteration kernel.

Reference implementation: composed from the half-point operators so it
can be cross-checked against the compiled kernel.  Signature matches
phaserec.kernels._core.eval_energy_gradient.
"""

from __future__ import annotations

import numpy as np


def eval_energy_gradient(phi, ic, is_, b, p1, p2, div_p, lam, hx, hy, grad_out, gx_ws=None, gy_ws=None):
    """Energy of the discrete functional at ``phi`` and its gradient.

    Parameters are plain (n, m) float64 arrays: the phase iterate, the
    fringe pair, the amplitude, the two components of the target gradient
    field, and its precomputed half-point divergence.  ``grad_out`` is
    filled with the variational derivative (no cell-area factor); the
    return value is the quadrature-weighted energy.
    """
    # forward half-point differences with zero ghost faces
    gx = np.empty_like(phi) if gx_ws is None else gx_ws
    gy = np.empty_like(phi) if gy_ws is None else gy_ws
    gx[:, :-1] = (phi[:, 1:] - phi[:, :-1]) / hx
    gx[:, -1] = 0.0
    gy[:-1, :] = (phi[1:, :] - phi[:-1, :]) / hy
    gy[-1, :] = 0.0

    # backward half-point divergence of the gradient (5-point Laplacian)
    lap = np.zeros_like(phi)
    lap[:, 0] += gx[:, 0] / hx
    lap[:, 1:-1] += (gx[:, 1:-1] - gx[:, :-2]) / hx
    lap[:, -1] += -gx[:, -2] / hx
    lap[0, :] += gy[0, :] / hy
    lap[1:-1, :] += (gy[1:-1, :] - gy[:-2, :]) / hy
    lap[-1, :] += -gy[-2, :] / hy

    sin_p = np.sin(phi)
    cos_p = np.cos(phi)

    grad_out[...] = (
        -(1.0 + lam) * lap + div_p + ic * (b * sin_p) - is_ * (b * cos_p)
    )

    rc = b * cos_p - ic
    rs = b * sin_p - is_
    e = 0.5 * (
        np.sum((gx - p1) ** 2)
        + np.sum((gy - p2) ** 2)
        + np.sum(rc**2)
        + np.sum(rs**2)
        + lam * (np.sum(gx**2) + np.sum(gy**2))
    )
    return float(e * hx * hy)
