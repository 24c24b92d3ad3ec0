"""Comparison and initialization methods: line-integral integration of a
gradient field and least-squares (Poisson) unwrapping of a wrapped phase."""

from __future__ import annotations

from dataclasses import replace

import numpy as np
from scipy.integrate import cumulative_trapezoid

from .demodulate import wrap
from .fringes import FringeSet
from .grid import ScalarField, VectorField
from .solver import SolverConfig, SolverReport, minimize


def integrate_gradient(Phi: VectorField, anchor: tuple[int, int] = (0, 0)) -> ScalarField:
    """Recover a phase from its gradient field by line integrals.

    Cumulative trapezoidal integration along the anchor row in x, then
    along every column in y.  ``anchor`` is (row, col); the result is
    zero there.  Exact for affine phases; deteriorates quickly with
    noise, which is why it only serves as an initializer.
    """
    g = Phi.grid
    j0, i0 = anchor
    row = cumulative_trapezoid(Phi.u[j0, :], dx=g.hx, initial=0.0)
    cols = cumulative_trapezoid(Phi.v, dx=g.hy, axis=0, initial=0.0)
    phi = (row - row[i0])[None, :] + (cols - cols[j0, :])
    return ScalarField(g, phi)


def wrapped_differences(psi: ScalarField) -> VectorField:
    """Half-point differences of a wrapped phase, rewrapped to (-pi, pi].

    Stored in the same layout as grad_half (last column/row zero), so a
    residue-free input reproduces the true phase differences exactly.
    """
    g = psi.grid
    p = psi.values
    u = np.zeros(g.shape)
    v = np.zeros(g.shape)
    u[:, :-1] = wrap(p[:, 1:] - p[:, :-1]) / g.hx
    v[:-1, :] = wrap(p[1:, :] - p[:-1, :]) / g.hy
    return VectorField(g, u, v)


def poisson_unwrap(
    psi: ScalarField, cfg: SolverConfig | None = None
) -> tuple[ScalarField, SolverReport]:
    """Least-squares phase unwrapping via the discrete Poisson equation.

    Minimizes 1/2 ||grad phi - Delta||^2 where Delta holds the rewrapped
    differences of psi, using the shared accelerated solver (data terms
    and smoothing switched off).  The result is normalized to zero mean;
    compare after mean alignment.
    """
    g = psi.grid
    if cfg is None:
        cfg = SolverConfig(init="zeros")
    init = cfg.init
    if isinstance(init, str) and init == "random":
        init = "zeros"
    cfg = replace(cfg, lam=0.0, init=init)

    delta = wrapped_differences(psi)
    empty = FringeSet.from_arrays(
        g, np.zeros(g.shape), np.zeros(g.shape), provenance={"source": "poisson-unwrap"}
    )
    phi, report = minimize(empty, delta, cfg)
    phi = ScalarField(g, phi.values - phi.values.mean())
    return phi, report
