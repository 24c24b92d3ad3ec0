"""Variational phase recovery: discrete energy, its gradient, and the
accelerated first-order minimizer.

The energy is

    E(phi) = 1/2 ||grad phi - Phi||^2 + 1/2 ||b cos phi - Ic||^2
           + 1/2 ||b sin phi - Is||^2 + lam/2 ||grad phi||^2

summed over the grid with cell-area quadrature weights, gradients taken
with the half-point operators of phaserec.operators.  The gradient
returned by :func:`energy_gradient` is the exact derivative of this
discrete energy (up to the cell-area factor), which is what the
finite-difference consistency tests pin down.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import DivergenceError, InvalidInputError
from .fringes import FringeSet
from .grid import ScalarField, VectorField, require_same_grid
from .operators import div_half

DIVERGENCE_FACTOR = 10.0
_AUTO_RETRIES = 4


@dataclass
class SolverConfig:
    lam: float = 1.0
    tau: float | str = "auto"
    delta1: float = 1e-7
    delta2: float = 1e-7
    delta3: float = 1e-7
    k_max: int = 15000
    init: str | ScalarField = "random"  # "random", "zeros", or a ScalarField
    seed: int = 20211
    monitor_stride: int = 25
    method: str = "nesterov"  # "nesterov" or "gd"
    restart: bool = False  # adaptive restart of the momentum sequence

    def validate(self):
        if self.lam < 0:
            raise InvalidInputError("lam must be nonnegative")
        if self.tau != "auto" and not (isinstance(self.tau, (int, float)) and self.tau > 0):
            raise InvalidInputError("tau must be positive or 'auto'")
        if min(self.delta1, self.delta2, self.delta3) <= 0:
            raise InvalidInputError("stopping tolerances must be positive")
        if self.k_max < 1:
            raise InvalidInputError("k_max must be at least 1")
        if self.method not in ("nesterov", "gd"):
            raise InvalidInputError(f"unknown method {self.method!r}")
        if isinstance(self.init, str) and self.init not in ("random", "zeros"):
            raise InvalidInputError(f"unknown init {self.init!r}")


@dataclass
class SolverReport:
    iterations: int
    stop_reason: str  # "tolerance" | "k_max" | "stagnation"
    energy_trace: list = field(default_factory=list)  # (k, E) samples
    final_energy: float = 0.0
    wall_time: float = 0.0
    step_size_used: float = 0.0


def energy(phi: ScalarField, f: FringeSet, Phi: VectorField, lam: float) -> float:
    """Discrete energy at phi."""
    require_same_grid(phi, f.ic, Phi)
    scratch = np.empty(phi.grid.shape)
    div_p = div_half(Phi).values
    return kernels.eval_energy_gradient(
        phi.values, f.ic.values, f.is_.values, f.b.values,
        Phi.u, Phi.v, div_p, lam, phi.grid.hx, phi.grid.hy, scratch,
    )


def energy_gradient(phi: ScalarField, f: FringeSet, Phi: VectorField, lam: float) -> ScalarField:
    """Variational derivative of the discrete energy at phi.

    Equals -(1+lam) * div(grad phi) + div(Phi) + Ic*b*sin(phi)
    - Is*b*cos(phi), with the zero-flux ghost handling baked into the
    half-point operators.
    """
    require_same_grid(phi, f.ic, Phi)
    out = np.empty(phi.grid.shape)
    div_p = div_half(Phi).values
    kernels.eval_energy_gradient(
        phi.values, f.ic.values, f.is_.values, f.b.values,
        Phi.u, Phi.v, div_p, lam, phi.grid.hx, phi.grid.hy, out,
    )
    return ScalarField(phi.grid, out)


def estimate_step(f: FringeSet, lam: float) -> float:
    """Step size 1/L from a closed-form curvature bound, times 0.9.

    L = (1+lam) * (4/hx^2 + 4/hy^2) + max(b^2): the spectral bound of the
    5-point Laplacian plus the data-term curvature bound.
    """
    g = f.grid
    lap_bound = 4.0 / g.hx**2 + 4.0 / g.hy**2
    lip = (1.0 + lam) * lap_bound + float(np.max(f.b.values**2))
    return 0.9 / lip


def t_next(t: float) -> float:
    """Momentum extrapolation sequence: t0 = 1, t_{k+1} = (1+sqrt(1+4t^2))/2."""
    return 0.5 * (1.0 + np.sqrt(1.0 + 4.0 * t * t))


def _initial_phase(cfg: SolverConfig, f: FringeSet) -> np.ndarray:
    if isinstance(cfg.init, ScalarField):
        require_same_grid(cfg.init, f.ic)
        return cfg.init.values.copy()
    if cfg.init == "zeros":
        return np.zeros(f.grid.shape)
    rng = np.random.default_rng(cfg.seed)
    return rng.uniform(-np.pi, np.pi, f.grid.shape)


def minimize(
    f: FringeSet,
    Phi: VectorField,
    cfg: SolverConfig,
    log_csv=None,
) -> tuple[ScalarField, SolverReport]:
    """Minimize the energy with the momentum recurrence (or plain gradient
    descent when cfg.method == "gd").

    Stops when the relative changes of energy and iterate and the gradient
    sup-norm all fall below their tolerances, or at k_max.  If the energy
    grows past 10x its initial value the run aborts; with tau="auto" the
    step is halved and the run restarted a few times before giving up.
    """
    cfg.validate()
    require_same_grid(f.ic, Phi)
    tau = estimate_step(f, cfg.lam) if cfg.tau == "auto" else float(cfg.tau)

    t0 = time.perf_counter()
    last_exc = None
    for attempt in range(_AUTO_RETRIES + 1):
        try:
            phi, report, log_rows = _run(f, Phi, cfg, tau)
            break
        except DivergenceError as exc:
            last_exc = exc
            if cfg.tau != "auto" or attempt == _AUTO_RETRIES:
                raise
            tau *= 0.5
    report.wall_time = time.perf_counter() - t0
    report.step_size_used = tau

    if log_csv is not None:
        with open(log_csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["k", "energy", "grad_max"])
            w.writerows(log_rows)
    return phi, report


def _run(f, Phi, cfg, tau):
    grid = f.grid
    hx, hy = grid.hx, grid.hy
    ic, is_, b = f.ic.values, f.is_.values, f.b.values
    p1, p2 = Phi.u, Phi.v
    div_p = div_half(Phi).values
    kernel = kernels.eval_energy_gradient

    phi = _initial_phase(cfg, f)
    beta = phi.copy()
    t = 1.0
    grad = np.empty(grid.shape)
    phi_prev_buf = np.empty(grid.shape)
    beta_new = np.empty(grid.shape)
    tmp = np.empty(grid.shape)
    gx_ws = np.empty(grid.shape)
    gy_ws = np.empty(grid.shape)

    e_prev = None
    phi_prev = None
    e0 = None
    stall = 0
    trace = []
    log_rows = []
    stop_reason = "k_max"
    iterations = cfg.k_max
    nesterov = cfg.method == "nesterov"

    for k in range(cfg.k_max + 1):
        e = kernel(phi, ic, is_, b, p1, p2, div_p, cfg.lam, hx, hy, grad, gx_ws, gy_ws)
        gmax = float(np.max(np.abs(grad)))
        if e0 is None:
            e0 = e
        if k % cfg.monitor_stride == 0:
            trace.append((k, e))
        log_rows.append((k, e, gmax))

        if e > DIVERGENCE_FACTOR * max(abs(e0), 1e-300) and e > e0:
            raise DivergenceError(
                f"energy grew from {e0:.3e} to {e:.3e} at iteration {k}; "
                f"try a smaller step size (tau={tau:.3e})"
            )

        if k > 0:
            dphi = float(np.max(np.abs(phi - phi_prev)))
            ok1 = abs(e - e_prev) <= cfg.delta1 * (1.0 + abs(e))
            ok2 = dphi <= cfg.delta2 * (1.0 + float(np.max(np.abs(phi))))
            ok3 = gmax <= cfg.delta3 * (1.0 + abs(e))
            if ok1 and ok2 and ok3:
                stop_reason = "tolerance"
                iterations = k
                break
            stall = stall + 1 if dphi == 0.0 else 0
            if stall >= 5:
                stop_reason = "stagnation"
                iterations = k
                break
        if k == cfg.k_max:
            break

        np.copyto(phi_prev_buf, phi)
        phi_prev = phi_prev_buf
        rising = e_prev is not None and e > e_prev
        e_prev = e
        if nesterov:
            if cfg.restart and rising:
                t = 1.0
            # beta_new = phi - tau * grad
            np.multiply(grad, -tau, out=beta_new)
            beta_new += phi
            t_new = t_next(t)
            # phi = beta_new + c1*(beta_new - beta) + c2*(beta_new - phi)
            np.subtract(beta_new, beta, out=tmp)
            tmp *= (t - 1.0) / t_new
            np.subtract(beta_new, phi, out=phi)
            phi *= t / t_new
            phi += tmp
            phi += beta_new
            beta, beta_new = beta_new, beta
            t = t_new
        else:
            np.multiply(grad, -tau, out=tmp)
            phi += tmp

    if not trace or trace[-1][0] != iterations:
        trace.append((iterations, e))
    report = SolverReport(
        iterations=iterations,
        stop_reason=stop_reason,
        energy_trace=trace,
        final_energy=e,
    )
    return ScalarField(grid, phi), report, log_rows
