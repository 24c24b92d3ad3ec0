# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled per-iteration kernel: discrete energy and its gradient in one pass.

Mirrors phaserec.kernels._numpy.eval_energy_gradient; sequential
accumulation keeps results deterministic across runs.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport sin, cos

cnp.import_array()


def eval_energy_gradient(
    double[:, ::1] phi,
    double[:, ::1] ic,
    double[:, ::1] is_,
    double[:, ::1] b,
    double[:, ::1] p1,
    double[:, ::1] p2,
    double[:, ::1] div_p,
    double lam,
    double hx,
    double hy,
    double[:, ::1] grad_out,
    gx_ws=None,
    gy_ws=None,
):
    cdef Py_ssize_t n = phi.shape[0]
    cdef Py_ssize_t m = phi.shape[1]
    cdef Py_ssize_t i, j

    gx_arr = np.empty((n, m), dtype=np.float64) if gx_ws is None else gx_ws
    gy_arr = np.empty((n, m), dtype=np.float64) if gy_ws is None else gy_ws
    cdef double[:, ::1] gx = gx_arr
    cdef double[:, ::1] gy = gy_arr

    cdef double e = 0.0
    cdef double d, rc, rs, sp, cp, lap, gxl, gyl

    for j in range(n):
        for i in range(m - 1):
            gx[j, i] = (phi[j, i + 1] - phi[j, i]) / hx
        gx[j, m - 1] = 0.0
    for j in range(n - 1):
        for i in range(m):
            gy[j, i] = (phi[j + 1, i] - phi[j, i]) / hy
    for i in range(m):
        gy[n - 1, i] = 0.0

    for j in range(n):
        for i in range(m):
            # backward divergence of (gx, gy); ghost faces are zero
            if i == 0:
                lap = gx[j, 0] / hx
            elif i == m - 1:
                lap = -gx[j, m - 2] / hx
            else:
                lap = (gx[j, i] - gx[j, i - 1]) / hx
            if j == 0:
                lap += gy[0, i] / hy
            elif j == n - 1:
                lap += -gy[n - 2, i] / hy
            else:
                lap += (gy[j, i] - gy[j - 1, i]) / hy

            sp = sin(phi[j, i])
            cp = cos(phi[j, i])
            grad_out[j, i] = (
                -(1.0 + lam) * lap
                + div_p[j, i]
                + ic[j, i] * (b[j, i] * sp)
                - is_[j, i] * (b[j, i] * cp)
            )

            gxl = gx[j, i]
            gyl = gy[j, i]
            d = gxl - p1[j, i]
            e += d * d
            d = gyl - p2[j, i]
            e += d * d
            rc = b[j, i] * cp - ic[j, i]
            rs = b[j, i] * sp - is_[j, i]
            e += rc * rc + rs * rs
            e += lam * (gxl * gxl + gyl * gyl)

    return 0.5 * e * hx * hy
