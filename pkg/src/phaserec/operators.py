"""Half-point finite-difference operators with zero-flux ghost handling.

Forward differences are stored at the lower full-grid node: ``u[j, i]``
holds (phi[j, i+1] - phi[j, i]) / hx, i.e. the face between columns i and
i+1.  The outermost face of the last column/row follows the ghost
convention (zero difference across the outer boundary).  The divergence
uses backward differences and treats the stored last face as zero, which
makes ``div_half`` the exact negative adjoint of ``grad_half`` under the
plain grid inner product.  Their composition is the standard 5-point
Laplacian with homogeneous Neumann boundaries.
"""

from __future__ import annotations

import numpy as np

from .grid import ScalarField, VectorField, require_same_grid


def grad_half(phi: ScalarField) -> VectorField:
    """Forward half-point differences of a scalar field.

    The last column of u and last row of v are zero (ghost convention).
    """
    g = phi.grid
    p = phi.values
    u = np.zeros(g.shape)
    v = np.zeros(g.shape)
    u[:, :-1] = (p[:, 1:] - p[:, :-1]) / g.hx
    v[:-1, :] = (p[1:, :] - p[:-1, :]) / g.hy
    return VectorField(g, u, v)


def div_half(V: VectorField) -> ScalarField:
    """Backward half-point divergence, negative adjoint of grad_half.

    The stored outermost faces (last column of u, last row of v) are
    ignored -- the ghost convention pins them to zero -- so the row/column
    sums of the result telescope to zero exactly.
    """
    g = V.grid
    u = V.u
    v = V.v
    out = np.zeros(g.shape)
    # x part: (u_eff[i] - u[i-1]) / hx with u_eff zero on the last column
    out[:, 0] += u[:, 0] / g.hx
    out[:, 1:-1] += (u[:, 1:-1] - u[:, :-2]) / g.hx
    out[:, -1] += -u[:, -2] / g.hx
    # y part
    out[0, :] += v[0, :] / g.hy
    out[1:-1, :] += (v[1:-1, :] - v[:-2, :]) / g.hy
    out[-1, :] += -v[-2, :] / g.hy
    return ScalarField(g, out)


def apply_flux_bc(V: VectorField, target: VectorField | None = None) -> VectorField:
    """Clamp the outermost face fluxes of V.

    With ``target`` given, the boundary faces are set to the target's
    values so the boundary flux of (V - target) vanishes; with ``target``
    None the faces are zeroed (pure Neumann).  Interior faces are
    untouched.
    """
    if target is not None:
        require_same_grid(V, target)
    out = V.copy()
    if target is None:
        out.u[:, -1] = 0.0
        out.v[-1, :] = 0.0
    else:
        out.u[:, -1] = target.u[:, -1]
        out.v[-1, :] = target.v[-1, :]
    return out


def field_inner(A, B) -> float:
    """Grid inner product: cell_area * sum of pointwise products.

    Accepts two ScalarFields or two VectorFields on the same grid.
    """
    require_same_grid(A, B)
    if isinstance(A, VectorField):
        s = np.sum(A.u * B.u) + np.sum(A.v * B.v)
    else:
        s = np.sum(A.values * B.values)
    return A.grid.cell_area * float(s)
