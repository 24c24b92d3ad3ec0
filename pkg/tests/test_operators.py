import numpy as np
import pytest

from phaserec import GridSpec, InvalidInputError, ScalarField, VectorField
from phaserec.operators import apply_flux_bc, div_half, field_inner, grad_half


def unit_grid(m, n):
    return GridSpec(0.0, 1.0, 0.0, 1.0, m, n)


def test_grad_of_constant_is_zero():
    g = unit_grid(9, 7)
    V = grad_half(ScalarField.full(g, 3.7))
    assert np.all(V.u == 0.0)
    assert np.all(V.v == 0.0)


def test_grad_of_linear_field_is_exact():
    g = GridSpec(-1.0, 1.0, -1.0, 1.0, 12, 9)
    V = grad_half(ScalarField.from_function(g, lambda x, y: 2.0 * x))
    # interior half-points carry the exact slope; ghost faces are zero
    assert np.allclose(V.u[:, :-1], 2.0, atol=1e-13)
    assert np.all(V.u[:, -1] == 0.0)
    assert np.allclose(V.v, 0.0, atol=1e-13)


def test_grad_quadratic_hand_values():
    # phi = x^2 on [0,1] with m=3: half-point slopes 0.5 and 1.5
    g = GridSpec(0.0, 1.0, 0.0, 1.0, 3, 2)
    V = grad_half(ScalarField.from_function(g, lambda x, y: x**2))
    assert np.allclose(V.u[:, 0], 0.5)
    assert np.allclose(V.u[:, 1], 1.5)
    assert np.all(V.u[:, 2] == 0.0)


def test_div_of_zero_field():
    g = unit_grid(6, 6)
    out = div_half(VectorField.zeros(g))
    assert np.all(out.values == 0.0)


def test_laplacian_of_quadratic_is_four_in_interior():
    g = GridSpec(-1.0, 1.0, -1.0, 1.0, 41, 41)
    phi = ScalarField.from_function(g, lambda x, y: x**2 + y**2)
    lap = div_half(grad_half(phi)).values
    # the 5-point stencil is exact for quadratics away from the boundary
    assert np.allclose(lap[2:-2, 2:-2], 4.0, atol=1e-10)


def test_laplacian_second_order_convergence():
    # smooth non-polynomial field; interior error should drop at O(h^2)
    errs = []
    hs = []
    for m in (17, 33, 65):
        g = GridSpec(0.0, 1.0, 0.0, 1.0, m, m)
        phi = ScalarField.from_function(g, lambda x, y: np.sin(2 * x) * np.cos(y))
        lap = div_half(grad_half(phi)).values
        exact = ScalarField.from_function(
            g, lambda x, y: -5.0 * np.sin(2 * x) * np.cos(y)
        ).values
        interior = (slice(2, -2), slice(2, -2))
        errs.append(np.sqrt(np.mean((lap[interior] - exact[interior]) ** 2)))
        hs.append(g.hx)
    slopes = np.diff(np.log(errs)) / np.diff(np.log(hs))
    assert slopes.min() >= 1.9


def test_adjointness_on_random_fields():
    rng = np.random.default_rng(7)
    g = unit_grid(8, 8)
    for _ in range(10):
        phi = ScalarField(g, rng.standard_normal(g.shape))
        V = VectorField(g, rng.standard_normal(g.shape), rng.standard_normal(g.shape))
        lhs = field_inner(grad_half(phi), V)
        rhs = -field_inner(phi, div_half(V))
        assert abs(lhs - rhs) <= 1e-12 * max(abs(lhs), 1.0)


def test_div_shape_mismatch_raises():
    g = unit_grid(5, 5)
    with pytest.raises(InvalidInputError):
        VectorField(g, np.zeros((5, 5)), np.zeros((4, 5)))


def test_flux_bc_neumann_zeroes_outer_faces():
    rng = np.random.default_rng(3)
    g = unit_grid(5, 5)
    V = VectorField(g, rng.standard_normal(g.shape), rng.standard_normal(g.shape))
    out = apply_flux_bc(V)
    assert np.all(out.u[:, -1] == 0.0)
    assert np.all(out.v[-1, :] == 0.0)


def test_flux_bc_matches_target_on_boundary():
    rng = np.random.default_rng(4)
    g = unit_grid(6, 7)
    phi = ScalarField(g, rng.standard_normal(g.shape))
    target = VectorField(g, rng.standard_normal(g.shape), rng.standard_normal(g.shape))
    out = apply_flux_bc(grad_half(phi), target)
    assert np.all(out.u[:, -1] - target.u[:, -1] == 0.0)
    assert np.all(out.v[-1, :] - target.v[-1, :] == 0.0)


def test_flux_bc_leaves_interior_untouched():
    rng = np.random.default_rng(5)
    g = unit_grid(5, 5)
    V = VectorField(g, rng.standard_normal(g.shape), rng.standard_normal(g.shape))
    out = apply_flux_bc(V)
    assert np.array_equal(out.u[:, :-1], V.u[:, :-1])
    assert np.array_equal(out.v[:-1, :], V.v[:-1, :])
