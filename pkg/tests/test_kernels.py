import numpy as np
import pytest

from phaserec import kernels
from phaserec.kernels import _numpy


def random_inputs(rng, n=23, m=31):
    shape = (n, m)
    phi = rng.standard_normal(shape)
    ic = rng.standard_normal(shape)
    is_ = rng.standard_normal(shape)
    b = rng.uniform(0.0, 2.0, shape)
    p1 = rng.standard_normal(shape)
    p2 = rng.standard_normal(shape)
    div_p = rng.standard_normal(shape)
    lam = rng.uniform(0.0, 2.0)
    hx = rng.uniform(0.5, 2.0)
    hy = rng.uniform(0.5, 2.0)
    return phi, ic, is_, b, p1, p2, div_p, lam, hx, hy


@pytest.mark.skipif(kernels.BACKEND != "compiled", reason="compiled backend unavailable")
def test_compiled_matches_numpy_on_random_instances():
    rng = np.random.default_rng(11)
    for _ in range(10):
        args = random_inputs(rng)
        out_c = np.empty_like(args[0])
        out_p = np.empty_like(args[0])
        e_c = kernels.eval_energy_gradient(*args, out_c)
        e_p = _numpy.eval_energy_gradient(*args, out_p)
        assert e_c == pytest.approx(e_p, rel=1e-12)
        assert np.allclose(out_c, out_p, rtol=1e-12, atol=1e-12)


def test_kernel_is_deterministic():
    rng = np.random.default_rng(12)
    args = random_inputs(rng)
    out_a = np.empty_like(args[0])
    out_b = np.empty_like(args[0])
    e_a = kernels.eval_energy_gradient(*args, out_a)
    e_b = kernels.eval_energy_gradient(*args, out_b)
    assert e_a == e_b
    assert np.array_equal(out_a, out_b)


def test_workspace_arguments_do_not_change_result():
    rng = np.random.default_rng(13)
    args = random_inputs(rng)
    out_a = np.empty_like(args[0])
    out_b = np.empty_like(args[0])
    ws1 = np.empty_like(args[0])
    ws2 = np.empty_like(args[0])
    e_a = kernels.eval_energy_gradient(*args, out_a)
    e_b = kernels.eval_energy_gradient(*args, out_b, ws1, ws2)
    assert e_a == pytest.approx(e_b, rel=1e-15)
    assert np.allclose(out_a, out_b, rtol=1e-15, atol=1e-15)


def test_backend_flag_is_consistent():
    assert kernels.BACKEND in ("compiled", "python")
    if kernels.BACKEND == "python":
        assert kernels.eval_energy_gradient is _numpy.eval_energy_gradient
