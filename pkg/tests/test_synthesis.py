import numpy as np
import pytest

from phaserec import (
    GridSpec,
    InvalidInputError,
    NoiseSpec,
    ScalarField,
    make_fringes,
    peaks_phase,
    snr_db,
    wavefront_phase,
)
from phaserec.synthesis import wavefront_gradient


def natural_wavefront_grid(m=3, n=3):
    return GridSpec(-1.0, 1.0, -1.0, 1.0, m, n)


def test_wavefront_hand_values():
    g = natural_wavefront_grid()
    p = wavefront_phase(g).values
    # rows are y, columns are x; center of the 3x3 grid is the origin
    assert p[1, 1] == pytest.approx(0.0, abs=1e-12)
    assert p[1, 2] == pytest.approx(-37.055, abs=1e-12)  # (x, y) = (1, 0)
    assert p[2, 1] == pytest.approx(2.6, abs=1e-12)  # (x, y) = (0, 1)


def test_wavefront_symmetric_quartic_variant():
    g = natural_wavefront_grid()
    base = wavefront_phase(g).values
    alt = wavefront_phase(g, symmetric_quartic=True).values
    X, Y = g.meshgrid()
    # the toggle only swaps -15x^4 for -15x^4*y inside the 2.6(...) group
    assert np.allclose(alt - base, 2.6 * 15.0 * X**4 * (1.0 - Y), atol=1e-12)


def test_wavefront_gradient_oracle_matches_finite_differences():
    g = GridSpec(-1.0, 1.0, -1.0, 1.0, 401, 401)
    p = wavefront_phase(g).values
    px, py = wavefront_gradient(g)
    fx = np.gradient(p, g.hx, axis=1)
    fy = np.gradient(p, g.hy, axis=0)
    inner = (slice(5, -5), slice(5, -5))
    assert np.max(np.abs(px[inner] - fx[inner])) < 2e-2
    assert np.max(np.abs(py[inner] - fy[inner])) < 2e-2


def test_wavefront_warns_off_domain():
    with pytest.warns(UserWarning):
        wavefront_phase(GridSpec(0.0, 2.0, 0.0, 2.0, 4, 4))


def test_peaks_center_value():
    g = GridSpec(-2.3, 2.3, -2.3, 2.3, 5, 5)
    p = peaks_phase(g).values
    assert p[2, 2] == pytest.approx((8.0 / 3.0) * np.exp(-1.0), abs=1e-12)


def test_peaks_decays_at_corners():
    g = GridSpec(-2.3, 2.3, -2.3, 2.3, 64, 64)
    p = peaks_phase(g).values
    for corner in (p[0, 0], p[0, -1], p[-1, 0], p[-1, -1]):
        assert abs(corner) < 0.1


def test_peaks_is_deterministic():
    g = GridSpec(-2.3, 2.3, -2.3, 2.3, 32, 32)
    assert np.array_equal(peaks_phase(g).values, peaks_phase(g).values)


def test_fringes_trivial_phases():
    g = GridSpec(-1.0, 1.0, -1.0, 1.0, 8, 8)
    f0 = make_fringes(ScalarField.zeros(g))
    assert np.allclose(f0.ic.values, 1.0)
    assert np.allclose(f0.is_.values, 0.0)
    fq = make_fringes(ScalarField.full(g, np.pi / 2))
    assert np.max(np.abs(fq.ic.values)) < 1e-12
    assert np.allclose(fq.is_.values, 1.0)


def test_fringes_pythagorean_identity():
    g = GridSpec(-1.0, 1.0, -1.0, 1.0, 32, 32)
    rng = np.random.default_rng(0)
    phi = ScalarField(g, rng.uniform(-10, 10, g.shape))
    b = ScalarField(g, rng.uniform(0.5, 2.0, g.shape))
    f = make_fringes(phi, b)
    amp = np.sqrt(f.ic.values**2 + f.is_.values**2)
    assert np.max(np.abs(amp - b.values)) < 1e-12
    assert np.max(np.abs(f.b.values - b.values)) < 1e-12


def test_fringes_reject_nonpositive_amplitude():
    g = GridSpec(-1.0, 1.0, -1.0, 1.0, 4, 4)
    with pytest.raises(InvalidInputError):
        make_fringes(ScalarField.zeros(g), ScalarField.zeros(g))


def test_noise_hits_target_snr():
    g = GridSpec(-1.0, 1.0, -1.0, 1.0, 256, 256)
    phi = wavefront_phase(g)
    clean = make_fringes(phi)
    for target in (21.0, 12.72):
        noisy = make_fringes(phi, 1.0, NoiseSpec(target, seed=3))
        assert snr_db(clean.ic, noisy.ic) == pytest.approx(target, abs=0.5)
        assert snr_db(clean.is_, noisy.is_) == pytest.approx(target, abs=0.5)


def test_noise_is_reproducible_per_seed():
    g = GridSpec(-1.0, 1.0, -1.0, 1.0, 64, 64)
    phi = wavefront_phase(g)
    a = make_fringes(phi, 1.0, NoiseSpec(20.0, seed=11))
    b = make_fringes(phi, 1.0, NoiseSpec(20.0, seed=11))
    c = make_fringes(phi, 1.0, NoiseSpec(20.0, seed=12))
    assert np.array_equal(a.ic.values, b.ic.values)
    assert np.array_equal(a.is_.values, b.is_.values)
    assert not np.array_equal(a.ic.values, c.ic.values)
    assert a.provenance["noise_seed"] == 11
