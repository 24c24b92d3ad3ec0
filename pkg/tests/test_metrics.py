import numpy as np
import pytest

from phaserec import GridSpec, InvalidInputError, ScalarField, mean_align, q_error, snr_db


GRID = GridSpec(0.0, 1.0, 0.0, 1.0, 16, 12)


def rand_field(rng, scale=1.0):
    return ScalarField(GRID, scale * rng.standard_normal(GRID.shape))


def test_q_perfect_agreement_and_disagreement():
    rng = np.random.default_rng(1)
    mu = rand_field(rng)
    assert q_error(mu, mu) == 0.0
    assert q_error(mu, ScalarField(GRID, -mu.values)) == pytest.approx(1.0)


def test_q_one_vs_zero_field():
    ones = ScalarField.full(GRID, 1.0)
    zeros = ScalarField.zeros(GRID)
    assert q_error(ones, zeros) == pytest.approx(1.0)
    assert q_error(zeros, zeros) == 0.0


def test_q_bounds_symmetry_scale_invariance():
    rng = np.random.default_rng(2)
    for _ in range(20):
        mu, nu = rand_field(rng), rand_field(rng)
        q = q_error(mu, nu)
        assert 0.0 <= q <= 1.0
        assert q == pytest.approx(q_error(nu, mu), rel=1e-12)
        s = float(rng.uniform(0.1, 50.0))
        scaled = q_error(
            ScalarField(GRID, s * mu.values), ScalarField(GRID, s * nu.values)
        )
        assert scaled == pytest.approx(q, rel=1e-9)


def test_q_grid_mismatch():
    other = GridSpec(0.0, 1.0, 0.0, 1.0, 8, 8)
    with pytest.raises(InvalidInputError):
        q_error(ScalarField.zeros(GRID), ScalarField.zeros(other))


def test_snr_sentinel_and_zero_db():
    rng = np.random.default_rng(3)
    s = rand_field(rng)
    assert snr_db(s, s) == float("inf")
    # noise with power equal to the signal variance measures 0 dB
    centered = s.values - s.values.mean()
    noise = rng.standard_normal(GRID.shape)
    noise *= np.sqrt(np.sum(centered**2) / np.sum(noise**2))
    assert snr_db(s, ScalarField(GRID, s.values + noise)) == pytest.approx(0.0, abs=1e-9)


def test_mean_align_properties():
    rng = np.random.default_rng(4)
    mu, nu = rand_field(rng), rand_field(rng)
    assert np.array_equal(mean_align(mu, mu).values, mu.values)
    aligned = mean_align(mu, nu)
    assert aligned.values.mean() == pytest.approx(nu.values.mean(), abs=1e-12)
    shifted = ScalarField(GRID, mu.values + 17.3)
    assert q_error(mean_align(shifted, mu), mu) < 1e-12
