"""Comparison metrics: normalized error Q, SNR measurement, mean alignment."""

from __future__ import annotations

import numpy as np

from .grid import ScalarField, require_same_grid


def q_error(mu: ScalarField, nu: ScalarField) -> float:
    """Normalized error ||mu - nu|| / (||mu|| + ||nu||), in [0, 1].

    0 for perfect agreement, 1 for perfect disagreement; 0 when both
    fields are identically zero.  Plain root-sum-of-squares norms; the
    quadrature weights cancel in the ratio.
    """
    require_same_grid(mu, nu)
    denom = np.linalg.norm(mu.values) + np.linalg.norm(nu.values)
    if denom == 0.0:
        return 0.0
    return float(np.linalg.norm(mu.values - nu.values) / denom)


def snr_db(signal: ScalarField, noisy: ScalarField) -> float:
    """Measured SNR in dB: 10*log10(sum (s - mean s)^2 / sum (noisy - s)^2).

    Returns +inf when the noise power is exactly zero.
    """
    require_same_grid(signal, noisy)
    s = signal.values
    noise_power = np.sum((noisy.values - s) ** 2)
    if noise_power == 0.0:
        return float("inf")
    signal_power = np.sum((s - s.mean()) ** 2)
    return float(10.0 * np.log10(signal_power / noise_power))


def mean_align(mu: ScalarField, nu: ScalarField) -> ScalarField:
    """Shift mu by a constant so its mean matches nu's.

    Used before comparing phases that are only defined up to a constant.
    """
    require_same_grid(mu, nu)
    shift = float(nu.values.mean() - mu.values.mean())
    return ScalarField(mu.grid, mu.values + shift)
