"""AWGN channel with a fixed complex gain.

SNR is Es/N0 per QPSK symbol for unit-energy constellations: the complex
noise variance is 10^(-snr_db/10), split equally between I and Q. snr_db of
None models a noiseless link (y = h·x exactly).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ChannelConfig:
    snr_db: float | None
    h: complex = 1.0 + 0.0j
    noise_seed: int = 0

    @property
    def noise_var(self) -> float:
        if self.snr_db is None:
            return 0.0
        return float(10.0 ** (-self.snr_db / 10.0))


def awgn(symbols: np.ndarray, cfg: ChannelConfig) -> np.ndarray:
    """y[i] = h·x[i] + n[i] with circularly-symmetric complex Gaussian noise
    of total variance noise_var, drawn deterministically from noise_seed."""
    x = np.asarray(symbols)
    var = cfg.noise_var
    if var == 0.0:
        return cfg.h * x
    rng = np.random.default_rng(np.random.SeedSequence(entropy=cfg.noise_seed))
    sigma = np.sqrt(var / 2.0)
    noise = sigma * (rng.standard_normal(len(x)) + 1j * rng.standard_normal(len(x)))
    return cfg.h * x + noise
