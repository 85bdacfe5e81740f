"""Gray-mapped unit-energy QPSK modulation and soft demodulation."""

from __future__ import annotations

import numpy as np

_SCALE = 1.0 / np.sqrt(2.0)

# Guards the noiseless limit; LLR magnitudes saturate instead of overflowing.
_MIN_NOISE_VAR = 1e-12


def qpsk_modulate(bits: np.ndarray) -> np.ndarray:
    """Map bit pairs (MSB first) to (±1 ± 1j)/√2; 00 → (+1+1j)/√2."""
    if len(bits) % 2:
        raise ValueError("bit count must be even; framing pads odd payloads")
    b = np.asarray(bits, dtype=np.int8).reshape(-1, 2)
    return ((1 - 2 * b[:, 0]) + 1j * (1 - 2 * b[:, 1])) * _SCALE


def qpsk_llr(symbols: np.ndarray, noise_var: float,
             h: complex = 1.0) -> np.ndarray:
    """Per-bit log-likelihood ratios (positive favors bit 0) for y = h·x + n
    with complex noise variance noise_var."""
    var = max(float(noise_var), _MIN_NOISE_VAR)
    y = np.asarray(symbols) / h
    scale = 2.0 * np.sqrt(2.0) / var
    llrs = np.empty(2 * len(y))
    llrs[0::2] = scale * y.real
    llrs[1::2] = scale * y.imag
    return llrs


def qpsk_demodulate_hard(symbols: np.ndarray, h: complex = 1.0) -> np.ndarray:
    """Minimum-distance hard decisions, bit pairs MSB first."""
    y = np.asarray(symbols) / h
    bits = np.empty(2 * len(y), dtype=np.uint8)
    bits[0::2] = (y.real < 0).astype(np.uint8)
    bits[1::2] = (y.imag < 0).astype(np.uint8)
    return bits
