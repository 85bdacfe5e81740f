"""End-to-end bit chain: frame bits -> LDPC -> QPSK -> AWGN -> LLR -> decode.

The final message block is shortened: it is zero-padded for encoding but the
known zeros are not transmitted, and the receiver pins their LLRs. Rate
matching for symbol-budget experiments repeats coded bits round-robin (every
bit at least once, extras spread evenly); the receiver sums the LLRs of all
copies of a bit before decoding.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channel import ChannelConfig, awgn
from .ldpc import LdpcCode
from .modem import qpsk_llr, qpsk_modulate

# LLR magnitude assigned to shortened (known-zero) bit positions.
_KNOWN_BIT_LLR = 1e3


@dataclass(frozen=True)
class LinkResult:
    bits: np.ndarray            # recovered frame bits (k * blocks)
    symbol_count: int
    converged: bool
    max_iterations: int


def _repetition_counts(coded_len: int, target_bits: int) -> np.ndarray:
    """Per-bit transmit counts totalling target_bits, spread evenly."""
    if target_bits < coded_len:
        raise ValueError("symbol budget below one copy of the coded bits")
    base, extra = divmod(target_bits, coded_len)
    counts = np.full(coded_len, base, dtype=np.int64)
    if extra:
        counts[np.linspace(0, coded_len, extra, endpoint=False).astype(int)] += 1
    return counts


def coded_bit_count(frame_bit_len: int, code: LdpcCode) -> int:
    """Transmitted coded bits with the last block shortened."""
    blocks = max(1, -(-frame_bit_len // code.k))
    return frame_bit_len + blocks * code.m


def coded_symbol_count(frame_bit_len: int, code: LdpcCode) -> int:
    """Symbols for one-copy transmission of the shortened, coded frame."""
    return -(-coded_bit_count(frame_bit_len, code) // 2)


def transmit_frame_bits(frame_bits: np.ndarray, code: LdpcCode,
                        cfg: ChannelConfig,
                        symbol_budget: int | None = None) -> LinkResult:
    """Run the full chain and return the recovered frame bits.

    With snr_db None the channel is bypassed and the transmitted bits are
    returned exactly (symbol accounting still reflects the budget).
    """
    frame_bits = np.asarray(frame_bits, dtype=np.uint8)
    n_frame = len(frame_bits)
    blocks = max(1, -(-n_frame // code.k))
    k_last = n_frame - (blocks - 1) * code.k
    padded = np.zeros(blocks * code.k, dtype=np.uint8)
    padded[:n_frame] = frame_bits
    codewords = code.encode(padded.reshape(blocks, code.k))

    # transmit full blocks whole; drop the known zeros of the last block
    last = np.concatenate([codewords[-1, :k_last], codewords[-1, code.k:]])
    coded = np.concatenate([codewords[:-1].reshape(-1), last])

    target = 2 * symbol_budget if symbol_budget is not None else len(coded)
    counts = _repetition_counts(len(coded), target)
    if counts.sum() % 2:
        counts[-1] += 1
    n_symbols = int(counts.sum()) // 2

    if cfg.snr_db is None:
        return LinkResult(bits=padded, symbol_count=n_symbols,
                          converged=True, max_iterations=0)

    tx_bits = np.repeat(coded, counts)
    symbols = qpsk_modulate(tx_bits)
    received = awgn(symbols, cfg)
    llrs = qpsk_llr(received, cfg.noise_var, cfg.h)
    if counts.max() > 1:
        bounds = np.concatenate([[0], np.cumsum(counts)[:-1]])
        llrs = np.add.reduceat(llrs, bounds)

    full_len = (blocks - 1) * code.n
    block_llrs = np.empty((blocks, code.n))
    if blocks > 1:
        block_llrs[:-1] = llrs[:full_len].reshape(blocks - 1, code.n)
    block_llrs[-1, :k_last] = llrs[full_len:full_len + k_last]
    block_llrs[-1, k_last:code.k] = _KNOWN_BIT_LLR
    block_llrs[-1, code.k:] = llrs[full_len + k_last:]

    decoded, converged, iterations = code.decode(block_llrs)
    return LinkResult(
        bits=decoded.reshape(-1),
        symbol_count=n_symbols,
        converged=bool(np.all(converged)),
        max_iterations=int(np.max(iterations)) if len(iterations) else 0,
    )
