"""Bit-exact wire format for punctured text plus per-window filter indices.

Layout, MSB first:
  header (32 bits): version=4b, window_count=12b, keep_ratio_code=8b,
                    m_log2=4b, tail_unpunctured=1b, reserved=3b
  filter indices:   window_count * m_log2 bits
  payload:          7-bit character codes, then a 7-bit zero terminator
  padding:          zeros up to the channel-code boundary (added by the link)

The receiver shares window_len, keep_ratio, and the filter-bank seed out of
band (run configuration); the header fields are cross-checked against that
configuration and any mismatch raises BrokenFrame.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import BrokenFrame
from .source import source_decode, source_encode

VERSION = 1
HEADER_BITS = 32


def keep_ratio_to_code(keep_ratio: float) -> int:
    return round(keep_ratio * 255)


def _int_to_bits(value: int, width: int) -> list[int]:
    return [(value >> (width - 1 - i)) & 1 for i in range(width)]


def _bits_to_int(bits: np.ndarray) -> int:
    out = 0
    for b in bits:
        out = (out << 1) | int(b)
    return out


@dataclass(frozen=True)
class Frame:
    window_count: int
    keep_ratio_code: int
    m_log2: int
    tail_unpunctured: bool
    filter_indices: tuple[int, ...]
    payload: str
    version: int = VERSION

    def __post_init__(self):
        if len(self.filter_indices) != self.window_count:
            raise ValueError("one filter index per window is required")
        if not 0 <= self.window_count < 4096:
            raise ValueError("window_count exceeds the 12-bit field")
        for idx in self.filter_indices:
            if not 0 <= idx < (1 << self.m_log2) and self.m_log2 > 0:
                raise ValueError("filter index exceeds its bit width")
            if self.m_log2 == 0 and idx != 0:
                raise ValueError("filter index must be 0 for a single filter")


def serialize(frame: Frame) -> np.ndarray:
    bits: list[int] = []
    bits += _int_to_bits(frame.version, 4)
    bits += _int_to_bits(frame.window_count, 12)
    bits += _int_to_bits(frame.keep_ratio_code, 8)
    bits += _int_to_bits(frame.m_log2, 4)
    bits.append(1 if frame.tail_unpunctured else 0)
    bits += [0, 0, 0]
    for idx in frame.filter_indices:
        bits += _int_to_bits(idx, frame.m_log2)
    head = np.array(bits, dtype=np.uint8)
    payload_bits = source_encode(frame.payload)
    terminator = np.zeros(7, dtype=np.uint8)
    return np.concatenate([head, payload_bits, terminator])


def deserialize(bits: np.ndarray, *, num_filters: int, keep_ratio: float,
                window_len: int) -> Frame:
    """Parse and validate a frame against the shared run configuration."""
    bits = np.asarray(bits, dtype=np.uint8)
    if len(bits) < HEADER_BITS:
        raise BrokenFrame(HEADER_BITS, len(bits))
    version = _bits_to_int(bits[0:4])
    if version != VERSION:
        raise BrokenFrame(f"version {VERSION}", f"version {version}")
    window_count = _bits_to_int(bits[4:16])
    keep_code = _bits_to_int(bits[16:24])
    m_log2 = _bits_to_int(bits[24:28])
    tail_flag = bool(bits[28])

    expected_mlog2 = (num_filters - 1).bit_length()
    if m_log2 != expected_mlog2:
        raise BrokenFrame(f"m_log2 {expected_mlog2}", f"m_log2 {m_log2}")
    if keep_code != keep_ratio_to_code(keep_ratio):
        raise BrokenFrame(f"keep code {keep_ratio_to_code(keep_ratio)}",
                          f"keep code {keep_code}")

    pos = HEADER_BITS
    need = window_count * m_log2
    if len(bits) < pos + need:
        raise BrokenFrame(pos + need, len(bits))
    indices = tuple(
        _bits_to_int(bits[pos + w * m_log2: pos + (w + 1) * m_log2])
        for w in range(window_count)
    ) if m_log2 else tuple([0] * window_count)
    pos += need

    ones = round(window_len * keep_ratio)
    full_windows = window_count - (1 if tail_flag else 0)
    if full_windows < 0:
        raise BrokenFrame(0, full_windows)
    full_chars = full_windows * ones
    if len(bits) < pos + full_chars * 7:
        raise BrokenFrame(pos + full_chars * 7, len(bits))
    payload = source_decode(bits[pos: pos + full_chars * 7], errors="replace")
    pos += full_chars * 7

    if tail_flag:
        tail_chars = []
        while pos + 7 <= len(bits) and len(tail_chars) < window_len - 1:
            group = bits[pos: pos + 7]
            if not group.any():
                break
            tail_chars.append(source_decode(group, errors="replace"))
            pos += 7
        payload += "".join(tail_chars)

    return Frame(
        window_count=window_count,
        keep_ratio_code=keep_code,
        m_log2=m_log2,
        tail_unpunctured=tail_flag,
        filter_indices=indices,
        payload=payload,
    )
