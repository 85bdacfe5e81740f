"""Bit-exact transmit chain: source coding, LDPC, QPSK, AWGN channel."""

from .channel import ChannelConfig, awgn
from .frame import Frame, deserialize, keep_ratio_to_code, serialize
from .ldpc import LdpcCode, bundled_code
from .link import LinkResult, coded_symbol_count, transmit_frame_bits
from .modem import qpsk_demodulate_hard, qpsk_llr, qpsk_modulate
from .source import source_decode, source_encode

__all__ = [
    "ChannelConfig", "awgn", "Frame", "deserialize", "keep_ratio_to_code",
    "serialize", "LdpcCode", "bundled_code", "LinkResult",
    "coded_symbol_count", "transmit_frame_bits", "qpsk_demodulate_hard",
    "qpsk_llr", "qpsk_modulate", "source_decode", "source_encode",
]
from .link import coded_bit_count  # noqa: E402

__all__.append("coded_bit_count")
