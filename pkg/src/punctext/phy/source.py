"""Fixed-length 7-bit character coding, MSB first."""

from __future__ import annotations

import numpy as np

from ..corpus import SUPPORTED_CHARS
from ..errors import UnsupportedCharacter

_BIT_WEIGHTS = np.array([64, 32, 16, 8, 4, 2, 1], dtype=np.uint8)

# Corrupted payloads can decode to unprintable codes; they map to this
# placeholder so character alignment survives.
REPLACEMENT = "?"


def source_encode(chars: str) -> np.ndarray:
    """Map each character to its 7-bit code, concatenated MSB first."""
    for i, ch in enumerate(chars):
        if ch not in SUPPORTED_CHARS:
            raise UnsupportedCharacter(i, ord(ch))
    if not chars:
        return np.zeros(0, dtype=np.uint8)
    codes = np.frombuffer(chars.encode("ascii"), dtype=np.uint8)
    return np.unpackbits(codes[:, None], axis=1)[:, 1:].reshape(-1)


def source_decode(bits: np.ndarray, errors: str = "strict") -> str:
    """Inverse of source_encode over complete 7-bit groups.

    errors="replace" substitutes REPLACEMENT for codes outside the supported
    set (receive path); "strict" raises UnsupportedCharacter.
    """
    usable = len(bits) - len(bits) % 7
    if usable == 0:
        return ""
    codes = bits[:usable].astype(np.uint8).reshape(-1, 7) @ _BIT_WEIGHTS
    out = []
    for i, code in enumerate(codes):
        ch = chr(int(code))
        if ch not in SUPPORTED_CHARS:
            if errors == "strict":
                raise UnsupportedCharacter(i, int(code))
            ch = REPLACEMENT
        out.append(ch)
    return "".join(out)
