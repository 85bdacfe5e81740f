"""Exception types shared across the package."""


class PunctextError(Exception):
    """Base class for all package-specific errors."""


class UnsupportedCharacter(PunctextError):
    """A character outside the supported 7-bit printable set."""

    def __init__(self, index: int, codepoint: int):
        self.index = index
        self.codepoint = codepoint
        super().__init__(f"unsupported character U+{codepoint:04X} at index {index}")


class EmptyDictionary(PunctextError):
    """Dictionary source parsed to zero entries."""


class BrokenFrame(PunctextError):
    """Received character count is inconsistent with the indicated filters."""

    def __init__(self, expected, actual):
        self.expected = expected
        self.actual = actual
        super().__init__(f"frame payload mismatch: expected {expected} characters, got {actual}")


class EndpointUnavailable(PunctextError):
    """Remote recovery endpoint could not be reached after retries."""


class MalformedReply(PunctextError):
    """Remote recovery endpoint returned a reply that failed validation."""


class ProviderUnavailable(PunctextError):
    """Embedding provider could not be reached; similarity is recorded as absent."""


class EmptyInput(PunctextError):
    """Text metric invoked with an empty word sequence."""
