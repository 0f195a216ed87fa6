"""Exception hierarchy for the glmstego package.

Every failure raised by this package derives from :class:`StegoError`,
which itself derives from ``ValueError`` so generic callers can treat
contract violations as ordinary value errors.
"""


class StegoError(ValueError):
    """Base class for all glmstego errors."""


class DimensionMismatch(StegoError):
    """Two grids that must share a shape do not."""


class LengthNotByteAligned(StegoError):
    """A bit sequence expected to be a whole number of bytes is not."""


class MessageTooLarge(StegoError):
    """Message exceeds the 2**32 - 1 byte limit of the length header."""


class TruncatedFrame(StegoError):
    """A payload frame ends before the length its header promises."""


class OddLength(StegoError):
    """Pairwise bit shuffling requires an even-length sequence."""


class EmptyKey(StegoError):
    """The secret key must contain at least one byte."""


class EmptyKeystream(StegoError):
    """A keystream must contain at least one bit."""


class CoverTooSmall(StegoError):
    """The cover image has fewer blue pixels than the frame has bits."""


class CorruptHeader(StegoError):
    """Extracted length header is implausible: wrong key or not a stego image."""


class ZeroImage(StegoError):
    """Cross-correlation is undefined when a channel has no energy."""


class TotalMismatch(StegoError):
    """Histograms being compared do not count the same number of pixels."""


class UnsupportedImage(StegoError):
    """Input file is not a format this toolkit can carry payloads in."""
