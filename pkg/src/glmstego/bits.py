"""Bit/byte conversion and payload framing.

Bit sequences are 1-D numpy arrays of uint8 values 0 and 1, always in
MSB-first order: byte 0x41 becomes 0,1,0,0,0,0,0,1.

A payload frame is the exact bit string handed to the embedder: a 32-bit
big-endian byte count followed by the message bits. The extractor reads
the count first, so no terminator is needed and capacity bookkeeping is
deterministic (the header costs 32 carrier pixels).
"""

import struct

import numpy as np

from .errors import LengthNotByteAligned, MessageTooLarge, TruncatedFrame

HEADER_BITS = 32

_MAX_MESSAGE_BYTES = 2**32 - 1


def as_bits(seq) -> np.ndarray:
    """Coerce a sequence of 0/1 values to a uint8 bit array."""
    arr = np.asarray(seq)
    if arr.dtype != np.uint8:
        arr = arr.astype(np.uint8)
    if arr.ndim != 1:
        raise ValueError(f"bit sequence must be 1-D, got shape {arr.shape}")
    if arr.size and arr.max() > 1:
        raise ValueError("bit sequence may only contain 0 and 1")
    return arr


def bytes_to_bits(data: bytes) -> np.ndarray:
    """Unpack bytes into bits, most significant bit of each byte first."""
    return np.unpackbits(np.frombuffer(bytes(data), dtype=np.uint8))


def bits_to_bytes(bits) -> bytes:
    """Pack an MSB-first bit array back into bytes.

    Raises:
        LengthNotByteAligned: if the bit count is not a multiple of 8.
    """
    arr = as_bits(bits)
    if arr.size % 8 != 0:
        raise LengthNotByteAligned(f"{arr.size} bits is not a whole number of bytes")
    return np.packbits(arr).tobytes()


def frame_payload(message: bytes) -> np.ndarray:
    """Prefix a message with its 32-bit big-endian byte count, as bits.

    Raises:
        MessageTooLarge: if the message exceeds 2**32 - 1 bytes.
    """
    if len(message) > _MAX_MESSAGE_BYTES:
        raise MessageTooLarge(f"message of {len(message)} bytes exceeds the 32-bit header")
    message = bytes(message)
    return bytes_to_bits(struct.pack(">I", len(message)) + message)


def unframe_payload(frame) -> bytes:
    """Recover the message bytes from a framed bit sequence.

    Returns exactly as many bytes as the leading 32-bit header claims;
    bits beyond the framed region are ignored.

    Raises:
        TruncatedFrame: if the frame is shorter than the header promises.
    """
    arr = as_bits(frame)
    if arr.size < HEADER_BITS:
        raise TruncatedFrame(f"frame of {arr.size} bits cannot hold a {HEADER_BITS}-bit header")
    (count,) = struct.unpack(">I", bits_to_bytes(arr[:HEADER_BITS]))
    end = HEADER_BITS + 8 * count
    if arr.size < end:
        raise TruncatedFrame(f"header claims {count} bytes but only {arr.size - HEADER_BITS} body bits follow")
    return bits_to_bytes(arr[HEADER_BITS:end])
