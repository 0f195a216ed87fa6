"""Embedding and extraction of encrypted payload frames in the blue channel.

Embedding pipeline:

1. Split the cover into R, G, B planes and transpose all three, so bits
   land in column-major order relative to the original image.
2. Encrypt the framed payload: frame bits XOR the keystream derived from
   the secret key (see :mod:`glmstego.crypto`).
3. Pick the baseline parity from the first encrypted bit (1 -> odd,
   0 -> even) and whiten the whole transposed blue plane to that parity.
4. Walk the whitened plane in raster order and force the parity of the
   i-th pixel to the i-th encrypted bit: matching pixels are untouched,
   a 1-bit adds 1 to an even pixel, a 0-bit subtracts 1 from an odd one.
5. Transpose the planes back and merge. Red and green are never modified,
   and no blue pixel moves by more than 2 intensity levels in total.

Extraction reads the LSBs of the transposed blue plane in the same order,
decrypts the 32-bit length header, validates it, then decrypts exactly
the advertised number of body bits. A wrong key scrambles the header and
is reported as :class:`~glmstego.errors.CorruptHeader` (or yields bytes
that differ from the original message).
"""

import enum
from dataclasses import dataclass

import numpy as np

from .bits import HEADER_BITS, bits_to_bytes, frame_payload
from .crypto import encrypt_key, keystream_xor
from .errors import CorruptHeader, CoverTooSmall, EmptyKey
from .image import Channel, RgbImage, merge_channels, split_channels, transpose


class Parity(enum.Enum):
    """Baseline parity the blue plane is whitened to before mapping."""

    EVEN = 0
    ODD = 1

    @classmethod
    def from_bit(cls, bit: int) -> "Parity":
        return cls.ODD if bit else cls.EVEN


@dataclass(frozen=True)
class EmbedReport:
    """Bookkeeping for one embed call.

    capacity_used is the fraction of blue pixels that carry frame bits;
    pixels_whitened and pixels_adjusted count value changes made by the
    whitening pass and the bit-mapping pass respectively (a pixel nudged
    up by whitening and back down by mapping counts in both).
    """

    bits_embedded: int
    pixels_whitened: int
    pixels_adjusted: int
    capacity_used: float


def capacity(img: RgbImage) -> int:
    """Message bits an image can carry: one per blue pixel, minus the header."""
    return max(0, img.height * img.width - HEADER_BITS)


def whiten_channel(ch: Channel, parity: Parity) -> Channel:
    """Force every value in the plane to the given parity.

    Values already of the target parity are unchanged; the rest gain 1,
    except that 255 drops to 254 when the target is even (256 is not
    representable, and -1 flips parity just as well).
    """
    v = ch.values.astype(np.int16)
    out = np.where((v & 1) == parity.value, v, v + 1)
    out[out == 256] = 254
    return Channel(out)


def map_bit(pixel: int, bit: int) -> int:
    """Force one pixel's parity to a bit: odd carries 1, even carries 0.

    Matching pixels are unchanged; otherwise a 1-bit adds 1 and a 0-bit
    subtracts 1, stepping the other way at the 0/255 boundaries (either
    direction flips parity, so extraction is unaffected).
    """
    if not 0 <= pixel <= 255:
        raise ValueError(f"pixel value {pixel} outside [0, 255]")
    if (pixel & 1) == bit:
        return pixel
    if bit:
        return pixel + 1 if pixel < 255 else pixel - 1
    return pixel - 1 if pixel > 0 else pixel + 1


def _map_bits(values: np.ndarray, bits: np.ndarray) -> tuple[np.ndarray, int]:
    """Vectorized map_bit over the leading len(bits) raster positions."""
    flat = values.astype(np.int16).ravel()
    head = flat[: bits.size]
    # After whitening, mismatched pixels are never at the saturation edge
    # for their step direction, so +1/-1 cannot leave [0, 255].
    delta = np.where((head & 1) == bits, 0, np.where(bits == 1, 1, -1)).astype(np.int16)
    flat[: bits.size] = head + delta
    return flat.reshape(values.shape), int(np.count_nonzero(delta))


def embed(cover: RgbImage, key: bytes, message: bytes) -> tuple[RgbImage, EmbedReport]:
    """Hide a message in the blue channel of a cover image.

    Deterministic: identical (cover, key, message) always produce a
    bit-identical stego image.

    Raises:
        EmptyKey: if the key has no bytes.
        CoverTooSmall: if header + message need more bits than there
            are blue pixels.
    """
    if len(key) == 0:
        raise EmptyKey("secret key must contain at least one byte")
    message = bytes(message)
    total_pixels = cover.height * cover.width
    frame_bits = HEADER_BITS + 8 * len(message)
    if frame_bits > total_pixels:
        raise CoverTooSmall(
            f"frame of {frame_bits} bits exceeds {total_pixels} blue pixels "
            f"(capacity {capacity(cover)} message bits)"
        )

    r, g, b = split_channels(cover)
    r_t, g_t, b_t = transpose(r), transpose(g), transpose(b)

    cipher = keystream_xor(frame_payload(message), encrypt_key(key))
    parity = Parity.from_bit(int(cipher[0]))

    whitened = whiten_channel(b_t, parity)
    n_whitened = int(np.count_nonzero(whitened.values != b_t.values))

    mapped, n_adjusted = _map_bits(whitened.values, cipher)

    stego = merge_channels(transpose(r_t), transpose(g_t), transpose(Channel(mapped)))
    report = EmbedReport(
        bits_embedded=int(cipher.size),
        pixels_whitened=n_whitened,
        pixels_adjusted=n_adjusted,
        capacity_used=cipher.size / total_pixels,
    )
    return stego, report


def extract(stego: RgbImage, key: bytes) -> bytes:
    """Recover the message hidden by :func:`embed` with the same key.

    Raises:
        EmptyKey: if the key has no bytes.
        CorruptHeader: if the image cannot hold a header, or the decoded
            byte count does not fit the image (wrong key, or not a stego
            image produced by this codec).
    """
    if len(key) == 0:
        raise EmptyKey("secret key must contain at least one byte")

    _, _, b = split_channels(stego)
    lsbs = (transpose(b).values & 1).ravel()
    if lsbs.size < HEADER_BITS:
        raise CorruptHeader(f"{lsbs.size} pixels cannot hold a {HEADER_BITS}-bit header")

    keystream = encrypt_key(key)
    header = lsbs[:HEADER_BITS] ^ np.resize(keystream, HEADER_BITS)
    count = int.from_bytes(bits_to_bytes(header), "big")
    end = HEADER_BITS + 8 * count
    if end > lsbs.size:
        raise CorruptHeader(
            f"decoded byte count {count} exceeds the image "
            f"(wrong key, or not a stego image)"
        )
    # Body keystream positions continue from 32, matching the single
    # encryption pass over the whole frame at embed time.
    body = lsbs[HEADER_BITS:end] ^ np.resize(keystream, end)[HEADER_BITS:]
    return bits_to_bytes(body)
