"""Multi-stage keystream cipher for keys and payload frames.

The key passes through two reversible stages before it touches any data:
every key bit is complemented, then bits at even and odd indices are
swapped pairwise. The result is the keystream. Message bits are encrypted
by XOR against the keystream cycled to the message length, so encryption
and decryption are the same operation.

This is an obfuscation cipher with period 8 * len(key) bits, implemented
exactly as designed; it makes no cryptographic strength claims.
"""

import numpy as np

from .bits import as_bits, bytes_to_bits
from .errors import EmptyKey, EmptyKeystream, OddLength


def complement_bits(bits) -> np.ndarray:
    """Flip every bit (XOR with 1)."""
    return (1 - as_bits(bits)).astype(np.uint8)


def swap_even_odd(bits) -> np.ndarray:
    """Exchange each even-index bit with its odd-index neighbour.

    Raises:
        OddLength: if the sequence cannot be split into pairs.
    """
    arr = as_bits(bits)
    if arr.size % 2 != 0:
        raise OddLength(f"cannot pair-swap {arr.size} bits")
    return arr.reshape(-1, 2)[:, ::-1].ravel()


def encrypt_key(key: bytes) -> np.ndarray:
    """Derive the keystream from a secret key: complement, then pair-swap.

    Raises:
        EmptyKey: if the key has no bytes.
    """
    if len(key) == 0:
        raise EmptyKey("secret key must contain at least one byte")
    return swap_even_odd(complement_bits(bytes_to_bits(key)))


def keystream_xor(msg, keystream) -> np.ndarray:
    """XOR message bits with the keystream cycled to the message length.

    Self-inverse: applying the same keystream twice restores the message.

    Raises:
        EmptyKeystream: if the keystream has no bits.
    """
    m = as_bits(msg)
    ks = as_bits(keystream)
    if ks.size == 0:
        raise EmptyKeystream("keystream must contain at least one bit")
    return m ^ np.resize(ks, m.size)


def decrypt_frame(cipher, key: bytes) -> np.ndarray:
    """Undo the keystream encryption of a frame (XOR is its own inverse)."""
    return keystream_xor(cipher, encrypt_key(key))
