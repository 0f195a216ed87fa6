"""The keystream cipher, stage by stage
=======================================

Before any pixel changes, the payload is encrypted with a keystream
derived from the secret key in two reversible steps: complement every
key bit, then swap each even/odd index pair. Message bits are XORed
against that keystream, cycled to the message length. Every stage is
its own inverse, which is why extraction just reruns the pipeline.
"""

import numpy as np

from glmstego import (
    bytes_to_bits,
    complement_bits,
    encrypt_key,
    frame_payload,
    keystream_xor,
    swap_even_odd,
)


def show(label, bits):
    print(f"{label:>22}: {''.join(map(str, np.asarray(bits).tolist()))}")


key = b"K"
show("key 0x4B", bytes_to_bits(key))
show("complemented", complement_bits(bytes_to_bits(key)))
show("pairs swapped", swap_even_odd(complement_bits(bytes_to_bits(key))))
show("= keystream", encrypt_key(key))
print()

# The payload frame is a 32-bit length header plus the message bits;
# the whole frame is encrypted in one pass so the length is hidden too.
message = b"Hi"
frame = frame_payload(message)
cipher = keystream_xor(frame, encrypt_key(key))
show("frame", frame)
show("encrypted", cipher)
print()

# XOR with the same keystream twice is the identity.
show("decrypted", keystream_xor(cipher, encrypt_key(key)))
assert np.array_equal(keystream_xor(cipher, encrypt_key(key)), frame)

# Involutions in action: each stage undone by reapplying it.
bits = np.random.default_rng(0).integers(0, 2, size=16, dtype=np.uint8)
assert np.array_equal(complement_bits(complement_bits(bits)), bits)
assert np.array_equal(swap_even_odd(swap_even_odd(bits)), bits)
print("all stages verified self-inverse")
