"""Hide a message in an image and get it back
=============================================

The embedder only ever touches the blue channel: each blue pixel's
parity (odd/even) carries one encrypted payload bit, so no pixel moves
by more than 2 intensity levels and the red/green planes stay pristine.
"""

import numpy as np

from glmstego import capacity, embed, extract, RgbImage

# A synthetic 64x64 cover; any 8-bit RGB image works the same way.
rng = np.random.default_rng(7)
cover = RgbImage(rng.integers(0, 256, size=(64, 64, 3)))

secret = b"rendezvous at the old mill, 21:00"
key = b"a shared passphrase"

print(f"cover:    {cover.height}x{cover.width} "
      f"({capacity(cover) // 8} bytes of capacity)")
print(f"secret:   {len(secret)} bytes")

# Embedding returns the stego image plus bookkeeping about what changed.
stego, report = embed(cover, key, secret)
print(f"embedded: {report.bits_embedded} bits "
      f"({report.capacity_used:.1%} of the blue plane)")
print(f"          {report.pixels_whitened} pixels moved by the whitening pass, "
      f"{report.pixels_adjusted} by bit mapping")

# Only the blue plane differs, and never by more than 2.
delta = stego.pixels.astype(int) - cover.pixels.astype(int)
print(f"red/green untouched: {not delta[:, :, :2].any()}")
print(f"max blue change:     {abs(delta[:, :, 2]).max()}")

# The same key gets the message back, bit for bit.
recovered = extract(stego, key)
print(f"recovered: {recovered!r}")
assert recovered == secret
