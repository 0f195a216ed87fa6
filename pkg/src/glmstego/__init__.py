"""Blue-channel gray-level-modification steganography toolkit.

Hides encrypted payloads in the parity of blue-channel pixels of RGB
images, working over transposed planes, with a multi-stage keystream
cipher, fidelity metrics, and a benchmark harness. See the README for
the algorithm walk-through and the ``glmstego`` CLI for file workflows.
"""

from .bits import (
    HEADER_BITS,
    bits_to_bytes,
    bytes_to_bits,
    frame_payload,
    unframe_payload,
)
from .codec import (
    EmbedReport,
    Parity,
    capacity,
    embed,
    extract,
    map_bit,
    whiten_channel,
)
from .crypto import (
    complement_bits,
    decrypt_frame,
    encrypt_key,
    keystream_xor,
    swap_even_odd,
)
from .errors import (
    CorruptHeader,
    CoverTooSmall,
    DimensionMismatch,
    EmptyKey,
    EmptyKeystream,
    LengthNotByteAligned,
    MessageTooLarge,
    OddLength,
    StegoError,
    TotalMismatch,
    TruncatedFrame,
    UnsupportedImage,
    ZeroImage,
)
from .image import Channel, RgbImage, merge_channels, split_channels, transpose
from .imageio import read_image, write_image
from .metrics import (
    MetricsReport,
    compare,
    hist_l1_delta,
    histogram,
    mse,
    ncc,
    peak_intensity,
    psnr,
    psnr_from_mse,
    rmse,
)

__version__ = "0.1.0"

__all__ = [
    "HEADER_BITS",
    "bits_to_bytes",
    "bytes_to_bits",
    "frame_payload",
    "unframe_payload",
    "EmbedReport",
    "Parity",
    "capacity",
    "embed",
    "extract",
    "map_bit",
    "whiten_channel",
    "complement_bits",
    "decrypt_frame",
    "encrypt_key",
    "keystream_xor",
    "swap_even_odd",
    "StegoError",
    "CorruptHeader",
    "CoverTooSmall",
    "DimensionMismatch",
    "EmptyKey",
    "EmptyKeystream",
    "LengthNotByteAligned",
    "MessageTooLarge",
    "OddLength",
    "TotalMismatch",
    "TruncatedFrame",
    "UnsupportedImage",
    "ZeroImage",
    "Channel",
    "RgbImage",
    "merge_channels",
    "split_channels",
    "transpose",
    "read_image",
    "write_image",
    "MetricsReport",
    "compare",
    "hist_l1_delta",
    "histogram",
    "mse",
    "ncc",
    "peak_intensity",
    "psnr",
    "psnr_from_mse",
    "rmse",
    "__version__",
]
