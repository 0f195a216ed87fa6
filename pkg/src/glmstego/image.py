"""8-bit RGB images and single-color channels.

Both types wrap read-only numpy arrays, so every operation on them is a
pure function and instances can be shared freely across threads. Pixel
grids are stored row-major; "raster order" anywhere in this package means
row-by-row, left-to-right over whatever grid is current.
"""

import numpy as np

from .errors import DimensionMismatch


def _as_u8_grid(values, expected_ndim: int, what: str) -> np.ndarray:
    """Validate an integer grid with values in [0, 255] and freeze it."""
    arr = np.asarray(values)
    if arr.ndim != expected_ndim:
        raise ValueError(f"{what} must be {expected_ndim}-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError(f"{what} must contain at least one pixel")
    if not np.issubdtype(arr.dtype, np.integer):
        raise ValueError(f"{what} must hold integers, got dtype {arr.dtype}")
    if arr.min() < 0 or arr.max() > 255:
        raise ValueError(f"{what} values must lie in [0, 255]")
    out = arr.astype(np.uint8, copy=True)
    out.setflags(write=False)
    return out


class Channel:
    """One H x W plane of 8-bit intensities."""

    __slots__ = ("values",)

    def __init__(self, values):
        self.values: np.ndarray = _as_u8_grid(values, 2, "channel")

    @property
    def height(self) -> int:
        return self.values.shape[0]

    @property
    def width(self) -> int:
        return self.values.shape[1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Channel) and np.array_equal(self.values, other.values)

    def __repr__(self) -> str:
        return f"Channel({self.height}x{self.width})"


class RgbImage:
    """An H x W grid of (red, green, blue) 8-bit pixels."""

    __slots__ = ("pixels",)

    def __init__(self, pixels):
        arr = _as_u8_grid(pixels, 3, "image")
        if arr.shape[2] != 3:
            raise ValueError(f"image must have exactly 3 color components, got {arr.shape[2]}")
        self.pixels = arr

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    def __eq__(self, other) -> bool:
        return isinstance(other, RgbImage) and np.array_equal(self.pixels, other.pixels)

    def __repr__(self) -> str:
        return f"RgbImage({self.height}x{self.width})"


def split_channels(img: RgbImage) -> tuple[Channel, Channel, Channel]:
    """Split an image into its red, green, and blue planes."""
    return (
        Channel(img.pixels[:, :, 0]),
        Channel(img.pixels[:, :, 1]),
        Channel(img.pixels[:, :, 2]),
    )


def merge_channels(r: Channel, g: Channel, b: Channel) -> RgbImage:
    """Recombine three equally-shaped planes into an RGB image.

    Raises:
        DimensionMismatch: if the three planes do not share a shape.
    """
    if not (r.values.shape == g.values.shape == b.values.shape):
        raise DimensionMismatch(
            f"channel shapes differ: {r.values.shape}, {g.values.shape}, {b.values.shape}"
        )
    return RgbImage(np.stack([r.values, g.values, b.values], axis=-1))


def transpose(ch: Channel) -> Channel:
    """Swap rows and columns, turning an H x W plane into W x H."""
    return Channel(ch.values.T)
