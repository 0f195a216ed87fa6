"""Reading and writing carrier images.

Only lossless formats survive parity embedding, so exactly two are
supported: PNG (via Pillow, RGB only, alpha rejected rather than
dropped) and binary PPM. The PPM writer emits a fixed byte layout --
``P6\\n<width> <height>\\n255\\n`` followed by raw RGB triples row-major --
so test fixtures can be compared byte for byte. JPEG input is refused
outright: recompression destroys the LSB payload.
"""

import os

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import UnsupportedImage
from .image import RgbImage

_ALPHA_MODES = {"RGBA", "LA", "PA", "RGBa", "La"}


def _read_ppm(data: bytes, path: str) -> RgbImage:
    """Parse a binary P6 file: ASCII header tokens, then raw RGB triples."""
    pos = 2  # past the magic
    fields = []
    while len(fields) < 3:
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if pos < len(data) and data[pos : pos + 1] == b"#":  # comment to end of line
            while pos < len(data) and data[pos] != 0x0A:
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        if start == pos:
            raise UnsupportedImage(f"{path}: truncated PPM header")
        fields.append(data[start:pos])
    pos += 1  # the single whitespace byte after the maxval
    try:
        width, height, maxval = (int(f) for f in fields)
    except ValueError:
        raise UnsupportedImage(f"{path}: malformed PPM header") from None
    if maxval != 255:
        raise UnsupportedImage(f"{path}: only 8-bit PPM supported, maxval={maxval}")
    if width < 1 or height < 1:
        raise UnsupportedImage(f"{path}: bad PPM dimensions {width}x{height}")
    need = 3 * width * height
    raw = data[pos : pos + need]
    if len(raw) < need:
        raise UnsupportedImage(f"{path}: PPM pixel data truncated")
    return RgbImage(np.frombuffer(raw, dtype=np.uint8).reshape(height, width, 3))


def read_image(path: str | os.PathLike) -> RgbImage:
    """Load a PNG or binary PPM cover/stego image.

    Raises:
        UnsupportedImage: for lossy or non-RGB inputs (JPEG, alpha,
            grayscale, palette, 16-bit, unknown formats).
        OSError: if the file is missing or unreadable.
    """
    path = os.fspath(path)
    with open(path, "rb") as fh:
        head = fh.read(2)
        if head == b"P6":
            return _read_ppm(head + fh.read(), path)

    try:
        with Image.open(path) as img:
            fmt = img.format
            if fmt == "JPEG":
                raise UnsupportedImage(
                    f"{path}: JPEG is lossy and would destroy the embedded payload; "
                    "use PNG or PPM"
                )
            if fmt != "PNG":
                raise UnsupportedImage(f"{path}: unsupported format {fmt}; use PNG or PPM")
            if img.mode in _ALPHA_MODES or (img.mode == "P" and "transparency" in img.info):
                raise UnsupportedImage(
                    f"{path}: image has an alpha channel, which this codec would have "
                    "to discard; flatten it first"
                )
            if img.mode != "RGB":
                raise UnsupportedImage(f"{path}: only 8-bit RGB supported, got mode {img.mode}")
            return RgbImage(np.asarray(img, dtype=np.uint8))
    except UnidentifiedImageError:
        raise UnsupportedImage(f"{path}: not a recognizable image file") from None


def write_image(path: str | os.PathLike, img: RgbImage) -> None:
    """Write an image losslessly; the format follows the file extension.

    Raises:
        UnsupportedImage: for extensions other than .png and .ppm.
    """
    path = os.fspath(path)
    ext = os.path.splitext(path)[1].lower()
    if ext == ".png":
        Image.fromarray(img.pixels, mode="RGB").save(path, format="PNG")
    elif ext == ".ppm":
        header = f"P6\n{img.width} {img.height}\n255\n".encode("ascii")
        with open(path, "wb") as fh:
            fh.write(header + img.pixels.tobytes())
    elif ext in (".jpg", ".jpeg"):
        raise UnsupportedImage(f"{path}: refusing lossy JPEG output; use .png or .ppm")
    else:
        raise UnsupportedImage(f"{path}: unsupported output extension {ext!r}; use .png or .ppm")
