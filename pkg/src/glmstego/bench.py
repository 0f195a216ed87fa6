"""Benchmark harness: embed seeded random payloads over an image corpus.

Reruns three experiment shapes and writes one CSV per shape:

* ``by_image.csv``   -- one payload size, every corpus image.
* ``by_payload.csv`` -- one image, a sweep of payload sizes.
* ``by_dims.csv``    -- one image and payload, a sweep of dimensions
  (nearest-neighbour rescales of the corpus image).

Payloads come from a seeded deterministic generator, so a fixed seed
yields byte-identical CSVs. Wall-clock timing is off by default for the
same reason; pass timing=True to fill elapsed_ms with real measurements
(at the cost of reproducible output). Requested payload sizes that exceed
an image's capacity are clamped, and the clamped size is what the row
records.
"""

import csv
import io
import os
import time
from dataclasses import dataclass

import numpy as np

from .codec import capacity, embed
from .image import RgbImage
from .imageio import read_image
from .metrics import compare
from .errors import UnsupportedImage

CSV_COLUMNS = (
    "image_name",
    "width",
    "height",
    "payload_bytes",
    "mse",
    "rmse",
    "psnr_db",
    "ncc",
    "hist_delta_b",
    "elapsed_ms",
)

DEFAULT_PAYLOAD_BYTES = (2048, 4096, 6144, 8192)
DEFAULT_DIMS = ((128, 128), (256, 256), (512, 512))


@dataclass(frozen=True)
class BenchRow:
    image_name: str
    width: int
    height: int
    payload_bytes: int
    mse: float
    rmse: float
    psnr_db: float
    ncc: float
    hist_delta_b: int
    elapsed_ms: float


def load_corpus(corpus_dir: str | os.PathLike) -> list[tuple[str, RgbImage]]:
    """Load every .png/.ppm in a directory, sorted by name.

    Raises:
        FileNotFoundError: if the directory holds no usable image.
    """
    corpus_dir = os.fspath(corpus_dir)
    images = []
    for name in sorted(os.listdir(corpus_dir)):
        if os.path.splitext(name)[1].lower() not in (".png", ".ppm"):
            continue
        try:
            img = read_image(os.path.join(corpus_dir, name))
        except (UnsupportedImage, OSError):
            continue
        images.append((os.path.splitext(name)[0], img))
    if not images:
        raise FileNotFoundError(f"no readable PNG/PPM images in {corpus_dir}")
    return images


def resize_nearest(img: RgbImage, width: int, height: int) -> RgbImage:
    """Deterministic nearest-neighbour rescale (no interpolation)."""
    rows = (np.arange(height) * img.height) // height
    cols = (np.arange(width) * img.width) // width
    return RgbImage(img.pixels[rows[:, None], cols, :])


def _measure(
    name: str,
    img: RgbImage,
    payload_bytes: int,
    key: bytes,
    rng: np.random.Generator,
    c_max_mode: str,
    timing: bool,
) -> BenchRow:
    n = min(payload_bytes, capacity(img) // 8)
    payload = rng.bytes(n)
    start = time.perf_counter()
    stego, _ = embed(img, key, payload)
    elapsed_ms = (time.perf_counter() - start) * 1000.0 if timing else 0.0
    report = compare(img, stego, c_max_mode)
    return BenchRow(
        image_name=name,
        width=img.width,
        height=img.height,
        payload_bytes=n,
        mse=report.mse,
        rmse=report.rmse,
        psnr_db=report.psnr,
        ncc=report.ncc,
        hist_delta_b=report.hist_delta_b,
        elapsed_ms=elapsed_ms,
    )


def run_by_image(
    corpus: list[tuple[str, RgbImage]],
    key: bytes,
    seed: int,
    payload_bytes: int,
    c_max_mode: str = "paper",
    timing: bool = False,
) -> list[BenchRow]:
    """One row per corpus image at a single payload size."""
    rng = np.random.default_rng([seed, 0])
    return [
        _measure(name, img, payload_bytes, key, rng, c_max_mode, timing)
        for name, img in sorted(corpus, key=lambda pair: pair[0])
    ]


def run_by_payload(
    name: str,
    img: RgbImage,
    key: bytes,
    seed: int,
    payload_sizes: list[int],
    c_max_mode: str = "paper",
    timing: bool = False,
) -> list[BenchRow]:
    """One row per payload size on a single image."""
    rng = np.random.default_rng([seed, 1])
    return [
        _measure(name, img, n, key, rng, c_max_mode, timing)
        for n in sorted(payload_sizes)
    ]


def run_by_dims(
    name: str,
    img: RgbImage,
    key: bytes,
    seed: int,
    dims: list[tuple[int, int]],
    payload_bytes: int,
    c_max_mode: str = "paper",
    timing: bool = False,
) -> list[BenchRow]:
    """One row per target dimension, same image content and payload size.

    The payload is clamped to the smallest target's capacity so every
    row embeds the same number of bytes.
    """
    rng = np.random.default_rng([seed, 2])
    ordered = sorted(dims, key=lambda wh: (wh[0] * wh[1], wh))
    smallest_cap = min(capacity(resize_nearest(img, w, h)) // 8 for w, h in ordered)
    n = min(payload_bytes, smallest_cap)
    return [
        _measure(name, resize_nearest(img, w, h), n, key, rng, c_max_mode, timing)
        for w, h in ordered
    ]


def _fmt(value) -> str:
    if isinstance(value, float):
        return "inf" if value == float("inf") else f"{value:.4f}"
    return str(value)


def rows_to_csv(rows: list[BenchRow], seed: int) -> str:
    """Render rows with a seed comment line, a header, and \\n newlines."""
    buf = io.StringIO()
    buf.write(f"# seed={seed}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([_fmt(getattr(row, col)) for col in CSV_COLUMNS])
    return buf.getvalue()


def run_all(
    corpus_dir: str | os.PathLike,
    out_dir: str | os.PathLike,
    key: bytes,
    seed: int,
    payload_sizes: list[int] | None = None,
    dims: list[tuple[int, int]] | None = None,
    c_max_mode: str = "paper",
    timing: bool = False,
) -> dict[str, str]:
    """Run all three experiments and write their CSVs into out_dir.

    The by-image table embeds the largest requested payload size; the
    dimension sweep embeds the smallest. Returns {filename: path}.
    """
    payload_sizes = list(payload_sizes) if payload_sizes else list(DEFAULT_PAYLOAD_BYTES)
    dims = list(dims) if dims else list(DEFAULT_DIMS)
    corpus = load_corpus(corpus_dir)
    sweep_name, sweep_img = corpus[0]

    tables = {
        "by_image.csv": run_by_image(
            corpus, key, seed, max(payload_sizes), c_max_mode, timing
        ),
        "by_payload.csv": run_by_payload(
            sweep_name, sweep_img, key, seed, payload_sizes, c_max_mode, timing
        ),
        "by_dims.csv": run_by_dims(
            sweep_name, sweep_img, key, seed, dims, min(payload_sizes), c_max_mode, timing
        ),
    }

    os.makedirs(out_dir, exist_ok=True)
    written = {}
    for filename, rows in tables.items():
        path = os.path.join(os.fspath(out_dir), filename)
        with open(path, "w", newline="") as fh:
            fh.write(rows_to_csv(rows, seed))
        written[filename] = path
    return written
