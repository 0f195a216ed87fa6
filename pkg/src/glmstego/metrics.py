"""Fidelity metrics between a cover image and its stego counterpart.

MSE averages squared differences over all 3*M*N channel samples, RMSE is
its square root, and PSNR is 10*log10(peak^2 / MSE). The peak defaults to
the largest intensity found in either image ("paper" mode) and can be
pinned to the conventional 255 ("fixed255") for comparison with other
tools. NCC is the symmetric normalized cross-correlation
sum(S*C) / sqrt(sum(S^2) * sum(C^2)), computed per channel and averaged;
it is exactly 1.0 for identical images. Histogram deltas count, per
channel, the L1 distance between 256-bin intensity histograms.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, TotalMismatch, ZeroImage
from .image import Channel, RgbImage, split_channels

C_MAX_MODES = ("paper", "fixed255")


@dataclass(frozen=True)
class MetricsReport:
    """All fidelity numbers for one cover/stego pair."""

    mse: float
    rmse: float
    psnr: float
    ncc: float
    hist_delta_r: int
    hist_delta_g: int
    hist_delta_b: int
    c_max: int


def _check_shapes(cover: RgbImage, stego: RgbImage) -> None:
    if cover.pixels.shape != stego.pixels.shape:
        raise DimensionMismatch(
            f"cover is {cover.height}x{cover.width}, stego is {stego.height}x{stego.width}"
        )


def mse(cover: RgbImage, stego: RgbImage) -> float:
    """Mean squared difference over every channel sample."""
    _check_shapes(cover, stego)
    diff = cover.pixels.astype(np.float64) - stego.pixels.astype(np.float64)
    return float(np.mean(diff * diff))


def rmse(cover: RgbImage, stego: RgbImage) -> float:
    """Root of the mean squared difference."""
    return math.sqrt(mse(cover, stego))


def peak_intensity(cover: RgbImage, stego: RgbImage, c_max_mode: str = "paper") -> int:
    """Peak used by PSNR: max over both images, or a fixed 255."""
    if c_max_mode not in C_MAX_MODES:
        raise ValueError(f"c_max_mode must be one of {C_MAX_MODES}, got {c_max_mode!r}")
    if c_max_mode == "fixed255":
        return 255
    return int(max(cover.pixels.max(), stego.pixels.max()))


def psnr_from_mse(mse_value: float, c_max: int) -> float:
    """PSNR in dB for a known MSE: 10*log10(c_max^2 / MSE), inf at MSE 0."""
    if mse_value == 0:
        return math.inf
    return 10.0 * math.log10(c_max * c_max / mse_value)


def psnr(cover: RgbImage, stego: RgbImage, c_max_mode: str = "paper") -> float:
    """Peak signal-to-noise ratio in decibels; +inf for identical images."""
    return psnr_from_mse(mse(cover, stego), peak_intensity(cover, stego, c_max_mode))


def ncc(cover: RgbImage, stego: RgbImage) -> float:
    """Symmetric normalized cross-correlation, averaged over channels.

    Raises:
        ZeroImage: if any channel of either image is all zeros, which
            would zero the normalization term.
    """
    _check_shapes(cover, stego)
    c = cover.pixels.astype(np.float64)
    s = stego.pixels.astype(np.float64)
    per_channel = []
    for k in range(3):
        cc = float(np.sum(c[:, :, k] * c[:, :, k]))
        ss = float(np.sum(s[:, :, k] * s[:, :, k]))
        if cc == 0 or ss == 0:
            raise ZeroImage(f"channel {k} has zero energy; correlation undefined")
        num = float(np.sum(s[:, :, k] * c[:, :, k]))
        # A single square root keeps the identical-image case exactly 1.0.
        per_channel.append(num / math.sqrt(ss * cc))
    return sum(per_channel) / 3.0


def histogram(ch: Channel) -> np.ndarray:
    """256-bin intensity histogram of one plane."""
    return np.bincount(ch.values.ravel(), minlength=256)


def hist_l1_delta(a: np.ndarray, b: np.ndarray) -> int:
    """L1 distance between two histograms of equal pixel totals.

    Raises:
        TotalMismatch: if the histograms count different pixel totals.
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.sum() != b.sum():
        raise TotalMismatch(f"histogram totals differ: {a.sum()} vs {b.sum()}")
    return int(np.abs(a - b).sum())


def compare(cover: RgbImage, stego: RgbImage, c_max_mode: str = "paper") -> MetricsReport:
    """Compute the full metrics report for one cover/stego pair."""
    mse_value = mse(cover, stego)
    c_max = peak_intensity(cover, stego, c_max_mode)
    deltas = [
        hist_l1_delta(histogram(a), histogram(b))
        for a, b in zip(split_channels(cover), split_channels(stego))
    ]
    return MetricsReport(
        mse=mse_value,
        rmse=math.sqrt(mse_value),
        psnr=psnr_from_mse(mse_value, c_max),
        ncc=ncc(cover, stego),
        hist_delta_r=deltas[0],
        hist_delta_g=deltas[1],
        hist_delta_b=deltas[2],
        c_max=c_max,
    )
