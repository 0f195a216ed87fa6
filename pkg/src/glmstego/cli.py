"""Command-line front end: embed, extract, analyze, and bench.

Exit codes are fixed for scripting:

    0  success
    2  cover too small for the payload
    3  unreadable or unsupported input/output
    4  empty or missing key
    5  corrupt header on extract (wrong key, or not a stego image)
    6  cover/stego dimension mismatch
    64 command-line usage error

The secret key comes from --key or, failing that, the STEGO_KEY
environment variable; the flag wins. Key strings are encoded as UTF-8.
"""

import argparse
import os
import sys

from . import __version__
from .bench import DEFAULT_DIMS, DEFAULT_PAYLOAD_BYTES, run_all
from .codec import capacity, embed, extract
from .errors import CorruptHeader, CoverTooSmall, DimensionMismatch, EmptyKey, StegoError
from .imageio import read_image, write_image
from .metrics import C_MAX_MODES, compare

EXIT_OK = 0
EXIT_COVER_TOO_SMALL = 2
EXIT_IO = 3
EXIT_EMPTY_KEY = 4
EXIT_CORRUPT_HEADER = 5
EXIT_DIMENSION_MISMATCH = 6
EXIT_USAGE = 64

KEY_ENV_VAR = "STEGO_KEY"


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors, which would collide with
    # EXIT_COVER_TOO_SMALL; use the sysexits convention instead.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _resolve_key(args) -> bytes:
    key = args.key if args.key is not None else os.environ.get(KEY_ENV_VAR, "")
    if not key:
        raise EmptyKey(f"no key given; pass --key or set {KEY_ENV_VAR}")
    return key.encode("utf-8")


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {text}")
    return value


def _parse_dims(text: str) -> tuple[int, int]:
    try:
        w, h = text.lower().split("x")
        w, h = int(w), int(h)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected WxH, got {text!r}") from None
    if w < 1 or h < 1:
        raise argparse.ArgumentTypeError(f"dimensions must be positive, got {text!r}")
    return w, h


def cmd_embed(args) -> int:
    key = _resolve_key(args)
    cover = read_image(args.cover)
    with open(args.in_path, "rb") as fh:
        message = fh.read()
    try:
        stego, report = embed(cover, key, message)
    except CoverTooSmall:
        print(
            f"payload of {len(message)} bytes exceeds capacity: "
            f"{capacity(cover) // 8} bytes ({capacity(cover)} bits)",
            file=sys.stderr,
        )
        return EXIT_COVER_TOO_SMALL
    write_image(args.out, stego)
    print(f"bits_embedded={report.bits_embedded}")
    print(f"pixels_whitened={report.pixels_whitened}")
    print(f"pixels_adjusted={report.pixels_adjusted}")
    print(f"capacity_used={report.capacity_used:.6f}")
    return EXIT_OK


def cmd_extract(args) -> int:
    key = _resolve_key(args)
    stego = read_image(args.stego)
    message = extract(stego, key)
    with open(args.out, "wb") as fh:
        fh.write(message)
    print(f"recovered_bytes={len(message)}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    cover = read_image(args.cover)
    stego = read_image(args.stego)
    report = compare(cover, stego, args.cmax)
    psnr_text = "inf" if report.psnr == float("inf") else f"{report.psnr:.4f}"
    print("mse,rmse,psnr_db,ncc,hist_delta_r,hist_delta_g,hist_delta_b,c_max")
    print(
        f"{report.mse:.4f},{report.rmse:.4f},{psnr_text},{report.ncc:.4f},"
        f"{report.hist_delta_r},{report.hist_delta_g},{report.hist_delta_b},{report.c_max}"
    )
    return EXIT_OK


def cmd_bench(args) -> int:
    key = _resolve_key(args)
    try:
        written = run_all(
            args.corpus,
            args.out,
            key,
            args.seed,
            payload_sizes=args.payload_bytes,
            dims=args.dims,
            c_max_mode=args.cmax,
            timing=args.timing,
        )
    except FileNotFoundError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_IO
    for filename in sorted(written):
        print(f"wrote {written[filename]}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="glmstego",
        description="Hide encrypted payloads in the blue channel of RGB images "
        "by parity (gray-level) modification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    key_help = f"secret key string (default: ${KEY_ENV_VAR})"

    p = sub.add_parser("embed", help="hide a payload file in a cover image")
    p.add_argument("--cover", required=True, help="cover image (.png or .ppm)")
    p.add_argument("--in", dest="in_path", required=True, help="payload file to hide")
    p.add_argument("--out", required=True, help="stego image to write (.png or .ppm)")
    p.add_argument("--key", help=key_help)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("extract", help="recover a payload from a stego image")
    p.add_argument("--stego", required=True, help="stego image to read")
    p.add_argument("--out", required=True, help="file to write the recovered payload to")
    p.add_argument("--key", help=key_help)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("analyze", help="print fidelity metrics for a cover/stego pair")
    p.add_argument("--cover", required=True)
    p.add_argument("--stego", required=True)
    p.add_argument("--cmax", choices=C_MAX_MODES, default="paper",
                   help="PSNR peak: max intensity of both images, or fixed 255")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser(
        "bench",
        help="run the three benchmark experiments over an image corpus",
        description="Embeds seeded random payloads across a corpus and writes "
        "by_image.csv, by_payload.csv, and by_dims.csv. The by-image table uses "
        "the largest --payload-bytes value, the dimension sweep the smallest; "
        "payloads are clamped to capacity and rows record the clamped size.",
    )
    p.add_argument("--corpus", required=True, help="directory of .png/.ppm cover images")
    p.add_argument("--out", required=True, help="directory to write the CSV tables into")
    p.add_argument("--key", help=key_help)
    p.add_argument("--seed", type=_nonneg_int, default=0, help="payload generator seed (default 0)")
    p.add_argument(
        "--payload-bytes", type=_nonneg_int, action="append", metavar="N",
        help=f"payload size for the sweep; repeatable (default {list(DEFAULT_PAYLOAD_BYTES)})",
    )
    p.add_argument(
        "--dims", type=_parse_dims, action="append", metavar="WxH",
        help="target size for the dimension sweep; repeatable "
        f"(default {['x'.join(map(str, d)) for d in DEFAULT_DIMS]})",
    )
    p.add_argument("--cmax", choices=C_MAX_MODES, default="paper",
                   help="PSNR peak: max intensity of both images, or fixed 255")
    p.add_argument(
        "--timing", action="store_true",
        help="fill elapsed_ms with wall-clock timings (breaks byte-reproducibility)",
    )
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EmptyKey as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_EMPTY_KEY
    except CoverTooSmall as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_COVER_TOO_SMALL
    except CorruptHeader as exc:
        print(f"extraction failed: {exc}", file=sys.stderr)
        return EXIT_CORRUPT_HEADER
    except DimensionMismatch as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_DIMENSION_MISMATCH
    except (StegoError, OSError) as exc:
        # unsupported formats, zero-energy analysis inputs, file errors
        print(str(exc), file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
