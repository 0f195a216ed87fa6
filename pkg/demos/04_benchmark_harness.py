"""The benchmark harness end to end
===================================

Builds a small corpus of synthetic covers in a temp directory, runs the
three standard experiments (per-image table, payload sweep, dimension
sweep), and prints the resulting CSVs. Identical seeds always give
byte-identical tables, which is what makes results comparable across
machines and runs. The same thing is available from the shell as
`glmstego bench --corpus DIR --out DIR --key K --seed N`.
"""

import tempfile
from pathlib import Path

import numpy as np

from glmstego import RgbImage, write_image
from glmstego.bench import run_all

with tempfile.TemporaryDirectory() as tmp:
    corpus = Path(tmp) / "corpus"
    corpus.mkdir()
    rng = np.random.default_rng(3)
    for name in ("clouds", "gravel", "moss"):
        img = RgbImage(rng.integers(0, 256, size=(96, 96, 3)))
        write_image(corpus / f"{name}.png", img)

    written = run_all(
        corpus,
        Path(tmp) / "results",
        key=b"bench demo",
        seed=42,
        payload_sizes=[256, 512, 1024],
        dims=[(48, 48), (64, 64), (96, 96)],
    )

    for filename, path in sorted(written.items()):
        print(f"==> {filename}")
        print(Path(path).read_text())
