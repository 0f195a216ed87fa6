import os
import subprocess
import sys

import numpy as np
import pytest
from PIL import Image

from glmstego import RgbImage, read_image, write_image


def run_cli(*argv, env_key=None):
    env = dict(os.environ)
    env.pop("STEGO_KEY", None)
    if env_key is not None:
        env["STEGO_KEY"] = env_key
    return subprocess.run(
        [sys.executable, "-m", "glmstego", *map(str, argv)],
        capture_output=True,
        text=True,
        env=env,
    )


@pytest.fixture
def cover_path(tmp_path):
    rng = np.random.default_rng(0)
    path = tmp_path / "cover.png"
    write_image(path, RgbImage(rng.integers(0, 256, size=(32, 32, 3))))
    return path


@pytest.fixture
def payload_path(tmp_path):
    path = tmp_path / "msg.bin"
    path.write_bytes(b"attack at dawn \x00\x01\x02")
    return path


def test_embed_extract_roundtrip(tmp_path, cover_path, payload_path):
    stego = tmp_path / "stego.png"
    out = tmp_path / "recovered.bin"
    r = run_cli("embed", "--cover", cover_path, "--in", payload_path,
                "--out", stego, "--key", "sekrit")
    assert r.returncode == 0, r.stderr
    assert "bits_embedded=" in r.stdout
    assert "capacity_used=" in r.stdout

    r = run_cli("extract", "--stego", stego, "--out", out, "--key", "sekrit")
    assert r.returncode == 0, r.stderr
    assert out.read_bytes() == payload_path.read_bytes()


def test_embed_reads_key_from_environment(tmp_path, cover_path, payload_path):
    stego = tmp_path / "stego.png"
    out = tmp_path / "back.bin"
    r = run_cli("embed", "--cover", cover_path, "--in", payload_path,
                "--out", stego, env_key="envkey")
    assert r.returncode == 0, r.stderr
    r = run_cli("extract", "--stego", stego, "--out", out, "--key", "envkey")
    assert r.returncode == 0
    assert out.read_bytes() == payload_path.read_bytes()


def test_key_flag_wins_over_environment(tmp_path, cover_path, payload_path):
    stego = tmp_path / "stego.png"
    out = tmp_path / "back.bin"
    run_cli("embed", "--cover", cover_path, "--in", payload_path,
            "--out", stego, "--key", "flagkey", env_key="envkey")
    r = run_cli("extract", "--stego", stego, "--out", out, "--key", "flagkey")
    assert r.returncode == 0
    assert out.read_bytes() == payload_path.read_bytes()


def test_missing_key_exits_4(cover_path, payload_path, tmp_path):
    r = run_cli("embed", "--cover", cover_path, "--in", payload_path,
                "--out", tmp_path / "s.png")
    assert r.returncode == 4


def test_oversized_payload_exits_2_and_prints_capacity(tmp_path, cover_path):
    big = tmp_path / "big.bin"
    big.write_bytes(bytes(2000))  # 32x32 capacity is 124 bytes
    r = run_cli("embed", "--cover", cover_path, "--in", big,
                "--out", tmp_path / "s.png", "--key", "k")
    assert r.returncode == 2
    assert "capacity" in r.stderr


def test_missing_cover_exits_3(tmp_path, payload_path):
    r = run_cli("embed", "--cover", tmp_path / "absent.png", "--in", payload_path,
                "--out", tmp_path / "s.png", "--key", "k")
    assert r.returncode == 3


def test_jpeg_cover_exits_3(tmp_path, payload_path):
    jpg = tmp_path / "c.jpg"
    Image.new("RGB", (32, 32), (1, 2, 3)).save(jpg, format="JPEG")
    r = run_cli("embed", "--cover", jpg, "--in", payload_path,
                "--out", tmp_path / "s.png", "--key", "k")
    assert r.returncode == 3
    assert "lossy" in r.stderr


def test_wrong_key_never_recovers_payload(tmp_path, cover_path, payload_path):
    stego = tmp_path / "stego.png"
    out = tmp_path / "back.bin"
    run_cli("embed", "--cover", cover_path, "--in", payload_path,
            "--out", stego, "--key", "rightkey")
    r = run_cli("extract", "--stego", stego, "--out", out, "--key", "wrongkey")
    if r.returncode == 0:
        assert out.read_bytes() != payload_path.read_bytes()
    else:
        assert r.returncode == 5


def test_extract_from_plain_image_never_silently_succeeds(tmp_path):
    plain = tmp_path / "plain.png"
    write_image(plain, RgbImage(np.zeros((4, 4, 3), dtype=np.uint8)))
    r = run_cli("extract", "--stego", plain, "--out", tmp_path / "o.bin", "--key", "k")
    assert r.returncode == 5


def test_analyze_identical_pair(cover_path, tmp_path):
    r = run_cli("analyze", "--cover", cover_path, "--stego", cover_path)
    assert r.returncode == 0
    header, row = r.stdout.strip().split("\n")
    assert header.startswith("mse,rmse,psnr_db,ncc")
    fields = row.split(",")
    assert fields[0] == "0.0000"
    assert fields[2] == "inf"
    assert fields[3] == "1.0000"


def test_analyze_zero_energy_image_exits_3(tmp_path):
    black = tmp_path / "black.png"
    write_image(black, RgbImage(np.zeros((8, 8, 3), dtype=np.uint8)))
    r = run_cli("analyze", "--cover", black, "--stego", black)
    assert r.returncode == 3
    assert "zero energy" in r.stderr


def test_analyze_embed_output_shows_untouched_red_green(tmp_path, cover_path, payload_path):
    stego = tmp_path / "s.png"
    run_cli("embed", "--cover", cover_path, "--in", payload_path,
            "--out", stego, "--key", "k")
    r = run_cli("analyze", "--cover", cover_path, "--stego", stego)
    assert r.returncode == 0
    row = r.stdout.strip().split("\n")[1].split(",")
    hist_delta_r, hist_delta_g = row[4], row[5]
    assert (hist_delta_r, hist_delta_g) == ("0", "0")


def test_analyze_dimension_mismatch_exits_6(tmp_path, cover_path):
    other = tmp_path / "other.png"
    write_image(other, RgbImage(np.zeros((8, 8, 3), dtype=np.uint8) + 1))
    r = run_cli("analyze", "--cover", cover_path, "--stego", other)
    assert r.returncode == 6


def test_usage_error_exits_64():
    r = run_cli("embed", "--bogus-flag")
    assert r.returncode == 64


def test_unknown_subcommand_exits_64():
    r = run_cli("frobnicate")
    assert r.returncode == 64


def test_negative_bench_arguments_exit_64(tmp_path):
    r = run_cli("bench", "--corpus", tmp_path, "--out", tmp_path, "--key", "k",
                "--payload-bytes", "-5")
    assert r.returncode == 64
    r = run_cli("bench", "--corpus", tmp_path, "--out", tmp_path, "--key", "k",
                "--seed", "-1")
    assert r.returncode == 64
    r = run_cli("bench", "--corpus", tmp_path, "--out", tmp_path, "--key", "k",
                "--dims", "16by16")
    assert r.returncode == 64


def test_bench_deterministic_and_complete(tmp_path):
    rng = np.random.default_rng(2)
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    write_image(corpus / "a.png", RgbImage(rng.integers(0, 256, size=(24, 24, 3))))
    write_image(corpus / "b.ppm", RgbImage(rng.integers(0, 256, size=(16, 48, 3))))

    args = ["bench", "--corpus", corpus, "--key", "bk", "--seed", 11,
            "--payload-bytes", 16, "--payload-bytes", 48,
            "--dims", "12x12", "--dims", "20x16"]
    r1 = run_cli(*args, "--out", tmp_path / "o1")
    r2 = run_cli(*args, "--out", tmp_path / "o2")
    assert r1.returncode == 0, r1.stderr
    assert r2.returncode == 0

    for name in ("by_image.csv", "by_payload.csv", "by_dims.csv"):
        f1 = (tmp_path / "o1" / name).read_bytes()
        f2 = (tmp_path / "o2" / name).read_bytes()
        assert f1 == f2
        assert f1.startswith(b"# seed=11\n")
        assert b"image_name,width,height,payload_bytes" in f1


def test_bench_empty_corpus_exits_3(tmp_path):
    empty = tmp_path / "empty"
    empty.mkdir()
    r = run_cli("bench", "--corpus", empty, "--out", tmp_path / "o", "--key", "k")
    assert r.returncode == 3


def test_stego_written_losslessly_reextracts(tmp_path, cover_path, payload_path):
    # file cycle must not perturb a single pixel
    stego = tmp_path / "s.ppm"
    run_cli("embed", "--cover", cover_path, "--in", payload_path,
            "--out", stego, "--key", "k2")
    reread = read_image(stego)
    out = tmp_path / "o.bin"
    r = run_cli("extract", "--stego", stego, "--out", out, "--key", "k2")
    assert r.returncode == 0
    assert out.read_bytes() == payload_path.read_bytes()
    assert reread.pixels.dtype == np.uint8
