import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from glmstego import (
    LengthNotByteAligned,
    MessageTooLarge,
    TruncatedFrame,
    bits_to_bytes,
    bytes_to_bits,
    frame_payload,
    unframe_payload,
)
from reference import ref_bits


def test_single_byte_msb_first():
    assert bytes_to_bits(b"\x41").tolist() == [0, 1, 0, 0, 0, 0, 0, 1]


def test_empty_input_gives_empty_bits():
    assert bytes_to_bits(b"").size == 0


def test_all_ones_byte():
    assert bytes_to_bits(b"\xff").tolist() == [1] * 8


@given(st.binary(max_size=64))
def test_bit_expansion_matches_reference(data):
    assert bytes_to_bits(data).tolist() == ref_bits(data)


def test_bits_to_bytes_inverts_known_byte():
    assert bits_to_bytes([0, 1, 0, 0, 0, 0, 0, 1]) == b"\x41"


def test_bits_to_bytes_empty():
    assert bits_to_bytes(np.array([], dtype=np.uint8)) == b""


def test_bits_to_bytes_rejects_ragged_length():
    with pytest.raises(LengthNotByteAligned):
        bits_to_bytes([0] * 9)


def test_bits_to_bytes_rejects_non_binary_values():
    with pytest.raises(ValueError):
        bits_to_bytes([0, 2] * 4)


@given(st.binary(max_size=128))
def test_bytes_bits_roundtrip(data):
    assert bits_to_bytes(bytes_to_bits(data)) == data


def test_frame_of_empty_message_is_32_zero_bits():
    frame = frame_payload(b"")
    assert frame.tolist() == [0] * 32


def test_frame_of_single_byte():
    # 32-bit big-endian count of 1, then the message bits
    expected = [0] * 31 + [1] + [0, 1, 0, 0, 0, 0, 0, 1]
    frame = frame_payload(b"\x41")
    assert frame.size == 40
    assert frame.tolist() == expected


def test_unframe_empty_frame():
    assert unframe_payload([0] * 32) == b""


def test_unframe_single_byte_frame():
    assert unframe_payload(frame_payload(b"\x41")) == b"\x41"


def test_unframe_rejects_short_body():
    header_two_bytes = bytes_to_bits(b"\x00\x00\x00\x02")
    frame = np.concatenate([header_two_bytes, np.zeros(8, dtype=np.uint8)])
    with pytest.raises(TruncatedFrame):
        unframe_payload(frame)


def test_unframe_rejects_missing_header():
    with pytest.raises(TruncatedFrame):
        unframe_payload([0] * 31)


def test_unframe_ignores_trailing_bits():
    frame = np.concatenate([frame_payload(b"hi"), np.ones(5, dtype=np.uint8)])
    assert unframe_payload(frame) == b"hi"


def test_oversized_message_rejected():
    class HugeLength(bytes):
        # pretends to be 2**32 bytes without allocating them
        def __len__(self):
            return 2**32

    with pytest.raises(MessageTooLarge):
        frame_payload(HugeLength(b"x"))


@given(st.binary(max_size=256))
def test_frame_roundtrip(message):
    assert unframe_payload(frame_payload(message)) == message


@given(st.binary(max_size=256))
def test_frame_length_is_header_plus_body(message):
    assert frame_payload(message).size == 32 + 8 * len(message)
