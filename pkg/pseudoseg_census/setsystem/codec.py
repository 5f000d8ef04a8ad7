"""
Delta codec for set families.

Frame: n and m as fixed-width unsigned headers, the first row of the greedy
order as n raw bits, then one record per later row: the pointer j-1, the
distance t and the t elements (e-1) of the symmetric difference with row j,
in increasing order. All fields are big-endian, most significant bit first.
"""

import logging
from dataclasses import dataclass

import numpy as np

from ..exceptions import MalformedStream
from .family import SetFamily, mask_elements
from .packing import greedy_ordering


logger = logging.getLogger(__name__)

HEADER_BITS = 64


def ceil_log2(value):
    """Bits needed to write any integer in [0, value - 1]; 0 for value <= 1."""
    return (value - 1).bit_length() if value > 1 else 0


def record_widths(n, m):
    """(pointer, count, element) field widths in bits."""
    return ceil_log2(m), ceil_log2(n + 1), ceil_log2(n)


def codec_bit_bound(n, m, deltas, header_bits=HEADER_BITS):
    """
    Exact bit length of the encoding with the given greedy deltas.

    Returns:
        int: 2 * header + n + (m-1)(ceil log2 m + ceil log2(n+1))
        + ceil log2 n * sum(deltas).
    """
    pointer_bits, count_bits, element_bits = record_widths(n, m)
    return (
        2 * header_bits
        + n
        + (m - 1) * (pointer_bits + count_bits)
        + element_bits * sum(deltas)
    )


def _field(value, width):
    return format(value, f'0{width}b') if width else ''


@dataclass(frozen=True)
class CodecOutput:
    """
    Encoded set family.

    Attributes:
        bitstream (str): '0'/'1' characters.
        bit_length (int): len(bitstream).
        header (tuple): (n, m).
    """

    bitstream: str
    bit_length: int
    header: tuple

    def to_bytes(self):
        """Bitstream packed into bytes, zero padded to a byte boundary."""
        bits = np.frombuffer(self.bitstream.encode('ascii'), dtype=np.uint8) - ord('0')
        return np.packbits(bits).tobytes()

    @classmethod
    def from_bytes(cls, data, header_bits=HEADER_BITS):
        """
        Recover the exact bitstream from packed bytes.

        Raises:
            MalformedStream: If the stream is truncated or the padding is not zero.
        """
        bits = ''.join(map(str, np.unpackbits(np.frombuffer(data, dtype=np.uint8))))
        family, consumed = _parse(bits, header_bits)
        padding = bits[consumed:]
        if len(padding) >= 8 or set(padding) - {'0'}:
            raise MalformedStream(f"{len(padding)} trailing bits after the last record")
        return cls(bits[:consumed], consumed, (family.n, family.m))


def encode(family, header_bits=HEADER_BITS):
    """
    Encode a family along its greedy farthest-first order.

    Args:
        family (SetFamily): The family.
        header_bits (int): Width of the n and m headers.

    Returns:
        CodecOutput: The encoding; bit_length equals codec_bit_bound.
    """
    n, m = family.n, family.m
    pointer_bits, count_bits, element_bits = record_widths(n, m)
    ordering = greedy_ordering(family)
    rows = [family.rows[index] for index in ordering.order]

    parts = [_field(n, header_bits), _field(m, header_bits)]
    parts.append(''.join('1' if (rows[0] >> e) & 1 else '0' for e in range(n)))
    for i in range(1, m):
        j = ordering.pointers[i - 1]
        difference = mask_elements(rows[i] ^ rows[j - 1])
        parts.append(_field(j - 1, pointer_bits))
        parts.append(_field(len(difference), count_bits))
        parts.extend(_field(e - 1, element_bits) for e in difference)

    bitstream = ''.join(parts)
    logger.debug("encoded", extra={'n': n, 'm': m, 'bits': len(bitstream)})
    return CodecOutput(bitstream, len(bitstream), (n, m))


class _Reader:
    def __init__(self, bits):
        self.bits = bits
        self.offset = 0

    def read(self, width):
        if self.offset + width > len(self.bits):
            raise MalformedStream(f"stream truncated at bit {self.offset}")
        chunk = self.bits[self.offset:self.offset + width]
        self.offset += width
        return int(chunk, 2) if width else 0


def _parse(bits, header_bits):
    if set(bits) - {'0', '1'}:
        raise MalformedStream("bitstream holds characters other than 0 and 1")
    reader = _Reader(bits)
    n = reader.read(header_bits)
    m = reader.read(header_bits)
    if n < 1 or m < 1:
        raise MalformedStream(f"header n={n}, m={m} must both be positive")
    if n + (m - 1) * (ceil_log2(m) + ceil_log2(n + 1)) > len(bits):
        raise MalformedStream(f"header n={n}, m={m} exceeds the stream length")

    pointer_bits, count_bits, element_bits = record_widths(n, m)
    first = 0
    for e in range(n):
        if reader.read(1):
            first |= 1 << e
    rows = [first]
    for i in range(1, m):
        j = reader.read(pointer_bits) + 1
        if j > i:
            raise MalformedStream(f"record {i + 1} points forward to row {j}")
        t = reader.read(count_bits)
        if t > n:
            raise MalformedStream(f"record {i + 1} lists {t} elements of {n}")
        difference = 0
        previous = -1
        for _ in range(t):
            e = reader.read(element_bits)
            if e >= n or e <= previous:
                raise MalformedStream(f"record {i + 1} has a bad element index {e + 1}")
            difference |= 1 << e
            previous = e
        rows.append(rows[j - 1] ^ difference)

    return SetFamily(n, tuple(sorted(rows))), reader.offset


def decode(output, header_bits=HEADER_BITS):
    """
    Decode a CodecOutput.

    Args:
        output (CodecOutput): The encoding.

    Returns:
        SetFamily: The source family as a multiset, rows sorted by mask.

    Raises:
        MalformedStream: On any inconsistency or trailing bits.
    """
    family, consumed = _parse(output.bitstream, header_bits)
    if consumed != len(output.bitstream):
        raise MalformedStream(f"{len(output.bitstream) - consumed} trailing bits")
    return family
