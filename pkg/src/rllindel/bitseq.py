"""Immutable binary sequences with run statistics and little-endian coding.

BitSeq is the value type every other module builds on. The empty sequence is
a valid word (the null word) and all run statistics of it are 0. Python-level
indexing and slicing are ordinary 0-based operations; positions quoted in
error messages and logs are 1-based to stay comparable with printed vectors.

Text form: the ASCII characters '0'/'1' with no separators, one sequence per
line; an empty line denotes the null word.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Union

from .errors import DataError

BitsLike = Union["BitSeq", str, bytes, bytearray, Iterable[int]]

_TO_ASCII = bytes.maketrans(b"\x00\x01", b"01")
_FROM_ASCII = bytes.maketrans(b"01", b"\x00\x01")


class BitSeq:
    """An immutable sequence of binary symbols, one byte per symbol."""

    __slots__ = ("_data",)

    def __init__(self, bits: BitsLike = b"") -> None:
        if isinstance(bits, BitSeq):
            self._data = bits._data
        elif isinstance(bits, str):
            self._data = _from_text(bits, ValueError)
        elif isinstance(bits, (bytes, bytearray)):
            data = bytes(bits)
            _check_symbols(data, ValueError)
            self._data = data
        else:
            self._data = _from_ints(bits)

    @classmethod
    def parse(cls, text: str) -> "BitSeq":
        """Parse the text form, raising DataError on any foreign character."""
        return cls._wrap(_from_text(text, DataError))

    @classmethod
    def _wrap(cls, data: bytes) -> "BitSeq":
        seq = object.__new__(cls)
        seq._data = data
        return seq

    def tobytes(self) -> bytes:
        """The symbols as raw bytes with values 0 and 1."""
        return self._data

    def __len__(self) -> int:
        return len(self._data)

    def __iter__(self) -> Iterator[int]:
        return iter(self._data)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return BitSeq._wrap(self._data[index])
        return self._data[index]

    def __add__(self, other: "BitSeq") -> "BitSeq":
        if not isinstance(other, BitSeq):
            return NotImplemented
        return BitSeq._wrap(self._data + other._data)

    def __mul__(self, count: int) -> "BitSeq":
        if not isinstance(count, int):
            return NotImplemented
        return BitSeq._wrap(self._data * count)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitSeq):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __str__(self) -> str:
        return self._data.translate(_TO_ASCII).decode("ascii")

    def __repr__(self) -> str:
        return f"BitSeq({str(self)!r})"


def _from_text(text: str, err: type) -> bytes:
    try:
        data = text.encode("ascii").translate(_FROM_ASCII)
    except UnicodeEncodeError as exc:
        raise err(
            f"invalid character {text[exc.start]!r} at position {exc.start + 1}"
        ) from None
    if data.translate(None, b"\x00\x01"):
        for pos, value in enumerate(data, start=1):
            if value > 1:
                raise err(f"invalid character {text[pos - 1]!r} at position {pos}")
    return data


def _from_ints(bits: Iterable[int]) -> bytes:
    out = bytearray()
    for pos, bit in enumerate(bits, start=1):
        if bit != 0 and bit != 1:
            raise ValueError(f"symbol at position {pos} is {bit!r}, expected 0 or 1")
        out.append(bit)
    return bytes(out)


def _check_symbols(data: bytes, err: type) -> None:
    if data.translate(None, b"\x00\x01"):
        for pos, value in enumerate(data, start=1):
            if value > 1:
                raise err(f"symbol at position {pos} is {value}, expected 0 or 1")


def max_run_length(s: BitSeq) -> int:
    """Length of the longest block of equal consecutive symbols (0 for the null word)."""
    best = 0
    cur = 0
    prev = -1
    for b in s._data:
        if b == prev:
            cur += 1
        else:
            prev = b
            cur = 1
        if cur > best:
            best = cur
    return best


def max_zero_run(s: BitSeq) -> int:
    """Length of the longest block of consecutive 0 symbols (0 if there are none)."""
    best = 0
    cur = 0
    for b in s._data:
        if b:
            cur = 0
        else:
            cur += 1
            if cur > best:
                best = cur
    return best


def is_rll(s: BitSeq, r: int) -> bool:
    """True iff no run in s is longer than r."""
    if r < 1:
        raise ValueError(f"run limit must be at least 1 (got r={r})")
    return max_run_length(s) <= r


def is_zero_constrained(s: BitSeq, r: int) -> bool:
    """True iff every run of zeros in s is shorter than r (ones unconstrained)."""
    if r < 2:
        raise ValueError(f"run limit must be at least 2 (got r={r})")
    return max_zero_run(s) <= r - 1


def le_encode(x: int, k: int) -> BitSeq:
    """The k-symbol little-endian form of x: x = sum of s_i * 2^(i-1).

    x must satisfy 0 <= x <= 2^k - 1.
    """
    if k < 1:
        raise ValueError(f"width must be at least 1 (got k={k})")
    if not 0 <= x < (1 << k):
        raise ValueError(f"value x={x} is outside [0, 2^{k} - 1]")
    return BitSeq._wrap(bytes((x >> i) & 1 for i in range(k)))


def le_decode(s: BitSeq) -> int:
    """Inverse of le_encode; the null word has no integer value."""
    if len(s) == 0:
        raise DataError("cannot decode an integer from the null word")
    total = 0
    for i, bit in enumerate(s._data):
        total |= bit << i
    return total
