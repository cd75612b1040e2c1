"""Constrained front-end: sequence-replacement encoding plus the NRZI transform.

The front-end turns a message of length k-1 into a word of length k whose
zero-runs are all shorter than r (ones unconstrained), by repeatedly excising
the forbidden word 0^r 1 and appending a little-endian position pointer; the
number of replacements is recorded in a self-delimiting tail. NRZI then turns
the zero-run constraint into a plain run-length constraint: a word with zero
runs < r maps to a word with all runs <= r.

Encoding bookkeeping: each replacement shrinks the working word by exactly one
symbol, so after s replacements the working word has k-1-s symbols and the
output x = v 1 tail(s) has length k exactly. Two replacement cases exist. In
the regular case the forbidden word sits wholly inside the working word; its
r+1 symbols are removed and the r-symbol pointer le_encode(p+3, r) is appended
(the +3 keeps pointer values >= 4). In the end case the working word ends in
0^r and the forbidden word's trailing 1 is the appended sentinel; the r zeros
are removed and the (r-1)-symbol marker 1 0^(r-2) is appended. Markers decode
to values 2 or 3, pointers to values >= 4, so the decoder can always tell the
two apart.

Decodability bound: the decoder parses the replacement count from the right,
greedily stripping (1^(r-1) 0) blocks and then zeros. For k >= 2^r + r - 6
that greedy parse is ambiguous (an exhaustive round-trip sweep finds messages
whose encodings strip a spurious block), so FrontParams rejects those lengths.
k <= 2^r + r - 7 round-trips exhaustively for every tested r.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bitseq import BitSeq, le_encode, max_zero_run
from .errors import DataError, InvariantError, ValidationError

_FORBIDDEN_ONE = b"\x01"


@dataclass(frozen=True)
class FrontParams:
    """Front-end shape: output length k and target maximum run-length r."""

    k: int
    r: int

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValidationError(f"run limit must be at least 2 (got r={self.r})")
        if self.k < 2:
            raise ValidationError(f"output length must be at least 2 (got k={self.k})")
        cap = (1 << self.r) + self.r - 5
        if self.k > cap:
            raise ValidationError(
                f"k={self.k} exceeds the feasibility bound 2^r + r - 5 = {cap} for r={self.r}"
            )
        if self.k > cap - 2:
            raise ValidationError(
                f"k={self.k} with r={self.r} is rejected: the replacement-count parse "
                f"is ambiguous for k > 2^r + r - 7 = {cap - 2} and the exhaustive "
                f"round-trip check fails"
            )


def omega(s: int, t: int) -> BitSeq:
    """Self-delimiting tail encoding the replacement count s.

    Returns 0^(s - (t+1)v) (1^t 0)^v with v = floor(s / (t+1)); the output
    length is exactly s, and its zero-runs never exceed t.
    """
    if t < 2:
        raise ValueError(f"tail parameter must be at least 2 (got t={t})")
    if s < 0:
        raise ValueError(f"replacement count must be non-negative (got s={s})")
    v, rem = divmod(s, t + 1)
    return BitSeq._wrap(b"\x00" * rem + (b"\x01" * t + b"\x00") * v)


def _wi_encode(data: bytes, k: int, r: int) -> bytes:
    pattern = b"\x00" * r + _FORBIDDEN_ONE
    v = bytearray(data)
    s = 0
    while True:
        idx = bytes(v + _FORBIDDEN_ONE).find(pattern)
        if idx < 0:
            break
        if s >= k:
            raise InvariantError(
                f"replacement loop overran s={s} at (k={k}, r={r}); parameters must be rejected"
            )
        p = idx + 1
        if p + r <= len(v):
            del v[idx : idx + r + 1]
            v.extend(le_encode(p + 3, r).tobytes())
        else:
            del v[idx:]
            v.append(1)
            v.extend(b"\x00" * (r - 2))
        s += 1
    out = bytes(v) + _FORBIDDEN_ONE + omega(s, r - 1).tobytes()
    if len(out) != k:
        raise InvariantError(f"encoded length {len(out)} != k={k} at (k={k}, r={r})")
    return out


def _wi_decode(data: bytes, k: int, r: int) -> bytes:
    if max_zero_run(BitSeq._wrap(data)) > r - 1:
        raise DataError(f"word violates the zero-run constraint for r={r}")
    block = b"\x01" * (r - 1) + b"\x00"
    i = len(data)
    nblocks = 0
    while i >= r and data[i - r : i] == block:
        i -= r
        nblocks += 1
    a = 0
    while i >= 1 and data[i - 1] == 0:
        i -= 1
        a += 1
    if i == 0:
        raise DataError("no sentinel symbol found while parsing the replacement count")
    s = a + r * nblocks
    v = bytearray(data[: i - 1])
    marker = b"\x01" + b"\x00" * (r - 2)
    for step in range(s, 0, -1):
        if len(v) >= r:
            c = 0
            for j, bit in enumerate(v[-r:]):
                c |= bit << j
            p = c - 3
            if 1 <= p <= len(v) - r + 1:
                del v[-r:]
                v[p - 1 : p - 1] = b"\x00" * r + _FORBIDDEN_ONE
                continue
        if len(v) >= r - 1 and bytes(v[len(v) - (r - 1) :]) == marker:
            del v[len(v) - (r - 1) :]
            v.extend(b"\x00" * r)
            continue
        raise DataError(
            f"undo step {step}: trailing symbols match neither a valid pointer nor the end marker"
        )
    return bytes(v)


def wi_encode(u: BitSeq, fp: FrontParams) -> BitSeq:
    """Encode a message of length k-1 into a zero-run-constrained word of length k."""
    if len(u) != fp.k - 1:
        raise DataError(f"message length {len(u)} != k - 1 = {fp.k - 1}")
    return BitSeq._wrap(_wi_encode(u.tobytes(), fp.k, fp.r))


def wi_decode(x: BitSeq, fp: FrontParams) -> BitSeq:
    """Invert wi_encode; raises DataError on words the encoder cannot emit."""
    if len(x) != fp.k:
        raise DataError(f"word length {len(x)} != k = {fp.k}")
    return BitSeq._wrap(_wi_decode(x.tobytes(), fp.k, fp.r))


def nrzi_encode(x: BitSeq) -> BitSeq:
    """Transition coding: y_1 = x_1, y_i = y_(i-1) xor x_i."""
    out = bytearray()
    prev = 0
    for b in x.tobytes():
        prev ^= b
        out.append(prev)
    return BitSeq._wrap(bytes(out))


def nrzi_decode(y: BitSeq) -> BitSeq:
    """Inverse transition coding: x_1 = y_1, x_i = y_(i-1) xor y_i."""
    out = bytearray()
    prev = 0
    for b in y.tobytes():
        out.append(prev ^ b)
        prev = b
    return BitSeq._wrap(bytes(out))


def front_encode(u: BitSeq, fp: FrontParams) -> BitSeq:
    """Message to run-length-limited word: sequence replacement, then NRZI."""
    return nrzi_encode(wi_encode(u, fp))


def front_decode(y: BitSeq, fp: FrontParams) -> BitSeq:
    """Inverse of front_encode."""
    if len(y) != fp.k:
        raise DataError(f"word length {len(y)} != k = {fp.k}")
    return wi_decode(nrzi_decode(y), fp)
