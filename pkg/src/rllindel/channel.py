"""Deterministic, seedable single insertion/deletion channel.

All randomness comes from splitmix64, a public-domain 64-bit mixing generator
(state advances by the golden-gamma constant; outputs pass through a two-round
xor-multiply finalizer). Outputs are therefore identical across platforms,
processes, and runs. Positions are drawn by rejection sampling so every legal
position is exactly equally likely.

Campaigns derive one seed per trial with trial_seed, which is the
(index+1)-th raw output of the stream seeded with the base seed but is
computed in O(1), so trials are independent of execution order and may be
distributed across workers.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bitseq import BitSeq

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

INSERTION = "insertion"
DELETION = "deletion"


def mix64(x: int) -> int:
    """The splitmix64 output finalizer."""
    x &= _MASK
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK
    return x ^ (x >> 31)


class Stream:
    """A splitmix64 stream: state += golden gamma, output = mix64(state)."""

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK

    def next(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        return mix64(self._state)

    def below(self, bound: int) -> int:
        """Uniform draw from [0, bound) via rejection sampling."""
        if bound < 1:
            raise ValueError(f"bound must be positive (got {bound})")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            u = self.next()
            if u < limit:
                return u % bound


def trial_seed(base_seed: int, index: int) -> int:
    """Per-trial seed: the (index+1)-th output of the stream seeded with base_seed."""
    if index < 0:
        raise ValueError(f"trial index must be non-negative (got {index})")
    return mix64((base_seed + (index + 1) * _GOLDEN) & _MASK)


@dataclass(frozen=True)
class ChannelEvent:
    """One channel corruption: an insertion or a deletion at a 1-based position.

    For an insertion the new symbol is placed before `position`, whose valid
    range is [1, len+1]; for a deletion the range is [1, len]. The symbol is
    meaningful for insertions only and is None for deletions.
    """

    kind: str
    position: int
    symbol: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in (INSERTION, DELETION):
            raise ValueError(f"unknown event kind {self.kind!r}")
        if self.position < 1:
            raise ValueError(f"position must be at least 1 (got {self.position})")
        if self.kind == INSERTION:
            if self.symbol not in (0, 1):
                raise ValueError(f"insertion symbol must be 0 or 1 (got {self.symbol!r})")
        elif self.symbol is not None:
            raise ValueError("deletion events carry no symbol")


def apply_event(s: BitSeq, e: ChannelEvent) -> BitSeq:
    """Apply one event; the output length differs from |s| by exactly 1."""
    data = s.tobytes()
    length = len(data)
    i = e.position - 1
    if e.kind == INSERTION:
        if not 1 <= e.position <= length + 1:
            raise ValueError(
                f"insertion position {e.position} is outside [1, {length + 1}]"
            )
        return BitSeq._wrap(data[:i] + bytes([e.symbol]) + data[i:])
    if not 1 <= e.position <= length:
        raise ValueError(f"deletion position {e.position} is outside [1, {length}]")
    return BitSeq._wrap(data[:i] + data[i + 1 :])


def random_event(length: int, seed: int, kind: str | None = None) -> ChannelEvent:
    """Draw one event for a word of the given length, fully determined by (length, seed).

    The kind is drawn uniformly unless forced by the `kind` argument (in which
    case the kind draw is skipped and only position/symbol are consumed from
    the stream); the position is uniform over the valid range for the kind;
    insertion symbols are uniform over {0, 1}.
    """
    if length < 1:
        raise ValueError(f"length must be at least 1 (got {length})")
    stream = Stream(seed)
    if kind is None:
        kind = DELETION if stream.next() & 1 else INSERTION
    elif kind not in (INSERTION, DELETION):
        raise ValueError(f"unknown event kind {kind!r}")
    if kind == INSERTION:
        position = 1 + stream.below(length + 1)
        return ChannelEvent(INSERTION, position, stream.next() & 1)
    return ChannelEvent(DELETION, 1 + stream.below(length))


def log_line(e: ChannelEvent) -> str:
    """Event-log form: `kind position symbol`, with `-` for deletion symbols."""
    symbol = "-" if e.symbol is None else str(e.symbol)
    return f"{e.kind} {e.position} {symbol}"
