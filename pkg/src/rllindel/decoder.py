"""Single insertion/deletion correction and full pipeline inversion.

Because the coefficient sequence is strictly increasing, the single-deletion
balls of distinct codewords never intersect, so correcting one indel reduces
to a candidate search: re-insert (or re-delete) one symbol every possible way,
keep the candidates that land in the code, and demand that they all collapse
to one word. Candidate weights are evaluated incrementally from prefix and
shifted suffix sums, so a full correction costs O(n) instead of O(n^2); the
semantics are identical to enumerating every candidate word.

Candidates that are the same word through different edits (deleting any symbol
of a run, say) collapse silently; the code corrects codewords, not edit
positions. Two surviving candidates that are distinct words would contradict
the monotonicity guarantee and raise InvariantError.
"""
from __future__ import annotations

from .bitseq import BitSeq
from .code import CodeParams, _coefficients, is_codeword
from .errors import DataError, InvariantError, UncorrectableError
from .front import FrontParams, front_decode


def _insertion_candidates(cp, data: bytes) -> set[bytes]:
    """All codewords obtainable from data (length n-1) by inserting one symbol."""
    n = cp.n
    coeffs = _coefficients(cp.n, cp.r_hat, cp.d)
    # pre[j]: weight of the first j received symbols at their own positions
    pre = [0] * n
    acc = 0
    for j in range(1, n):
        if data[j - 1]:
            acc += coeffs[j - 1]
        pre[j] = acc
    # suf[i]: weight of received symbols i.. shifted one position right
    suf = [0] * (n + 2)
    acc = 0
    for t in range(n - 1, 0, -1):
        if data[t - 1]:
            acc += coeffs[t]
        suf[t] = acc
    out: set[bytes] = set()
    b, modulus = cp.b, cp.modulus
    for i in range(1, n + 1):
        base = pre[i - 1] + suf[i]
        if base % modulus == b:
            out.add(data[: i - 1] + b"\x00" + data[i - 1 :])
        if (base + coeffs[i - 1]) % modulus == b:
            out.add(data[: i - 1] + b"\x01" + data[i - 1 :])
    return out


def _deletion_candidates(cp, data: bytes) -> set[bytes]:
    """All codewords obtainable from data (length n+1) by deleting one symbol."""
    n = cp.n
    coeffs = _coefficients(cp.n, cp.r_hat, cp.d)
    pre = [0] * (n + 2)
    acc = 0
    for j in range(1, n + 1):
        if data[j - 1]:
            acc += coeffs[j - 1]
        pre[j] = acc
    # suf[j]: weight of received symbols j..n+1 shifted one position left
    suf = [0] * (n + 3)
    acc = 0
    for t in range(n + 1, 1, -1):
        if data[t - 1]:
            acc += coeffs[t - 2]
        suf[t] = acc
    out: set[bytes] = set()
    b, modulus = cp.b, cp.modulus
    for i in range(1, n + 2):
        if (pre[i - 1] + suf[i + 1]) % modulus == b:
            out.add(data[: i - 1] + data[i:])
    return out


def correct(cp: CodeParams, received: BitSeq) -> BitSeq:
    """Recover the transmitted codeword from a word one indel away (or intact)."""
    length = len(received)
    if length == cp.n:
        if is_codeword(cp, received):
            return received
        raise UncorrectableError(
            "received word has full length but is not a codeword"
        )
    if length == cp.n - 1:
        candidates = _insertion_candidates(cp, received.tobytes())
    elif length == cp.n + 1:
        candidates = _deletion_candidates(cp, received.tobytes())
    else:
        raise DataError(
            f"received length {length} is not within one symbol of n = {cp.n}"
        )
    if not candidates:
        raise UncorrectableError("no candidate codeword explains the received word")
    if len(candidates) > 1:
        raise InvariantError(
            f"{len(candidates)} distinct candidate codewords survive; the "
            f"coefficient sequence cannot be strictly increasing"
        )
    return BitSeq._wrap(candidates.pop())


def decode_message(cp: CodeParams, received: BitSeq) -> BitSeq:
    """Correct the received word, strip the parity part, invert the front-end."""
    z = correct(cp, received)
    return front_decode(z[cp.m :], FrontParams(cp.k, cp.r))
