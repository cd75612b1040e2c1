"""The congruence code and its systematic-like embedding encoder.

A codeword of length n is any word z whose weighted sum mu(z) = sum a_i z_i
is congruent to b modulo a_(n+1), where the strictly increasing coefficient
sequence is shaped by a parameter r_hat:

    a_i = 2^(i-1)              for i < r_hat
    a_i = d                    for i = r_hat  (d free within its range)
    a_i = 2^(i-2)              for i in {r_hat+1, r_hat+2}
    a_i = 2^r_hat + i-r_hat-2  for i in [r_hat+3, n+1]

Strict monotonicity of the coefficients is what makes a single insertion or
deletion uniquely reversible (see decoder). The encoder embeds a run-length-
limited message part y of length k behind an m-symbol parity part p chosen so
the concatenation z = p y lands in the code: the parity positions excluding
r_hat and m carry the weights (2^0 .. 2^(r_hat-2), 2^(r_hat-1), 2^r_hat), so
a single little-endian solve always produces a fitting parity. Position m is
a separator fixed to the complement of y_1; if the first parity draft carries
a run longer than r, flipping position r_hat and re-solving repairs it for
every valid parameter set except the excluded triple (k, r, d) = (14, 4, 5).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bitseq import BitSeq, is_rll, le_encode, max_run_length
from .errors import DataError, InvariantError, ValidationError
from .front import FrontParams, front_encode


@dataclass(frozen=True)
class CodeParams:
    """Validated parameter bundle for one code instance.

    Construct through derive_params, which enforces every constraint; building
    instances directly skips validation and is reserved for oracle runs that
    deliberately probe excluded parameter sets.
    """

    k: int
    r_hat: int
    r: int
    d: int
    b: int
    m: int
    n: int
    modulus: int


@dataclass(frozen=True)
class CongruenceParams:
    """Definition-level bundle (n, r_hat, d, b) with no embedding encoder attached.

    Lets the oracles enumerate codes at lengths below the encoder's minimum.
    """

    n: int
    r_hat: int
    d: int
    b: int
    modulus: int


def d_range(r_hat: int) -> tuple[int, int]:
    """Valid closed range for the free coefficient d at a given r_hat."""
    return (1 << (r_hat - 2)) + 1, (1 << (r_hat - 1)) - 1


def derive_params(k: int, r: int, d: int | None = None, b: int | None = None) -> CodeParams:
    """Derive and validate the full parameter bundle from (k, r) and optional (d, b).

    r_hat is the unique shape parameter with k in [2^(r_hat-1) - 1, 2^r_hat - 2];
    m = r_hat + 3, n = m + k, modulus = 2^r_hat + k + 2. d defaults to the top
    of its valid range and b to 0.
    """
    if k < 7:
        raise ValidationError(f"message-part length must be at least 7 (got k={k})")
    r_hat = (k + 1).bit_length()
    d_lo, d_hi = d_range(r_hat)
    if d is None:
        d = d_hi
    elif not d_lo <= d <= d_hi:
        raise ValidationError(
            f"free coefficient d={d} is outside [{d_lo}, {d_hi}] for r_hat={r_hat}"
        )
    if r < r_hat:
        raise ValidationError(f"run limit r={r} is below r_hat={r_hat}")
    if (k, r, d) == (14, 4, 5):
        raise ValidationError(
            "(k, r, d) = (14, 4, 5) is excluded: the parity fallback cannot "
            "guarantee the run-length limit for this triple"
        )
    cap = (1 << r) + r - 5
    if k > cap:
        raise ValidationError(
            f"k={k} exceeds the front-end feasibility bound 2^r + r - 5 = {cap} for r={r}"
        )
    m = r_hat + 3
    n = m + k
    modulus = (1 << r_hat) + k + 2
    if b is None:
        b = 0
    elif not 0 <= b < modulus:
        raise ValidationError(f"residue b={b} is outside [0, {modulus - 1}]")
    return CodeParams(k=k, r_hat=r_hat, r=r, d=d, b=b, m=m, n=n, modulus=modulus)


def raw_params(n: int, r_hat: int, d: int, b: int = 0) -> CongruenceParams:
    """Definition-level parameters for enumeration oracles (no encoder attached)."""
    if n < 1:
        raise ValidationError(f"code length must be positive (got n={n})")
    if r_hat < 4:
        raise ValidationError(f"shape parameter must be at least 4 (got r_hat={r_hat})")
    d_lo, d_hi = d_range(r_hat)
    if not d_lo <= d <= d_hi:
        raise ValidationError(
            f"free coefficient d={d} is outside [{d_lo}, {d_hi}] for r_hat={r_hat}"
        )
    modulus = coefficient_value(n + 1, r_hat, d)
    if not 0 <= b < modulus:
        raise ValidationError(f"residue b={b} is outside [0, {modulus - 1}]")
    return CongruenceParams(n=n, r_hat=r_hat, d=d, b=b, modulus=modulus)


def coefficient_value(i: int, r_hat: int, d: int) -> int:
    """The i-th coefficient of the shape-(r_hat, d) sequence (no range check)."""
    if i < r_hat:
        return 1 << (i - 1)
    if i == r_hat:
        return d
    if i <= r_hat + 2:
        return 1 << (i - 2)
    return (1 << r_hat) + i - r_hat - 2


def coefficient(cp: CodeParams, i: int) -> int:
    """The i-th coefficient a_i, for 1 <= i <= n + 1."""
    if not 1 <= i <= cp.n + 1:
        raise ValueError(f"coefficient index i={i} is outside [1, {cp.n + 1}]")
    return coefficient_value(i, cp.r_hat, cp.d)


@lru_cache(maxsize=None)
def _coefficients(n: int, r_hat: int, d: int) -> tuple[int, ...]:
    return tuple(coefficient_value(i, r_hat, d) for i in range(1, n + 2))


def mu(cp, z: BitSeq) -> int:
    """Weighted sum of z under the coefficient sequence (exact integer)."""
    if len(z) != cp.n:
        raise DataError(f"word length {len(z)} != n = {cp.n}")
    total = 0
    for a, bit in zip(_coefficients(cp.n, cp.r_hat, cp.d), z.tobytes()):
        if bit:
            total += a
    return total


def is_codeword(cp, z: BitSeq) -> bool:
    """True iff mu(z) is congruent to b modulo a_(n+1)."""
    return mu(cp, z) % cp.modulus == cp.b


def parity_solve(cp: CodeParams, p_rhat: int, p_m: int, y: BitSeq) -> BitSeq:
    """Solve the parity congruence for fixed separator and fallback symbols.

    Returns the (r_hat+1)-symbol little-endian word q whose symbols populate
    parity positions (1 .. r_hat-1, r_hat+1, r_hat+2) with weights
    (2^0 .. 2^(r_hat-2), 2^(r_hat-1), 2^r_hat). Well defined because the
    modulus never exceeds 2^(r_hat+1).
    """
    if len(y) != cp.k:
        raise DataError(f"message-part length {len(y)} != k = {cp.k}")
    if p_rhat not in (0, 1) or p_m not in (0, 1):
        raise ValueError("parity symbols must be 0 or 1")
    coeffs = _coefficients(cp.n, cp.r_hat, cp.d)
    sigma = 0
    for a, bit in zip(coeffs[cp.m :], y.tobytes()):
        if bit:
            sigma += a
    a_m = coeffs[cp.m - 1]
    residue = (cp.b - cp.d * p_rhat - a_m * p_m - sigma) % cp.modulus
    return le_encode(residue, cp.r_hat + 1)


def parity_word(cp: CodeParams, p_rhat: int, p_m: int, y: BitSeq) -> BitSeq:
    """The assembled m-symbol parity part for the given separator/fallback symbols."""
    q = parity_solve(cp, p_rhat, p_m, y).tobytes()
    p = bytearray(cp.m)
    p[: cp.r_hat - 1] = q[: cp.r_hat - 1]
    p[cp.r_hat - 1] = p_rhat
    p[cp.r_hat] = q[cp.r_hat - 1]
    p[cp.r_hat + 1] = q[cp.r_hat]
    p[cp.m - 1] = p_m
    return BitSeq._wrap(bytes(p))


def embed_encode(cp: CodeParams, y: BitSeq) -> BitSeq:
    """Embed a run-length-limited message part behind a solved parity part.

    The first parity draft fixes position r_hat to 0; if the draft carries a
    run longer than r, position r_hat is flipped to 1 and the congruence is
    re-solved. The separator p_m = y_1 xor 1 keeps parity and message runs
    from merging, so the result is a codeword within the run-length limit.
    """
    if len(y) != cp.k:
        raise DataError(f"message-part length {len(y)} != k = {cp.k}")
    if not is_rll(y, cp.r):
        raise DataError(f"message part violates the run-length limit r={cp.r}")
    p_m = y[0] ^ 1
    p = parity_word(cp, 0, p_m, y)
    if max_run_length(p) > cp.r:
        p = parity_word(cp, 1, p_m, y)
        if max_run_length(p) > cp.r:
            raise InvariantError(
                f"fallback parity still violates the run-length limit at "
                f"(k={cp.k}, r={cp.r}, d={cp.d}, b={cp.b})"
            )
    return p + y


def encode_message(u: BitSeq, k: int, r: int, d: int | None = None, b: int | None = None) -> BitSeq:
    """Full pipeline: message of length k-1 to codeword of length n = k + r_hat + 3."""
    cp = derive_params(k, r, d, b)
    y = front_encode(u, FrontParams(k, r))
    return embed_encode(cp, y)


def params_text(cp: CodeParams) -> str:
    """Key=value serialization of the bundle plus the valid d range."""
    d_lo, d_hi = d_range(cp.r_hat)
    lines = [
        f"k={cp.k}",
        f"r_hat={cp.r_hat}",
        f"r={cp.r}",
        f"d={cp.d}",
        f"b={cp.b}",
        f"m={cp.m}",
        f"n={cp.n}",
        f"modulus={cp.modulus}",
        f"d_min={d_lo}",
        f"d_max={d_hi}",
    ]
    return "\n".join(lines) + "\n"
