"""q-gram hash functions.

Two fingerprints of a q-byte window x = x[1..q] are used:

* a 16-bit value  (4^(q-1)*x[1] + 4^(q-2)*x[2] + ... + x[q]) mod 2^16
* an 8-bit value  (2^(q-1)*x[1] + 2^(q-2)*x[2] + ... + x[q]) mod 2^8

The 16-bit hash feeds the distance-based shift tables and supports a
constant-time rolling update when the window slides one byte to the right.
The 8-bit hash is only used by the hash-shift baseline and is never rolled.

q is capped at 8: for q >= 9 the weight 4^(q-1) of the outgoing byte is
0 mod 2^16 and the rolling update could no longer remove it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConfigurationError

MOD16 = 1 << 16
MOD8 = 1 << 8
MAX_Q = 8

_MASK16 = MOD16 - 1
_MASK8 = MOD8 - 1


@dataclass(frozen=True)
class RollContext:
    """Precomputed weight 4^(q-1) mod 2^16 of a window's leading byte.

    >>> RollContext(3).pow4
    16
    """

    q: int
    pow4: int = field(init=False)

    def __post_init__(self) -> None:
        if not 1 <= self.q <= MAX_Q:
            raise ConfigurationError(f"q must be in [1, {MAX_Q}], got {self.q}")
        object.__setattr__(self, "pow4", pow(4, self.q - 1, MOD16))


def qgram_hash16(window: bytes, q: int) -> int:
    """16-bit hash of a q-byte window.

    >>> qgram_hash16(b"aba", 3)
    2041
    """
    if not 1 <= q <= MAX_Q:
        raise ConfigurationError(f"q must be in [1, {MAX_Q}], got {q}")
    if len(window) != q:
        raise ValueError(f"window length {len(window)} != q = {q}")
    h = 0
    for b in window:
        h = h * 4 + b
    # intermediate values stay below 4^8 * 256 < 2^24, well inside 32 bits
    return h & _MASK16


def qgram_hash8(window: bytes, q: int) -> int:
    """8-bit hash of a q-byte window (base 2 instead of base 4).

    >>> qgram_hash8(b"ab", 2)
    36
    """
    if not 1 <= q <= MAX_Q:
        raise ConfigurationError(f"q must be in [1, {MAX_Q}], got {q}")
    if len(window) != q:
        raise ValueError(f"window length {len(window)} != q = {q}")
    h = 0
    for b in window:
        h = h * 2 + b
    return h & _MASK8


def roll_hash16(prev: int, out_byte: int, in_byte: int, ctx: RollContext) -> int:
    """Slide a 16-bit q-gram hash one byte to the right.

    ``prev`` hashes w[i .. i+q-1]; the result hashes w[i+1 .. i+q] where
    ``out_byte`` = w[i] leaves the window and ``in_byte`` = w[i+q] enters:

        (4 * (prev - 4^(q-1) * out_byte) + in_byte) mod 2^16

    The masked subtraction keeps every intermediate inside 32 bits and the
    result is always the non-negative residue.

    >>> roll_hash16(2041, ord("a"), ord("a"), RollContext(3))   # "aba" -> "baa"
    2053
    """
    return ((prev - ctx.pow4 * out_byte) * 4 + in_byte) & _MASK16
