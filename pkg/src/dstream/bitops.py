"""Integer helper primitives shared by every site selection and lookup routine.

All helpers operate on non-negative integers and model an unsigned 64-bit
word. Python integers are unbounded, so callers are responsible for keeping
inputs inside the word (the algorithm modules enforce their own domains).
"""

from __future__ import annotations

WORD_BITS = 64
WORD_MAX = (1 << WORD_BITS) - 1


def bit_length(x: int) -> int:
    """Return ``floor(log2(x)) + 1`` for positive ``x`` and 0 for ``x == 0``."""
    return x.bit_length()


def count_trailing_zeros(x: int) -> int:
    """Return the number of trailing zero bits of ``x``.

    ``x == 0`` yields :data:`WORD_BITS`, mirroring hardware ``tzcnt``.
    """
    if x == 0:
        return WORD_BITS
    return (x & -x).bit_length() - 1


def bit_floor(x: int) -> int:
    """Largest power of two not exceeding ``x``. Requires ``x > 0``."""
    if x <= 0:
        raise ValueError(f"bit_floor requires x > 0, got {x}")
    return 1 << (x.bit_length() - 1)


def bit_floor_safe(x: int) -> int:
    return 1 << (x.bit_length() - 1) if x > 0 else 0


def bit_count(x: int) -> int:
    return x.bit_count()


def is_pow2(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def mod_pow2(x: int, n: int) -> int:
    """``x mod n`` for a power-of-two modulus, computed by masking."""
    if not is_pow2(n):
        raise ValueError(f"mod_pow2 requires a power-of-two modulus, got {n}")
    return x & (n - 1)


def left_shift(x: int, n: int) -> int:
    return x << n


def right_shift(x: int, n: int) -> int:
    return x >> n


def indicator(x: int) -> int:
    return 1 if x > 0 else 0


def elvis(x: int, y: int) -> int:
    return x if x != 0 else y
