"""Pure-Python site selection and lookup kernels.

These are the reference fallback for the compiled ``_ckernels`` extension and
share its exact call signatures. Inputs are assumed validated: ``size`` is a
power of two within the algorithm's minimum, and ``T`` is inside the domain.
Discards and empty sites are reported as ``-1``.
"""

from __future__ import annotations

from typing import Iterator

EMPTY = -1

STEADY, STRETCHED, TILTED = 0, 1, 2


def _ctz(x: int) -> int:
    return (x & -x).bit_length() - 1


def _meta_epoch(t: int) -> int:
    bl = t.bit_length()
    bf = 1 << (2 * t).bit_length() - 1 if t else 0
    return bl - (bf > t + bl)


def steady_site(size: int, T: int) -> int:
    s = size.bit_length() - 1
    # Unclamped epoch: negative while filling, so nothing is discarded then.
    t = T.bit_length() - s
    h = _ctz(T + 1)
    if h < t:
        return EMPTY
    i = T >> (h + 1)
    if i == 0:
        return h % (s + 1)
    j = (1 << i.bit_length() - 1) - 1
    b = j.bit_length()
    w = h - t + 1
    return (1 << b) * (s - b + 1) + w * (i - j - 1) + h % w


def bunch_site(size: int, b_l: int) -> int:
    """Leftmost site of the bunch filled ``b_l``-th in the stretched/tilted layout."""
    v = b_l.bit_length()
    # Bunches at nesting level v sit every 2w physical positions, starting at w.
    w = size >> (v + 1) if v else 0
    b_p = w + 2 * w * (b_l - (1 << v - 1 if v else 0))
    return 2 * b_p + (2 * size - b_p).bit_count() - 1 - (b_l > 0)


def stretched_site(size: int, T: int) -> int:
    s = size.bit_length() - 1
    t = max(0, T.bit_length() - s)
    h = _ctz(T + 1)
    i = T >> (h + 1)
    B = max(1, size >> (_meta_epoch(t) + 1))
    if i >= B:
        return EMPTY
    return bunch_site(size, i) + h


def tilted_site(size: int, T: int) -> int:
    s = size.bit_length() - 1
    t = max(0, T.bit_length() - s)
    h = _ctz(T + 1)
    i = T >> (h + 1)
    tau = _meta_epoch(t)
    t0 = (1 << tau) - tau
    t1 = (1 << tau + 1) - (tau + 1)
    # Segments not yet invaded this meta-epoch still hold twice the bunches.
    uninvaded = t < h + t0 < t1
    B = max(1, size >> (tau + 1 - uninvaded))
    return bunch_site(size, i & (B - 1)) + h


def steady_iter_filled(size: int, T: int) -> Iterator[int]:
    """Resident ingest time per site for a filled steady buffer, ``T >= size``."""
    s = size.bit_length() - 1
    t = T.bit_length() - s
    b = 0
    seg_countdown = 1
    site_countdown = s + 1
    for _ in range(size):
        w = s - b + (b == 0)
        m_p = (1 << b) - seg_countdown
        h_max = t + w - 1
        h = h_max - (h_max + site_countdown) % w
        if ((2 * m_p + 1) << h) - 1 >= T:
            h -= w
        yield ((2 * m_p + 1) << h) - 1

        site_countdown = (site_countdown or w) - 1
        seg_countdown -= site_countdown == 0
        if seg_countdown == 0 and site_countdown == 0:
            b += 1
        seg_countdown = seg_countdown or 1 << (b - 1)


def stretched_iter_filled(size: int, T: int) -> Iterator[int]:
    s = size.bit_length() - 1
    tau0 = _meta_epoch(T.bit_length() - s)
    M = size >> (tau0 + 1) or 1
    w0 = (1 << tau0) - 1
    w1 = (1 << tau0 + 1) - 1
    h_guess = 0
    m_p = 0
    for _ in range(size):
        b_l = _ctz(M + m_p)
        w = w1 + b_l + (m_p == 0)
        h = h_guess
        i = (M + m_p) >> (b_l + 1)
        if ((2 * i + 1) << h) - 1 >= T:
            # Instance not seen yet; the site still holds the smaller h.v.
            h -= w - w0
            i = m_p + M
        yield ((2 * i + 1) << h) - 1

        h_guess += 1
        m_p += h_guess == w
        h_guess *= h_guess != w


class ScenarioConflict(AssertionError):
    """More than one tilted decoder correction applied to the same site."""


def tilted_iter_filled(size: int, T: int) -> Iterator[int]:
    s = size.bit_length() - 1
    t = T.bit_length() - s
    tau0 = _meta_epoch(t)
    t0 = (1 << tau0) - tau0
    T0 = 1 << (t + s - 1)
    M_guess = size >> (tau0 + 1) or 1
    w0 = (1 << tau0) - 1
    w1 = (1 << tau0 + 1) - 1
    before_last_epoch = t < size - s
    h_guess = 0
    m_p = 0
    for _ in range(size):
        b_l = _ctz(M_guess + m_p)
        w = w1 + b_l + (m_p == 0)
        m_l_guess = (M_guess + m_p) >> (b_l + 1)

        # A: site in an invaded segment, ring buffer still intact.
        chi_a = h_guess - (t - t0) > w - w0
        T_i = ((2 * m_l_guess + 1) << h_guess) - 1
        chi_a_hat = h_guess - (t - t0) == w - w0 and T_i >= T
        # B: site in an invading segment, ring buffer still intact.
        chi_b = t - t0 < h_guess < w0 and before_last_epoch
        chi_b_hat = h_guess == t - t0 and T0 + T_i >= T and before_last_epoch
        if chi_a + chi_a_hat + chi_b + chi_b_hat > 1:
            raise ScenarioConflict(
                f"multiple decoder scenarios at S={size}, T={T}, segment {m_p}"
            )

        invaded = chi_a or chi_a_hat
        M = 2 * M_guess if invaded or chi_b or chi_b_hat else M_guess
        h = h_guess - (w - w0) if invaded else h_guess
        T_c = T0 if chi_a_hat or chi_b_hat else T
        m_l = M_guess + m_p if invaded else m_l_guess

        q = T_c >> h
        j = (q >> 1) + (q & 1) - 1
        i = j - ((j - m_l + M) & (M - 1))
        yield ((2 * i + 1) << h) - 1

        h_guess += 1
        m_p += h_guess == w
        h_guess *= h_guess != w


_ITER_FILLED = (steady_iter_filled, stretched_iter_filled, tilted_iter_filled)


def iter_lookup(algo: int, size: int, T: int) -> Iterator[int]:
    filled = _ITER_FILLED[algo]
    if T < size:
        for v in filled(size, size):
            yield v if v < T else EMPTY
    else:
        yield from filled(size, T)


def lookup(algo: int, size: int, T: int) -> list[int]:
    return list(iter_lookup(algo, size, T))


_SITE = (steady_site, stretched_site, tilted_site)


def site(algo: int, size: int, T: int) -> int:
    return _SITE[algo](size, T)


def select_range(algo: int, size: int, start: int, stop: int) -> list[int]:
    f = _SITE[algo]
    return [f(size, T) for T in range(start, stop)]

