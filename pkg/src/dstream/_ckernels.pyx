# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled site selection and lookup kernels.

Mirrors ``_pykernels`` call for call. Times are unsigned 64-bit; decode
guesses that would exceed the word saturate to ``UINT64_MAX`` so comparisons
against ``T`` stay correct.
"""

from cpython.array cimport array, clone
from libc.stdint cimport INT64_MAX, UINT64_MAX, int64_t, uint64_t

cdef extern from *:
    """
    static inline int dstream_ctz(unsigned long long x) {
        return x ? __builtin_ctzll(x) : 64;
    }
    static inline int dstream_bitlen(unsigned long long x) {
        return x ? 64 - __builtin_clzll(x) : 0;
    }
    static inline int dstream_popcount(unsigned long long x) {
        return __builtin_popcountll(x);
    }
    """
    int dstream_ctz(unsigned long long x) nogil
    int dstream_bitlen(unsigned long long x) nogil
    int dstream_popcount(unsigned long long x) nogil

cdef uint64_t UMAX = UINT64_MAX
cdef array _Q = array("q", [])
cdef array _UQ = array("Q", [])

EMPTY = -1


class ScenarioConflict(AssertionError):
    """More than one tilted decoder correction applied to the same site."""


cdef inline uint64_t odd_time(uint64_t m, int64_t h) nogil:
    """``(2m + 1) * 2**h - 1``, saturating at ``UINT64_MAX``."""
    cdef uint64_t odd
    if m >> 63:
        return UMAX
    odd = 2 * m + 1
    if h >= 64 or odd > (UMAX >> h):
        return UMAX
    return (odd << h) - 1


cdef inline int meta_epoch(int64_t t) nogil:
    cdef int bl = dstream_bitlen(<uint64_t> t)
    cdef uint64_t bf = 0
    if t > 0:
        bf = (<uint64_t> 1) << (dstream_bitlen(<uint64_t> (2 * t)) - 1)
    return bl - (1 if bf > <uint64_t> (t + bl) else 0)


cdef inline int64_t c_steady_site(uint64_t size, uint64_t T) nogil:
    cdef int s = dstream_bitlen(size) - 1
    cdef int64_t t = dstream_bitlen(T) - s
    cdef int64_t h = dstream_ctz(T + 1)
    cdef uint64_t i, j
    cdef int64_t b, w
    if h < t:
        return -1
    i = T >> (h + 1) if h < 63 else 0
    if i == 0:
        return h % (s + 1)
    j = ((<uint64_t> 1) << (dstream_bitlen(i) - 1)) - 1
    b = dstream_bitlen(j)
    w = h - t + 1
    return ((<int64_t> 1) << b) * (s - b + 1) + w * <int64_t> (i - j - 1) + h % w


cdef inline int64_t c_bunch_site(uint64_t size, uint64_t b_l) nogil:
    cdef int v = dstream_bitlen(b_l)
    cdef uint64_t w = 0
    cdef uint64_t b_p
    if v:
        w = size >> (v + 1)
        b_p = w + 2 * w * (b_l - ((<uint64_t> 1) << (v - 1)))
    else:
        b_p = 0
    return <int64_t> (2 * b_p) + dstream_popcount(2 * size - b_p) - 1 - (1 if b_l > 0 else 0)


cdef inline int64_t c_stretched_site(uint64_t size, uint64_t T) nogil:
    cdef int s = dstream_bitlen(size) - 1
    cdef int64_t t = dstream_bitlen(T) - s
    cdef int h = dstream_ctz(T + 1)
    cdef uint64_t i = T >> (h + 1) if h < 63 else 0
    cdef uint64_t B
    if t < 0:
        t = 0
    B = size >> (meta_epoch(t) + 1)
    if B < 1:
        B = 1
    if i >= B:
        return -1
    return c_bunch_site(size, i) + h


cdef inline int64_t c_tilted_site(uint64_t size, uint64_t T) nogil:
    cdef int s = dstream_bitlen(size) - 1
    cdef int64_t t = dstream_bitlen(T) - s
    cdef int h = dstream_ctz(T + 1)
    cdef uint64_t i = T >> (h + 1) if h < 63 else 0
    cdef int tau, uninvaded
    cdef int64_t t0, t1
    cdef uint64_t B
    if t < 0:
        t = 0
    tau = meta_epoch(t)
    t0 = ((<int64_t> 1) << tau) - tau
    t1 = ((<int64_t> 1) << (tau + 1)) - (tau + 1)
    uninvaded = 1 if (t < h + t0 and h + t0 < t1) else 0
    B = size >> (tau + 1 - uninvaded)
    if B < 1:
        B = 1
    return c_bunch_site(size, i & (B - 1)) + h


cdef int c_steady_filled(uint64_t size, uint64_t T, uint64_t[::1] out) nogil:
    cdef int s = dstream_bitlen(size) - 1
    cdef int64_t t = dstream_bitlen(T) - s
    cdef int64_t b = 0, seg_countdown = 1, site_countdown = s + 1
    cdef int64_t w, h_max, h
    cdef uint64_t m_p
    cdef Py_ssize_t k
    for k in range(<Py_ssize_t> size):
        w = s - b + (1 if b == 0 else 0)
        m_p = ((<uint64_t> 1) << b) - <uint64_t> seg_countdown
        h_max = t + w - 1
        h = h_max - (h_max + site_countdown) % w
        if odd_time(m_p, h) >= T:
            h -= w
        if h < 0:
            return -1
        out[k] = odd_time(m_p, h)

        if site_countdown == 0:
            site_countdown = w
        site_countdown -= 1
        if site_countdown == 0:
            seg_countdown -= 1
        if seg_countdown == 0 and site_countdown == 0:
            b += 1
        if seg_countdown == 0:
            seg_countdown = (<int64_t> 1) << (b - 1)
    return 0


cdef int c_stretched_filled(uint64_t size, uint64_t T, uint64_t[::1] out) nogil:
    cdef int s = dstream_bitlen(size) - 1
    cdef int tau0 = meta_epoch(dstream_bitlen(T) - s)
    cdef uint64_t M = size >> (tau0 + 1)
    cdef int64_t w0 = ((<int64_t> 1) << tau0) - 1
    cdef int64_t w1 = ((<int64_t> 1) << (tau0 + 1)) - 1
    cdef int64_t h_guess = 0, w, h
    cdef uint64_t m_p = 0, i
    cdef int b_l
    cdef Py_ssize_t k
    if M == 0:
        M = 1
    for k in range(<Py_ssize_t> size):
        b_l = dstream_ctz(M + m_p)
        w = w1 + b_l + (1 if m_p == 0 else 0)
        h = h_guess
        i = (M + m_p) >> (b_l + 1)
        if odd_time(i, h) >= T:
            h -= w - w0
            i = m_p + M
        if h < 0:
            return -1
        out[k] = odd_time(i, h)

        h_guess += 1
        if h_guess == w:
            m_p += 1
            h_guess = 0
    return 0


cdef int c_tilted_filled(uint64_t size, uint64_t T, uint64_t[::1] out) nogil:
    cdef int s = dstream_bitlen(size) - 1
    cdef int64_t t = dstream_bitlen(T) - s
    cdef int tau0 = meta_epoch(t)
    cdef int64_t t0 = ((<int64_t> 1) << tau0) - tau0
    cdef uint64_t T0 = (<uint64_t> 1) << (t + s - 1)
    cdef uint64_t M_guess = size >> (tau0 + 1)
    cdef int64_t w0 = ((<int64_t> 1) << tau0) - 1
    cdef int64_t w1 = ((<int64_t> 1) << (tau0 + 1)) - 1
    cdef bint before_last_epoch = t < <int64_t> size - s
    cdef int64_t h_guess = 0, w, h
    cdef uint64_t m_p = 0, m_l_guess, m_l, M, T_i, T_r, T_c, q, j, i
    cdef int b_l
    cdef bint chi_a, chi_a_hat, chi_b, chi_b_hat, invaded
    cdef Py_ssize_t k
    if M_guess == 0:
        M_guess = 1
    for k in range(<Py_ssize_t> size):
        b_l = dstream_ctz(M_guess + m_p)
        w = w1 + b_l + (1 if m_p == 0 else 0)
        m_l_guess = (M_guess + m_p) >> (b_l + 1)

        chi_a = h_guess - (t - t0) > w - w0
        T_i = odd_time(m_l_guess, h_guess)
        chi_a_hat = h_guess - (t - t0) == w - w0 and T_i >= T
        chi_b = (t - t0 < h_guess and h_guess < w0) and before_last_epoch
        T_r = T0 + T_i
        if T_r < T_i:
            T_r = UMAX
        chi_b_hat = h_guess == t - t0 and T_r >= T and before_last_epoch
        if <int> chi_a + <int> chi_a_hat + <int> chi_b + <int> chi_b_hat > 1:
            return -2

        invaded = chi_a or chi_a_hat
        M = 2 * M_guess if (invaded or chi_b or chi_b_hat) else M_guess
        h = h_guess - (w - w0) if invaded else h_guess
        T_c = T0 if (chi_a_hat or chi_b_hat) else T
        m_l = M_guess + m_p if invaded else m_l_guess
        if h < 0 or h >= 64:
            return -1

        q = T_c >> h
        j = (q >> 1) + (q & 1) - 1
        i = j - ((j - m_l + M) & (M - 1))
        out[k] = odd_time(i, h)

        h_guess += 1
        if h_guess == w:
            m_p += 1
            h_guess = 0
    return 0


cdef int c_filled(int algo, uint64_t size, uint64_t T, uint64_t[::1] out) nogil:
    if algo == 0:
        return c_steady_filled(size, T, out)
    elif algo == 1:
        return c_stretched_filled(size, T, out)
    return c_tilted_filled(size, T, out)


cdef inline int64_t c_site(int algo, uint64_t size, uint64_t T) nogil:
    if algo == 0:
        return c_steady_site(size, T)
    elif algo == 1:
        return c_stretched_site(size, T)
    return c_tilted_site(size, T)


def steady_site(uint64_t size, uint64_t T):
    return c_steady_site(size, T)


def stretched_site(uint64_t size, uint64_t T):
    return c_stretched_site(size, T)


def tilted_site(uint64_t size, uint64_t T):
    return c_tilted_site(size, T)


def bunch_site(uint64_t size, uint64_t b_l):
    return c_bunch_site(size, b_l)


def site(int algo, uint64_t size, uint64_t T):
    return c_site(algo, size, T)


def lookup(int algo, uint64_t size, uint64_t T):
    cdef uint64_t[::1] out = clone(_UQ, size, True)
    cdef int status
    cdef Py_ssize_t k
    with nogil:
        if T < size:
            status = c_filled(algo, size, size, out)
            for k in range(<Py_ssize_t> size):
                if out[k] >= T:
                    out[k] = UMAX
        else:
            status = c_filled(algo, size, T, out)
    if status == -2:
        raise ScenarioConflict(f"multiple decoder scenarios at S={size}, T={T}")
    if status != 0:
        raise OverflowError(f"lookup out of representable range at S={size}, T={T}")
    return [-1 if v == UMAX else v for v in out]


def select_range(int algo, uint64_t size, uint64_t start, uint64_t stop):
    cdef Py_ssize_t n = <Py_ssize_t> (stop - start) if stop > start else 0
    cdef int64_t[::1] out = clone(_Q, n, True)
    cdef Py_ssize_t x
    with nogil:
        for x in range(n):
            out[x] = c_site(algo, size, start + x)
    return list(out)

