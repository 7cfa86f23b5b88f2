"""Gap sizes, criterion costs, and the theoretical bounds they are checked against.

A gap is a maximal run of discarded ingest times. Costs:

* steady: largest gap size.
* stretched: largest ``gap / age`` over ``T' in [1, T)``, favouring old items.
* tilted: largest ``gap / (T - 1 - T')`` over ``T' in [0, T - 1)``, favouring
  recent items.

All ratios are exact :class:`fractions.Fraction` values so bound violations
are decided exactly. An empty index range yields cost 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import mpmath

from .bitops import bit_floor_safe
from .chronology import as_spec, epoch_of, meta_epoch_of


def gap_profile(retained: Iterable[int], T: int) -> list[int]:
    """Gap size ``G_T(T')`` for every ``T' in [0, T)`` by run-length scan."""
    kept = bytearray(T)
    for x in retained:
        if not 0 <= x < T:
            raise ValueError(f"retained time {x} outside [0, {T})")
        kept[x] = 1
    profile = [0] * T
    run_start = None
    for x in range(T + 1):
        if x < T and not kept[x]:
            if run_start is None:
                run_start = x
        elif run_start is not None:
            g = x - run_start
            profile[run_start:x] = [g] * g
            run_start = None
    return profile


def gap_runs(retained: Iterable[int], T: int) -> list[tuple[int, int]]:
    """Maximal discarded runs as ``(first, last)`` inclusive pairs, in time order."""
    runs = []
    prev = -1
    for x in sorted(set(retained)):
        if not 0 <= x < T:
            raise ValueError(f"retained time {x} outside [0, {T})")
        if x > prev + 1:
            runs.append((prev + 1, x - 1))
        prev = x
    if prev < T - 1:
        runs.append((prev + 1, T - 1))
    return runs


def cost_steady(retained: Iterable[int], T: int) -> int:
    return max((b - a + 1 for a, b in gap_runs(retained, T)), default=0)


def cost_stretched(retained: Iterable[int], T: int) -> Fraction:
    best = Fraction(0)
    for a, b in gap_runs(retained, T):
        # Gap is constant over the run; the youngest age (smallest T') maximizes.
        first = max(a, 1)
        if first <= b:
            best = max(best, Fraction(b - a + 1, first))
    return best


def cost_tilted(retained: Iterable[int], T: int) -> Fraction:
    best = Fraction(0)
    for a, b in gap_runs(retained, T):
        last = min(b, T - 2)
        if a <= last:
            best = max(best, Fraction(b - a + 1, T - 1 - last))
    return best


COST_FUNCTIONS = {
    "steady": cost_steady,
    "stretched": cost_stretched,
    "tilted": cost_tilted,
}


def bound_steady_lower(size: int, T: int) -> int:
    return T // (size + 1)


def bound_steady_upper(size: int, T: int) -> int:
    """``2 * bin_floor(T / S) - 1``, taken as 0 before the first overwrite."""
    return max(0, 2 * bit_floor_safe(T // size) - 1)


def bound_steady_loose(size: int, T: int) -> Fraction:
    """Looser form ``2 (S + 1) / S * g_opt + 1`` with ``g_opt`` the optimal gap."""
    return 2 * Fraction(size + 1, size) * bound_steady_lower(size, T) + 1


def _epochs(size: int, T: int) -> tuple[int, int, int]:
    spec = as_spec(size)
    t = epoch_of(spec, T)
    return spec.log_size, t, meta_epoch_of(t)


def bound_stretched_upper(size: int, T: int) -> Fraction:
    """``min(2**(tau+1) / S, 2 (t + s) / S, 4 t / S)``; only meaningful for ``t >= 1``."""
    s, t, tau = _epochs(size, T)
    return min(
        Fraction(1 << (tau + 1), size),
        Fraction(2 * (t + s), size),
        Fraction(4 * t, size),
    )


def bound_tilted_upper(size: int, T: int) -> Fraction:
    """``1 / (max(S / (2 (t + s)), S / (4 t), S / 2**(tau+1)) - 1/2)`` for ``t >= 1``."""
    s, t, tau = _epochs(size, T)
    if not 1 <= t < size - s:
        raise ValueError(
            f"tilted upper bound holds for epochs 1 <= t < {size - s}, got t={t}"
        )
    best = max(
        Fraction(size, 2 * (t + s)),
        Fraction(size, 4 * t),
        Fraction(size, 1 << (tau + 1)),
    )
    return 1 / (best - Fraction(1, 2))


def bound_stretched_lower(size: int, T: int) -> Fraction:
    """Best achievable gap-size ratio after ``T`` ingests, accounting for discreteness.

    ``1 / (1 + S - floor(S * log_T((T - S)(T**(1/S) - 1) + 1)))``, and 0 while
    ``T <= S`` since nothing need be discarded yet. Evaluated in high precision;
    the floor is resolved exactly by comparing integer powers.
    """
    if T <= size:
        return Fraction(0)
    with mpmath.workdps(80):
        root = mpmath.root(T, size)
        arg = (T - size) * (root - 1) + 1
        m = int(mpmath.floor(size * mpmath.log(arg) / mpmath.log(T)))
        # Nudge across float-boundary ties: floor(S log_T arg) is the largest m
        # with T**m <= arg**S.
        arg_pow = arg**size
        while mpmath.mpf(T) ** (m + 1) <= arg_pow:
            m += 1
        while m > 0 and mpmath.mpf(T) ** m > arg_pow:
            m -= 1
    return Fraction(1, 1 + size - m)


@dataclass(frozen=True)
class CostReport:
    time: int
    cost: Fraction
    lower_bound: Fraction
    upper_bound: Fraction | None

    @property
    def within_bounds(self) -> bool:
        if self.cost < self.lower_bound:
            return False
        return self.upper_bound is None or self.cost <= self.upper_bound


# Ratio caps that hold over the whole supported domain.
RATIO_CAP = {"stretched": Fraction(1), "tilted": Fraction(2)}


def bounds(algorithm: str, size: int, T: int) -> tuple[Fraction, Fraction | None]:
    """``(lower, upper)`` bound pair; ``upper`` is ``None`` where no guarantee applies.

    Stretched and tilted upper bounds use the epoch formulas for
    ``1 <= t < S - s`` and fall back to the domain-wide ratio caps after.
    Epoch 0 has no upper bound (nothing is discarded then).
    """
    if algorithm == "steady":
        return Fraction(bound_steady_lower(size, T)), Fraction(
            bound_steady_upper(size, T)
        )
    if algorithm not in RATIO_CAP:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    lower = bound_stretched_lower(size, T)
    s, t, _ = _epochs(size, T)
    if t == 0:
        return lower, None
    cap = RATIO_CAP[algorithm]
    if t >= size - s:
        return lower, cap
    if algorithm == "stretched":
        return lower, min(cap, bound_stretched_upper(size, T))
    return lower, min(cap, bound_tilted_upper(size, T))


def cost_report(algorithm: str, size: int, T: int, retained: Iterable[int]) -> CostReport:
    cost = Fraction(COST_FUNCTIONS[algorithm](retained, T))
    lower, upper = bounds(algorithm, size, T)
    return CostReport(T, cost, lower, upper)
