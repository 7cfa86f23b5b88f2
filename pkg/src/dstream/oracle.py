"""Brute-force references for checking the fast algorithms.

Everything here is written the slow, obvious way: replaying site selections
one ingest at a time, computing hanoi values by repeated halving, and building
goal sets by enumerating instances. None of it shares code with the
bit-twiddling kernels beyond calling the public ``site_select`` functions for
replay.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import steady, stretched, tilted
from .chronology import SurfaceSpec, as_spec

SITE_SELECT: dict[str, Callable[[SurfaceSpec | int, int], int | None]] = {
    "steady": steady.site_select,
    "stretched": stretched.site_select,
    "tilted": tilted.site_select,
}


def naive_hanoi(T: int) -> int:
    n = T + 1
    h = 0
    while n % 2 == 0:
        n //= 2
        h += 1
    return h


def naive_log2_floor(x: int) -> int:
    n = 0
    while x >= 2:
        x //= 2
        n += 1
    return n


def naive_epoch(size: int, T: int) -> int:
    if T < size:
        return 0
    return naive_log2_floor(T) - naive_log2_floor(size) + 1


def naive_meta_epoch(t: int) -> int:
    """Meta-epoch by interval search over starts ``2**tau - tau``."""
    if t == 0:
        return 0
    tau = 1
    while (2 ** (tau + 1)) - (tau + 1) <= t:
        tau += 1
    return tau


@dataclass
class ReplayState:
    """Last-writer-wins site table built by ingesting one item at a time."""

    algorithm: str
    spec: SurfaceSpec
    time: int = 0
    table: list[int | None] = field(default_factory=list)
    history: list[int | None] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.spec = as_spec(self.spec)
        if not self.table:
            self.table = [None] * self.spec.size

    def step(self) -> int | None:
        k = SITE_SELECT[self.algorithm](self.spec, self.time)
        if k is not None:
            if not 0 <= k < self.spec.size:
                raise AssertionError(f"site {k} out of range at T={self.time}")
            self.table[k] = self.time
        self.history.append(k)
        self.time += 1
        return k

    def advance_to(self, T: int) -> ReplayState:
        while self.time < T:
            self.step()
        return self

    def retained(self) -> set[int]:
        return {v for v in self.table if v is not None}


def replay(algorithm: str, spec: SurfaceSpec | int, T: int) -> list[int | None]:
    return ReplayState(algorithm, as_spec(spec)).advance_to(T).table


def instance_time(h: int, i: int) -> int:
    """Ingest time of the ``i``-th (zero-based) item with hanoi value ``h``."""
    return i * 2 ** (h + 1) + 2**h - 1


def instance_count(h: int, T: int) -> int:
    """How many items with hanoi value ``h`` arrive before ``T``."""
    if instance_time(h, 0) >= T:
        return 0
    return (T - instance_time(h, 0) - 1) // 2 ** (h + 1) + 1


def instances_before(h: int, T: int) -> list[int]:
    return [instance_time(h, i) for i in range(instance_count(h, T))]


def hanoi_values_before(T: int) -> range:
    """Every hanoi value with at least one instance before ``T``."""
    return range(naive_log2_floor(T) + 1 if T > 0 else 0)


def reservation_count(spec: SurfaceSpec | int, T: int) -> int:
    """Instances ``n(T) = 2**(s - 1 - tau)`` guaranteed per hanoi value (stretched, tilted)."""
    spec = as_spec(spec)
    tau = naive_meta_epoch(naive_epoch(spec.size, T))
    return 2 ** max(0, spec.log_size - 1 - tau)


def goal_steady(spec: SurfaceSpec | int, T: int) -> set[int]:
    """Every ingest before ``T`` with hanoi value at least the current epoch."""
    t = naive_epoch(as_spec(spec).size, T)
    out: set[int] = set()
    for h in hanoi_values_before(T):
        if h >= t:
            out.update(instances_before(h, T))
    return out


def goal_stretched(spec: SurfaceSpec | int, T: int, n: int | None = None) -> set[int]:
    """First ``n`` instances of each hanoi value seen before ``T``."""
    n = reservation_count(spec, T) if n is None else n
    out: set[int] = set()
    for h in hanoi_values_before(T):
        for i in range(min(n, instance_count(h, T))):
            out.add(instance_time(h, i))
    return out


def goal_tilted(spec: SurfaceSpec | int, T: int, n: int | None = None) -> set[int]:
    """Last ``n`` instances of each hanoi value seen before ``T``."""
    n = reservation_count(spec, T) if n is None else n
    out: set[int] = set()
    for h in hanoi_values_before(T):
        c = instance_count(h, T)
        for i in range(max(0, c - n), c):
            out.add(instance_time(h, i))
    return out


def goal_steady_brute(spec: SurfaceSpec | int, T: int) -> set[int]:
    t = naive_epoch(as_spec(spec).size, T)
    return {x for x in range(T) if naive_hanoi(x) >= t}


GOALS = {"steady": goal_steady, "stretched": goal_stretched, "tilted": goal_tilted}


def closed_form_stretched(n: int, T: int) -> set[int]:
    """``{j * 2**h - 1 : j in [1, 2n], h >= 0}`` restricted to ``[0, T)``."""
    out = set()
    for h in range(naive_log2_floor(T + 1) + 1):
        for j in range(1, 2 * n + 1):
            x = j * 2**h - 1
            if x < T:
                out.add(x)
    return out


def closed_form_tilted(n: int, T: int) -> set[int]:
    """``{2**h * (T // 2**h - j) - 1 : j in [0, 2n - 1], h >= 0}`` restricted to ``[0, T)``."""
    out = set()
    for h in range(naive_log2_floor(T + 1) + 1):
        for j in range(2 * n):
            x = 2**h * (T // 2**h - j) - 1
            if 0 <= x < T:
                out.add(x)
    return out


def gap_profile_brute(retained: set[int], T: int) -> list[int]:
    """Gap size per ingest time straight from the definition: widest discarded window."""
    profile = []
    for x in range(T):
        if x in retained:
            profile.append(0)
            continue
        lo = x
        while lo - 1 >= 0 and lo - 1 not in retained:
            lo -= 1
        hi = x
        while hi + 1 < T and hi + 1 not in retained:
            hi += 1
        profile.append(hi - lo + 1)
    return profile


def ideal_steady_cost(size: int, T: int) -> int:
    """Smallest achievable max gap keeping ``size`` of ``T`` items, by enumeration of spacings.

    Keeping ``size`` items leaves ``T - size`` discards across ``size + 1``
    gaps; the best max gap is the ceiling of their even split.
    """
    if T <= size:
        return 0
    best = T
    for g in range(T):
        # With max gap g, size retained items cover at most (size + 1) * g + size.
        if (size + 1) * g + size >= T:
            best = g
            break
    return best
