"""Time-derived quantities: hanoi value, epoch and meta-epoch.

Logical time ``T`` counts items ingested so far. An ingest at time ``T`` has
hanoi value ``H(T) = ctz(T + 1)``, the ruler sequence 0, 1, 0, 2, 0, 1, 0, 3...
Epochs bucket time by binary magnitude (epoch 1 begins at ``T = S``) and
meta-epochs group epochs into the cycles over which reservation segments are
subsumed by their neighbours.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitops import bit_floor_safe, bit_length, count_trailing_zeros, is_pow2


class DomainError(ValueError):
    """Raised when a surface size or logical time falls outside what an algorithm supports."""


class DomainExhaustedError(DomainError):
    """Raised when a bounded-horizon surface has used up its supported ingest domain."""


ALGORITHMS = ("steady", "stretched", "tilted")

# Smallest supported surface size per algorithm.
MIN_SIZE = {"steady": 4, "stretched": 8, "tilted": 8}


@dataclass(frozen=True)
class SurfaceSpec:
    """Validated buffer geometry: ``size`` is a power of two, ``log_size`` its log2."""

    size: int

    def __post_init__(self) -> None:
        if isinstance(self.size, bool) or not isinstance(self.size, int):
            raise TypeError(f"surface size must be an int, got {self.size!r}")
        if not is_pow2(self.size) or self.size < 4:
            raise DomainError(
                f"surface size must be a power of two >= 4, got {self.size}"
            )
        if self.size > 1 << 16:
            raise DomainError(f"surface size {self.size} is unreasonably large")

    @property
    def log_size(self) -> int:
        return self.size.bit_length() - 1

    def check_algorithm(self, algorithm: str) -> None:
        if algorithm not in MIN_SIZE:
            raise ValueError(
                f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}"
            )
        if self.size < MIN_SIZE[algorithm]:
            raise DomainError(
                f"{algorithm} requires surface size >= {MIN_SIZE[algorithm]}, "
                f"got {self.size}"
            )


def as_spec(spec: SurfaceSpec | int) -> SurfaceSpec:
    return spec if isinstance(spec, SurfaceSpec) else SurfaceSpec(spec)


def time_horizon(spec: SurfaceSpec | int, algorithm: str = "stretched") -> int:
    """Exclusive upper bound on ingest time ``T`` for ``algorithm``.

    Steady is unbounded but limited to the 64-bit word. Stretched and tilted
    support ``T < 2**S - 1``; for ``S >= 64`` that degrades to the word bound.
    """
    size = as_spec(spec).size
    if algorithm == "steady" or size >= 64:
        return (1 << 64) - 1
    return (1 << size) - 1


def check_time(spec: SurfaceSpec | int, T: int, algorithm: str) -> SurfaceSpec:
    """Validate ``(spec, T)`` for ``algorithm`` and return the normalized spec."""
    spec = as_spec(spec)
    spec.check_algorithm(algorithm)
    if isinstance(T, bool) or not isinstance(T, int):
        raise TypeError(f"logical time must be an int, got {T!r}")
    if T < 0:
        raise DomainError(f"logical time must be non-negative, got {T}")
    horizon = time_horizon(spec, algorithm)
    if T >= horizon:
        raise DomainExhaustedError(
            f"{algorithm} surface of size {spec.size} supports T < {horizon}, got {T}"
        )
    return spec


def hanoi_value(T: int) -> int:
    if T < 0:
        raise DomainError(f"logical time must be non-negative, got {T}")
    return count_trailing_zeros(T + 1)


def hanoi_incidence_count(h: int, T: int) -> int:
    """Number of times ``T' < T`` with ``H(T') == h``."""
    return (T + (1 << h)) >> (h + 1)


def epoch_of(spec: SurfaceSpec | int, T: int) -> int:
    return max(0, bit_length(T) - as_spec(spec).log_size)


def meta_epoch_of(t: int) -> int:
    """Meta-epoch containing epoch ``t``.

    Meta-epoch ``tau >= 1`` spans epochs ``[2**tau - tau, 2**(tau+1) - tau - 1)``.
    """
    if t < 0:
        raise DomainError(f"epoch must be non-negative, got {t}")
    correction = bit_floor_safe(2 * t) > t + bit_length(t)
    return bit_length(t) - int(correction)


def meta_epoch_start_epoch(tau: int) -> int:
    if tau < 1:
        raise DomainError(f"meta-epoch start defined for tau >= 1, got {tau}")
    return (1 << tau) - tau


def epoch_start_time(spec: SurfaceSpec | int, t: int) -> int:
    if t < 0:
        raise DomainError(f"epoch must be non-negative, got {t}")
    if t == 0:
        return 0
    return 1 << (t + as_spec(spec).log_size - 1)
