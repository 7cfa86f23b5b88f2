"""Tilted curation: keep the last ``n(T)`` instances of every hanoi value.

Reuses the stretched reservation layout, but once a hanoi value's reserved
bunches are full its instances cycle through them as a ring buffer,
overwriting the oldest. Site selection never discards within the supported
domain ``T < 2**S - 1``; the ``Optional`` return type only keeps the signature
uniform with the other algorithms.

The lookup decoder distinguishes four situations per site (invaded segment,
invaded segment to be overwritten later this epoch, invading segment, invading
segment to be refilled later this epoch). At most one can apply; the kernels
raise :class:`ScenarioConflict` otherwise.
"""

from __future__ import annotations

from typing import Iterator

from . import _kernels
from .chronology import SurfaceSpec, check_time

ALGORITHM = "tilted"
_CODE = _kernels.TILTED

ScenarioConflict = _kernels.ScenarioConflict


def site_select(spec: SurfaceSpec | int, T: int) -> int | None:
    """Site for the item ingested at time ``T``.

    >>> [site_select(32, T) for T in (2, 32, 39, 40)]
    [17, 0, 13, 7]
    """
    spec = check_time(spec, T, ALGORITHM)
    return _kernels.site(_CODE, spec.size, T)


def iter_lookup(spec: SurfaceSpec | int, T: int) -> Iterator[int | None]:
    spec = check_time(spec, T, ALGORITHM)
    for v in _kernels.iter_lookup(_CODE, spec.size, T):
        yield None if v < 0 else v


def lookup(spec: SurfaceSpec | int, T: int) -> list[int | None]:
    spec = check_time(spec, T, ALGORITHM)
    return [None if v < 0 else v for v in _kernels.lookup(_CODE, spec.size, T)]
