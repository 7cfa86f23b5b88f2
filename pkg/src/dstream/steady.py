"""Steady curation: keep every item whose hanoi value is at least the current epoch.

Buffer layout: bunch 0 is one segment of ``s + 1`` sites; bunch ``b >= 1`` holds
``2**(b-1)`` segments of ``s - b`` sites (``s = log2(S)``). The ``i``-th
instance of hanoi value ``h`` goes to segment ``i`` in fill order, at offset
``h mod width``, which is exactly where the instance of ``h = t - 1`` being
retired this epoch sits. Steady supports indefinite ingest, up to the 64-bit
word.

Site selection and lookup run on the compiled kernels when available.
"""

from __future__ import annotations

from typing import Iterator

from . import _kernels
from .chronology import SurfaceSpec, check_time

ALGORITHM = "steady"
_CODE = _kernels.STEADY


def site_select(spec: SurfaceSpec | int, T: int) -> int | None:
    """Site for the item ingested at time ``T``, or ``None`` to discard it.

    >>> [site_select(32, T) for T in range(8)]
    [0, 1, 6, 2, 10, 7, 13, 3]
    >>> site_select(32, 32) is None
    True
    """
    spec = check_time(spec, T, ALGORITHM)
    k = _kernels.site(_CODE, spec.size, T)
    return None if k < 0 else k


def iter_lookup(spec: SurfaceSpec | int, T: int) -> Iterator[int | None]:
    """Yield, left to right, the ingest time held at each site at time ``T``."""
    spec = check_time(spec, T, ALGORITHM)
    for v in _kernels.iter_lookup(_CODE, spec.size, T):
        yield None if v < 0 else v


def lookup(spec: SurfaceSpec | int, T: int) -> list[int | None]:
    """Ingest time held at every site after ``T`` ingests (``None`` if unfilled)."""
    spec = check_time(spec, T, ALGORITHM)
    return [None if v < 0 else v for v in _kernels.lookup(_CODE, spec.size, T)]
