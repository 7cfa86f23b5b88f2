"""Stretched curation: keep the first ``n(T)`` instances of every hanoi value.

At epoch 0 the buffer is cut into segments of sizes ``s + 1, H(0) + 1, H(1) + 1,
..., H(S/2 - 2) + 1``, one bunch per segment; site ``k_b + h`` of a bunch holds
hanoi value ``h``. Each meta-epoch the smallest segments are subsumed by their
left neighbours, halving the bunches reserved per hanoi value to
``S >> (tau + 1)``. Further instances are discarded, so the earliest survive.

The ``i``-th instance of ``h`` always maps to site ``bunch_site(S, i) + h``;
only whether it is stored depends on the meta-epoch at ingest. Unlike tilted,
no correction for not-yet-invaded segments is needed here: the first-n
retention check passes on the full domain with the plain reservation count.

Supported ingest times are ``T < 2**S - 1``.
"""

from __future__ import annotations

from typing import Iterator

from . import _kernels
from .chronology import SurfaceSpec, as_spec, check_time

ALGORITHM = "stretched"
_CODE = _kernels.STRETCHED


def bunch_site(spec: SurfaceSpec | int, b_l: int) -> int:
    """Leftmost site of the bunch filled ``b_l``-th (largest initial segment first)."""
    return _kernels.bunch_site(as_spec(spec).size, b_l)


def site_select(spec: SurfaceSpec | int, T: int) -> int | None:
    """Site for the item ingested at time ``T``, or ``None`` to discard it.

    >>> [site_select(32, T) for T in (2, 12, 31, 33)]
    [17, 22, 5, None]
    """
    spec = check_time(spec, T, ALGORITHM)
    k = _kernels.site(_CODE, spec.size, T)
    return None if k < 0 else k


def iter_lookup(spec: SurfaceSpec | int, T: int) -> Iterator[int | None]:
    spec = check_time(spec, T, ALGORITHM)
    for v in _kernels.iter_lookup(_CODE, spec.size, T):
        yield None if v < 0 else v


def lookup(spec: SurfaceSpec | int, T: int) -> list[int | None]:
    spec = check_time(spec, T, ALGORITHM)
    return [None if v < 0 else v for v in _kernels.lookup(_CODE, spec.size, T)]
