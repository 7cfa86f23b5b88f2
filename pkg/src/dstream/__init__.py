"""Metadata-free stream curation into fixed power-of-two buffers.

Three algorithms choose where each streamed item goes (``site_select``) and
recover every slot's ingest time from the buffer position alone
(``lookup``): ``steady`` spreads retained items evenly, ``stretched`` favours
old items, and ``tilted`` favours recent ones.

>>> from dstream import Surface
>>> surf = Surface("tilted", 8)
>>> surf.ingest_many(range(20))
>>> sorted(r.payload for r in surf.read_retained())
[7, 11, 13, 14, 15, 17, 18, 19]
"""

from . import quality, steady, stretched, tilted
from ._kernels import BACKEND, ScenarioConflict
from .chronology import (
    ALGORITHMS,
    DomainError,
    DomainExhaustedError,
    SurfaceSpec,
    epoch_of,
    hanoi_value,
    meta_epoch_of,
    time_horizon,
)
from .surface import PackedSurface, RetainedRecord, Surface

ALGORITHM_MODULES = {"steady": steady, "stretched": stretched, "tilted": tilted}


def site_select(algorithm: str, size: SurfaceSpec | int, T: int) -> int | None:
    return ALGORITHM_MODULES[algorithm].site_select(size, T)


def lookup(algorithm: str, size: SurfaceSpec | int, T: int) -> list[int | None]:
    return ALGORITHM_MODULES[algorithm].lookup(size, T)


__all__ = [
    "ALGORITHMS",
    "ALGORITHM_MODULES",
    "BACKEND",
    "DomainError",
    "DomainExhaustedError",
    "PackedSurface",
    "RetainedRecord",
    "ScenarioConflict",
    "Surface",
    "SurfaceSpec",
    "epoch_of",
    "hanoi_value",
    "lookup",
    "meta_epoch_of",
    "quality",
    "site_select",
    "steady",
    "stretched",
    "tilted",
    "time_horizon",
]
__version__ = "0.1.0"
