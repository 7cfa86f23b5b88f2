"""Fixed-capacity item storage driven by one of the curation algorithms.

A :class:`Surface` holds exactly ``S`` payload slots and a logical-time counter,
nothing else. Where an item goes is decided by site selection; which item a
slot holds is recovered by lookup. Unfilled slots contain ``fill`` and are
told apart only by lookup, never by inspecting payloads.
"""

from __future__ import annotations

import base64
import json
from dataclasses import dataclass
from typing import Any, Generic, Iterator, TypeVar

from . import steady, stretched, tilted
from .chronology import DomainExhaustedError, SurfaceSpec, as_spec, time_horizon

Item = TypeVar("Item")

_MODULES = {"steady": steady, "stretched": stretched, "tilted": tilted}


@dataclass(frozen=True)
class RetainedRecord(Generic[Item]):
    site: int
    ingest_time: int
    payload: Item


class Surface(Generic[Item]):
    """A fixed-size curated buffer.

    >>> surf = Surface("steady", 32)
    >>> [surf.ingest(x) for x in "abc"]
    [0, 1, 6]
    >>> [(r.site, r.ingest_time, r.payload) for r in surf.read_retained()]
    [(0, 0, 'a'), (1, 1, 'b'), (6, 2, 'c')]
    """

    def __init__(
        self,
        algorithm: str,
        size: SurfaceSpec | int,
        fill: Any = None,
    ) -> None:
        self.spec = as_spec(size)
        self.spec.check_algorithm(algorithm)
        self.algorithm = algorithm
        self._algo = _MODULES[algorithm]
        self.slots: list[Any] = [fill] * self.spec.size
        self.time = 0

    @property
    def size(self) -> int:
        return self.spec.size

    def __len__(self) -> int:
        return self.spec.size

    def __repr__(self) -> str:
        return f"Surface({self.algorithm!r}, {self.size}, time={self.time})"

    def can_ingest(self) -> bool:
        # Keep the post-ingest counter inside the lookup domain.
        return self.time + 1 < time_horizon(self.spec, self.algorithm)

    def ingest(self, item: Item) -> int | None:
        """Store ``item`` at its selected site (or drop it) and advance time."""
        if not self.can_ingest():
            raise DomainExhaustedError(
                f"{self.algorithm} surface of size {self.size} cannot ingest "
                f"past T={self.time}"
            )
        k = self._algo.site_select(self.spec, self.time)
        if k is not None:
            self.slots[k] = item
        self.time += 1
        return k

    def ingest_many(self, items) -> None:
        for item in items:
            self.ingest(item)

    def lookup(self) -> list[int | None]:
        return self._algo.lookup(self.spec, self.time)

    def read_retained(self) -> list[RetainedRecord[Item]]:
        return [
            RetainedRecord(k, t, self.slots[k])
            for k, t in enumerate(self.lookup())
            if t is not None
        ]

    def __iter__(self) -> Iterator[RetainedRecord[Item]]:
        return iter(self.read_retained())

    # Serialization: {"algo", "s", "t", "slots"} with slots in site order.

    def to_dict(self) -> dict[str, Any]:
        return {
            "algo": self.algorithm,
            "s": self.size,
            "t": self.time,
            "slots": [_encode_slot(v) for v in self.slots],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Surface:
        missing = {"algo", "s", "t", "slots"} - data.keys()
        if missing:
            raise ValueError(f"serialized surface missing keys {sorted(missing)}")
        surf: Surface = cls(data["algo"], int(data["s"]))
        T = data["t"]
        if not isinstance(T, int) or T < 0 or T >= time_horizon(surf.spec, surf.algorithm):
            raise ValueError(f"invalid logical time {T!r} for {surf!r}")
        slots = data["slots"]
        if len(slots) != surf.size:
            raise ValueError(f"expected {surf.size} slots, got {len(slots)}")
        surf.slots = [_decode_slot(v) for v in slots]
        surf.time = T
        return surf

    @classmethod
    def from_json(cls, text: str) -> Surface:
        return cls.from_dict(json.loads(text))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Surface):
            return NotImplemented
        return (
            self.algorithm == other.algorithm
            and self.spec == other.spec
            and self.time == other.time
            and self.slots == other.slots
        )


def _encode_slot(value: Any) -> Any:
    if value is None or (isinstance(value, int) and not isinstance(value, bool)):
        return value
    if isinstance(value, (bytes, bytearray)):
        return base64.b64encode(bytes(value)).decode("ascii")
    raise TypeError(
        f"only int, bytes, or None payloads serialize; got {type(value).__name__}"
    )


def _decode_slot(value: Any) -> Any:
    if value is None or isinstance(value, int):
        return value
    if isinstance(value, str):
        return base64.b64decode(value.encode("ascii"), validate=True)
    raise ValueError(f"unrecognized serialized slot {value!r}")


class PackedSurface(Surface[bytes]):
    """Surface whose payloads are fixed-width byte strings in one contiguous buffer.

    Storage is exactly ``S * item_bytes`` bytes plus the counter.
    """

    def __init__(self, algorithm: str, size: SurfaceSpec | int, item_bytes: int = 1) -> None:
        if item_bytes < 1:
            raise ValueError(f"item_bytes must be positive, got {item_bytes}")
        super().__init__(algorithm, size)
        self.item_bytes = item_bytes
        self.buffer = bytearray(self.spec.size * item_bytes)

    @property  # type: ignore[override]
    def slots(self) -> list[bytes]:
        w = self.item_bytes
        return [bytes(self.buffer[k * w : (k + 1) * w]) for k in range(self.spec.size)]

    @slots.setter
    def slots(self, values) -> None:
        w = getattr(self, "item_bytes", None)
        if w is None:
            # Base initializer assigns placeholder slots before the buffer exists.
            return
        if len(values) != self.spec.size:
            raise ValueError(f"expected {self.spec.size} slots, got {len(values)}")
        for k, v in enumerate(values):
            self._write(k, v)

    def _write(self, k: int, item: bytes) -> None:
        if len(item) != self.item_bytes:
            raise ValueError(
                f"payload must be exactly {self.item_bytes} bytes, got {len(item)}"
            )
        w = self.item_bytes
        self.buffer[k * w : (k + 1) * w] = item

    def ingest(self, item: bytes) -> int | None:
        if len(item) != self.item_bytes:
            raise ValueError(
                f"payload must be exactly {self.item_bytes} bytes, got {len(item)}"
            )
        if not self.can_ingest():
            raise DomainExhaustedError(
                f"{self.algorithm} surface of size {self.size} cannot ingest "
                f"past T={self.time}"
            )
        k = self._algo.site_select(self.spec, self.time)
        if k is not None:
            self._write(k, item)
        self.time += 1
        return k

    def read_retained(self) -> list[RetainedRecord[bytes]]:
        w = self.item_bytes
        return [
            RetainedRecord(k, t, bytes(self.buffer[k * w : (k + 1) * w]))
            for k, t in enumerate(self.lookup())
            if t is not None
        ]

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> PackedSurface:
        slots = [_decode_slot(v) for v in data["slots"]]
        if not slots or not all(isinstance(v, bytes) for v in slots):
            raise ValueError("packed surfaces serialize byte payloads only")
        surf = cls(data["algo"], int(data["s"]), len(slots[0]))
        base = Surface.from_dict(data)
        surf.slots = slots
        surf.time = base.time
        return surf
