"""Hashing and canonical byte serialization.

Every structure that gets hashed anywhere in the protocol is first turned
into bytes by the same rule: fields in declaration order, each one
length-prefixed with a 4-byte big-endian length; integers encode as 8-byte
big-endian unsigned values; strings as UTF-8; sequences as a 4-byte count
followed by their length-prefixed items. The rule is bit-exact so hash
values are reproducible across machines and runs.
"""

from __future__ import annotations

import hashlib
import struct
from dataclasses import dataclass, field


@dataclass(frozen=True, order=True)
class Hash:
    """A 32-byte digest with bytewise total order.

    The ordering is what "smallest proof hash" and lottery-ticket sorting
    rely on, so it must be the plain lexicographic order on the raw bytes.
    """

    value: bytes

    def __post_init__(self) -> None:
        if not isinstance(self.value, bytes) or len(self.value) != 32:
            raise ValueError(f"Hash requires exactly 32 bytes, got {self.value!r}")

    def hex(self) -> str:
        return self.value.hex()

    def short(self) -> str:
        """First 8 hex chars, for logs and reports."""
        return self.value[:4].hex()

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Hash({self.short()}…)"


def hash_bytes(data: bytes) -> Hash:
    """SHA-256 of raw bytes."""
    return Hash(hashlib.sha256(data).digest())


def _item_bytes(item: object) -> bytes:
    if isinstance(item, bytes):
        return item
    if isinstance(item, Hash):
        return item.value
    if isinstance(item, str):
        return item.encode("utf-8")
    if isinstance(item, bool):
        raise TypeError("booleans have no canonical encoding; encode intent explicitly")
    if isinstance(item, int):
        if item < 0 or item >= 1 << 64:
            raise ValueError(f"canonical integers must fit in u64, got {item}")
        return struct.pack(">Q", item)
    if isinstance(item, (list, tuple)):
        parts = [struct.pack(">I", len(item))]
        for sub in item:
            encoded = _item_bytes(sub)
            parts.append(struct.pack(">I", len(encoded)) + encoded)
        return b"".join(parts)
    value = getattr(item, "value", None)
    if isinstance(value, bytes):
        return value
    raise TypeError(f"no canonical encoding for {type(item).__name__}")


def canonical_bytes(*fields: object) -> bytes:
    """Length-prefixed concatenation of the fields, in order."""
    out = []
    for f in fields:
        encoded = _item_bytes(f)
        out.append(struct.pack(">I", len(encoded)) + encoded)
    return b"".join(out)


def hash_fields(*fields: object) -> Hash:
    """Hash of the canonical serialization of the fields."""
    return hash_bytes(canonical_bytes(*fields))


@dataclass(frozen=True)
class ChainRng:
    """Deterministic hash-chain randomness for the simulator.

    Drawing n-th value for a label never depends on call order elsewhere,
    which keeps event logs byte-identical across runs.
    """

    seed: int
    _label: str = field(default="")

    def derive(self, label: str) -> "ChainRng":
        return ChainRng(self.seed, f"{self._label}/{label}")

    def hash_at(self, index: int) -> Hash:
        return hash_fields("rng", self.seed, self._label, index)

    def int_at(self, index: int, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        return int.from_bytes(self.hash_at(index).value, "big") % bound
