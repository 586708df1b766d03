"""Primitive building blocks shared by both ledgers."""

from .hashing import ChainRng, Hash, canonical_bytes, hash_bytes, hash_fields
from .keys import (
    CONCAT_SCHEME,
    AggregatedSignature,
    KeyPair,
    PubKey,
    Signature,
    aggregate_signatures,
    sign,
    verify_aggregate,
    verify_signature,
)
from .merkle import MerklePath, PathStep, merkle_path, merkle_root, verify_merkle_path

__all__ = [
    "AggregatedSignature",
    "CONCAT_SCHEME",
    "ChainRng",
    "Hash",
    "KeyPair",
    "MerklePath",
    "PathStep",
    "PubKey",
    "Signature",
    "aggregate_signatures",
    "canonical_bytes",
    "hash_bytes",
    "hash_fields",
    "merkle_path",
    "merkle_root",
    "sign",
    "verify_aggregate",
    "verify_merkle_path",
    "verify_signature",
]
