"""Simulated signature scheme with aggregation.

The protocol's security argument treats unforgeability as an assumption, so
the artifact ships a deterministic stand-in instead of real curve crypto:
signing derives a validity tag from the signer's key and the message, and
verification recomputes that construction. Actors inside the simulation only
ever produce signatures through :func:`sign` with keypairs they hold, which
is exactly the honest-interface contract the protocol needs.

Aggregation is the default concatenation scheme: the aggregate is the list
of personal signatures, deduplicated by signer, order preserved. The
``scheme_id`` tag leaves room for threshold schemes without changing the
wire shape.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import MixedMessages
from .hashing import Hash, hash_fields

CONCAT_SCHEME = "concat-v1"


@dataclass(frozen=True, order=True)
class PubKey:
    """Opaque 32-byte identity token."""

    value: bytes

    def short(self) -> str:
        return self.value[:4].hex()

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"PubKey({self.short()}…)"


@dataclass(frozen=True)
class KeyPair:
    secret: bytes
    public: PubKey

    @classmethod
    def from_seed(cls, seed: str | bytes) -> "KeyPair":
        secret = hash_fields("keypair-secret", seed).value
        public = PubKey(hash_fields("keypair-public", secret).value)
        return cls(secret=secret, public=public)


@dataclass(frozen=True)
class Signature:
    signer: PubKey
    message: Hash
    tag: Hash


@dataclass(frozen=True)
class AggregatedSignature:
    parts: tuple[Signature, ...]
    scheme_id: str = CONCAT_SCHEME

    def signers(self) -> list[PubKey]:
        return [p.signer for p in self.parts]


def _expected_tag(signer: PubKey, message: Hash) -> Hash:
    return hash_fields("signature-tag", signer.value, message)


def sign(keypair: KeyPair, message: Hash) -> Signature:
    return Signature(signer=keypair.public, message=message,
                     tag=_expected_tag(keypair.public, message))


def verify_signature(sig: Signature, signer: PubKey, message: Hash) -> bool:
    """True iff ``sig`` was produced by ``sign`` for this signer and message."""
    return (
        sig.signer == signer
        and sig.message == message
        and sig.tag == _expected_tag(signer, message)
    )


def aggregate_signatures(sigs: list[Signature]) -> AggregatedSignature:
    """Concatenate personal signatures over one message.

    Duplicate signers are silently dropped, keeping the first occurrence;
    input order is otherwise preserved.

    Raises:
        MixedMessages: if the signatures do not share one message hash.
    """
    messages = {s.message for s in sigs}
    if len(messages) > 1:
        raise MixedMessages("aggregation requires signatures over a single message")
    seen: set[PubKey] = set()
    parts: list[Signature] = []
    for s in sigs:
        if s.signer in seen:
            continue
        seen.add(s.signer)
        parts.append(s)
    return AggregatedSignature(parts=tuple(parts))


def verify_aggregate(agg: AggregatedSignature, message: Hash,
                     allowed: set[PubKey], quorum: int) -> bool:
    """Quorum check for an aggregated signature.

    True iff at least ``quorum`` distinct signers contributed verifying
    signatures over ``message`` and every verifying signer belongs to
    ``allowed``. A verifying signature from outside the allowed set makes
    the whole aggregate invalid rather than being ignored.
    """
    if quorum < 1:
        raise ValueError("quorum must be at least 1")
    verifying: set[PubKey] = set()
    for part in agg.parts:
        if not verify_signature(part, part.signer, message):
            continue
        if part.signer not in allowed:
            return False
        verifying.add(part.signer)
    return len(verifying) >= quorum
