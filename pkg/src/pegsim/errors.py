"""Exception types raised by the protocol engine.

Every rule violation maps to a distinct class so callers (and tests) can
match on the exact failure instead of parsing messages.
"""


class PegError(Exception):
    """Base class for all protocol and simulator errors."""


# -- primitives ------------------------------------------------------------

class EmptyLeaves(PegError):
    """Merkle tree construction requires at least one leaf."""


class IndexOutOfRange(PegError):
    """Requested leaf index does not exist in the tree."""


class MixedMessages(PegError):
    """Signatures over different messages cannot be aggregated."""


# -- mainchain ledger ------------------------------------------------------

class DuplicateLedgerId(PegError):
    """Sidechain identifier is already registered."""


class InvalidParams(PegError):
    """Sidechain creation parameters violate their constraints."""


class InsufficientDeploymentFee(PegError):
    """Burned fee is below the configured deployment fee."""


class UnknownSidechain(PegError):
    """No sidechain registered under this identifier."""


class InsufficientBalance(PegError):
    """Account balance is below the requested amount."""


class BadSignature(PegError):
    """Signature does not verify for the claimed signer and message."""


class WrongDepositAmount(PegError):
    """Certifier deposit must equal the sidechain's fixed deposit."""


class AlreadyRegistered(PegError):
    """Key is already registered as a certifier for this sidechain."""


class UnknownCertifier(PegError):
    """No certifier record for this key and sidechain."""


class WithdrawalAlreadyRequested(PegError):
    """Certifier already has a pending revocation."""


class AlreadyPunished(PegError):
    """Punished certifiers cannot act; their deposit is destroyed."""


class DuplicateCertificate(PegError):
    """A certificate for this (sidechain, epoch, index) was already accepted."""


class QuorumNotMet(PegError):
    """Aggregated signature does not reach quorum for the assigned group."""


class ExceedsMaxCertAmount(PegError):
    """Certificate total exceeds the per-certificate withdrawal cap."""


class ExceedsSafeguard(PegError):
    """Certificate total exceeds the sidechain's safeguard balance."""


class BelowMinTransfer(PegError):
    """Transfer amount is below the sidechain minimum."""


class OutsideAcceptanceWindow(PegError):
    """Certificate submitted outside its epoch's acceptance window."""


class InvalidFraudReport(PegError):
    """Fraud report does not match an accepted certificate in its window."""


class InvalidTx(PegError):
    """Transaction at the given index failed validation."""

    def __init__(self, index: int, reason: Exception | str):
        self.index = index
        self.reason = reason
        super().__init__(f"transaction {index} invalid: {reason}")


class NotHeavier(PegError):
    """Fork does not carry strictly more cumulative work than the tip."""


class UnknownAncestor(PegError):
    """Fork does not attach to any block on the active chain."""


class BeforeStart(PegError):
    """Height precedes the sidechain's first withdrawal epoch."""


# -- sidechain consensus ---------------------------------------------------

class ZeroStake(PegError):
    """Slot leader selection needs a positive total stake."""


class WrongLeader(PegError):
    """Block forger is not the scheduled slot leader."""


class ReferenceGap(PegError):
    """Mainchain references must extend the cursor contiguously."""


class UnknownMcBlock(PegError):
    """Referenced mainchain block is not on the active mainchain."""


class MissingSyncedTx(PegError):
    """Referenced mainchain block's sidechain transactions were not synced."""


class BadMerklePath(PegError):
    """Synced transaction's inclusion path does not verify."""


class MalformedReference(PegError):
    """Reference carries a header or synced payload it should not."""


class NotLeader(PegError):
    """Forging attempted by a stakeholder who does not own the slot."""


class NotASuffix(PegError):
    """Reverted mainchain blocks must form a suffix of referenced history."""


# -- withdrawal pipeline ---------------------------------------------------

class EmptyRange(PegError):
    """Epoch randomness needs at least one preparation-stage block."""


class EpochNotClosed(PegError):
    """Backward transfers can be collected only after the preparation stage."""


class OversizedTransfer(PegError):
    """A single backward transfer exceeds the per-certificate cap."""


class NotGroupMember(PegError):
    """Signer is not a member of the certificate's certifier group."""


class WrongStage(PegError):
    """Operation attempted outside its epoch stage."""


class DuplicateSignature(PegError):
    """Certifier already submitted a signature for this certificate."""


class CertNotAccepted(PegError):
    """Rewards require a mainchain-accepted, synced-back certificate."""


# -- simulator -------------------------------------------------------------

class ConfigError(PegError):
    """Scenario configuration is malformed or inconsistent."""


class InvariantViolation(PegError):
    """A global invariant failed during simulation."""

    def __init__(self, step: int, findings: list[str]):
        self.step = step
        self.findings = findings
        super().__init__(f"invariant violation at step {step}: " + "; ".join(findings))
