"""Protocol data types shared by the mainchain ledger and the withdrawal
pipeline: sidechain parameters, certificates and their contents, certifier
records, and withdrawal-epoch arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core.hashing import Hash, hash_fields
from .core.keys import AggregatedSignature, PubKey
from .errors import BeforeStart, InvalidParams


@dataclass(frozen=True)
class SidechainParams:
    """Immutable per-sidechain configuration fixed at creation time."""

    ledger_id: str
    start_block: int
    epoch_len: int
    prep_len: int
    cert_depo: int
    cert_group_size: int
    cert_fee: int          # percentage of each backward transfer
    min_transfer_amount: int
    dispute_len: int       # certificate windows that can report fraud

    def validate(self) -> None:
        if not (0 < self.prep_len < self.epoch_len):
            raise InvalidParams("need 0 < prep_len < epoch_len")
        if self.cert_group_size < 1:
            raise InvalidParams("cert_group_size must be at least 1")
        if not (0 <= self.cert_fee < 100):
            raise InvalidParams("cert_fee must be a percentage in [0, 100)")
        if self.min_transfer_amount <= 0:
            raise InvalidParams("min_transfer_amount must be positive")
        if self.dispute_len < 1:
            raise InvalidParams("dispute_len must be at least 1")
        if self.start_block < 1:
            raise InvalidParams("start_block must come after genesis")
        if self.cert_depo <= 0:
            raise InvalidParams("cert_depo must be positive")

    @property
    def max_cert_amount(self) -> int:
        """Per-certificate withdrawal cap: half the group's total deposit."""
        return self.cert_group_size * self.cert_depo // 2

    @property
    def quorum(self) -> int:
        """Minimum signatures for certificate acceptance."""
        return self.cert_group_size // 2 + 1

    @property
    def max_transfers_per_cert(self) -> int:
        return self.max_cert_amount // self.min_transfer_amount


def withdrawal_epoch_of(params: SidechainParams, height: int) -> tuple[int, int]:
    """Map a mainchain height to (withdrawal epoch, offset within it).

    Offsets below ``prep_len`` are the preparation stage, the rest the
    signing stage.

    Raises:
        BeforeStart: for heights before the first epoch.
    """
    if height < params.start_block:
        raise BeforeStart(f"height {height} precedes start block {params.start_block}")
    delta = height - params.start_block
    return delta // params.epoch_len, delta % params.epoch_len


def is_preparation(params: SidechainParams, offset: int) -> bool:
    return offset < params.prep_len


def epoch_first_height(params: SidechainParams, epoch: int) -> int:
    return params.start_block + epoch * params.epoch_len


@dataclass(frozen=True)
class BackwardTransfer:
    """A single sidechain-to-mainchain payout, net of the certifier fee."""

    amount: int
    receiver: str


@dataclass(frozen=True)
class FraudReport:
    """Points at an accepted certificate that diverges from the one signed
    in the sidechain."""

    reported_epoch: int
    reported_cert_index: int
    fraudulent_cert_hash: Hash


@dataclass(frozen=True)
class CrossChainCertificate:
    """The container moving withdrawal data from a sidechain to the mainchain.

    The payload hash deliberately excludes the aggregated signature: it is
    both the message certifiers sign and the value fraud comparison runs on.
    """

    sidechain_id: str
    epoch_number: int
    cert_index: int
    bt_list: tuple[BackwardTransfer, ...]
    certifier_withdrawals: tuple[PubKey, ...]
    fraud_reports: tuple[FraudReport, ...]
    agg_sig: AggregatedSignature | None = None

    def payload_hash(self) -> Hash:
        return hash_fields(
            "cccert",
            self.sidechain_id,
            self.epoch_number,
            self.cert_index,
            [(bt.amount, bt.receiver) for bt in self.bt_list],
            [pk.value for pk in self.certifier_withdrawals],
            [(fr.reported_epoch, fr.reported_cert_index, fr.fraudulent_cert_hash)
             for fr in self.fraud_reports],
        )

    def total_amount(self) -> int:
        return sum(bt.amount for bt in self.bt_list)

    def tx_hash(self) -> Hash:
        """Identity as a mainchain transaction; includes the signature set."""
        tags = [p.tag for p in self.agg_sig.parts] if self.agg_sig else []
        return hash_fields("tx-cccert", self.payload_hash(), tags)

    def key(self) -> tuple[str, int, int]:
        return (self.sidechain_id, self.epoch_number, self.cert_index)

    def with_signature(self, agg: AggregatedSignature) -> "CrossChainCertificate":
        return CrossChainCertificate(
            self.sidechain_id, self.epoch_number, self.cert_index,
            self.bt_list, self.certifier_withdrawals, self.fraud_reports, agg,
        )


@dataclass
class CertifierRecord:
    """Lifecycle state of one certifier registration on the mainchain."""

    pub_key: PubKey
    sidechain: str
    account: str
    deposit: int
    registered_at_epoch: int
    # First epoch in which the certifier is no longer selectable; None while
    # no withdrawal was requested.
    withdrawal_effective_epoch: int | None = None
    withdrawal_requested_at: tuple[int, int] | None = None
    punished: bool = False
    released: bool = False

    @property
    def active(self) -> bool:
        return not self.punished and not self.released

    def eligible_for(self, epoch: int) -> bool:
        """Registration/revocation gate only; dispute exclusion is separate."""
        if not self.active:
            return False
        if self.registered_at_epoch >= epoch:
            return False
        if self.withdrawal_effective_epoch is not None and \
                self.withdrawal_effective_epoch <= epoch:
            return False
        return True
