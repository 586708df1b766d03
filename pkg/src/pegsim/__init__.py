"""pegsim: a two-ledger sidechain protocol engine and deterministic simulator.

Implements a mainchain ledger with per-sidechain safeguard accounting, a
proof-of-stake reference sidechain bound to the mainchain by full block
referencing, and the certifier-based cross-chain transfer pipeline with
withdrawal epochs, quorum certificates and fraud disputes — plus a
discrete-event harness that drives both ledgers in lockstep and audits
global invariants after every block.
"""

__version__ = "0.1.0"
