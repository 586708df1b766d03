"""Binary Merkle trees with inclusion proofs.

Construction rules:
- Parent nodes hash the plain concatenation of their children's 32 bytes.
- A level with an odd node count duplicates its last node (Bitcoin-style).
- A single-leaf tree still performs one combining round, so its root is
  ``hash_bytes(leaf || leaf)`` and every proof contains at least one sibling.

Proof verification is a pure fold over the siblings: the side flag says on
which side the sibling sits, and the recomputed root is compared to the
expected one. Malformed paths simply fail to verify.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import EmptyLeaves, IndexOutOfRange
from .hashing import Hash, hash_bytes


@dataclass(frozen=True)
class PathStep:
    """One sibling on the way from a leaf to the root.

    ``sibling_on_left`` is True when the sibling is the left child, i.e.
    the running hash is the right input of the parent.
    """

    sibling: Hash
    sibling_on_left: bool


@dataclass(frozen=True)
class MerklePath:
    leaf_index: int
    siblings: tuple[PathStep, ...]


def _parent(left: Hash, right: Hash) -> Hash:
    return hash_bytes(left.value + right.value)


def merkle_root(leaves: list[Hash]) -> Hash:
    """Root of the tree over the given leaf hashes, in order.

    Raises:
        EmptyLeaves: if ``leaves`` is empty.
    """
    if not leaves:
        raise EmptyLeaves("merkle tree needs at least one leaf")
    level = list(leaves)
    while True:
        if len(level) % 2 == 1:
            level.append(level[-1])
        level = [_parent(level[i], level[i + 1]) for i in range(0, len(level), 2)]
        if len(level) == 1:
            return level[0]


def merkle_path(leaves: list[Hash], index: int) -> MerklePath:
    """Inclusion proof for ``leaves[index]`` against ``merkle_root(leaves)``.

    Raises:
        EmptyLeaves: if ``leaves`` is empty.
        IndexOutOfRange: if ``index`` is not a valid leaf position.
    """
    if not leaves:
        raise EmptyLeaves("merkle tree needs at least one leaf")
    if index < 0 or index >= len(leaves):
        raise IndexOutOfRange(f"leaf index {index} out of range for {len(leaves)} leaves")

    steps: list[PathStep] = []
    level = list(leaves)
    pos = index
    while True:
        if len(level) % 2 == 1:
            level.append(level[-1])
        sibling_pos = pos ^ 1
        steps.append(PathStep(level[sibling_pos], sibling_on_left=sibling_pos < pos))
        level = [_parent(level[i], level[i + 1]) for i in range(0, len(level), 2)]
        pos //= 2
        if len(level) == 1:
            return MerklePath(leaf_index=index, siblings=tuple(steps))


def verify_merkle_path(leaf: Hash, path: MerklePath, root: Hash) -> bool:
    """True iff the path recomputes ``root`` from ``leaf``.

    Never raises; any malformed path yields False.
    """
    if not isinstance(path, MerklePath) or not path.siblings:
        return False
    current = leaf
    for step in path.siblings:
        if not isinstance(step.sibling, Hash):
            return False
        if step.sibling_on_left:
            current = _parent(step.sibling, current)
        else:
            current = _parent(current, step.sibling)
    return current == root
