"""Primitive layer: hashing, Merkle proofs, simulated signatures."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pegsim.core import (
    AggregatedSignature,
    Hash,
    KeyPair,
    aggregate_signatures,
    hash_bytes,
    hash_fields,
    merkle_path,
    merkle_root,
    sign,
    verify_aggregate,
    verify_merkle_path,
    verify_signature,
)
from pegsim.core.merkle import MerklePath, PathStep
from pegsim.errors import EmptyLeaves, IndexOutOfRange, MixedMessages


def h(data: bytes) -> Hash:
    return hash_bytes(data)


def parent(left: Hash, right: Hash) -> Hash:
    # Independent of the merkle module: the combining rule spelled out by hand.
    return hash_bytes(left.value + right.value)


class TestHashing:
    def test_deterministic(self):
        assert hash_bytes(b"abc") == hash_bytes(b"abc")
        assert hash_fields("x", 1, b"y") == hash_fields("x", 1, b"y")

    def test_fixed_width(self):
        assert len(hash_bytes(b"").value) == 32

    def test_collision_scan_10k_random_inputs(self):
        rng = random.Random(1234)
        inputs = {rng.randbytes(24) for _ in range(10_000)}
        outputs = {hash_bytes(x).value for x in inputs}
        assert len(outputs) == len(inputs)

    def test_length_prefixing_separates_fields(self):
        # "ab","c" and "a","bc" must not collide under the canonical encoding.
        assert hash_fields("ab", "c") != hash_fields("a", "bc")
        assert hash_fields(1, 2) != hash_fields(2, 1)

    def test_total_order_properties(self):
        rng = random.Random(7)
        hashes = [hash_bytes(rng.randbytes(8)) for _ in range(50)]
        for a in hashes[:10]:
            for b in hashes[:10]:
                # antisymmetry
                if a < b:
                    assert not b < a
                for c in hashes[:10]:
                    # transitivity
                    if a < b and b < c:
                        assert a < c
        assert min(hashes).value == min(x.value for x in hashes)

    def test_rejects_negative_int(self):
        with pytest.raises(ValueError):
            hash_fields(-1)


class TestMerkleRoot:
    def test_single_leaf_uses_duplication_rule(self):
        leaf = h(b"only")
        assert merkle_root([leaf]) == parent(leaf, leaf)

    def test_four_leaves_hand_computed(self):
        leaves = [h(bytes([i])) for i in range(4)]
        left = parent(leaves[0], leaves[1])
        right = parent(leaves[2], leaves[3])
        assert merkle_root(leaves) == parent(left, right)

    def test_three_leaves_duplicates_last(self):
        leaves = [h(bytes([i])) for i in range(3)]
        left = parent(leaves[0], leaves[1])
        right = parent(leaves[2], leaves[2])
        assert merkle_root(leaves) == parent(left, right)

    def test_permutations_change_root(self):
        import itertools

        leaves = [h(bytes([i])) for i in range(4)]
        roots = {merkle_root(list(p)).value for p in itertools.permutations(leaves)}
        assert len(roots) == 24

    def test_empty_rejected(self):
        with pytest.raises(EmptyLeaves):
            merkle_root([])


class TestMerklePath:
    def test_single_leaf_path_has_one_sibling_and_verifies(self):
        leaf = h(b"solo")
        path = merkle_path([leaf], 0)
        assert len(path.siblings) == 1
        assert verify_merkle_path(leaf, path, merkle_root([leaf]))

    def test_four_leaves_every_index_verifies(self):
        leaves = [h(bytes([i])) for i in range(4)]
        root = merkle_root(leaves)
        for i in range(4):
            path = merkle_path(leaves, i)
            assert len(path.siblings) == 2
            assert verify_merkle_path(leaves[i], path, root)

    def test_tampered_leaf_fails(self):
        leaves = [h(bytes([i])) for i in range(4)]
        root = merkle_root(leaves)
        path = merkle_path(leaves, 2)
        assert not verify_merkle_path(h(b"tampered"), path, root)

    def test_random_root_rejected_1000_trials(self):
        rng = random.Random(99)
        leaves = [h(bytes([i])) for i in range(8)]
        path = merkle_path(leaves, 3)
        leaf = leaves[3]
        for _ in range(1000):
            bogus = hash_bytes(rng.randbytes(16))
            assert not verify_merkle_path(leaf, path, bogus)

    def test_every_flag_flip_fails(self):
        leaves = [h(bytes([i])) for i in range(4)]
        root = merkle_root(leaves)
        path = merkle_path(leaves, 2)
        for flip_at in range(len(path.siblings)):
            mutated = tuple(
                PathStep(s.sibling, not s.sibling_on_left) if i == flip_at else s
                for i, s in enumerate(path.siblings)
            )
            assert not verify_merkle_path(
                leaves[2], MerklePath(path.leaf_index, mutated), root
            )

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            merkle_path([h(b"x")], 1)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 32), st.data())
    def test_round_trip_and_single_bit_mutation(self, n, data):
        leaves = [hash_fields("leaf", i) for i in range(n)]
        idx = data.draw(st.integers(0, n - 1))
        root = merkle_root(leaves)
        path = merkle_path(leaves, idx)
        assert verify_merkle_path(leaves[idx], path, root)
        bit = data.draw(st.integers(0, 255))
        raw = bytearray(leaves[idx].value)
        raw[bit // 8] ^= 1 << (bit % 8)
        assert not verify_merkle_path(Hash(bytes(raw)), path, root)


class TestSignatures:
    def test_sign_verify_round_trip(self):
        kp = KeyPair.from_seed("alice")
        msg = h(b"message")
        sig = sign(kp, msg)
        assert verify_signature(sig, kp.public, msg)

    def test_wrong_message_or_signer_rejected(self):
        kp, other = KeyPair.from_seed("a"), KeyPair.from_seed("b")
        msg = h(b"m1")
        sig = sign(kp, msg)
        assert not verify_signature(sig, kp.public, h(b"m2"))
        assert not verify_signature(sig, other.public, msg)

    def test_aggregate_empty(self):
        assert aggregate_signatures([]).parts == ()

    def test_aggregate_preserves_order(self):
        msg = h(b"m")
        kps = [KeyPair.from_seed(f"k{i}") for i in range(3)]
        agg = aggregate_signatures([sign(kp, msg) for kp in kps])
        assert [p.signer for p in agg.parts] == [kp.public for kp in kps]

    def test_dedup_all_two_duplicate_arrangements_of_three(self):
        # Oracle: for every placement of one duplicated signer among three
        # slots, the aggregate keeps exactly the distinct signers, first
        # occurrence order.
        msg = h(b"m")
        a, b = KeyPair.from_seed("a"), KeyPair.from_seed("b")
        for arrangement in [(a, a, b), (a, b, a), (b, a, a)]:
            sigs = [sign(kp, msg) for kp in arrangement]
            agg = aggregate_signatures(sigs)
            expected = []
            for kp in arrangement:
                if kp.public not in expected:
                    expected.append(kp.public)
            assert [p.signer for p in agg.parts] == expected
            assert len(agg.parts) == 2

    def test_mixed_messages_rejected(self):
        kp = KeyPair.from_seed("a")
        with pytest.raises(MixedMessages):
            aggregate_signatures([sign(kp, h(b"1")), sign(kp, h(b"2"))])

    def test_quorum_3_of_5(self):
        msg = h(b"cert")
        kps = [KeyPair.from_seed(f"c{i}") for i in range(5)]
        allowed = {kp.public for kp in kps}
        agg = aggregate_signatures([sign(kp, msg) for kp in kps[:3]])
        assert verify_aggregate(agg, msg, allowed, quorum=3)

    def test_below_quorum(self):
        msg = h(b"cert")
        kps = [KeyPair.from_seed(f"c{i}") for i in range(5)]
        allowed = {kp.public for kp in kps}
        agg = aggregate_signatures([sign(kp, msg) for kp in kps[:2]])
        assert not verify_aggregate(agg, msg, allowed, quorum=3)

    def test_any_outside_signer_invalidates(self):
        # Enumerate which of the three signers sits outside the allowed set;
        # each case must fail even though three signatures verify.
        msg = h(b"cert")
        kps = [KeyPair.from_seed(f"c{i}") for i in range(3)]
        sigs = [sign(kp, msg) for kp in kps]
        agg = aggregate_signatures(sigs)
        for outsider in range(3):
            allowed = {kp.public for i, kp in enumerate(kps) if i != outsider}
            allowed.add(KeyPair.from_seed("extra").public)
            assert not verify_aggregate(agg, msg, allowed, quorum=3)
            assert not verify_aggregate(agg, msg, allowed, quorum=2)

    def test_garbage_parts_ignored_not_counted(self):
        msg = h(b"cert")
        kps = [KeyPair.from_seed(f"c{i}") for i in range(3)]
        allowed = {kp.public for kp in kps}
        good = [sign(kp, msg) for kp in kps[:2]]
        forged = sign(kps[2], h(b"other"))  # wrong message: does not verify
        agg = AggregatedSignature(parts=tuple(good + [forged]))
        assert not verify_aggregate(agg, msg, allowed, quorum=3)
        assert verify_aggregate(agg, msg, allowed, quorum=2)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(1, 8), st.integers(1, 8))
    def test_aggregation_monotonicity(self, n_signed, quorum):
        # Adding a valid in-set signature never flips the verdict to False.
        msg = h(b"mono")
        kps = [KeyPair.from_seed(f"m{i}") for i in range(9)]
        allowed = {kp.public for kp in kps}
        sigs = [sign(kp, msg) for kp in kps[:n_signed]]
        before = verify_aggregate(aggregate_signatures(sigs), msg, allowed, quorum)
        extra = sign(kps[8], msg)
        after = verify_aggregate(aggregate_signatures(sigs + [extra]), msg, allowed, quorum)
        assert after or not before
