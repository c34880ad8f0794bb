import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from racnshare import (
    DuplicateIndexError,
    InsufficientSharesError,
    InvalidConfigError,
    LengthMismatchError,
    SecretConfig,
    Share,
    gf_add,
    gf_eval,
    gf_inv,
    gf_mul,
    reconstruct,
    split,
)

byte = st.integers(min_value=0, max_value=255)


def slow_mul(a, b):
    """Russian-peasant multiply with explicit reduction by 0x11B."""
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        if a & 0x100:
            a ^= 0x11B
        b >>= 1
    return acc


class TestFieldArithmetic:
    def test_mul_agrees_with_slow_mul_everywhere(self):
        for a in range(256):
            for b in range(256):
                assert gf_mul(a, b) == slow_mul(a, b), (a, b)

    def test_known_product(self):
        assert gf_mul(0x53, 0xCA) == 0x01

    def test_add_is_xor(self):
        assert gf_add(0b1010, 0b0110) == 0b1100
        for a in range(0, 256, 17):
            assert gf_add(a, a) == 0

    def test_inverses(self):
        for a in range(1, 256):
            assert gf_mul(a, gf_inv(a)) == 1
        with pytest.raises(ZeroDivisionError):
            gf_inv(0)

    @given(byte, byte, byte)
    def test_distributive(self, a, b, c):
        assert gf_mul(a, b ^ c) == gf_mul(a, b) ^ gf_mul(a, c)

    @given(byte, byte, byte)
    def test_associative(self, a, b, c):
        assert gf_mul(gf_mul(a, b), c) == gf_mul(a, gf_mul(b, c))

    @given(byte, byte)
    def test_commutative(self, a, b):
        assert gf_mul(a, b) == gf_mul(b, a)

    def test_horner_eval(self):
        # f(x) = 7 + 3x + x^2 at x=2: 7 ^ 3*2 ^ 4
        assert gf_eval([7, 3, 1], 2) == 7 ^ slow_mul(3, 2) ^ slow_mul(2, 2)
        assert gf_eval([0x42], 0x99) == 0x42
        assert gf_eval([5, 9], 0) == 5


class TestConfig:
    def test_accepts_valid(self):
        cfg = SecretConfig(threshold=3, share_count=5, seed=11)
        assert (cfg.threshold, cfg.share_count, cfg.seed) == (3, 5, 11)

    @pytest.mark.parametrize(
        "k,n", [(0, 5), (6, 5), (1, 0), (-1, 3), (1, 256), (300, 300)]
    )
    def test_rejects_bad_counts(self, k, n):
        with pytest.raises(InvalidConfigError):
            SecretConfig(threshold=k, share_count=n)

    def test_rejects_non_integers(self):
        with pytest.raises(InvalidConfigError):
            SecretConfig(threshold=2.0, share_count=5)
        with pytest.raises(InvalidConfigError):
            SecretConfig(threshold=2, share_count=5, seed="x")

    def test_share_index_range(self):
        with pytest.raises(InvalidConfigError):
            Share(index=0, payload=b"a")
        with pytest.raises(InvalidConfigError):
            Share(index=256, payload=b"a")


class TestSplitReconstruct:
    def test_round_trip_trials(self):
        rng = random.Random(20260818)
        for trial in range(100):
            k = rng.randint(1, 16)
            n = rng.randint(k, 20)
            secret = bytes(rng.randrange(256) for _ in range(rng.randint(1, 40)))
            shares = split(secret, SecretConfig(k, n, seed=trial))
            picked = rng.sample(shares, k)
            assert reconstruct(picked, k) == secret, trial

    def test_every_3_of_5_subset(self):
        secret = b"weights"
        shares = split(secret, SecretConfig(3, 5, seed=7))
        for subset in itertools.combinations(shares, 3):
            assert reconstruct(list(subset), 3) == secret

    def test_threshold_one_is_plaintext(self):
        shares = split(b"abc", SecretConfig(1, 4, seed=2))
        assert all(s.payload == b"abc" for s in shares)

    def test_more_shares_than_threshold_still_work(self):
        secret = b"\x00\xff\x10"
        shares = split(secret, SecretConfig(2, 6, seed=3))
        assert reconstruct(shares, 2) == secret

    def test_deterministic_given_seed(self):
        a = split(b"same", SecretConfig(4, 6, seed=77))
        b = split(b"same", SecretConfig(4, 6, seed=77))
        assert a == b
        c = split(b"same", SecretConfig(4, 6, seed=78))
        assert a != c

    def test_byte_independence(self):
        # a shared prefix yields identical share prefixes: each byte position
        # draws from its own generator
        ab = split(b"ab", SecretConfig(3, 4, seed=5))
        abcd = split(b"abcd", SecretConfig(3, 4, seed=5))
        for s2, s4 in zip(ab, abcd):
            assert s4.payload[:2] == s2.payload

    def test_empty_secret_rejected(self):
        with pytest.raises(InvalidConfigError):
            split(b"", SecretConfig(2, 3))

    def test_non_bytes_rejected(self):
        with pytest.raises(InvalidConfigError):
            split("text", SecretConfig(2, 3))

    def test_insufficient_shares(self):
        shares = split(b"hi", SecretConfig(3, 5))
        with pytest.raises(InsufficientSharesError):
            reconstruct(shares[:2], 3)

    def test_duplicate_index(self):
        shares = split(b"hi", SecretConfig(2, 4))
        with pytest.raises(DuplicateIndexError):
            reconstruct([shares[0], shares[0]], 2)

    def test_length_mismatch(self):
        s1, s2 = split(b"hi", SecretConfig(2, 2))
        broken = Share(index=s2.index, payload=s2.payload + b"\x00")
        with pytest.raises(LengthMismatchError):
            reconstruct([s1, broken], 2)

    def test_wrong_share_reconstructs_wrong(self):
        secret = b"x"
        shares = split(secret, SecretConfig(2, 3, seed=1))
        tampered = Share(index=shares[0].index, payload=bytes([shares[0].payload[0] ^ 1]))
        assert reconstruct([tampered, shares[1]], 2) != secret


def test_single_share_reveals_nothing():
    """With threshold 2, one share is consistent with every secret byte."""
    shares = split(b"\x5a", SecretConfig(2, 3, seed=9))
    observed = shares[0]  # f(1) for an unknown degree-1 polynomial
    consistent = set()
    for candidate in range(256):
        for a1 in range(256):
            if gf_eval([candidate, a1], observed.index) == observed.payload[0]:
                consistent.add(candidate)
                break
    assert consistent == set(range(256))
