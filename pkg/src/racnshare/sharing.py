"""Threshold secret sharing over GF(256).

Arithmetic uses the field of order 256 with reduction polynomial
x^8 + x^4 + x^3 + x + 1 (0x11B): addition is XOR, multiplication goes
through log/exp tables built once at import from the generator 3. Each
secret byte is split independently: a random polynomial of degree k-1
with the byte as constant term is evaluated at the share indexes, and
Lagrange interpolation at 0 recovers the byte from any k shares.

Coefficients come from a seeded generator so runs are reproducible;
this is deliberately not cryptographic-quality randomness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    DuplicateIndexError,
    InsufficientSharesError,
    InvalidConfigError,
    LengthMismatchError,
)

_POLY = 0x11B
_GENERATOR = 3

_EXP = [0] * 510
_LOG = [0] * 256


def _shift_reduce_mul(a: int, b: int) -> int:
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        if a & 0x100:
            a ^= _POLY
        b >>= 1
    return acc


def _build_tables() -> None:
    x = 1
    for i in range(255):
        _EXP[i] = x
        _LOG[x] = i
        x = _shift_reduce_mul(x, _GENERATOR)
    for i in range(255, 510):
        _EXP[i] = _EXP[i - 255]


_build_tables()


def gf_add(a: int, b: int) -> int:
    return a ^ b


def gf_mul(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return _EXP[_LOG[a] + _LOG[b]]


def gf_inv(a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("0 has no inverse in GF(256)")
    return _EXP[255 - _LOG[a]]


def gf_eval(coeffs: list[int], x: int) -> int:
    """Evaluate a polynomial given low-to-high coefficients, by Horner."""
    acc = 0
    for c in reversed(coeffs):
        acc = gf_mul(acc, x) ^ c
    return acc


@dataclass(frozen=True)
class SecretConfig:
    """Split parameters: recover with any ``threshold`` of ``share_count``."""

    threshold: int
    share_count: int
    seed: int = 0

    def __post_init__(self) -> None:
        k, n = self.threshold, self.share_count
        if not (isinstance(k, int) and isinstance(n, int) and isinstance(self.seed, int)):
            raise InvalidConfigError("threshold, share_count, seed must be integers")
        if not 1 <= k <= n <= 255:
            raise InvalidConfigError(
                f"need 1 <= threshold <= share_count <= 255, got k={k}, n={n}"
            )


@dataclass(frozen=True)
class Share:
    index: int
    payload: bytes

    def __post_init__(self) -> None:
        if not 1 <= self.index <= 255:
            raise InvalidConfigError(f"share index must be in 1..255, got {self.index}")


def split(secret: bytes, cfg: SecretConfig) -> list[Share]:
    """Split into cfg.share_count shares, any cfg.threshold of which recover.

    The coefficient stream is forked per byte position — byte i draws from
    ``random.Random((seed << 64) | i)`` — so shares of a long secret do not
    depend on how earlier bytes consumed randomness.
    """
    if not isinstance(secret, (bytes, bytearray)) or len(secret) == 0:
        raise InvalidConfigError("secret must be a nonempty byte string")
    secret = bytes(secret)
    payloads = [bytearray(len(secret)) for _ in range(cfg.share_count)]
    for byte_index, byte in enumerate(secret):
        rng = random.Random((cfg.seed << 64) | byte_index)
        coeffs = [byte] + [rng.randrange(256) for _ in range(cfg.threshold - 1)]
        for s in range(cfg.share_count):
            payloads[s][byte_index] = gf_eval(coeffs, s + 1)
    return [Share(index=s + 1, payload=bytes(payloads[s])) for s in range(cfg.share_count)]


def reconstruct(shares: list[Share], k: int) -> bytes:
    """Lagrange-interpolate at 0 using all given shares (at least k)."""
    if len(shares) < k:
        raise InsufficientSharesError(f"got {len(shares)} shares, need at least {k}")
    indexes = [s.index for s in shares]
    if len(set(indexes)) != len(indexes):
        raise DuplicateIndexError("share indexes must be distinct")
    length = len(shares[0].payload)
    if any(len(s.payload) != length for s in shares):
        raise LengthMismatchError("share payloads differ in length")
    # basis[i] = prod_{j != i} x_j / (x_j + x_i), evaluated at x = 0
    basis = []
    for i, xi in enumerate(indexes):
        num, den = 1, 1
        for j, xj in enumerate(indexes):
            if j == i:
                continue
            num = gf_mul(num, xj)
            den = gf_mul(den, xj ^ xi)
        basis.append(gf_mul(num, gf_inv(den)))
    out = bytearray(length)
    for pos in range(length):
        acc = 0
        for share, b in zip(shares, basis):
            acc ^= gf_mul(share.payload[pos], b)
        out[pos] = acc
    return bytes(out)
