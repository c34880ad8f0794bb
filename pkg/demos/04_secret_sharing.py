"""Split a secret, lose some shares, recover it anyway — then tamper.

Walks the byte-level threshold scheme end to end:

  1. split a short message into n shares with threshold k
  2. recover from every subset of size k
  3. show that k-1 shares rule nothing out (forged third shares produce
     every possible secret byte)
  4. corrupt one share and watch reconstruction go quietly wrong
"""

from itertools import combinations

from racnshare import SecretConfig, Share, reconstruct, split

secret = b"meet at dawn"
cfg = SecretConfig(threshold=3, share_count=5, seed=99)
shares = split(secret, cfg)

print(f"secret: {secret!r}")
print(f"scheme: any {cfg.threshold} of {cfg.share_count} shares suffice\n")
for s in shares:
    print(f"  share {s.index}: {s.payload.hex()}")

# Any 3 of the 5 shares work.
print()
for combo in combinations(shares, 3):
    got = reconstruct(list(combo), cfg.threshold)
    idxs = tuple(s.index for s in combo)
    assert got == secret
    print(f"  shares {idxs} -> {got!r}")

# Two shares leave the secret completely undetermined.  An adversary holding
# shares 1 and 5 can invent a payload for some third index; every invention
# yields a well-formed "secret", and the first byte sweeps all 256 values.
s1, s2 = shares[0], shares[4]
first_bytes = {
    reconstruct([s1, s2, Share(index=2, payload=bytes([g]) * len(secret))], cfg.threshold)[0]
    for g in range(256)
}
print(f"\nholding only shares {s1.index} and {s2.index}, forged third shares"
      f" produce {len(first_bytes)} distinct first bytes — nothing is ruled out")
assert len(first_bytes) == 256

# Tampering is not detected, but the output is garbage.
bad = Share(index=shares[1].index, payload=bytes(b ^ 0xFF for b in shares[1].payload))
garbled = reconstruct([shares[0], bad, shares[2]], cfg.threshold)
print(f"\nwith share {bad.index} corrupted: {garbled!r}")
assert garbled != secret
