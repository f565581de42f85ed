"""Python-int bitsets over a fixed canonical index order."""
import numpy as np


def from_mask(mask):
    packed = np.packbits(np.asarray(mask, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def to_mask(bits, n):
    nbytes = max(1, (n + 7) // 8)
    raw = np.frombuffer(bits.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little", count=n).astype(bool)


def from_indices(indices):
    bits = 0
    for i in indices:
        bits |= 1 << int(i)
    return bits


def indices(bits):
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


def full(n):
    return (1 << n) - 1


def is_subset(a, b):
    return a & ~b == 0


def sort_key(bits):
    """Canonical order: cardinality first, then the sorted index list."""
    return (bits.bit_count(), indices(bits))
