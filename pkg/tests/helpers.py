"""Independent oracles shared by the test modules.

Nothing here reuses the library's arithmetic paths: the sequence oracle is
a plain recurrence loop and the multiplication oracle expands products
over a frozen literal copy of the unit table, so the tests genuinely
cross-check the package against independent computations.
"""

from __future__ import annotations

from fractions import Fraction

from hybridseq import HybridNumber, grid_param_sets
from hybridseq.identities import DEFAULT_GRID

# Frozen unit multiplication table, hand-derived from i²=−1, ε²=0, h²=1,
# i·h=−h·i=ε+i.  Keys are (row, col) in the order (1, i, e, h); values are
# component quadruples (s, i, e, h).
UNIT_TABLE = {
    ("1", "1"): (1, 0, 0, 0),
    ("1", "i"): (0, 1, 0, 0),
    ("1", "e"): (0, 0, 1, 0),
    ("1", "h"): (0, 0, 0, 1),
    ("i", "1"): (0, 1, 0, 0),
    ("i", "i"): (-1, 0, 0, 0),
    ("i", "e"): (1, 0, 0, -1),
    ("i", "h"): (0, 1, 1, 0),
    ("e", "1"): (0, 0, 1, 0),
    ("e", "i"): (1, 0, 0, 1),
    ("e", "e"): (0, 0, 0, 0),
    ("e", "h"): (0, 0, -1, 0),
    ("h", "1"): (0, 0, 0, 1),
    ("h", "i"): (0, -1, -1, 0),
    ("h", "e"): (0, 0, 1, 0),
    ("h", "h"): (1, 0, 0, 0),
}

UNIT_KEYS = ("1", "i", "e", "h")


def table_mul(z: HybridNumber, w: HybridNumber) -> HybridNumber:
    """Brute-force bilinear product over the 16 frozen unit products."""
    acc = [0, 0, 0, 0]
    for k1, c1 in zip(UNIT_KEYS, z.parts()):
        for k2, c2 in zip(UNIT_KEYS, w.parts()):
            unit = UNIT_TABLE[(k1, k2)]
            coeff = c1 * c2
            for idx in range(4):
                acc[idx] = acc[idx] + coeff * unit[idx]
    return HybridNumber(*acc)


def seq_oracle(p: int, q: int, a: int, b: int, n: int) -> Fraction:
    """Two-sided recurrence loop, independent of the sequences module."""
    lo, hi = Fraction(a), Fraction(b)
    if n >= 0:
        for _ in range(n):
            lo, hi = hi, p * hi + q * lo
        return lo
    for _ in range(-n):
        lo, hi = (hi - p * lo) / q, lo
    return lo


def hybrid_oracle(p: int, q: int, a: int, b: int, n: int) -> HybridNumber:
    return HybridNumber(*(seq_oracle(p, q, a, b, n + k) for k in range(4)))


def fib_oracle(p: int, q: int, n: int) -> Fraction:
    return seq_oracle(p, q, 0, 1, n)


def lucas_oracle(p: int, q: int, n: int) -> Fraction:
    return seq_oracle(p, q, 2, p, n)


GRID_PARAMS = grid_param_sets(DEFAULT_GRID)
GRID_PQ = sorted({(params.p, params.q) for params in GRID_PARAMS})


def rand_fraction(rng, span: int = 9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def rand_hybrid(rng, span: int = 9) -> HybridNumber:
    return HybridNumber(*(rand_fraction(rng, span) for _ in range(4)))
