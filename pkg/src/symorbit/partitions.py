"""Integer partitions: duality, dominance order, and difference measures.

A partition is a plain tuple of weakly decreasing positive ints with no
trailing zeros; the empty tuple is the partition of 0.  Keeping the raw
tuple makes equality, hashing and enumeration cheap, so every function
here is pure and safe to call from anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import zip_longest
from math import comb

Partition = tuple[int, ...]

# Parts and all derived sums stay well inside 64 bits up to this size.
SIZE_BOUND = 64


def check_partition(parts) -> Partition:
    """Validate an iterable of parts and return it as a canonical tuple."""
    lam = tuple(parts)
    for p in lam:
        if not isinstance(p, int) or isinstance(p, bool) or p <= 0:
            raise ValueError(f"parts must be positive integers, got {p!r}")
    for a, b in zip(lam, lam[1:]):
        if a < b:
            raise ValueError(f"parts must be weakly decreasing, got {lam}")
    if sum(lam) > SIZE_BOUND:
        raise ValueError(f"partition of {sum(lam)} exceeds the size bound {SIZE_BOUND}")
    return lam


def parse_partition(text: str) -> Partition:
    """Parse a partition literal such as '3,1' or '[3, 1]' ('[]' is empty)."""
    s = text.strip()
    bracketed = s.startswith("[") and s.endswith("]")
    if bracketed:
        s = s[1:-1].strip()
    if not s:
        if bracketed:
            return ()
        raise ValueError("empty partition literal; use '[]' for the empty partition")
    try:
        parts = [int(tok) for tok in s.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse partition literal {text!r}") from None
    return check_partition(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam) if lam else "[]"


def dual(lam: Partition) -> Partition:
    """Transpose of the Young diagram: entry j counts the parts >= j."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance order: every prefix sum of lam meets or exceeds mu's.

    Only partitions of the same integer are comparable; anything else is
    rejected rather than silently ordered.
    """
    if sum(lam) != sum(mu):
        raise ValueError(
            f"incomparable inputs: |{lam}| = {sum(lam)} but |{mu}| = {sum(mu)}"
        )
    acc = 0
    for a, b in zip_longest(lam, mu, fillvalue=0):
        acc += a - b
        if acc < 0:
            return False
    return True


def s_step(lam: Partition, s: int) -> bool:
    """True iff consecutive parts (with a trailing 0) drop by at most s."""
    if s < 1:
        raise ValueError("step size must be a positive integer")
    padded = lam + (0,)
    return all(a - b <= s for a, b in zip(padded, padded[1:]))


@dataclass(frozen=True)
class DiffStats:
    """Box-move count q, column displacement c, row displacement r.

    Defined for a dominating pair only; all three vanish together and
    c >= q always holds.
    """

    q: int
    c: int
    r: int


def _column_weight(lam: Partition) -> int:
    # Sum of column numbers over all boxes, row by row.
    return sum(comb(p + 1, 2) for p in lam)


def diff_stats(lam: Partition, mu: Partition) -> DiffStats:
    """The triple (q, c, r) measuring how far mu sits below lam."""
    if not dominates(lam, mu):
        raise ValueError(f"{lam} does not dominate {mu}; q/c/r need a dominating pair")
    double_q = sum(abs(a - b) for a, b in zip_longest(lam, mu, fillvalue=0))
    q = double_q // 2
    c = _column_weight(lam) - _column_weight(mu)
    r = _column_weight(dual(mu)) - _column_weight(dual(lam))
    return DiffStats(q, c, r)


def degeneration_chain(lam: Partition, mu: Partition) -> list[Partition]:
    """Single-box degenerations stepping from lam down to mu.

    Each step lowers one box: it is removed from the last row of the first
    block of rows exceeding the target and appended to the first row that
    falls short.  That choice keeps every row length and every column
    length monotone along the chain, and each consecutive pair is at
    q-distance exactly 1.  Returns [lam] when lam == mu.
    """
    if not dominates(lam, mu):
        raise ValueError(f"{lam} does not dominate {mu}; no degeneration chain exists")
    width = max(len(lam), len(mu))
    cur = list(lam) + [0] * (width - len(lam))
    target = list(mu) + [0] * (width - len(mu))
    chain = [lam]
    while cur != target:
        first = next(i for i in range(width) if cur[i] > target[i])
        j = next(i for i in range(width) if cur[i] < target[i])
        i = max(k for k in range(first, width) if cur[k] == cur[first])
        if i >= j:
            raise AssertionError("box move would not preserve the partition shape")
        cur[i] -= 1
        cur[j] += 1
        chain.append(tuple(p for p in cur if p > 0))
    return chain


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[Partition, ...]:
    out: list[Partition] = []
    acc: list[int] = []

    def rec(remaining: int, cap: int) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for p in range(min(cap, remaining), 0, -1):
            acc.append(p)
            rec(remaining - p, p)
            acc.pop()

    rec(n, n)
    return tuple(out)


def enumerate_partitions(n: int, bound: int = SIZE_BOUND) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order, (n) first."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    if n > bound:
        raise ValueError(f"n = {n} exceeds the enumeration bound {bound}")
    return list(_partitions(n))


def enumerate_below(lam: Partition) -> list[Partition]:
    """Every partition dominated by lam (lam included), in enumeration order."""
    return [mu for mu in _partitions(sum(lam)) if dominates(lam, mu)]


def dominance_covers(n: int) -> list[tuple[Partition, Partition]]:
    """Covering pairs (lam, mu) of the dominance order on partitions of n.

    Computed as the transitive reduction of the full order, with the
    strictly-below sets held as bitmasks so the reduction is a handful of
    integer operations per partition.
    """
    parts = _partitions(n)
    index = {p: i for i, p in enumerate(parts)}
    below = []
    for lam in parts:
        mask = 0
        for mu in parts:
            if mu != lam and dominates(lam, mu):
                mask |= 1 << index[mu]
        below.append(mask)
    covers = []
    for i, lam in enumerate(parts):
        reachable = 0
        m = below[i]
        while m:
            j = (m & -m).bit_length() - 1
            reachable |= below[j]
            m &= m - 1
        keep = below[i] & ~reachable
        while keep:
            j = (keep & -keep).bit_length() - 1
            covers.append((lam, parts[j]))
            keep &= keep - 1
    return covers
