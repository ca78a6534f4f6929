"""Partition arithmetic, families, and orders.

Partitions are plain tuples of weakly decreasing positive integers; the
empty tuple is the unique partition of 0.  Everything downstream (class
labels, character labels, basis indices) is keyed by these tuples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cache

Partition = tuple[int, ...]


class PartitionFamily(Enum):
    ALL = "all"
    ODD = "odd"              # all parts odd
    STRICT = "strict"        # distinct parts
    STRICT_EVEN = "strict-even"   # strict with n - length even
    STRICT_ODD = "strict-odd"     # strict with n - length odd
    EVEN = "even"            # n - length even (even permutations)


def is_partition(parts) -> bool:
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts: Partition) -> Partition:
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts!r}")
    return tuple(parts)


def is_strict(la: Partition) -> bool:
    return all(la[i] > la[i + 1] for i in range(len(la) - 1))


def is_odd_parts(la: Partition) -> bool:
    return all(p % 2 == 1 for p in la)


def is_even_partition(la: Partition) -> bool:
    """True when n - length is even, i.e. elements of this cycle type are even."""
    return (sum(la) - len(la)) % 2 == 0


def _matches(la: Partition, family: PartitionFamily) -> bool:
    if family is PartitionFamily.ALL:
        return True
    if family is PartitionFamily.ODD:
        return is_odd_parts(la)
    if family is PartitionFamily.STRICT:
        return is_strict(la)
    if family is PartitionFamily.STRICT_EVEN:
        return is_strict(la) and is_even_partition(la)
    if family is PartitionFamily.STRICT_ODD:
        return is_strict(la) and not is_even_partition(la)
    if family is PartitionFamily.EVEN:
        return is_even_partition(la)
    raise ValueError(family)


@cache
def _all_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in descending lexicographic order."""

    def gen(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, maxpart), 0, -1):
            for tail in gen(rest - p, p):
                yield (p,) + tail

    return tuple(gen(n, n))


def enumerate_partitions(n: int, family: PartitionFamily = PartitionFamily.ALL) -> list[Partition]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [la for la in _all_partitions(n) if _matches(la, family)]


def z_order(la: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type la:
    z = prod m_i! i^{m_i} over part multiplicities."""
    z = 1
    mult: dict[int, int] = {}
    for p in la:
        mult[p] = mult.get(p, 0) + 1
    for p, m in mult.items():
        z *= math.factorial(m) * p**m
    return z


def conjugate(la: Partition) -> Partition:
    if not la:
        return ()
    return tuple(sum(1 for p in la if p > i) for i in range(la[0]))


@dataclass(frozen=True)
class PartitionStats:
    ell: int
    z: int
    parity_even: bool
    conjugate: Partition
    is_symmetric: bool


def stats(la: Partition) -> PartitionStats:
    la = check_partition(la)
    conj = conjugate(la)
    return PartitionStats(
        ell=len(la),
        z=z_order(la),
        parity_even=is_even_partition(la),
        conjugate=conj,
        is_symmetric=(la == conj),
    )


def dominates(la: Partition, mu: Partition) -> bool:
    """True iff la >= mu in dominance order. Both must partition the same n."""
    if sum(la) != sum(mu):
        raise ValueError("dominance compares partitions of equal size")
    total_l = total_m = 0
    for k in range(max(len(la), len(mu))):
        total_l += la[k] if k < len(la) else 0
        total_m += mu[k] if k < len(mu) else 0
        if total_l < total_m:
            return False
    return True


def disjoint_union(mu: Partition, nu: Partition) -> Partition:
    return tuple(sorted(mu + nu, reverse=True))


def diagonal_hooks(la: Partition) -> list[int]:
    """Principal hook lengths a_i + b_i + 1 along the main diagonal."""
    la = check_partition(la)
    conj = conjugate(la)
    hooks = []
    i = 0
    while i < len(la) and la[i] > i:
        hooks.append((la[i] - i - 1) + (conj[i] - i - 1) + 1)
        i += 1
    return hooks


def removable_cells(la: Partition) -> list[tuple[int, Partition]]:
    """All (row, partition-after-removal) pairs, rows 1-based top to bottom."""
    la = check_partition(la)
    if not la:
        raise ValueError("empty partition has no removable cells")
    out = []
    for i in range(len(la)):
        if i + 1 == len(la) or la[i] > la[i + 1]:
            rest = la[:i] + ((la[i] - 1,) if la[i] > 1 else ()) + la[i + 1 :]
            out.append((i + 1, rest))
    return out


def hook_lengths(la: Partition) -> list[list[int]]:
    conj = conjugate(la)
    return [[la[i] - j + conj[j] - i - 1 for j in range(la[i])] for i in range(len(la))]


def sn_dimension(la: Partition) -> int:
    """Dimension of the S_n irreducible labeled by la (hook length formula)."""
    n = sum(la)
    d = math.factorial(n)
    for row in hook_lengths(la):
        for h in row:
            d //= h
    return d
