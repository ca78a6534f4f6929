"""Ordinary character tables of S_n and A_n and restriction multiplicities.

Symmetric-group values come from the Murnaghan-Nakayama recursion on beta
sets.  Alternating-group tables split the characters of symmetric shapes
with the classical surd values on the classes of principal-hook cycle type.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .cyclo import Cyc, sqrt_int
from .feit import CharacterTable, ClassData
from .partitions import (
    Partition,
    PartitionFamily,
    conjugate,
    diagonal_hooks,
    enumerate_partitions,
    is_odd_parts,
    is_strict,
    removable_cells,
    z_order,
)
from .pin import (
    Perm,
    canonical_perm_blocks,
    cycle_type,
    cycles_of,
    perm_mul,
    perm_parity,
    transposition,
)


def _beta_set(la: Partition) -> tuple[int, ...]:
    L = len(la)
    return tuple(la[i] + (L - 1 - i) for i in range(L))


def _partition_from_beta(beta: tuple[int, ...]) -> Partition:
    bs = sorted(beta, reverse=True)
    L = len(bs)
    return tuple(p for i, b in enumerate(bs) if (p := b - (L - 1 - i)) > 0)


@cache
def sn_char_value(la: Partition, mu: Partition) -> int:
    """Murnaghan-Nakayama value of the S_n character la at cycle type mu."""
    if sum(la) != sum(mu):
        raise ValueError("size mismatch")
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    beta = set(_beta_set(la))
    total = 0
    for b in beta:
        if b >= r and (b - r) not in beta:
            height = sum(1 for c in beta if b - r < c < b)
            nb = tuple((beta - {b}) | {b - r})
            sign = -1 if height & 1 else 1
            total += sign * sn_char_value(_partition_from_beta(nb), rest)
    return total


def branch(la: Partition) -> list[Partition]:
    """Restriction of la to the point stabilizer: one shape per removable cell."""
    if sum(la) < 1:
        raise ValueError("need a nonempty partition")
    return [rest for _, rest in removable_cells(la)]


def type_power(mu: Partition, k: int) -> Partition:
    out = []
    for part in mu:
        g = math.gcd(part, k)
        out.extend([part // g] * g)
    return tuple(sorted(out, reverse=True))


# -- S_n tables ------------------------------------------------------------


def _identity_first(types: list[Partition]) -> list[Partition]:
    ident = (1,) * sum(types[0]) if types and types[0] else ()
    return [ident] + [t for t in types if t != ident]


@cache
def sn_table(n: int) -> CharacterTable:
    types = _identity_first(enumerate_partitions(n))
    index = {mu: i for i, mu in enumerate(types)}
    fact = math.factorial(n)
    classes = []
    for mu in types:
        power = {}
        order = math.lcm(*mu)
        for p in _primes_leq(n):
            if order % p == 0 or True:
                power[p] = index[type_power(mu, p)]
        classes.append(ClassData(fact // z_order(mu), order, power, name=str(mu)))
    values = [
        [Cyc.from_rational(sn_char_value(la, mu)) for mu in types] for la in types
    ]
    return CharacterTable(
        f"S{n}", fact, classes, values, [f"chi{la}" for la in types]
    )


def _primes_leq(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if all(p % d for d in range(2, p))]


# -- A_n classes and tables -------------------------------------------------


def an_class_splits(mu: Partition) -> bool:
    """The S_n class of an even type mu splits in A_n iff all parts are odd
    and distinct."""
    return is_odd_parts(mu) and is_strict(mu)


@dataclass(frozen=True)
class AnClass:
    mu: Partition
    side: int | None  # 0 canonical, 1 associate; None when unsplit
    size: int
    order: int
    rep: Perm


@cache
def an_classes(n: int) -> tuple[AnClass, ...]:
    out = []
    fact = math.factorial(n)
    t = transposition(n, 0, 1) if n >= 2 else None
    for mu in _identity_first(enumerate_partitions(n, PartitionFamily.EVEN)):
        rep = canonical_perm_blocks((mu,), (n,))
        order = math.lcm(*mu) if mu else 1
        if n >= 2 and an_class_splits(mu):
            size = fact // (2 * z_order(mu))
            arep = perm_mul(t, perm_mul(rep, t))
            out.append(AnClass(mu, 0, size, order, rep))
            out.append(AnClass(mu, 1, size, order, arep))
        else:
            out.append(AnClass(mu, None, fact // z_order(mu), order, rep))
    return tuple(out)


def an_class_of_perm(p: Perm) -> tuple[Partition, int | None]:
    """Class key (type, side) of an even permutation."""
    if perm_parity(p):
        raise ValueError("permutation is odd")
    mu = cycle_type(p)
    if not an_class_splits(mu):
        return mu, None
    n = len(p)
    h = [0] * n
    cyc = sorted(cycles_of(p), key=lambda c: (-len(c), c[0]))
    pos = 0
    for c in cyc:
        for j, x in enumerate(c):
            h[x] = pos + j
        pos += len(c)
    return mu, perm_parity(tuple(h))


@dataclass(frozen=True)
class AnLabel:
    la: Partition
    sign: int | None  # +1/-1 for split symmetric shapes, None otherwise


@cache
def an_labels(n: int) -> tuple[AnLabel, ...]:
    out = []
    for la in enumerate_partitions(n):
        conj = conjugate(la)
        if la == conj:
            out.append(AnLabel(la, +1))
            out.append(AnLabel(la, -1))
        elif la > conj:
            out.append(AnLabel(la, None))
    return tuple(out)


def _split_surds(la: Partition) -> tuple[int, Cyc]:
    hooks = diagonal_hooks(la)
    n, s = sum(la), len(hooks)
    eps = -1 if ((n - s) // 2) % 2 else 1
    prod = 1
    for h in hooks:
        prod *= h
    return eps, sqrt_int(eps * prod)


def an_char_value(label: AnLabel, cls: AnClass) -> Cyc:
    la = label.la
    if label.sign is None:
        return Cyc.from_rational(sn_char_value(la, cls.mu))
    hooks = tuple(diagonal_hooks(la))
    if cls.mu != hooks:
        return Cyc.from_rational(Fraction(sn_char_value(la, cls.mu), 2))
    eps, surd = _split_surds(la)
    # + character takes the + surd on the canonical split class
    pm = label.sign if cls.side == 0 else -label.sign
    return (Cyc.from_rational(eps) + (surd if pm > 0 else -surd)) / 2


@dataclass
class AnTable:
    n: int
    labels: tuple[AnLabel, ...]
    classes: tuple[AnClass, ...]
    values: list[list[Cyc]]

    def value(self, label: AnLabel, cls: AnClass) -> Cyc:
        return self.values[self.labels.index(label)][self.classes.index(cls)]


@cache
def an_table(n: int) -> AnTable:
    labels = an_labels(n)
    classes = an_classes(n)
    values = [[an_char_value(lab, cls) for cls in classes] for lab in labels]
    return AnTable(n, labels, classes, values)


def an_character_table(n: int) -> CharacterTable:
    """The A_n table as a generic CharacterTable with power maps."""
    t = an_table(n)
    index = {(c.mu, c.side): i for i, c in enumerate(t.classes)}
    classes = []
    for c in t.classes:
        power = {}
        for p in _primes_leq(max(n, 2)):
            q = c.rep
            pw = q
            for _ in range(p - 1):
                pw = perm_mul(pw, q)
            power[p] = index[an_class_of_perm(pw)]
        classes.append(
            ClassData(c.size, c.order, power, name=f"{c.mu}{'' if c.side is None else '+-'[c.side]}")
        )
    names = [f"theta{lab.la}{'' if lab.sign is None else ('+' if lab.sign > 0 else '-')}" for lab in t.labels]
    return CharacterTable(
        f"A{n}", math.factorial(n) // 2, classes, t.values, names
    )


# -- restriction multiplicities ---------------------------------------------


def restrict_mult_young(
    la: Partition, a: int, b: int, alpha: Partition, beta: Partition
) -> int:
    """Multiplicity of chi^alpha x chi^beta in chi^la restricted to S_a x S_b."""
    if a + b != sum(la) or sum(alpha) != a or sum(beta) != b:
        raise ValueError("size mismatch")
    total = Fraction(0)
    for sig in enumerate_partitions(a):
        vs = sn_char_value(alpha, sig)
        if not vs:
            continue
        for tau in enumerate_partitions(b):
            vt = sn_char_value(beta, tau)
            if not vt:
                continue
            joint = tuple(sorted(sig + tau, reverse=True))
            total += Fraction(sn_char_value(la, joint) * vs * vt, z_order(sig) * z_order(tau))
    assert total.denominator == 1 and total >= 0
    return int(total)


def an_inner_product(table: AnTable, row_i: list[Cyc], row_j: list[Cyc]) -> Fraction:
    """Exact inner product of two class functions on A_n given by value rows."""
    g = math.factorial(table.n) // 2
    s = Cyc.from_rational(0)
    for c, vi, vj in zip(table.classes, row_i, row_j):
        s = s + vi * vj.conjugate() * c.size
    s = s / g
    if not s.is_rational():
        raise ValueError("inner product not rational; mismatched rows")
    return s.rational_value()
