"""Exact arithmetic in the double covers of symmetric groups.

Cover elements are represented faithfully as pairs (permutation, Clifford
element): the generator lifting the adjacent transposition (i, i+1) maps to
(e_i - e_{i+1})/sqrt(2) in the Clifford algebra with e_i^2 = -1.  These
satisfy the defining relations of the cover in which transposition lifts
square to the central element z.  All coefficients are integers scaled by
a power of 1/sqrt(2), so every computation here is exact.

The same machinery handles the covers of S_n, A_n and of Young subgroups
S_a x S_b: conjugacy classes, central splitting, class identification and
power maps are all computed by explicit conjugation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache

from .partitions import Partition, is_odd_parts, is_strict, z_order

Perm = tuple[int, ...]


# -- permutation helpers -------------------------------------------------


def perm_id(n: int) -> Perm:
    return tuple(range(n))


def perm_mul(a: Perm, b: Perm) -> Perm:
    """Composition a after b."""
    return tuple(a[b[i]] for i in range(len(a)))


def perm_inv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, ai in enumerate(a):
        out[ai] = i
    return tuple(out)


def perm_parity(a: Perm) -> int:
    seen = [False] * len(a)
    par = 0
    for i in range(len(a)):
        if seen[i]:
            continue
        j = i
        clen = 0
        while not seen[j]:
            seen[j] = True
            j = a[j]
            clen += 1
        par ^= (clen - 1) & 1
    return par


def cycles_of(a: Perm) -> list[tuple[int, ...]]:
    """Cycles (including fixed points), each starting at its minimum."""
    seen = [False] * len(a)
    out = []
    for i in range(len(a)):
        if seen[i]:
            continue
        cyc = [i]
        seen[i] = True
        j = a[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = a[j]
        out.append(tuple(cyc))
    return out


def cycle_type(a: Perm) -> Partition:
    return tuple(sorted((len(c) for c in cycles_of(a)), reverse=True))


def transposition(n: int, i: int, j: int) -> Perm:
    out = list(range(n))
    out[i], out[j] = out[j], out[i]
    return tuple(out)


def perm_order(a: Perm) -> int:
    return math.lcm(*(len(c) for c in cycles_of(a)))


def perm_to_word(a: Perm) -> list[int]:
    """Deterministic factorization into adjacent transpositions s_i."""
    arr = list(a)
    rev = []
    changed = True
    while changed:
        changed = False
        for j in range(len(arr) - 1):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                rev.append(j)
                changed = True
    return rev[::-1]


# -- Clifford algebra ----------------------------------------------------


@cache
def _mono_sign(s: int, t: int) -> int:
    """Sign in e_S * e_T = sign * e_{S xor T}, with e_i^2 = -1."""
    cross = 0
    tt = t
    while tt:
        low = tt & -tt
        i = low.bit_length() - 1
        cross += (s >> (i + 1)).bit_count()
        tt ^= low
    cross += (s & t).bit_count()
    return -1 if cross & 1 else 1


def _cliff_mul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for s, ca in a.items():
        for t, cb in b.items():
            sign = _mono_sign(s, t)
            m = s ^ t
            v = out.get(m, 0) + sign * ca * cb
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def _cliff_norm(half: int, terms: dict[int, int]) -> tuple[int, dict[int, int]]:
    if not terms:
        raise AssertionError("cover element collapsed to zero")
    while half >= 2 and all(c % 2 == 0 for c in terms.values()):
        half -= 2
        terms = {m: c // 2 for m, c in terms.items()}
    return half, terms


@dataclass(frozen=True)
class CoverElement:
    """An element of the double cover of S_n, as (projection, spinor)."""

    perm: Perm
    half: int
    terms: tuple[tuple[int, int], ...]

    @staticmethod
    def make(perm: Perm, half: int, terms: dict[int, int]) -> "CoverElement":
        half, terms = _cliff_norm(half, terms)
        return CoverElement(perm, half, tuple(sorted(terms.items())))

    @staticmethod
    def identity(n: int) -> "CoverElement":
        return CoverElement(perm_id(n), 0, ((0, 1),))

    @staticmethod
    def central(n: int) -> "CoverElement":
        """The central element z."""
        return CoverElement(perm_id(n), 0, ((0, -1),))

    @staticmethod
    def generator(n: int, i: int) -> "CoverElement":
        """Lift of the adjacent transposition (i, i+1); squares to z."""
        return CoverElement.make(
            transposition(n, i, i + 1), 1, {1 << i: 1, 1 << (i + 1): -1}
        )

    def n(self) -> int:
        return len(self.perm)

    def __mul__(self, other: "CoverElement") -> "CoverElement":
        return CoverElement.make(
            perm_mul(self.perm, other.perm),
            self.half + other.half,
            _cliff_mul(dict(self.terms), dict(other.terms)),
        )

    def inv(self) -> "CoverElement":
        rev = {}
        for m, c in self.terms:
            k = m.bit_count()
            sign = -1 if (k * (k - 1) // 2) & 1 else 1
            rev[m] = sign * c
        if self.half & 1:
            rev = {m: -c for m, c in rev.items()}
        return CoverElement.make(perm_inv(self.perm), self.half, rev)

    def __pow__(self, k: int) -> "CoverElement":
        if k < 0:
            return self.inv() ** (-k)
        out = CoverElement.identity(self.n())
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def times_z(self) -> "CoverElement":
        return CoverElement(self.perm, self.half, tuple((m, -c) for m, c in self.terms))

    def is_identity(self) -> bool:
        return self.perm == perm_id(self.n()) and self.terms == ((0, 1),) and self.half == 0

    def order(self) -> int:
        o = perm_order(self.perm)
        return o if (self ** o).is_identity() else 2 * o


def lift_word(n: int, word) -> CoverElement:
    out = CoverElement.identity(n)
    for i in word:
        out = out * CoverElement.generator(n, i)
    return out


def lift_perm(n: int, p: Perm) -> CoverElement:
    """One of the two lifts of p (deterministic choice)."""
    return lift_word(n, perm_to_word(p))


def conjugate_by_perm(h: Perm, g: CoverElement) -> CoverElement:
    """h g h^{-1} computed through either lift of h (the choice cancels)."""
    hl = lift_perm(len(h), h)
    return hl * g * hl.inv()


# -- Young-structured cover groups ---------------------------------------


def canonical_perm_blocks(types: tuple[Partition, ...], blocks: tuple[int, ...]) -> Perm:
    """Blockwise canonical representative: consecutive cycles per block."""
    n = sum(blocks)
    out = list(range(n))
    off = 0
    for ty, b in zip(types, blocks):
        pos = off
        for part in ty:
            for j in range(part - 1):
                out[pos + j] = pos + j + 1
            out[pos + part - 1] = pos
            pos += part
        off += b
    return tuple(out)


def canonical_word_blocks(types: tuple[Partition, ...], blocks: tuple[int, ...]) -> list[int]:
    word = []
    off = 0
    for ty, b in zip(types, blocks):
        pos = off
        for part in ty:
            word.extend(range(pos, pos + part - 1))
            pos += part
        off += b
    return word


def centralizer_gens_blocks(
    types: tuple[Partition, ...], blocks: tuple[int, ...]
) -> list[Perm]:
    """Generators of the centralizer of the canonical representative inside
    the Young subgroup: each cycle, plus swaps of adjacent equal cycles."""
    n = sum(blocks)
    gens: list[Perm] = []
    off = 0
    for ty, b in zip(types, blocks):
        pos = off
        spans = []
        for part in ty:
            spans.append((pos, part))
            pos += part
        for start, part in spans:
            if part > 1:
                g = list(range(n))
                for j in range(part - 1):
                    g[start + j] = start + j + 1
                g[start + part - 1] = start
                gens.append(tuple(g))
        for (s1, p1), (s2, p2) in zip(spans, spans[1:]):
            if p1 == p2:
                g = list(range(n))
                for j in range(p1):
                    g[s1 + j] = s2 + j
                    g[s2 + j] = s1 + j
                gens.append(tuple(g))
        off += b
    return gens


@dataclass(frozen=True)
class CoverClass:
    key: tuple  # (types, zflag, aflag); flags are 0/1 or None if unsplit
    rep: CoverElement
    size: int
    order: int

    @property
    def types(self) -> tuple[Partition, ...]:
        return self.key[0]

    @property
    def zflag(self):
        return self.key[1]

    @property
    def aflag(self):
        return self.key[2]


class CoverGroup:
    """Double cover of a Young subgroup of S_N or of its alternating part.

    blocks: sizes of the Young factors; alternating: take the even part.
    """

    def __init__(self, blocks: tuple[int, ...], alternating: bool):
        self.blocks = tuple(blocks)
        self.alternating = alternating
        self.N = sum(blocks)
        base = 1
        for b in blocks:
            base *= math.factorial(b)
        self.has_odd = any(b >= 2 for b in blocks)
        if alternating and self.has_odd:
            base //= 2
        self.base_order = base  # order of the underlying permutation group
        self.order = 2 * base
        self._odd = self._fixed_odd_perm()
        self._type_info: dict = {}
        self._classes: list[CoverClass] | None = None
        self._index: dict | None = None

    def _fixed_odd_perm(self) -> Perm | None:
        off = 0
        for b in self.blocks:
            if b >= 2:
                return transposition(self.N, off, off + 1)
            off += b
        return None

    def contains_perm(self, p: Perm) -> bool:
        off = 0
        for b in self.blocks:
            for i in range(off, off + b):
                if not off <= p[i] < off + b:
                    return False
            off += b
        if self.alternating and self.has_odd and perm_parity(p):
            return False
        return True

    def block_types(self, p: Perm) -> tuple[Partition, ...]:
        out = []
        off = 0
        for b in self.blocks:
            sub = tuple(p[off + i] - off for i in range(b))
            out.append(cycle_type(sub))
            off += b
        return tuple(out)

    # -- per-type structural data -------------------------------------

    def _info(self, types: tuple[Partition, ...]):
        if types in self._type_info:
            return self._type_info[types]
        w = canonical_perm_blocks(types, self.blocks)
        wt = lift_word(self.N, canonical_word_blocks(types, self.blocks))
        cgens = centralizer_gens_blocks(types, self.blocks)
        odd_cgen = next((g for g in cgens if perm_parity(g)), None)
        if self.alternating and self.has_odd:
            a_split = odd_cgen is None
            eff = _even_part_gens(cgens) if not a_split else cgens
        else:
            a_split = False
            eff = cgens
        split = all(self._eps(h, wt) == 0 for h in eff)
        cent = 1
        for ty in types:
            cent *= z_order(ty)
        if self.alternating and self.has_odd and not a_split:
            cent //= 2
        size = self.base_order // cent if split else 2 * self.base_order // cent
        info = dict(
            w=w, wt=wt, odd_cgen=odd_cgen, a_split=a_split, split=split, size=size
        )
        self._type_info[types] = info
        return info

    @staticmethod
    def _eps(h: Perm, wt: CoverElement) -> int:
        x = conjugate_by_perm(h, wt)
        if x == wt:
            return 0
        if x == wt.times_z():
            return 1
        raise AssertionError("conjugate left the fiber; not a centralizer element")

    # -- classes --------------------------------------------------------

    def classes(self) -> list[CoverClass]:
        if self._classes is not None:
            return self._classes
        from .partitions import enumerate_partitions  # local to avoid cycle

        out: list[CoverClass] = []
        type_lists = [enumerate_partitions(b) for b in self.blocks]
        for types in _product_types(type_lists):
            if self.alternating and self.has_odd:
                par = sum((sum(ty) - len(ty)) for ty in types) % 2
                if par:
                    continue
            info = self._info(types)
            wt = info["wt"]
            reps = [(wt, 0)]
            if info["a_split"]:
                assert self._odd is not None
                reps.append((conjugate_by_perm(self._odd, wt), 1))
            for rep, af in reps:
                afl = af if info["a_split"] else None
                if info["split"]:
                    out.append(
                        CoverClass((types, 0, afl), rep, info["size"], rep.order())
                    )
                    zrep = rep.times_z()
                    out.append(
                        CoverClass((types, 1, afl), zrep, info["size"], zrep.order())
                    )
                else:
                    out.append(
                        CoverClass((types, None, afl), rep, info["size"], rep.order())
                    )
        assert sum(c.size for c in out) == self.order
        self._classes = out
        self._index = {c.key: i for i, c in enumerate(out)}
        return out

    def class_index(self, key) -> int:
        self.classes()
        return self._index[key]

    # -- identification --------------------------------------------------

    def identify(self, g: CoverElement) -> tuple:
        """The class key of an arbitrary cover element (exact conjugation)."""
        if not self.contains_perm(g.perm):
            raise ValueError("element does not lie in this cover group")
        types = self.block_types(g.perm)
        info = self._info(types)
        h = self._conjugator_to_canonical(g.perm, types)
        af = None
        if self.alternating and self.has_odd:
            if info["a_split"]:
                af = perm_parity(h)
                if af:
                    h = perm_mul(self._odd, h)
            elif perm_parity(h):
                assert info["odd_cgen"] is not None
                h = perm_mul(info["odd_cgen"], h)
        if not info["split"]:
            return (types, None, af)
        target = info["wt"] if af in (None, 0) else conjugate_by_perm(self._odd, info["wt"])
        x = conjugate_by_perm(h, g)
        if x == target:
            return (types, 0, af)
        if x == target.times_z():
            return (types, 1, af)
        raise AssertionError("class identification failed")

    def _conjugator_to_canonical(self, p: Perm, types: tuple[Partition, ...]) -> Perm:
        """h with h p h^{-1} = canonical representative, block-preserving."""
        h = [0] * self.N
        off = 0
        for ty, b in zip(types, self.blocks):
            cyc = [c for c in cycles_of(p) if off <= c[0] < off + b]
            cyc.sort(key=lambda c: (-len(c), c[0]))
            pos = off
            for c in cyc:
                for j, x in enumerate(c):
                    h[x] = pos + j
                pos += len(c)
            off += b
        return tuple(h)

    def power_class(self, key, k: int) -> tuple:
        """Class of rep^k for the class with the given key."""
        cls = self.classes()[self.class_index(key)]
        return self.identify(cls.rep ** k)


def _even_part_gens(gens: list[Perm]) -> list[Perm]:
    """Generators of the even-parity kernel of the group generated by gens
    (Reidemeister-Schreier with transversal {1, g0})."""
    odd = [g for g in gens if perm_parity(g)]
    if not odd:
        return gens
    g0 = odd[0]
    out = []
    for g in gens:
        if perm_parity(g):
            out.append(perm_mul(g0, g))
        else:
            out.append(g)
            out.append(perm_mul(g0, perm_mul(g, perm_inv(g0))))
    return out


def _product_types(type_lists):
    if not type_lists:
        yield ()
        return
    for head in type_lists[0]:
        for tail in _product_types(type_lists[1:]):
            yield (head,) + tail


@cache
def cover_group(blocks: tuple[int, ...], alternating: bool) -> CoverGroup:
    return CoverGroup(blocks, alternating)


# -- classical splitting rules (validated against the machinery above) ----


def sn_cover_class_splits(mu: Partition) -> bool:
    """Splitting rule for the cover of S_n: all parts odd, or strict of
    odd parity."""
    return is_odd_parts(mu) or (is_strict(mu) and (sum(mu) - len(mu)) % 2 == 1)


def an_cover_class_splits(mu: Partition) -> bool:
    """Splitting rule for the cover of A_n: strict of even parity, or all
    parts odd."""
    return is_odd_parts(mu) or (is_strict(mu) and (sum(mu) - len(mu)) % 2 == 0)
