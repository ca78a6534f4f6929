"""Generic character-table engine: conductors, Feit witnesses, and the
cyclic form of the linear-constituent conjecture.

Tables are plain data (class sizes, element orders, power maps, exact
cyclotomic value matrix); everything a verdict needs is computed from the
table alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

from .cyclo import Cyc, FieldDescriptor, conductor_of_set, prime_factors


class TableError(ValueError):
    """A structural invariant of a character table failed."""


@dataclass
class ClassData:
    size: int
    order: int
    power: dict[int, int] = field(default_factory=dict)  # prime -> class index
    name: str = ""


@dataclass
class CharacterTable:
    name: str
    group_order: int
    classes: list[ClassData]
    values: list[list[Cyc]]  # rows are characters, columns follow classes
    char_names: list[str] = field(default_factory=list)

    @property
    def exponent(self) -> int:
        return reduce(math.lcm, (c.order for c in self.classes), 1)

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    def degree(self, i: int) -> int:
        d = self.values[i][0]
        if not d.is_integer():
            raise TableError(f"character {i} has non-integral degree {d}")
        return int(d.rational_value())

    def validate(self, *, orthogonality: bool = True) -> None:
        k = self.n_classes
        if len(self.values) != k:
            raise TableError(
                f"square table required: {len(self.values)} characters, {k} classes"
            )
        if not self.classes or self.classes[0].size != 1 or self.classes[0].order != 1:
            raise TableError("class 0 must be the identity class of size 1, order 1")
        total = sum(c.size for c in self.classes)
        if total != self.group_order:
            raise TableError(
                f"class sizes sum to {total}, group order is {self.group_order}"
            )
        for ci, c in enumerate(self.classes):
            if c.order < 1 or self.group_order % c.order:
                raise TableError(f"class {ci} has impossible element order {c.order}")
        for p in prime_factors(self.exponent):
            for ci, c in enumerate(self.classes):
                if p not in c.power:
                    raise TableError(f"class {ci} is missing the power map for {p}")
                if not 0 <= c.power[p] < k:
                    raise TableError(f"class {ci} power map for {p} out of range")
        if orthogonality:
            self.check_orthogonality()

    def check_orthogonality(self) -> None:
        k = self.n_classes
        g = self.group_order
        vals = self.values
        conj = [[v.conjugate() for v in row] for row in vals]
        for i in range(k):
            for j in range(i, k):
                s = Cyc.from_rational(0)
                for c in range(k):
                    s = s + vals[i][c] * conj[j][c] * self.classes[c].size
                want = g if i == j else 0
                if s != Cyc.from_rational(want):
                    raise TableError(f"row orthogonality fails at characters {i},{j}")
        for c in range(k):
            for d in range(c, k):
                s = Cyc.from_rational(0)
                for i in range(k):
                    s = s + vals[i][c] * conj[i][d]
                want = Fraction(g, self.classes[c].size) if c == d else 0
                if s != Cyc.from_rational(want):
                    raise TableError(f"column orthogonality fails at classes {c},{d}")

    def check_power_consistency(self) -> None:
        """Values at power-map targets must be Galois images of the values:
        chi(g^k) = sigma_k(chi(g)) for k coprime to o(g)."""
        for ci, c in enumerate(self.classes):
            m = c.order
            for k in range(1, m):
                if math.gcd(k, m) != 1:
                    continue
                ti = self.class_of_power(ci, k)
                for row in self.values:
                    x = row[ci]
                    if x.conductor() != 1 and m % x.conductor():
                        raise TableError(
                            f"value at class {ci} lies outside Q(zeta_{m})"
                        )
                    lifted = x.reduced()
                    img = lifted.galois(k % lifted.n) if lifted.n > 1 else lifted
                    if img != row[ti]:
                        raise TableError(
                            f"power-map inconsistency at class {ci}, exponent {k}"
                        )

    def class_of_power(self, ci: int, k: int) -> int:
        """Index of the class containing g^k for g in class ci."""
        m = self.classes[ci].order
        k %= m
        if k == 0:
            return 0
        idx = ci
        for p in prime_factors(k):
            e = 0
            kk = k
            while kk % p == 0:
                kk //= p
                e += 1
            for _ in range(e):
                cls = self.classes[idx]
                if p not in cls.power:
                    raise TableError(f"missing power map for prime {p} at class {idx}")
                idx = cls.power[p]
        return idx


# -- conductors and Feit verdicts ----------------------------------------


def char_conductor(table: CharacterTable, i: int) -> int:
    return conductor_of_set(table.values[i]).conductor


def char_field(table: CharacterTable, i: int) -> FieldDescriptor:
    return conductor_of_set(table.values[i])


@dataclass(frozen=True)
class FeitVerdict:
    char_index: int
    conductor: int
    witness_class: int | None

    @property
    def ok(self) -> bool:
        return self.witness_class is not None


def feit_check(table: CharacterTable) -> list[FeitVerdict]:
    """For each character, search for a class whose element order equals
    the conductor of the character."""
    out = []
    for i in range(len(table.values)):
        c = char_conductor(table, i)
        witness = next(
            (ci for ci, cl in enumerate(table.classes) if cl.order == c), None
        )
        out.append(FeitVerdict(i, c, witness))
    return out


def value_conductors(table: CharacterTable, i: int) -> set[int]:
    return {v.conductor() for v in table.values[i]}


@dataclass(frozen=True)
class CyclicWitness:
    class_index: int
    exponent: int  # the linear character zeta^(exponent * j) of <g>
    order: int     # order of that linear character


def conjecture_e_cyclic(table: CharacterTable, i: int) -> CyclicWitness | None:
    """Search all cyclic subgroups generated by class representatives for a
    linear constituent of the restriction whose order equals the conductor."""
    c = char_conductor(table, i)
    for ci in range(table.n_classes):
        w = _cyclic_witness_on_class(table, i, ci, c)
        if w is not None:
            return w
    return None


def cyclic_decomposition(table: CharacterTable, i: int, ci: int) -> list[int]:
    """Multiplicities of the linear characters of <g>, g in class ci, in the
    restriction of character i; entry a corresponds to g -> zeta_m^a."""
    m = table.classes[ci].order
    vals = [table.values[i][table.class_of_power(ci, j)] for j in range(m)]
    out = []
    for a in range(m):
        s = Cyc.from_rational(0)
        for j in range(m):
            s = s + vals[j] * Cyc.zeta(m, (-a * j) % m)
        s = s / m
        if not s.is_rational() or s.rational_value().denominator != 1 or s.rational_value() < 0:
            raise TableError(
                f"non-integral cyclic multiplicity at class {ci}: {s}; table inconsistent"
            )
        out.append(int(s.rational_value()))
    return out


def _cyclic_witness_on_class(
    table: CharacterTable, i: int, ci: int, c: int
) -> CyclicWitness | None:
    m = table.classes[ci].order
    if m % c:
        return None
    mults = cyclic_decomposition(table, i, ci)
    for a in range(m):
        if mults[a] > 0 and m // math.gcd(m, a) == c:
            return CyclicWitness(ci, a, c)
    return None


# -- cyclic-group arithmetic (Lemma on adjusting orders of products) -------


def _additive_order(m: int, x: int) -> int:
    return m // math.gcd(m, x)


def roots_witness(m: int, u: int, v: int) -> int:
    """For the cyclic group Z/m with m odd: k with gcd(k, o(v)) = 1 and
    o(u) dividing o(v^k u), built prime by prime via CRT."""
    if m % 2 == 0:
        raise ValueError("m must be odd")
    u %= m
    v %= m
    ov = _additive_order(m, v)
    residues = []
    moduli = []
    for p in prime_factors(m):
        pf = 1
        mm = m
        while mm % p == 0:
            pf *= p
            mm //= p
        up, vp = u % pf, v % pf
        ou = _additive_order(pf, up)
        kp = next(
            k
            for k in range(1, pf + 1)
            if k % p and _additive_order(pf, (k * vp + up) % pf) % ou == 0
        )
        residues.append(kp)
        moduli.append(pf)
    k = _crt(residues, moduli) if moduli else 1
    assert math.gcd(k, ov) == 1
    assert _additive_order(m, (k * v + u) % m) % _additive_order(m, u) == 0
    return k


def _crt(residues: list[int], moduli: list[int]) -> int:
    x, mod = 0, 1
    for r, m in zip(residues, moduli):
        g = pow(mod, -1, m)
        x = x + mod * ((r - x) * g % m)
        mod *= m
    return x % mod


# -- small generic table builders -----------------------------------------


def cyclic_table(n: int) -> CharacterTable:
    classes = []
    for j in range(n):
        order = n // math.gcd(n, j) if j else 1
        power = {p: (j * p) % n for p in prime_factors(n)}
        classes.append(ClassData(1, order, power, name=f"g^{j}"))
    values = [[Cyc.zeta(n, a * j) for j in range(n)] for a in range(n)]
    return CharacterTable(
        f"C{n}", n, classes, values, [f"chi{a}" for a in range(n)]
    )
