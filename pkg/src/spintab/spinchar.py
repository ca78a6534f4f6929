"""Spin character tables of the double covers of S_n, A_n and of Young
subgroups, with branching and fields of values.

Values on the classes that meet the kernel-free part of the cover come
from inner products of Schur Q-functions with odd power sums; the values
on the exceptional split classes are surds i^e sqrt(z) attached by the
classical formulas.  Conventions:

* the + character of a split pair takes the + surd on the canonical
  representative (z-flag clear, associate-flag clear);
* z negates every spin value;
* on associate (odd-conjugate) split classes the +/- values swap;
* for strict all-odd shapes the surd branch and the power-sum branch
  both contribute and the value is their sum (forced by integrality and
  validated by column orthogonality).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cache

from .cyclo import Cyc, FieldDescriptor, conductor_of_set, quadratic_field, sqrt_int
from .feit import CharacterTable, ClassData
from .ordchar import AnLabel, an_char_value, an_labels, an_table, sn_char_value, _primes_leq
from .partitions import (
    Partition,
    PartitionFamily,
    enumerate_partitions,
    is_even_partition,
    is_odd_parts,
    is_strict,
    z_order,
)
from .pin import CoverClass, CoverGroup, cover_group
from .qfunc import inner, power_sum, schur_Q


class SpinKind(Enum):
    COVER_S = "cover-s"
    COVER_A = "cover-a"
    COVER_S_YOUNG = "cover-s-young"
    COVER_A_YOUNG = "cover-a-young"


@dataclass(frozen=True)
class SpinLabel:
    kind: SpinKind
    shapes: tuple[Partition, ...]
    sign: int | None  # +1 / -1 / None

    def __post_init__(self):
        for sh in self.shapes:
            if not is_strict(sh):
                raise ValueError(f"spin labels need strict shapes: {sh}")
        ev = pair_even(self.shapes)
        single = self.kind in (SpinKind.COVER_S, SpinKind.COVER_A)
        if single != (len(self.shapes) == 1):
            raise ValueError("shape count does not match kind")
        if self.kind in (SpinKind.COVER_S, SpinKind.COVER_S_YOUNG):
            want_sign = not ev
        else:
            want_sign = ev
        if want_sign != (self.sign is not None):
            raise ValueError(f"sign {self.sign} invalid for {self.kind} {self.shapes}")

    def partner(self) -> "SpinLabel":
        if self.sign is None:
            return self
        return SpinLabel(self.kind, self.shapes, -self.sign)

    def name(self) -> str:
        base = "phi" if self.kind in (SpinKind.COVER_S, SpinKind.COVER_S_YOUNG) else "psi"
        shapes = ",".join(str(s) for s in self.shapes)
        suffix = "" if self.sign is None else ("+" if self.sign > 0 else "-")
        return f"{base}[{shapes}]{suffix}"


def pair_even(shapes: tuple[Partition, ...]) -> bool:
    """Even when the total number of even parts is even."""
    return sum(sum(sh) - len(sh) for sh in shapes) % 2 == 0


def spin_labels(kind: SpinKind, n: int, m: int | None = None) -> list[SpinLabel]:
    if kind in (SpinKind.COVER_S, SpinKind.COVER_A):
        even = enumerate_partitions(n, PartitionFamily.STRICT_EVEN)
        odd = enumerate_partitions(n, PartitionFamily.STRICT_ODD)
        out = []
        if kind is SpinKind.COVER_S:
            out += [SpinLabel(kind, (la,), None) for la in even]
            for la in odd:
                out += [SpinLabel(kind, (la,), +1), SpinLabel(kind, (la,), -1)]
        else:
            for la in even:
                out += [SpinLabel(kind, (la,), +1), SpinLabel(kind, (la,), -1)]
            out += [SpinLabel(kind, (la,), None) for la in odd]
        return out
    assert m is not None
    out = []
    for mu in enumerate_partitions(n, PartitionFamily.STRICT):
        for nu in enumerate_partitions(m, PartitionFamily.STRICT):
            ev = pair_even((mu, nu))
            if (kind is SpinKind.COVER_S_YOUNG) == (not ev):
                out += [SpinLabel(kind, (mu, nu), +1), SpinLabel(kind, (mu, nu), -1)]
            else:
                out.append(SpinLabel(kind, (mu, nu), None))
    return out


@cache
def _qp(la: Partition, mu: Partition) -> Fraction:
    return inner(schur_Q(la), power_sum(mu))


def _pow2(e: int) -> Fraction:
    return Fraction(2**e) if e >= 0 else Fraction(1, 2**-e)


def _i_pow(e: int) -> Cyc:
    return Cyc.zeta(4, e % 4)


def _surd_s(la: Partition) -> Cyc:
    """i^((n-l+1)/2) sqrt(z/2) for an odd strict shape."""
    n, ell, z = sum(la), len(la), z_order(la)
    assert z % 2 == 0
    return _i_pow((n - ell + 1) // 2) * sqrt_int(z // 2)


def _surd_a(la: Partition) -> Cyc:
    """i^((n-l)/2) sqrt(z)/2 for an even strict shape."""
    n, ell, z = sum(la), len(la), z_order(la)
    return _i_pow((n - ell) // 2) * sqrt_int(z) / 2


def _sn_spin_value(la: Partition, sign: int | None, mu: Partition, zf) -> Cyc:
    ell_la = len(la)
    base = Cyc.from_rational(0)
    if is_odd_parts(mu):
        shift = 0 if sign is None else -1
        e = (len(mu) - ell_la + shift) // 2
        base = Cyc.from_rational(_pow2(e) * _qp(la, mu))
    if sign is not None and mu == la:
        base = base + (_surd_s(la) if sign > 0 else -_surd_s(la))
    return -base if zf else base


def _an_spin_value(la: Partition, sign: int | None, mu: Partition, zf, af) -> Cyc:
    ell_la = len(la)
    base = Cyc.from_rational(0)
    if is_odd_parts(mu):
        shift = -2 if sign is not None else -1
        e = (len(mu) - ell_la + shift) // 2
        base = Cyc.from_rational(_pow2(e) * _qp(la, mu))
    if sign is not None and mu == la:
        eff = sign if not af else -sign
        base = base + (_surd_a(la) if eff > 0 else -_surd_a(la))
    return -base if zf else base


def spin_value(label: SpinLabel, cls: CoverClass) -> Cyc:
    """Value of the spin character at a cover class (keys as produced by
    cover_classes for the matching kind)."""
    types, zf, af = cls.key
    if label.kind is SpinKind.COVER_S:
        return _sn_spin_value(label.shapes[0], label.sign, types[0], zf)
    if label.kind is SpinKind.COVER_A:
        return _an_spin_value(label.shapes[0], label.sign, types[0], zf, af)
    if label.kind is SpinKind.COVER_S_YOUNG:
        return _young_s_value(label, types, zf)
    return _young_a_value(label, types, zf, af)


def _young_s_value(label: SpinLabel, types, zf) -> Cyc:
    mu, nu = label.shapes
    alpha, beta = types
    m, k = sum(mu), sum(nu)
    # a size-1 factor makes the Young cover canonically the other factor
    if m == 1:
        v = _sn_spin_value(nu, label.sign, beta, 0)
        return -v if zf else v
    if k == 1:
        v = _sn_spin_value(mu, label.sign, alpha, 0)
        return -v if zf else v
    mu_even, nu_even = is_even_partition(mu), is_even_partition(nu)
    a_even, b_even = is_even_partition(alpha), is_even_partition(beta)
    if mu_even and nu_even:
        v = _sn_spin_value(mu, None, alpha, 0) * _sn_spin_value(nu, None, beta, 0)
    elif not mu_even and not nu_even:
        if a_even and b_even:
            v = 2 * _an_spin_value(mu, None, alpha, 0, None) * _an_spin_value(
                nu, None, beta, 0, None
            )
        else:
            v = Cyc.from_rational(0)
    elif mu_even:  # nu odd, sign present
        if a_even:
            v = _an_spin_value(mu, +1, alpha, 0, 0) * _sn_spin_value(
                nu, label.sign, beta, 0
            ) + _an_spin_value(mu, -1, alpha, 0, 0) * _sn_spin_value(
                nu, -label.sign, beta, 0
            )
        else:
            v = Cyc.from_rational(0)
    else:  # mu odd, nu even, sign present
        if b_even:
            v = _sn_spin_value(mu, label.sign, alpha, 0) * _an_spin_value(
                nu, +1, beta, 0, 0
            ) + _sn_spin_value(mu, -label.sign, alpha, 0) * _an_spin_value(
                nu, -1, beta, 0, 0
            )
        else:
            v = Cyc.from_rational(0)
    return -v if zf else v


def _young_a_value(label: SpinLabel, types, zf, af) -> Cyc:
    mu, nu = label.shapes
    alpha, beta = types
    m, k = sum(mu), sum(nu)
    sign = label.sign
    if af:
        # associate classes carry the partner's canonical value
        sign = -sign if sign is not None else None
    if m == 1:
        v = _an_spin_value(nu, sign, beta, 0, 0)
        return -v if zf else v
    if k == 1:
        v = _an_spin_value(mu, sign, alpha, 0, 0)
        return -v if zf else v
    mu_even, nu_even = is_even_partition(mu), is_even_partition(nu)
    a_even, b_even = is_even_partition(alpha), is_even_partition(beta)
    if mu_even and nu_even:  # label signs +-
        if a_even and b_even:
            v = _an_spin_value(mu, +1, alpha, 0, 0) * _an_spin_value(
                nu, sign, beta, 0, 0
            ) + _an_spin_value(mu, -1, alpha, 0, 0) * _an_spin_value(
                nu, -sign, beta, 0, 0
            )
        else:
            v = Cyc.from_rational(0)
    elif not mu_even and not nu_even:  # label signs +-
        if a_even and b_even:
            v = _an_spin_value(mu, None, alpha, 0, 0) * _an_spin_value(
                nu, None, beta, 0, 0
            )
        else:
            v = (
                Cyc.zeta(4, 1 if sign > 0 else 3)
                * _sn_spin_value(mu, +1, alpha, 0)
                * _sn_spin_value(nu, +1, beta, 0)
            )
    elif mu_even:  # nu odd, no sign
        if a_even and b_even:
            v = _sn_spin_value(mu, None, alpha, 0) * _an_spin_value(nu, None, beta, 0, 0)
        else:
            v = Cyc.from_rational(0)
    else:  # mu odd, nu even, no sign
        if a_even and b_even:
            v = _an_spin_value(mu, None, alpha, 0, 0) * _sn_spin_value(nu, None, beta, 0)
        else:
            v = Cyc.from_rational(0)
    return -v if zf else v


def young_cover_value(
    label: SpinLabel, x_class: tuple[Partition, int], y_class: tuple[Partition, int]
) -> Cyc:
    """Value at the product of an x-part representative and a y-part
    representative given by (cycle type, z-flag) per factor."""
    alpha, za = x_class
    beta, zb = y_class
    af = 0 if label.kind is SpinKind.COVER_A_YOUNG else None
    cls = CoverClass(((alpha, beta), (za + zb) % 2, af), None, 0, 0)
    return spin_value(label, cls)


# -- class lists -----------------------------------------------------------


def spin_group(kind: SpinKind, n: int, m: int | None = None) -> CoverGroup:
    if kind is SpinKind.COVER_S:
        return cover_group((n,), False)
    if kind is SpinKind.COVER_A:
        return cover_group((n,), True)
    assert m is not None
    if kind is SpinKind.COVER_S_YOUNG:
        return cover_group((n, m), False)
    return cover_group((n, m), True)


def cover_classes(kind: SpinKind, n: int, m: int | None = None) -> list[CoverClass]:
    return spin_group(kind, n, m).classes()


def spin_row(label: SpinLabel, group: CoverGroup) -> list[Cyc]:
    return [spin_value(label, c) for c in group.classes()]


def cover_inner(group: CoverGroup, row1: list[Cyc], row2: list[Cyc]) -> Fraction:
    s = Cyc.from_rational(0)
    for c, a, b in zip(group.classes(), row1, row2):
        s = s + a * b.conjugate() * c.size
    s = s / group.order
    if not s.is_rational():
        raise ValueError("inner product came out irrational")
    return s.rational_value()


def restriction_row(big_group: CoverGroup, big_row: list[Cyc], sub_group: CoverGroup) -> list[Cyc]:
    """Values of a big-group class function at the classes of a subgroup."""
    keys = [big_group.identify(c.rep) for c in sub_group.classes()]
    idx = {c.key: i for i, c in enumerate(big_group.classes())}
    return [big_row[idx[k]] for k in keys]


# -- closed-form branching ---------------------------------------------------


def spin_branch_mult(chi: SpinLabel, eta: SpinLabel) -> int:
    """Multiplicity of eta in the restriction of chi to the Young cover.

    chi is a COVER_S (resp. COVER_A) label; eta the matching Young label.
    """
    from .qfunc import f_coeff

    la = chi.shapes[0]
    mu, nu = eta.shapes
    if sum(mu) + sum(nu) != sum(la):
        raise ValueError("size mismatch")
    la_even = is_even_partition(la)
    pr_even = pair_even((mu, nu))
    ells = len(mu) + len(nu) - len(la)
    if chi.kind is SpinKind.COVER_S:
        if eta.kind is not SpinKind.COVER_S_YOUNG:
            raise ValueError("eta must be a Young cover label of matching kind")
        f = f_coeff(mu, nu, la)
        if la_even and pr_even:
            return int(_pow2(ells // 2) * f)
        if la_even and not pr_even:
            return int(_pow2((ells - 1) // 2) * f)
        if not la_even and pr_even:
            return int(_pow2((ells - 1) // 2) * f)
        # both odd
        if la == tuple(sorted(mu + nu, reverse=True)):
            return 1 if chi.sign == eta.sign else 0
        return int(_pow2((ells - 2) // 2) * f)
    if eta.kind is not SpinKind.COVER_A_YOUNG:
        raise ValueError("eta must be a Young cover label of matching kind")
    if la != tuple(sorted(mu + nu, reverse=True)):
        raise ValueError(
            "closed-form alternating branching is stated for la = mu disjoint-union nu"
        )
    if not la_even:
        return 1  # both odd, signless on both sides
    mu_even = is_even_partition(mu)
    if mu_even:  # la, mu, nu all even: signs match
        return 1 if chi.sign == eta.sign else 0
    return 1 if chi.sign != eta.sign else 0  # mu, nu odd: signs cross


# -- fields of values --------------------------------------------------------


def spin_field(label: SpinLabel) -> FieldDescriptor:
    """Closed-form field of values of the spin character."""
    shapes = label.shapes
    n = sum(sum(s) for s in shapes)
    ell = sum(len(s) for s in shapes)
    z = 1
    for s in shapes:
        z *= z_order(s)
    ev = pair_even(shapes)
    if label.kind in (SpinKind.COVER_S, SpinKind.COVER_S_YOUNG):
        if ev:
            return FieldDescriptor(1, ())
        d = (-1) ** (((n - ell + 1) // 2) % 2) * (z // 2)
        return quadratic_field(d)
    if ev:
        d = (-1) ** (((n - ell) // 2) % 2) * z
        return quadratic_field(d)
    return FieldDescriptor(1, ())


def spin_field_of_values(label: SpinLabel) -> FieldDescriptor:
    """The field of values computed from the actual character values."""
    m = None
    if len(label.shapes) == 2:
        m = sum(label.shapes[1])
        n = sum(label.shapes[0])
    else:
        n = sum(label.shapes[0])
    group = spin_group(label.kind, n, m)
    return conductor_of_set(spin_row(label, group))


# -- full tables -------------------------------------------------------------


def _ordered_classes(group: CoverGroup) -> list[CoverClass]:
    cl = group.classes()
    n = group.N
    ident_type = ((1,) * n,)
    front = [c for c in cl if c.types == ident_type and c.zflag == 0]
    zc = [c for c in cl if c.types == ident_type and c.zflag == 1]
    rest = [c for c in cl if c.types != ident_type]
    return front + zc + rest


@cache
def full_table(kind: SpinKind, n: int) -> CharacterTable:
    """The complete character table of the double cover: inflated ordinary
    characters plus the spin characters."""
    if kind not in (SpinKind.COVER_S, SpinKind.COVER_A):
        raise ValueError("full tables are built for the S and A covers")
    group = spin_group(kind, n)
    classes = _ordered_classes(group)
    keyidx = {c.key: i for i, c in enumerate(classes)}

    rows: list[list[Cyc]] = []
    names: list[str] = []
    if kind is SpinKind.COVER_S:
        for la in enumerate_partitions(n):
            rows.append(
                [Cyc.from_rational(sn_char_value(la, c.types[0])) for c in classes]
            )
            names.append(f"chi[{la}]")
    else:
        atab = an_table(n)
        for lab in atab.labels:
            row = []
            for c in classes:
                side = c.aflag if c.aflag is not None else None
                acl = _an_class_lookup(atab, c.types[0], side)
                row.append(an_char_value(lab, acl))
            rows.append(row)
            names.append(
                f"theta[{lab.la}]{'' if lab.sign is None else ('+' if lab.sign > 0 else '-')}"
            )
    for lab in spin_labels(kind, n):
        rows.append([spin_value(lab, c) for c in classes])
        names.append(lab.name())

    table_classes = []
    for c in classes:
        power = {}
        for p in _primes_leq(max(n, 2)):
            power[p] = keyidx[group.power_class(c.key, p)]
        zf = "" if c.zflag is None else f" z{c.zflag}"
        af = "" if c.aflag is None else f" a{c.aflag}"
        table_classes.append(
            ClassData(c.size, c.order, power, name=f"{c.types[0]}{zf}{af}")
        )
    name = ("2S" if kind is SpinKind.COVER_S else "2A") + str(n)
    return CharacterTable(name, group.order, table_classes, rows, names)


def _an_class_lookup(atab, mu: Partition, side):
    for c in atab.classes:
        if c.mu == mu and c.side == side:
            return c
    raise KeyError((mu, side))
