"""The graded algebra generated by odd power sums, with its p/q/Q bases.

Elements are stored in the p-basis: exact rational coefficients keyed by
partitions with all parts odd.  Schur Q-functions are produced by the
two-row / Pfaffian recurrence; their monomial coefficients K' and the
structure constants f are derived from that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .partitions import (
    Partition,
    PartitionFamily,
    disjoint_union,
    enumerate_partitions,
    is_odd_parts,
    is_strict,
    z_order,
)


@dataclass(frozen=True)
class OmegaElement:
    degree: int
    coeffs: tuple[tuple[Partition, Fraction], ...]  # sorted, zero-free, keys in O(n)

    @staticmethod
    def make(degree: int, coeffs: dict[Partition, Fraction]) -> "OmegaElement":
        clean = {}
        for la, c in coeffs.items():
            if not c:
                continue
            if sum(la) != degree or not is_odd_parts(la):
                raise ValueError(f"bad p-basis key {la} for degree {degree}")
            clean[la] = Fraction(c)
        return OmegaElement(degree, tuple(sorted(clean.items(), reverse=True)))

    def coeff(self, la: Partition) -> Fraction:
        for key, c in self.coeffs:
            if key == la:
                return c
        return Fraction(0)

    def as_dict(self) -> dict[Partition, Fraction]:
        return dict(self.coeffs)

    def __add__(self, other: "OmegaElement") -> "OmegaElement":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        out = self.as_dict()
        for la, c in other.coeffs:
            out[la] = out.get(la, Fraction(0)) + c
        return OmegaElement.make(self.degree, out)

    def __sub__(self, other: "OmegaElement") -> "OmegaElement":
        return self + other.scale(-1)

    def scale(self, r) -> "OmegaElement":
        r = Fraction(r)
        return OmegaElement.make(self.degree, {la: c * r for la, c in self.coeffs})

    def __mul__(self, other: "OmegaElement") -> "OmegaElement":
        out: dict[Partition, Fraction] = {}
        for la, a in self.coeffs:
            for mu, b in other.coeffs:
                key = disjoint_union(la, mu)
                out[key] = out.get(key, Fraction(0)) + a * b
        return OmegaElement.make(self.degree + other.degree, out)

    def is_zero(self) -> bool:
        return not self.coeffs


def power_sum(la: Partition) -> OmegaElement:
    if not is_odd_parts(la):
        raise ValueError(f"power sum index must have odd parts: {la}")
    return OmegaElement.make(sum(la), {tuple(sorted(la, reverse=True)): Fraction(1)})


def inner(a: OmegaElement, b: OmegaElement) -> Fraction:
    """Bilinear form with [p_la, p_mu] = z_la 2^(-l(la)) delta."""
    if a.degree != b.degree:
        raise ValueError("degree mismatch in inner product")
    bd = b.as_dict()
    total = Fraction(0)
    for la, ca in a.coeffs:
        cb = bd.get(la)
        if cb:
            total += ca * cb * Fraction(z_order(la), 2 ** len(la))
    return total


@cache
def q_one_part(n: int) -> OmegaElement:
    """Coefficient of t^n in exp(sum over odd r of 2 p_r t^r / r)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _q_series(n)[n]


def _zero(deg: int) -> OmegaElement:
    return OmegaElement(deg, ())


@cache
def _q_series(top: int) -> tuple[OmegaElement, ...]:
    # e_n from n*e_n = sum_{k odd <= n} 2 p_k * e_{n-k}  (logarithmic derivative)
    es: list[OmegaElement] = [OmegaElement.make(0, {(): Fraction(1)})]
    for n in range(1, top + 1):
        acc: dict[Partition, Fraction] = {}
        for k in range(1, n + 1, 2):
            term = power_sum((k,)) * es[n - k]
            for la, c in term.coeffs:
                acc[la] = acc.get(la, Fraction(0)) + 2 * c
        es.append(OmegaElement.make(n, {la: c / n for la, c in acc.items()}))
    return tuple(es)


def q_lambda(la: Partition) -> OmegaElement:
    out = OmegaElement.make(0, {(): Fraction(1)})
    for part in la:
        out = out * q_one_part(part)
    return out


@cache
def _q_two_rows(a: int, b: int) -> OmegaElement:
    """Q_(a,b) for a > b >= 0, with Q_(a,0) = q_a."""
    out = q_one_part(a) * q_one_part(b)
    for i in range(1, b + 1):
        term = q_one_part(a + i) * q_one_part(b - i)
        out = out + term.scale(2 * (-1) ** i)
    return out


@cache
def _q_pfaffian(parts: tuple[int, ...]) -> OmegaElement:
    """Pfaffian recurrence; parts strictly decreasing, one trailing 0 allowed."""
    if len(parts) == 0:
        return OmegaElement.make(0, {(): Fraction(1)})
    if len(parts) == 1:
        return q_one_part(parts[0])
    if len(parts) == 2:
        return _q_two_rows(parts[0], parts[1])
    if len(parts) % 2 == 1:
        parts = parts + (0,)
    total = _zero(sum(parts))
    for idx in range(1, len(parts)):
        rest = tuple(p for i, p in enumerate(parts) if i not in (0, idx) and p > 0)
        term = _q_two_rows(parts[0], parts[idx]) * _q_pfaffian(rest)
        total = total + term.scale((-1) ** (idx + 1))
    return total


def schur_Q(la: Partition) -> OmegaElement:
    if not is_strict(la):
        raise ValueError(f"Schur Q-functions are indexed by strict partitions: {la}")
    return _q_pfaffian(tuple(la))


# -- monomial expansion and K' ------------------------------------------

Monomial = tuple[int, ...]


@cache
def _p_monomials(la: Partition, nvars: int) -> tuple[tuple[Monomial, int], ...]:
    poly: dict[Monomial, int] = {(0,) * nvars: 1}
    for part in la:
        new: dict[Monomial, int] = {}
        for mono, c in poly.items():
            for i in range(nvars):
                m2 = mono[:i] + (mono[i] + part,) + mono[i + 1 :]
                new[m2] = new.get(m2, 0) + c
        poly = new
    return tuple(poly.items())


def expand_monomials(elem: OmegaElement, nvars: int) -> dict[Monomial, Fraction]:
    out: dict[Monomial, Fraction] = {}
    for la, c in elem.coeffs:
        for mono, m in _p_monomials(la, nvars):
            v = out.get(mono, Fraction(0)) + c * m
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
    return out


@cache
def _Q_monomials(la: Partition) -> dict[Monomial, Fraction]:
    return expand_monomials(schur_Q(la), sum(la))


def kprime(la: Partition, mu: Partition) -> int:
    """Coefficient of x^mu in Q_la (the shifted-tableau count)."""
    if sum(la) != sum(mu):
        raise ValueError("size mismatch")
    if not is_strict(la):
        raise ValueError(f"la must be strict: {la}")
    n = sum(la)
    mono = tuple(mu) + (0,) * (n - len(mu))
    c = _Q_monomials(la).get(mono, Fraction(0))
    if c.denominator != 1 or c < 0:
        raise AssertionError(f"K' must be a nonnegative integer, got {c}")
    return int(c)


# -- structure constants -------------------------------------------------


def f_coeff(mu: Partition, nu: Partition, la: Partition) -> int:
    """Coefficient f in Q_mu Q_nu = sum 2^(l(mu)+l(nu)-l(la)) f Q_la."""
    if sum(mu) + sum(nu) != sum(la):
        raise ValueError("size mismatch")
    for p in (mu, nu, la):
        if not is_strict(p):
            raise ValueError(f"arguments must be strict: {p}")
    prod = schur_Q(mu) * schur_Q(nu)
    coeffs = _expand_in_Q_basis(prod)
    val = coeffs.get(la, Fraction(0)) * Fraction(2 ** len(la), 2 ** (len(mu) + len(nu)))
    if val.denominator != 1 or val < 0:
        raise AssertionError(f"f coefficient must be a nonnegative integer, got {val}")
    return int(val)


def _expand_in_Q_basis(elem: OmegaElement) -> dict[Partition, Fraction]:
    """Coordinates in the Q-basis via [Q_la, Q_mu] = 2^l(la) delta; the
    expansion is verified by exact reconstruction."""
    n = elem.degree
    out: dict[Partition, Fraction] = {}
    recon = _zero(n)
    for la in enumerate_partitions(n, PartitionFamily.STRICT):
        q = schur_Q(la)
        c = inner(elem, q) / 2 ** len(la)
        if c:
            out[la] = c
            recon = recon + q.scale(c)
    if not (recon - elem).is_zero():
        raise AssertionError("Q-basis expansion failed to reconstruct the element")
    return out


def all_branch_coeffs(la: Partition, m: int) -> dict[tuple[Partition, Partition], int]:
    """All f^la_{mu,nu} with |mu| = |la| - m, |nu| = m."""
    n = sum(la)
    out = {}
    for mu in enumerate_partitions(n - m, PartitionFamily.STRICT):
        for nu in enumerate_partitions(m, PartitionFamily.STRICT):
            f = f_coeff(mu, nu, la)
            if f:
                out[(mu, nu)] = f
    return out
