"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Values are stored as rational coefficient vectors over the reduced power
basis of Q[x]/(Phi_N); Phi_N is computed by an integer-exact Moebius
product.  No floating point is used anywhere except the debug printer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache


def divisors(n: int) -> list[int]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@cache
def euler_phi(n: int) -> int:
    r = n
    for p in prime_factors(n):
        r = r // p * (p - 1)
    return r


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divexact(a: list[int], b: list[int]) -> list[int]:
    # exact division of integer polynomials, b monic up to sign
    a = a[:]
    q = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1]
        assert c % lead == 0
        c //= lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    assert not any(a[: len(b) - 1])
    return q


@cache
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, low to high, monic of degree phi(n)."""
    num = [1]
    den = [1]
    for d in divisors(n):
        m = _mobius(n // d)
        if m == 1:
            num = _poly_mul(num, [-1] + [0] * (d - 1) + [1])
        elif m == -1:
            den = _poly_mul(den, [-1] + [0] * (d - 1) + [1])
    return tuple(_poly_divexact(num, den))


def _mobius(n: int) -> int:
    m = 1
    for p in prime_factors(n):
        if n % (p * p) == 0:
            return 0
        m = -m
    return m


@cache
def _xpow_reduced(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """x^j mod Phi_n for 0 <= j < max(n, 2*phi(n)), as sparse (exp, coeff) rows."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    top = max(n, 2 * deg)
    rows: list[list[int]] = []
    for j in range(top):
        if j < deg:
            row = [0] * deg
            row[j] = 1
        else:
            # x * previous, reduce the overflow with x^deg = -(phi[:-1])
            prev = rows[j - 1]
            row = [0] + prev[:-1]
            c = prev[-1]
            if c:
                for i in range(deg):
                    row[i] -= c * phi[i]
        rows.append(row)
    return tuple(tuple((i, c) for i, c in enumerate(row) if c) for row in rows)


def _reduce_poly(n: int, raw: dict[int, Fraction]) -> dict[int, Fraction]:
    """Reduce exponents mod Phi_n; raw exponents must be < max(n, 2*phi(n))."""
    deg = euler_phi(n)
    table = _xpow_reduced(n)
    out: dict[int, Fraction] = {}
    for j, c in raw.items():
        if not c:
            continue
        if j < deg:
            out[j] = out.get(j, 0) + c
        else:
            for i, t in table[j]:
                out[i] = out.get(i, 0) + c * t
    return {k: Fraction(v) for k, v in out.items() if v}


class Cyc:
    """An element of Q(zeta_n), reduced modulo Phi_n."""

    __slots__ = ("n", "c", "_cond", "_stab", "_red")

    def __init__(self, n: int, coeffs: dict[int, Fraction], *, _reduced: bool = False):
        if n < 1:
            raise ValueError("ambient order must be positive")
        self.n = n
        self.c = coeffs if _reduced else _reduce_poly(n, coeffs)
        self._cond = None
        self._stab = None
        self._red = None

    # -- constructors ------------------------------------------------

    @staticmethod
    def from_rational(r) -> "Cyc":
        r = Fraction(r)
        return Cyc(1, {0: r} if r else {}, _reduced=True)

    @staticmethod
    def zeta(n: int, k: int = 1) -> "Cyc":
        if n < 1:
            raise ValueError("n must be >= 1")
        return Cyc(n, {k % n: Fraction(1)})

    # -- basic predicates ---------------------------------------------

    def is_zero(self) -> bool:
        return not self.c

    def is_rational(self) -> bool:
        return not self.c or set(self.c) == {0}

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not rational: {self}")
        return self.c.get(0, Fraction(0))

    def is_integer(self) -> bool:
        return self.is_rational() and self.rational_value().denominator == 1

    # -- ambient handling ---------------------------------------------

    def embed(self, m: int) -> "Cyc":
        """Image in Q(zeta_m); requires n | m."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError("can only embed into a multiple ambient")
        step = m // self.n
        return Cyc(m, {(j * step) % m: c for j, c in self.c.items()})

    @staticmethod
    def _common(a: "Cyc", b: "Cyc") -> tuple["Cyc", "Cyc"]:
        if a.n == b.n:
            return a, b
        m = math.lcm(a.n, b.n)
        return a.embed(m), b.embed(m)

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Cyc":
        if isinstance(x, Cyc):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyc.from_rational(x)
        return NotImplemented

    def __add__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = Cyc._common(self, other)
        out = dict(a.c)
        for j, c in b.c.items():
            s = out.get(j, 0) + c
            if s:
                out[j] = s
            else:
                out.pop(j, None)
        return Cyc(a.n, out, _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.n, {j: -c for j, c in self.c.items()}, _reduced=True)

    def __sub__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_rational():
            r = other.rational_value()
            if not r:
                return Cyc.from_rational(0)
            return Cyc(self.n, {j: c * r for j, c in self.c.items()}, _reduced=True)
        if self.is_rational():
            return other * self
        a, b = Cyc._common(self, other)
        raw: dict[int, Fraction] = {}
        for i, ci in a.c.items():
            for j, cj in b.c.items():
                k = i + j
                raw[k] = raw.get(k, 0) + ci * cj
        return Cyc(a.n, raw)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            r = Fraction(other)
            return Cyc(self.n, {j: c / r for j, c in self.c.items()}, _reduced=True)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers not supported")
        out = Cyc.from_rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = Cyc._common(self, other)
        return a.c == b.c

    def __hash__(self):
        r = self.reduced()
        return hash((r.n, tuple(sorted(r.c.items()))))

    def key(self) -> tuple:
        r = self.reduced()
        return (r.n, tuple(sorted(r.c.items())))

    def __repr__(self):
        return f"Cyc({cyc_to_str(self)})"

    # -- Galois action and conductor -----------------------------------

    def galois(self, k: int) -> "Cyc":
        """Image under zeta_n -> zeta_n^k; k must be coprime to the ambient."""
        if math.gcd(k, self.n) != 1:
            raise ValueError(f"gcd({k}, {self.n}) != 1")
        k %= self.n
        if k == 1 or self.is_rational():
            return self
        return Cyc(self.n, {(j * k) % self.n: c for j, c in self.c.items()})

    def conjugate(self) -> "Cyc":
        return self.galois(self.n - 1) if self.n > 2 else self

    def _stabilizer_full(self) -> frozenset[int]:
        """All k in (Z/nZ)^x with galois(self, k) == self."""
        if self._stab is not None:
            return self._stab
        n = self.n
        if self.is_rational() or n <= 2:
            self._stab = frozenset(k for k in range(max(n, 1)) if math.gcd(k, n) == 1) or frozenset({0})
            if n == 1:
                self._stab = frozenset({0})
            return self._stab
        units = [k for k in range(1, n) if math.gcd(k, n) == 1]
        mykey = tuple(sorted(self.c.items()))
        # orbit of self under the unit group, then read off the stabilizer
        orbit: dict[tuple, int] = {mykey: 0}
        reps: list[Cyc] = [self]
        pos: dict[int, int] = {1: 0}
        frontier = [(1, 0)]
        gens = _unit_gens(n)
        while frontier:
            k, p = frontier.pop()
            for g in gens:
                kg = (k * g) % n
                if kg in pos:
                    continue
                img = reps[p].galois(g)
                ik = tuple(sorted(img.c.items()))
                if ik not in orbit:
                    orbit[ik] = len(reps)
                    reps.append(img)
                pos[kg] = orbit[ik]
                frontier.append((kg, orbit[ik]))
        self._stab = frozenset(k for k in units if pos[k] == 0)
        return self._stab

    def conductor(self) -> int:
        """Smallest c with this value contained in Q(zeta_c)."""
        if self._cond is not None:
            return self._cond
        if self.is_rational():
            self._cond = 1
            return 1
        H = self._stabilizer_full()
        n = self.n
        units = [k for k in range(1, n + 1) if math.gcd(k, n) == 1] if n > 1 else [1]
        for d in divisors(n):
            if all((k in H) for k in units if k % d == 1 % d):
                self._cond = d
                return d
        raise AssertionError("unreachable: n itself always works")

    def reduced(self) -> "Cyc":
        """Rewrite over the minimal cyclotomic field Q(zeta_conductor)."""
        if self._red is not None:
            return self._red
        c = self.conductor()
        if c == self.n:
            self._red = self
            return self
        if c == 1:
            self._red = Cyc.from_rational(self.c.get(0, Fraction(0)))
            return self._red
        self._red = _change_basis(self, c)
        return self._red

    def to_complex(self) -> complex:
        """Debug-only numeric value."""
        import cmath

        return sum(
            complex(c) * cmath.exp(2j * cmath.pi * j / self.n) for j, c in self.c.items()
        )


@cache
def _unit_gens(n: int) -> tuple[int, ...]:
    """A generating set for (Z/nZ)^x (greedy closure)."""
    if n <= 2:
        return ()
    units = [k for k in range(1, n) if math.gcd(k, n) == 1]
    gens: list[int] = []
    closure = {1}
    for k in units:
        if k in closure:
            continue
        gens.append(k)
        closure = {1}
        frontier = [1]
        while frontier:
            a = frontier.pop()
            for g in gens:
                b = (a * g) % n
                if b not in closure:
                    closure.add(b)
                    frontier.append(b)
        if len(closure) == len(units):
            break
    return tuple(gens)


def _change_basis(x: Cyc, c: int) -> Cyc:
    """Solve for the coordinates of x over the power basis of Q(zeta_c)."""
    n = x.n
    assert n % c == 0
    dc = euler_phi(c)
    dn = euler_phi(n)
    step = n // c
    cols = [Cyc(n, {(j * step) % n: Fraction(1)}) for j in range(dc)]
    # Gaussian elimination on the dn x dc system [cols] b = x
    mat = [[col.c.get(i, Fraction(0)) for col in cols] for i in range(dn)]
    rhs = [x.c.get(i, Fraction(0)) for i in range(dn)]
    piv_rows: list[int] = []
    col_of_row: dict[int, int] = {}
    r = 0
    for j in range(dc):
        pr = None
        for i in range(dn):
            if i not in col_of_row and mat[i][j]:
                pr = i
                break
        if pr is None:
            continue
        col_of_row[pr] = j
        piv_rows.append(pr)
        inv = 1 / mat[pr][j]
        mat[pr] = [v * inv for v in mat[pr]]
        rhs[pr] *= inv
        for i in range(dn):
            if i != pr and mat[i][j]:
                f = mat[i][j]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[pr])]
                rhs[i] -= f * rhs[pr]
    sol = [Fraction(0)] * dc
    for i, j in col_of_row.items():
        sol[j] = rhs[i]
    # consistency: rows without pivot must have zero rhs
    for i in range(dn):
        if i not in col_of_row and rhs[i]:
            raise AssertionError("basis change inconsistent; conductor was wrong")
    return Cyc(c, {j: v for j, v in enumerate(sol) if v}, _reduced=True)


# -- field descriptors ------------------------------------------------


@dataclass(frozen=True)
class FieldDescriptor:
    """A subfield of a cyclotomic field: minimal conductor plus the
    subgroup of (Z/cZ)^x fixing it, stored as a generator list."""

    conductor: int
    stabilizer: tuple[int, ...]

    def stabilizer_elements(self) -> frozenset[int]:
        c = self.conductor
        if c <= 2:
            return frozenset({1 % max(c, 1)})
        out = {1}
        frontier = [1]
        while frontier:
            a = frontier.pop()
            for g in self.stabilizer:
                b = (a * g) % c
                if b not in out:
                    out.add(b)
                    frontier.append(b)
        return frozenset(out)

    def degree(self) -> int:
        """Degree of the fixed field over Q."""
        c = self.conductor
        if c == 1:
            return 1
        return euler_phi(c) // len(self.stabilizer_elements())

    def same_field(self, other: "FieldDescriptor") -> bool:
        return (
            self.conductor == other.conductor
            and self.stabilizer_elements() == other.stabilizer_elements()
        )


def _subgroup_gens(c: int, elements: frozenset[int]) -> tuple[int, ...]:
    gens: list[int] = []
    closure = {1 % max(c, 1)}
    for k in sorted(elements):
        if k not in closure:
            gens.append(k)
            frontier = [k]
            closure.add(k)
            while frontier:
                a = frontier.pop()
                for g in gens + list(closure):
                    b = (a * g) % c
                    if b not in closure:
                        closure.add(b)
                        frontier.append(b)
    return tuple(gens)


def conductor_of_set(values) -> FieldDescriptor:
    """Minimal c with Q(values) contained in Q(zeta_c), plus the Galois
    stabilizer of the value set inside (Z/cZ)^x."""
    values = list(values)
    if not values:
        raise ValueError("empty value list")
    conds = [v.conductor() for v in values]
    c = math.lcm(*conds) if conds else 1
    if c == 1:
        return FieldDescriptor(1, ())
    reduced = [v.reduced() for v in values if v.conductor() > 1]
    stabs = [(v.n, v._stabilizer_full()) for v in reduced]
    H = frozenset(
        k
        for k in range(1, c)
        if math.gcd(k, c) == 1 and all((k % vn) in vs for vn, vs in stabs)
    )
    return FieldDescriptor(c, _subgroup_gens(c, H))


def quadratic_field(d: int) -> FieldDescriptor:
    """The field Q(sqrt(d)) as a FieldDescriptor (d any nonzero integer)."""
    if d == 0:
        raise ValueError("d must be nonzero")
    d0 = squarefree_part(d)
    if d0 == 1:
        return FieldDescriptor(1, ())
    c = abs(d0) if d0 % 4 == 1 else 4 * abs(d0)
    return conductor_of_set([sqrt_int(d0)])


def squarefree_part(d: int) -> int:
    sign = -1 if d < 0 else 1
    d = abs(d)
    out = 1
    p = 2
    while p * p <= d:
        if d % p == 0:
            e = 0
            while d % p == 0:
                d //= p
                e += 1
            if e % 2:
                out *= p
        p += 1
    return sign * out * d


def _legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


@cache
def _sqrt_prime(p: int) -> Cyc:
    """sqrt(p) for an odd prime p, via the quadratic Gauss sum."""
    g = Cyc(p, {k: Fraction(_legendre(k, p)) for k in range(1, p)})
    if p % 4 == 1:
        return g  # g^2 = p
    return Cyc.zeta(4, 3) * g  # g^2 = -p; zeta_4^3 squares to -1


@cache
def sqrt_int(d: int) -> Cyc:
    """An exact cyclotomic square root of the integer d (ambient divides 4|d|)."""
    if d == 0:
        raise ValueError("sqrt of 0 is not a field generator")
    d0 = squarefree_part(d)
    f = math.isqrt(d // d0)
    out = Cyc.from_rational(f)
    m = abs(d0)
    if d0 < 0:
        out = out * Cyc.zeta(4, 1)
    if m % 2 == 0:
        out = out * (Cyc.zeta(8, 1) + Cyc.zeta(8, 7))  # sqrt(2)
        m //= 2
    for p in prime_factors(m):
        out = out * _sqrt_prime(p)
    out = out.reduced()
    assert out * out == Cyc.from_rational(d)
    return out


def root_of_unity(n: int, k: int = 1) -> Cyc:
    if n < 1:
        raise ValueError("n must be positive")
    return Cyc.zeta(n, k)


# -- E(n) literal syntax (shared with the ctab format) -----------------


def cyc_to_str(x: Cyc) -> str:
    """Canonical literal: conductor-normalized, terms sorted by exponent."""
    r = x.reduced()
    if r.is_rational():
        return str(r.rational_value())
    parts = []
    for j in sorted(r.c):
        c = r.c[j]
        term = f"{abs(c)}*E({r.n})^{j}" if j else str(abs(c))
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("-" if c < 0 else "+") + term)
    return "".join(parts)


class CycSyntaxError(ValueError):
    pass


def parse_cyc(s: str) -> Cyc:
    """Parse the E(n) literal syntax: terms c*E(n)^k joined by + and -."""
    s = s.strip().replace(" ", "")
    if not s:
        raise CycSyntaxError("empty cyclotomic literal")
    # split into signed terms
    terms = []
    cur = ""
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] not in "+-(^*/":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    total = Cyc.from_rational(0)
    for t in terms:
        total = total + _parse_term(t)
    return total


def _parse_term(t: str) -> Cyc:
    sign = 1
    while t and t[0] in "+-":
        if t[0] == "-":
            sign = -sign
        t = t[1:]
    if not t:
        raise CycSyntaxError("empty term")
    coeff = Fraction(sign)
    if "*" in t:
        cpart, _, t = t.partition("*")
        try:
            coeff *= Fraction(cpart)
        except (ValueError, ZeroDivisionError) as e:
            raise CycSyntaxError(f"bad rational {cpart!r}") from e
    if t.startswith("E("):
        close = t.find(")")
        if close < 0:
            raise CycSyntaxError(f"unterminated E( in {t!r}")
        try:
            n = int(t[2:close])
        except ValueError as e:
            raise CycSyntaxError(f"bad root order in {t!r}") from e
        if n < 1:
            raise CycSyntaxError(f"root order must be positive in {t!r}")
        rest = t[close + 1 :]
        k = 1
        if rest:
            if not rest.startswith("^"):
                raise CycSyntaxError(f"unexpected {rest!r} after E(..)")
            try:
                k = int(rest[1:])
            except ValueError as e:
                raise CycSyntaxError(f"bad exponent in {t!r}") from e
        return Cyc.zeta(n, k) * coeff
    try:
        return Cyc.from_rational(coeff * Fraction(t))
    except (ValueError, ZeroDivisionError) as e:
        raise CycSyntaxError(f"bad term {t!r}") from e
