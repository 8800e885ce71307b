"""Exact scalars: arbitrary-precision rationals, cyclotomic numbers, finite fields.

Rationals are the standard library ``fractions.Fraction``.  Cyclotomic numbers
are kept in the power basis of Q(zeta_N), reduced eagerly by the N-th
cyclotomic polynomial, as an integer coefficient vector over a single positive
denominator.  Finite fields F_q are polynomial residues over F_p with a
deterministically chosen irreducible modulus.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

Rational = Fraction

#: refuse to build finite fields larger than this (q = p^d)
MAX_FIELD_SIZE = 1 << 20


# ---------------------------------------------------------------------------
# elementary number theory
# ---------------------------------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}."""
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi


def divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def prime_power_decomposition(q: int) -> tuple[int, int]:
    """Return (p, d) with q = p^d, or raise if q is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    fac = factorize(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    ((p, d),) = fac.items()
    return p, d


def primitive_root(p: int) -> int:
    """Smallest primitive root modulo a prime p."""
    if p == 2:
        return 1
    qs = list(factorize(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise ValueError(f"no primitive root found mod {p}")  # p not prime


# ---------------------------------------------------------------------------
# cyclotomic polynomials and power-basis reduction tables
# ---------------------------------------------------------------------------

def _poly_div_exact(a: list[int], b: tuple[int, ...]) -> tuple[int, ...]:
    # b is monic; division of integer polynomials must be exact here
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in reversed(range(len(out))):
        c = a[i + len(b) - 1]
        if c:
            out[i] = c
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    if any(a[: len(b) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return tuple(out)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("conductor must be >= 1")
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]
    out = tuple(poly)
    for d in divisors(n)[:-1]:
        out = _poly_div_exact(list(out), cyclotomic_polynomial(d))
    return out


@lru_cache(maxsize=None)
def power_basis_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Row e = coefficients of x^e reduced mod the n-th cyclotomic polynomial.

    Rows cover 0 <= e < max(n, 2*phi(n) - 1), enough for products of reduced
    elements and for exponent arithmetic mod n.  The cache fill is idempotent,
    so concurrent initialization is harmless.
    """
    phi = euler_phi(n)
    tail = cyclotomic_polynomial(n)[:-1]
    length = max(n, 2 * phi - 1)
    rows = []
    row = [0] * phi
    row[0] = 1
    for _ in range(length):
        rows.append(tuple(row))
        top = row[phi - 1]
        row = [0] + row[: phi - 1]
        if top:
            for i, t in enumerate(tail):
                row[i] -= top * t
    return tuple(rows)


# ---------------------------------------------------------------------------
# cyclotomic numbers
# ---------------------------------------------------------------------------

class CycNum:
    """An exact element of Q(zeta_N) in the reduced power basis.

    Immutable.  ``nums`` has length phi(N); the represented value is
    ``sum(nums[i]/den * zeta_N**i)``.
    """

    __slots__ = ("n", "nums", "den")

    def __init__(self, n: int, nums, den: int = 1):
        if n < 1:
            raise ValueError("conductor must be >= 1")
        nums = list(nums)
        if len(nums) != euler_phi(n):
            raise ValueError("coefficient vector has wrong length")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            nums = [-c for c in nums]
        g = math.gcd(den, *nums) if nums else den
        if g > 1:
            den //= g
            nums = [c // g for c in nums]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "nums", tuple(nums))
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("CycNum is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeta(cls, n: int, e: int = 1) -> "CycNum":
        """zeta_n ** e, with e reduced mod n."""
        if n < 1:
            raise ValueError("conductor must be >= 1")
        return cls(n, power_basis_rows(n)[e % n])

    @classmethod
    def from_rational(cls, q, n: int = 1) -> "CycNum":
        q = Fraction(q)
        nums = [0] * euler_phi(n)
        row = power_basis_rows(n)[0]
        for i, r in enumerate(row):
            nums[i] = q.numerator * r
        return cls(n, nums, q.denominator)

    @classmethod
    def zero(cls, n: int = 1) -> "CycNum":
        return cls(n, [0] * euler_phi(n))

    @classmethod
    def one(cls, n: int = 1) -> "CycNum":
        return cls.from_rational(1, n)

    # -- representation changes ---------------------------------------------

    def promote(self, m: int) -> "CycNum":
        """The same number written in Q(zeta_m); requires n | m."""
        if m % self.n:
            raise ValueError(f"conductor {self.n} does not divide {m}")
        if m == self.n:
            return self
        k = m // self.n
        rows = power_basis_rows(m)
        out = [0] * euler_phi(m)
        for i, c in enumerate(self.nums):
            if c:
                row = rows[i * k]
                for j, r in enumerate(row):
                    if r:
                        out[j] += c * r
        return CycNum(m, out, self.den)

    def _pair(self, other) -> tuple["CycNum", "CycNum"]:
        if not isinstance(other, CycNum):
            other = CycNum.from_rational(other)
        if self.n == other.n:
            return self, other
        m = math.lcm(self.n, other.n)
        return self.promote(m), other.promote(m)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        a, b = self._pair(other)
        nums = [x * b.den + y * a.den for x, y in zip(a.nums, b.nums)]
        return CycNum(a.n, nums, a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.n, [-c for c in self.nums], self.den)

    def __sub__(self, other):
        a, b = self._pair(other)
        nums = [x * b.den - y * a.den for x, y in zip(a.nums, b.nums)]
        return CycNum(a.n, nums, a.den * b.den)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycNum(self.n, [c * q.numerator for c in self.nums],
                          self.den * q.denominator)
        a, b = self._pair(other)
        phi = len(a.nums)
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a.nums):
            if x:
                for j, y in enumerate(b.nums):
                    if y:
                        conv[i + j] += x * y
        rows = power_basis_rows(a.n)
        out = conv[:phi]
        for e in range(phi, 2 * phi - 1):
            c = conv[e]
            if c:
                row = rows[e]
                for j, r in enumerate(row):
                    if r:
                        out[j] += c * r
        return CycNum(a.n, out, a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        phi_poly = [Fraction(c) for c in cyclotomic_polynomial(self.n)]
        a = [Fraction(c, self.den) for c in self.nums]
        inv = _poly_modular_inverse(a, phi_poly)
        phi = euler_phi(self.n)
        inv = inv + [Fraction(0)] * (phi - len(inv))
        den = math.lcm(*[f.denominator for f in inv]) if inv else 1
        nums = [int(f * den) for f in inv]
        return CycNum(self.n, nums, den)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / q)
        a, b = self._pair(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return CycNum.from_rational(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycNum.one(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def galois(self, a: int) -> "CycNum":
        """Image under zeta_n -> zeta_n^a for gcd(a, n) = 1."""
        a %= self.n
        if math.gcd(a, self.n) != 1:
            raise ValueError("galois exponent must be coprime to the conductor")
        rows = power_basis_rows(self.n)
        out = [0] * len(self.nums)
        for i, c in enumerate(self.nums):
            if c:
                row = rows[(a * i) % self.n]
                for j, r in enumerate(row):
                    if r:
                        out[j] += c * r
        return CycNum(self.n, out, self.den)

    def conjugate(self) -> "CycNum":
        return self.galois(-1)

    # -- predicates / conversions -------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self) -> complex:
        z = 0j
        for i, c in enumerate(self.nums):
            if c:
                z += c * cmath.exp(2j * cmath.pi * i / self.n)
        return z / self.den

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rational() == other
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b = self._pair(other)
        return a.nums == b.nums and a.den == b.den

    __hash__ = None  # promote-before-compare equality; not hashable

    def value_key(self):
        """A deterministic sort key (fixed arbitrary total order per conductor)."""
        return (self.den, self.nums)

    # -- serialization / display ----------------------------------------------

    def to_json(self):
        return {"conductor": self.n,
                "coeffs": [[f.numerator, f.denominator]
                           for f in (Fraction(c, self.den) for c in self.nums)]}

    @classmethod
    def from_json(cls, obj) -> "CycNum":
        n = obj["conductor"]
        coeffs = [Fraction(a, b) for a, b in obj["coeffs"]]
        den = math.lcm(*[c.denominator for c in coeffs]) if coeffs else 1
        return cls(n, [int(c * den) for c in coeffs], den)

    def __repr__(self):
        if self.is_rational():
            return str(Fraction(self.nums[0], self.den))
        parts = []
        for i, c in enumerate(self.nums):
            if not c:
                continue
            q = Fraction(c, self.den)
            mon = "1" if i == 0 else (f"z{self.n}" if i == 1 else f"z{self.n}^{i}")
            if i == 0:
                parts.append(str(q))
            elif q == 1:
                parts.append(mon)
            elif q == -1:
                parts.append(f"-{mon}")
            else:
                parts.append(f"{q}*{mon}")
        s = " + ".join(parts).replace("+ -", "- ")
        return s


def _poly_modular_inverse(a: list[Fraction], mod: list[Fraction]) -> list[Fraction]:
    """Inverse of a modulo mod in Q[x] (mod irreducible, so gcd is a unit)."""

    def norm(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def divmod_(p, q):
        p = p[:]
        out = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
        while len(p) >= len(q) and any(p):
            if p[-1] == 0:
                p.pop()
                continue
            c = p[-1] / q[-1]
            k = len(p) - len(q)
            out[k] = c
            for i, qc in enumerate(q):
                p[i + k] -= c * qc
            p.pop()
        return out, norm(p)

    r0, r1 = norm(mod[:]), norm(a[:])
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1:
        qpoly, rem = divmod_(r0, r1)
        r0, r1 = r1, rem
        prod = [Fraction(0)] * (len(qpoly) + len(s1) - 1) if qpoly and s1 else []
        for i, qc in enumerate(qpoly):
            for j, sc in enumerate(s1):
                prod[i + j] += qc * sc
        new_s = [Fraction(0)] * max(len(s0), len(prod))
        for i, c in enumerate(s0):
            new_s[i] += c
        for i, c in enumerate(prod):
            new_s[i] -= c
        s0, s1 = s1, norm(new_s)
        if not r1:
            raise ZeroDivisionError("element not invertible")
    # r1 is a nonzero constant; scale
    c = r1[0]
    return [x / c for x in s1]


# -- spec-style dispatchers -------------------------------------------------

def cyc_make(n: int, exponent: int) -> CycNum:
    """zeta_n ** exponent in canonical form."""
    if n == 0:
        raise ValueError("conductor 0 rejected")
    return CycNum.zeta(n, exponent)


def cyc_promote(x: CycNum, m: int) -> CycNum:
    return x.promote(m)


def cyc_arith(op: str, x: CycNum, y: CycNum) -> CycNum:
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# finite fields
# ---------------------------------------------------------------------------

class FqField:
    """F_{p^d} as polynomial residues modulo a fixed irreducible polynomial.

    Elements are coefficient tuples of length d (ascending powers).  The
    modulus is the first irreducible monic polynomial in the deterministic
    enumeration order (tails counted in base p, least significant first), so
    every table derived from the field is reproducible.
    """

    def __init__(self, p: int, d: int = 1, max_size: int = MAX_FIELD_SIZE):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if d < 1:
            raise ValueError("degree must be >= 1")
        q = p**d
        if q > max_size:
            raise ValueError(f"field size {q} exceeds bound {max_size}")
        self.p = p
        self.d = d
        self.q = q
        self.modulus = self._find_modulus()
        self.zero = (0,) * d
        self.one = (1,) + (0,) * (d - 1)

    def _find_modulus(self) -> tuple[int, ...]:
        p, d = self.p, self.d
        if d == 1:
            return (0, 1)
        for code in range(p**d):
            tail = []
            c = code
            for _ in range(d):
                tail.append(c % p)
                c //= p
            poly = tuple(tail) + (1,)
            if poly_is_irreducible(poly, p):
                return poly
        raise AssertionError("no irreducible polynomial found")

    # -- element codecs ------------------------------------------------------

    def encode(self, a: tuple[int, ...]) -> int:
        out = 0
        for c in reversed(a):
            out = out * self.p + c
        return out

    def decode(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.d):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)

    def elements(self):
        for code in range(self.q):
            yield self.decode(code)

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def mul(self, a, b):
        p, d = self.p, self.d
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] += x * y
        # reduce by the monic modulus
        for e in reversed(range(d, 2 * d - 1)):
            c = conv[e] % p
            if c:
                for i in range(d):
                    conv[e - d + i] -= c * self.modulus[i]
            conv[e] = 0
        return tuple(c % p for c in conv[:d])

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero field element")
        # Lagrange: a^(q-2)
        return self.pow(a, self.q - 2)

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        out = self.one
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def element_order(self, a) -> int:
        if a == self.zero:
            raise ValueError("zero has no multiplicative order")
        for m in divisors(self.q - 1):
            if self.pow(a, m) == self.one:
                return m
        raise AssertionError

    def generator(self) -> tuple[int, ...]:
        """Smallest (in encoding order) generator of the multiplicative group."""
        for code in range(1, self.q):
            a = self.decode(code)
            if self.element_order(a) == self.q - 1:
                return a
        raise AssertionError


def poly_is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial factorization of a monic polynomial over F_p."""
    d = len(poly) - 1
    if d <= 0:
        return False
    if d == 1:
        return True

    def mod(a, b):
        a = list(a)
        binv = pow(b[-1], p - 2, p)
        while len(a) >= len(b):
            c = a[-1] * binv % p
            if c:
                k = len(a) - len(b)
                for i, bc in enumerate(b):
                    a[i + k] = (a[i + k] - c * bc) % p
            a.pop()
        while a and a[-1] == 0:
            a.pop()
        return a

    for deg in range(1, d // 2 + 1):
        for code in range(p**deg):
            tail = []
            c = code
            for _ in range(deg):
                tail.append(c % p)
                c //= p
            g = tuple(tail) + (1,)
            if not mod(poly, g):
                return False
    return True


class Fq:
    """A value in a fixed FqField, with operator sugar."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FqField, coeffs):
        if isinstance(coeffs, int):
            coeffs = (coeffs % field.p,) + (0,) * (field.d - 1)
        coeffs = tuple(c % field.p for c in coeffs)
        if len(coeffs) != field.d:
            raise ValueError("wrong coefficient length")
        self.field = field
        self.coeffs = coeffs

    def _check(self, other: "Fq"):
        if self.field.p != other.field.p or self.field.modulus != other.field.modulus:
            raise ValueError("field parameter mismatch")

    def __add__(self, other):
        self._check(other)
        return Fq(self.field, self.field.add(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check(other)
        return Fq(self.field, self.field.sub(self.coeffs, other.coeffs))

    def __mul__(self, other):
        self._check(other)
        return Fq(self.field, self.field.mul(self.coeffs, other.coeffs))

    def __truediv__(self, other):
        self._check(other)
        return Fq(self.field, self.field.mul(self.coeffs, self.field.inv(other.coeffs)))

    def inverse(self):
        return Fq(self.field, self.field.inv(self.coeffs))

    def __pow__(self, k: int):
        return Fq(self.field, self.field.pow(self.coeffs, k))

    def __neg__(self):
        return Fq(self.field, self.field.neg(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == Fq(self.field, other).coeffs
        return isinstance(other, Fq) and self.field.modulus == other.field.modulus \
            and self.field.p == other.field.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.p, self.field.modulus, self.coeffs))

    def __repr__(self):
        return f"Fq({self.field.q}, {list(self.coeffs)})"


def fq_arith(op: str, a: Fq, b: Fq | None = None) -> Fq:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown operation {op!r}")
