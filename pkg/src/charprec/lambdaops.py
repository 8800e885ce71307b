"""Lambda-ring calculus on class functions and exact eigenvalue multisets.

Symmetric and exterior powers are driven entirely by Adams operations (power
maps on conjugacy classes), so no representing matrices are ever needed.
Eigenvalue multisets are recovered per class by exact discrete Fourier
inversion over the cyclic group generated by a class representative.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .chartab import CharacterTable, ClassFunction, char_inner, np_power_rows, trivial_character
from .exact import CycNum, euler_phi, power_basis_rows


class NonGenuineCharacterError(ValueError):
    """Eigenvalue extraction produced non-integer or negative multiplicities."""


# ---------------------------------------------------------------------------
# pointwise operations
# ---------------------------------------------------------------------------

def cf_add(a: ClassFunction, b: ClassFunction) -> ClassFunction:
    return a + b


def cf_sub(a: ClassFunction, b: ClassFunction) -> ClassFunction:
    return a - b


def cf_tensor(a: ClassFunction, b: ClassFunction) -> ClassFunction:
    return a * b


def adams(cf: ClassFunction, k: int) -> ClassFunction:
    """psi^k: value at c is the value at the class of rep(c)**k."""
    G = cf.group
    return ClassFunction(G, [cf.values[G.power_map(c, k)] for c in range(G.n_classes)])


def symmetric_power(cf: ClassFunction, k: int) -> ClassFunction:
    """Sym^k via the Newton recurrence k*h_k = sum h_{k-i} psi^i."""
    if k < 0:
        raise ValueError("power must be nonnegative")
    G = cf.group
    hs = [trivial_character(G)]
    psis = [None]
    for i in range(1, k + 1):
        psis.append(adams(cf, i))
        total = None
        for j in range(1, i + 1):
            term = hs[i - j] * psis[j]
            total = term if total is None else total + term
        hs.append(total * Fraction(1, i))
    return hs[k]


def exterior_power(cf: ClassFunction, k: int) -> ClassFunction:
    """Lambda^k via the Newton recurrence k*e_k = sum (-1)^(i-1) e_{k-i} psi^i."""
    if k < 0:
        raise ValueError("power must be nonnegative")
    G = cf.group
    es = [trivial_character(G)]
    psis = [None]
    for i in range(1, k + 1):
        psis.append(adams(cf, i))
        total = None
        for j in range(1, i + 1):
            term = es[i - j] * psis[j]
            if j % 2 == 0:
                term = -term
            total = term if total is None else total + term
        es.append(total * Fraction(1, i))
    return es[k]


def determinant_character(cf: ClassFunction) -> ClassFunction:
    return exterior_power(cf, int(cf.dim()))


# ---------------------------------------------------------------------------
# eigenvalue multisets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EigenMultiset:
    """Eigenvalues of a class representative: zeta_order^j with multiplicity.

    Exponents are kept with denominator `order` (the representative's order),
    never reduced to primitive order; comparisons normalize exponents first.
    """

    order: int
    mults: tuple  # sorted tuple of (exponent, multiplicity), multiplicities > 0

    @classmethod
    def from_dict(cls, order: int, d: dict[int, int]) -> "EigenMultiset":
        items = tuple(sorted((j % order, m) for j, m in d.items() if m))
        return cls(order, items)

    def as_dict(self) -> dict[int, int]:
        return dict(self.mults)

    def total(self) -> int:
        return sum(m for _, m in self.mults)

    def normalized(self, order: int) -> dict[int, int]:
        """Exponent dictionary rewritten with the given denominator."""
        if order % self.order:
            raise ValueError("target order must be a multiple")
        k = order // self.order
        return {j * k: m for j, m in self.mults}

    def multiplicity(self, exponent: int) -> int:
        return self.as_dict().get(exponent % self.order, 0)

    def contains(self, other: "EigenMultiset") -> bool:
        """Multiplicity-wise containment of `other` in self."""
        L = lcm(self.order, other.order)
        mine = self.normalized(L)
        for j, m in other.normalized(L).items():
            if mine.get(j, 0) < m:
                return False
        return True

    def first_deficit(self, other: "EigenMultiset"):
        """Least normalized exponent where `other` exceeds self, or None."""
        L = lcm(self.order, other.order)
        mine = self.normalized(L)
        for j, m in sorted(other.normalized(L).items()):
            if mine.get(j, 0) < m:
                return (L, j, m - mine.get(j, 0))
        return None

    def value_sum(self, conductor: int) -> CycNum:
        rows = power_basis_rows(conductor)
        phi = euler_phi(conductor)
        out = [0] * phi
        step = conductor // self.order
        for j, m in self.mults:
            row = rows[(j * step) % conductor]
            for i, r in enumerate(row):
                out[i] += m * r
        return CycNum(conductor, out)

    def elements(self) -> list[int]:
        """Exponents expanded with multiplicity."""
        out = []
        for j, m in self.mults:
            out.extend([j] * m)
        return out


def eigen_multiset(cf: ClassFunction, c: int, check: bool = True) -> EigenMultiset:
    """Exact eigenvalue multiset of a genuine character at a class.

    Multiplicity of zeta_m^j is (1/m) * sum_k chi(rep^k) * zeta_m^(-jk), an
    exact Fourier inversion over the cyclic group generated by the class
    representative.  Raises NonGenuineCharacterError when the multiplicities
    are not nonnegative integers (the input was not a genuine character, or
    `check` caught an internal fault).
    """
    G = cf.group
    if not 0 <= c < G.n_classes:
        raise ValueError(f"class index {c} out of range")
    m = G.class_orders[c]
    N = G.exponent
    step = N // m
    power_classes = [G.power_map(c, k) for k in range(m)]
    mat = cf.int_matrix()
    if mat is not None:
        ems = _eigen_fast(cf, mat, power_classes, m, N, step, check)
        if ems is not None:
            return EigenMultiset.from_dict(m, ems)
    return _eigen_exact(cf, power_classes, m, N, step, c)


def _eigen_fast(cf, mat, power_classes, m, N, step, check):
    """Integer-only inversion: rational coordinate plus reconstruction check."""
    red = np_power_rows(N)
    t0 = red[:N, 0].copy()
    C = mat[power_classes]
    bound = int(np.abs(C).max(initial=0)) * max(1, int(np.abs(t0).max(initial=0)))
    if bound and bound > (1 << 60) // (m * C.shape[1] + 1):
        return None  # magnitudes too large for int64; take the exact path
    phi = C.shape[1]
    E = np.arange(phi)
    ks = np.arange(m)
    R = np.empty(m, dtype=np.int64)
    for j in range(m):
        offs = (-step * j * ks) % N
        T = t0[(E[None, :] + offs[:, None]) % N]
        R[j] = int((C * T).sum())
    if np.any(R % m):
        raise NonGenuineCharacterError("non-integer eigenvalue multiplicity")
    mults = R // m
    if np.any(mults < 0):
        raise NonGenuineCharacterError("negative eigenvalue multiplicity")
    if check:
        # reconstruction guarantees the discarded coordinates all vanish
        for k in range(m):
            idx = (step * k * np.arange(m)) % N
            rec = mults @ red[idx]
            if not np.array_equal(rec, C[k]):
                raise NonGenuineCharacterError(
                    "character values are not consistent with integer multiplicities")
        dim = cf.dim()
        if dim.denominator != 1 or int(mults.sum()) != dim:
            raise NonGenuineCharacterError("multiplicities do not sum to the dimension")
    return {j: int(mults[j]) for j in range(m) if mults[j]}


def _eigen_exact(cf, power_classes, m, N, step, c):
    """Fully exact fallback over cyclotomic numbers."""
    mults = {}
    for j in range(m):
        total = CycNum.zero(N)
        for k in range(m):
            total = total + cf.values[power_classes[k]] * CycNum.zeta(N, (-step * j * k) % N)
        val = total / m
        if not val.is_rational():
            raise NonGenuineCharacterError(
                f"multiplicity of exponent {j} at class {c} is irrational")
        q = val.rational()
        if q.denominator != 1 or q < 0:
            raise NonGenuineCharacterError(
                f"multiplicity {q} at class {c} is not a nonnegative integer")
        if q:
            mults[j] = int(q)
    dim = cf.dim()
    if dim.denominator != 1 or sum(mults.values()) != dim:
        raise NonGenuineCharacterError("multiplicities do not sum to the dimension")
    return EigenMultiset.from_dict(m, mults)


def all_eigen_multisets(cf: ClassFunction, check: bool = True) -> list[EigenMultiset]:
    return [eigen_multiset(cf, c, check=check) for c in range(cf.group.n_classes)]


# ---------------------------------------------------------------------------
# eigenvalue-route powers (the independent oracle for the Newton route)
# ---------------------------------------------------------------------------

def _power_from_eigen(cf: ClassFunction, k: int, chooser) -> ClassFunction:
    G = cf.group
    N = G.exponent
    rows = power_basis_rows(N)
    phi = euler_phi(N)
    vals = []
    for c in range(G.n_classes):
        ems = eigen_multiset(cf, c)
        m = ems.order
        step = N // m
        exps = ems.elements()
        counter: dict[int, int] = {}
        for combo in chooser(exps, k):
            e = sum(combo) % m
            counter[e] = counter.get(e, 0) + 1
        out = [0] * phi
        for e, cnt in counter.items():
            row = rows[(e * step) % N]
            for i, r in enumerate(row):
                out[i] += cnt * r
        vals.append(CycNum(N, out))
    return ClassFunction(G, vals)


def exterior_power_from_eigen(cf: ClassFunction, k: int) -> ClassFunction:
    """Lambda^k computed directly from k-subsets of eigenvalues per class."""
    return _power_from_eigen(cf, k, itertools.combinations)


def symmetric_power_from_eigen(cf: ClassFunction, k: int) -> ClassFunction:
    """Sym^k computed directly from k-multisets of eigenvalues per class."""
    return _power_from_eigen(cf, k, itertools.combinations_with_replacement)


# ---------------------------------------------------------------------------
# decomposition against a character table
# ---------------------------------------------------------------------------

def decompose(cf: ClassFunction, table: CharacterTable) -> list[tuple[int, int]]:
    """Exact multiplicities of each table row in a virtual character.

    Returns (row index, multiplicity) for every row.  Raises ValueError when
    any multiplicity fails to be a rational integer or the expansion does not
    reproduce the input exactly (wrong table or a non-virtual class function).
    """
    if table.group is not cf.group:
        raise ValueError("table and class function live on different groups")

    def reproduces(mults):
        recon = None
        for m, row in zip(mults, table.rows):
            if m:
                term = row * m
                recon = term if recon is None else recon + term
        if recon is None:
            recon = ClassFunction(cf.group, [0] * cf.group.n_classes)
        return recon == cf

    mults = _decompose_fast(cf, table)
    if mults is None or not reproduces(mults):
        mults = []
        for row in table.rows:
            v = char_inner(cf, row)
            if not v.is_rational() or v.rational().denominator != 1:
                raise ValueError(f"non-integer multiplicity {v} in decomposition")
            mults.append(int(v.rational()))
        if not reproduces(mults):
            raise ValueError("decomposition does not reproduce the class function")
    return list(enumerate(mults))


def _decompose_fast(cf, table):
    N = cf.group.exponent
    A = cf.int_matrix()
    if A is None:
        return None
    sizes = np.array(cf.group.class_sizes, dtype=np.int64)
    red = np_power_rows(N)
    phi = A.shape[1]
    t0 = red[:, 0]
    M2 = t0[(np.arange(phi)[:, None] + np.arange(phi)[None, :])]
    WA = A * sizes[:, None]
    order = cf.group.order
    out = []
    for row in table.rows:
        B = row.int_matrix()
        if B is None:
            return None
        CB = np.zeros_like(B)
        for i in range(phi):
            CB += B[:, i:i + 1] * red[(-i) % N][None, :]
        val = int(np.einsum("ci,il,cl->", WA, M2, CB))
        if val % order:
            return None
        out.append(val // order)
    return out


def is_genuine(cf: ClassFunction, table: CharacterTable) -> bool:
    """True when every irreducible multiplicity is a nonnegative integer."""
    try:
        mults = decompose(cf, table)
    except ValueError:
        return False
    return all(m >= 0 for _, m in mults)
