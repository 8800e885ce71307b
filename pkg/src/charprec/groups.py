"""Finite group engine: enumeration, conjugacy classes, power maps, constructors.

Groups are enumerated in full (desk scale), elements are plain tuples with a
fixed total order, and conjugacy classes are computed by brute-force orbits.
Class ordering is deterministic: by class size, then by the least element.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .exact import FqField, MAX_FIELD_SIZE, prime_power_decomposition

DEFAULT_MAX_ORDER = 10**6


class ResourceLimitError(RuntimeError):
    """A configured size bound was exceeded; the computation was refused."""


# ---------------------------------------------------------------------------
# element carriers
# ---------------------------------------------------------------------------

class PermCarrier:
    """Permutations of {0..n-1} as image tuples; (a*b)(i) = a[b[i]]."""

    kind = "perm"

    def __init__(self, n: int):
        self.n = n
        self.identity = tuple(range(n))

    def mul(self, a, b):
        return tuple(a[i] for i in b)

    def inv(self, a):
        out = [0] * self.n
        for i, j in enumerate(a):
            out[j] = i
        return tuple(out)

    def validate(self, a):
        return len(a) == self.n and sorted(a) == list(range(self.n))


class SmallField:
    """Integer-coded F_q with precomputed tables, for matrix group work."""

    def __init__(self, q: int, max_size: int = MAX_FIELD_SIZE):
        p, d = prime_power_decomposition(q)
        self.base = FqField(p, d, max_size=max_size)
        self.q, self.p, self.d = q, p, d
        enc, dec = self.base.encode, self.base.decode
        els = [dec(c) for c in range(q)]
        self.add = [[enc(self.base.add(a, b)) for b in els] for a in els]
        self.mul = [[enc(self.base.mul(a, b)) for b in els] for a in els]
        self.neg = [enc(self.base.neg(a)) for a in els]
        self.inv = [0] + [enc(self.base.inv(a)) for a in els[1:]]
        self.gen = enc(self.base.generator())
        self.dlog = {}
        x = 1
        for k in range(q - 1):
            self.dlog[x] = k
            x = self.mul[x][self.gen]

    def order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        return (self.q - 1) // math.gcd(self.dlog[a], self.q - 1)

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k <= 0:
                raise ZeroDivisionError("0**k for k <= 0")
            return 0
        k %= self.q - 1
        out = 1
        base = a
        while k:
            if k & 1:
                out = self.mul[out][base]
            base = self.mul[base][base]
            k >>= 1
        return out

    @property
    def modulus(self):
        return self.base.modulus


class MatCarrier:
    """Invertible 2x2 matrices (m00, m01, m10, m11) over a SmallField."""

    kind = "mat2"

    def __init__(self, fld: SmallField):
        self.field = fld
        self.identity = (1, 0, 0, 1)

    def mul(self, a, b):
        F = self.field
        add, mul = F.add, F.mul
        return (add[mul[a[0]][b[0]]][mul[a[1]][b[2]]],
                add[mul[a[0]][b[1]]][mul[a[1]][b[3]]],
                add[mul[a[2]][b[0]]][mul[a[3]][b[2]]],
                add[mul[a[2]][b[1]]][mul[a[3]][b[3]]])

    def det(self, a):
        F = self.field
        return F.add[F.mul[a[0]][a[3]]][F.neg[F.mul[a[1]][a[2]]]]

    def inv(self, a):
        F = self.field
        di = F.inv[self.det(a)]
        return (F.mul[a[3]][di], F.mul[F.neg[a[1]]][di],
                F.mul[F.neg[a[2]]][di], F.mul[a[0]][di])

    def validate(self, a):
        return len(a) == 4 and all(0 <= x < self.field.q for x in a) \
            and self.det(a) != 0


class QuadExt:
    """F_{q^2} as pairs (a, b) = a + b*y over a SmallField, y^2 = -c1*y - c0.

    The modulus is the first irreducible monic quadratic in encoding order;
    used for the nonsplit torus and the cuspidal parameter group.
    """

    def __init__(self, fld: SmallField):
        self.field = fld
        self.c0, self.c1 = self._find_modulus()
        self.one = (1, 0)
        self.zero = (0, 0)
        self.gen = self._generator()
        self.dlog = {}
        z = self.one
        for k in range(fld.q**2 - 1):
            self.dlog[z] = k
            z = self.mul(z, self.gen)

    def _find_modulus(self):
        F = self.field
        for code in range(F.q**2):
            c0, c1 = code % F.q, code // F.q
            # y^2 + c1*y + c0 irreducible iff it has no root in F_q
            if all(F.add[F.add[F.mul[x][x]][F.mul[c1][x]]][c0] != 0 for x in range(F.q)):
                return c0, c1
        raise AssertionError("no irreducible quadratic found")

    def mul(self, u, v):
        F = self.field
        a, b = u
        c, d = v
        bd = F.mul[b][d]
        re = F.add[F.mul[a][c]][F.neg[F.mul[bd][self.c0]]]
        im = F.add[F.add[F.mul[a][d]][F.mul[b][c]]][F.neg[F.mul[bd][self.c1]]]
        return (re, im)

    def pow(self, u, k: int):
        k %= self.field.q**2 - 1
        out = self.one
        base = u
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def frobenius(self, u):
        return self.pow(u, self.field.q)

    def embed(self, x: int):
        return (x, 0)

    def norm(self, u) -> int:
        v = self.mul(u, self.frobenius(u))
        assert v[1] == 0
        return v[0]

    def matrix(self, u):
        """Matrix of multiplication by u on the basis {1, y}, column action."""
        F = self.field
        a, b = u
        return (a, F.mul[F.neg[b]][self.c0], b, F.add[a][F.neg[F.mul[b][self.c1]]])

    def _generator(self):
        from .exact import factorize
        n = self.field.q**2 - 1
        primes = list(factorize(n))
        for code in range(1, self.field.q**2):
            u = (code % self.field.q, code // self.field.q)
            if all(self.pow(u, n // p) != self.one for p in primes):
                return u
        raise AssertionError("no generator found")


# ---------------------------------------------------------------------------
# the group model
# ---------------------------------------------------------------------------

@dataclass
class GroupModel:
    """An enumerated finite group with class data and power maps. Immutable."""

    carrier: object
    elements: list
    descriptor: str
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.order = len(self.elements)
        self._compute_classes()
        self._power_cache: dict[tuple[int, int], int] = {}

    # -- construction ---------------------------------------------------------

    def _compute_classes(self):
        car = self.carrier
        els = self.elements
        n = len(els)
        inv = [car.inv(e) for e in els]
        class_of = [-1] * n
        raw_classes = []
        for i in range(n):
            if class_of[i] >= 0:
                continue
            x = els[i]
            orbit = {car.mul(car.mul(g, x), inv[k]) for k, g in enumerate(els)}
            cid = len(raw_classes)
            members = sorted(orbit)
            raw_classes.append(members)
            for m in members:
                class_of[self.index[m]] = cid
        # deterministic class order: by size, then least member
        order = sorted(range(len(raw_classes)),
                       key=lambda c: (len(raw_classes[c]), raw_classes[c][0]))
        relabel = {old: new for new, old in enumerate(order)}
        self.class_reps = [raw_classes[old][0] for old in order]
        self.class_sizes = [len(raw_classes[old]) for old in order]
        self.class_of = [relabel[c] for c in class_of]
        self.n_classes = len(self.class_reps)
        self.identity_class = self.class_of[self.index[car.identity]]
        self.class_orders = [self._element_order(r) for r in self.class_reps]
        self.exponent = math.lcm(*self.class_orders)

    def _element_order(self, x) -> int:
        car = self.carrier
        k, y = 1, x
        while y != car.identity:
            y = car.mul(y, x)
            k += 1
        return k

    # -- queries --------------------------------------------------------------

    def mul(self, x, y):
        return self.carrier.mul(x, y)

    def inv(self, x):
        return self.carrier.inv(x)

    def element_pow(self, x, k: int):
        car = self.carrier
        if k < 0:
            return self.element_pow(car.inv(x), -k)
        out = car.identity
        base = x
        while k:
            if k & 1:
                out = car.mul(out, base)
            base = car.mul(base, base)
            k >>= 1
        return out

    def class_of_element(self, x) -> int:
        return self.class_of[self.index[x]]

    def power_map(self, c: int, k: int) -> int:
        """Class of rep**k; defined for all integers k via order periodicity."""
        if not 0 <= c < self.n_classes:
            raise ValueError(f"class index {c} out of range")
        m = self.class_orders[c]
        k %= m
        key = (c, k)
        hit = self._power_cache.get(key)
        if hit is not None:
            return hit
        out = self.class_of_element(self.element_pow(self.class_reps[c], k))
        self._power_cache[key] = out
        return out

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"GroupModel({self.descriptor!r}, order={self.order}, classes={self.n_classes})"


def group_closure(generators, carrier, descriptor: str = "closure",
                  max_order: int = DEFAULT_MAX_ORDER, meta: dict | None = None) -> GroupModel:
    """Enumerate the group generated by the given elements (BFS closure)."""
    gens = [tuple(g) for g in generators]
    for g in gens:
        if not carrier.validate(g):
            raise ValueError(f"generator {g} invalid for carrier {carrier.kind}")
    seen = {carrier.identity}
    frontier = [carrier.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = carrier.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > max_order:
                        raise ResourceLimitError(
                            f"closure exceeded the bound of {max_order} elements")
        frontier = nxt
    return GroupModel(carrier, sorted(seen), descriptor, meta or {})


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def make_cyclic(n: int, **kw) -> GroupModel:
    car = PermCarrier(n)
    cyc = tuple(list(range(1, n)) + [0]) if n > 1 else (0,)
    return group_closure([cyc], car, f"cyclic:{n}", **kw)


def make_sym(n: int, **kw) -> GroupModel:
    car = PermCarrier(n)
    if n < 2:
        return group_closure([], car, f"sym:{n}", **kw)
    swap = tuple([1, 0] + list(range(2, n)))
    cyc = tuple(list(range(1, n)) + [0])
    return group_closure([swap, cyc], car, f"sym:{n}", **kw)


def make_alt(n: int, **kw) -> GroupModel:
    car = PermCarrier(n)
    if n < 3:
        return group_closure([], car, f"alt:{n}", **kw)
    tri = tuple([1, 2, 0] + list(range(3, n)))
    if n % 2:
        cyc = tuple(list(range(1, n)) + [0])
    else:
        cyc = tuple([0] + list(range(2, n)) + [1])
    return group_closure([tri, cyc], car, f"alt:{n}", **kw)


def make_dihedral(n: int, **kw) -> GroupModel:
    """Symmetries of the regular n-gon (order 2n)."""
    car = PermCarrier(n)
    rot = tuple(list(range(1, n)) + [0])
    ref = tuple((n - i) % n for i in range(n))
    return group_closure([rot, ref], car, f"dihedral:{n}", **kw)


def make_quaternion(**kw) -> GroupModel:
    """The quaternion group of order 8 as its right-regular permutation action."""
    units = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    sign = {u: (1 if not u.startswith("-") else -1) for u in units}
    axis = {u: u.lstrip("-") for u in units}

    def q_mul(a, b):
        sa, xa = sign[a], axis[a]
        sb, xb = sign[b], axis[b]
        table = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
                 ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
                 ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
                 ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                 ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")}
        s, x = table[(xa, xb)]
        s *= sa * sb
        return ("" if s == 1 else "-") + x if x != "1" else ("1" if s == 1 else "-1")

    idx = {u: i for i, u in enumerate(units)}
    car = PermCarrier(8)
    gens = [tuple(idx[q_mul(u, g)] for u in units) for g in ("i", "j")]
    return group_closure(gens, car, "quat:8", **kw)


def make_gl2(q: int, max_order: int = DEFAULT_MAX_ORDER, **kw) -> GroupModel:
    fld = SmallField(q)
    order = (q * q - 1) * (q * q - q)
    if order > max_order:
        raise ResourceLimitError(f"|GL2(F_{q})| = {order} exceeds bound {max_order}")
    car = MatCarrier(fld)
    els = []
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    m = (a, b, c, d)
                    if car.det(m) != 0:
                        els.append(m)
    meta = {"q": q, "field_modulus": list(fld.modulus)}
    return GroupModel(car, els, f"gl2:{q}", meta)


def make_sl2(q: int, max_order: int = DEFAULT_MAX_ORDER, **kw) -> GroupModel:
    fld = SmallField(q)
    order = q * (q * q - 1)
    if order > max_order:
        raise ResourceLimitError(f"|SL2(F_{q})| = {order} exceeds bound {max_order}")
    car = MatCarrier(fld)
    els = []
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    m = (a, b, c, d)
                    if car.det(m) == 1:
                        els.append(m)
    meta = {"q": q, "field_modulus": list(fld.modulus)}
    return GroupModel(car, els, f"sl2:{q}", meta)


def make_pgl2(q: int, max_order: int = DEFAULT_MAX_ORDER, **kw) -> GroupModel:
    """PGL2(F_q) as the permutation action of GL2 on the projective line.

    Point i < q is the line through (i, 1); point q is the line through (1, 0).
    """
    fld = SmallField(q)
    order = q * (q * q - 1)
    if order > max_order:
        raise ResourceLimitError(f"|PGL2(F_{q})| = {order} exceeds bound {max_order}")

    def point_image(m, pt):
        a, b, c, d = m
        if pt < q:
            u, v = pt, 1
        else:
            u, v = 1, 0
        s = fld.add[fld.mul[a][u]][fld.mul[b][v]]
        t = fld.add[fld.mul[c][u]][fld.mul[d][v]]
        if t == 0:
            return q
        return fld.mul[s][fld.inv[t]]

    car = MatCarrier(fld)
    perms = set()
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    m = (a, b, c, d)
                    if car.det(m) != 0:
                        perms.add(tuple(point_image(m, pt) for pt in range(q + 1)))
    meta = {"q": q, "field_modulus": list(fld.modulus)}
    return GroupModel(PermCarrier(q + 1), sorted(perms), f"pgl2:{q}", meta)


@dataclass
class TorusData:
    """Subgroup element lists of a GL2 model plus the extension-field model."""

    diagonal: list          # T, order (q-1)^2
    nonsplit: list          # S, cyclic of order q^2-1
    unipotent: list         # U, order q
    center: list            # Z, order q-1
    field: SmallField
    ext: QuadExt


def subgroup_tori_and_unipotent(G: GroupModel) -> TorusData:
    """The diagonal torus, a fixed nonsplit torus, the upper unipotent group,
    and the center of a GL2 model."""
    if not G.descriptor.startswith("gl2:"):
        raise ValueError("tori are only defined for models built by make_gl2")
    q = G.meta["q"]
    fld: SmallField = G.carrier.field
    ext = QuadExt(fld)
    T = sorted((a, 0, 0, d) for a in range(1, q) for d in range(1, q))
    U = sorted((1, b, 0, 1) for b in range(q))
    Z = sorted((a, 0, 0, a) for a in range(1, q))
    S = sorted(ext.matrix((a, b)) for a in range(q) for b in range(q) if (a, b) != (0, 0))
    return TorusData(T, S, U, Z, fld, ext)


# ---------------------------------------------------------------------------
# descriptors
# ---------------------------------------------------------------------------

def parse_permutation_words(text: str) -> list[tuple[int, ...]]:
    """Parse generators in cycle notation, one per line, points 0-based."""
    gens = []
    maxpt = -1
    parsed = []
    for ln, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.count("(") != line.count(")"):
            raise ValueError(f"line {ln}: unbalanced parentheses")
        cycles = []
        for chunk in line.replace(")", ")|").split("|"):
            chunk = chunk.strip()
            if not chunk:
                continue
            if not (chunk.startswith("(") and chunk.endswith(")")):
                raise ValueError(f"line {ln}: expected cycle notation, got {chunk!r}")
            body = chunk[1:-1].replace(",", " ").split()
            cyc = [int(x) for x in body]
            if len(set(cyc)) != len(cyc):
                raise ValueError(f"line {ln}: repeated point in cycle")
            cycles.append(cyc)
            if cyc:
                maxpt = max(maxpt, max(cyc))
        parsed.append(cycles)
    n = maxpt + 1
    for cycles in parsed:
        img = list(range(n))
        for cyc in cycles:
            for i, pt in enumerate(cyc):
                img[pt] = cyc[(i + 1) % len(cyc)]
        gens.append(tuple(img))
    return gens


def parse_group_descriptor(desc: str, max_order: int = DEFAULT_MAX_ORDER) -> GroupModel:
    """Build a group from a CLI descriptor such as sym:5, gl2:7, perm:<file>."""
    kind, _, arg = desc.partition(":")
    if kind == "perm":
        with open(arg, "r", encoding="utf-8") as fh:
            gens = parse_permutation_words(fh.read())
        if not gens:
            return group_closure([], PermCarrier(1), desc, max_order=max_order)
        n = len(gens[0])
        return group_closure(gens, PermCarrier(n), desc, max_order=max_order)
    if kind == "quat":
        if arg not in ("", "8"):
            raise ValueError("only quat:8 is supported")
        return make_quaternion(max_order=max_order)
    makers = {"sym": make_sym, "cyclic": make_cyclic, "alt": make_alt,
              "dihedral": make_dihedral, "gl2": make_gl2, "sl2": make_sl2,
              "pgl2": make_pgl2}
    if kind not in makers:
        raise ValueError(f"unknown group descriptor {desc!r}")
    try:
        n = int(arg)
    except ValueError:
        raise ValueError(f"descriptor {desc!r} needs an integer parameter") from None
    return makers[kind](n, max_order=max_order)


#: groups exercised by the built-in verification claims
CATALOG = ("sym:3", "sym:4", "sym:5", "alt:5", "sl2:3", "sl2:5",
           "gl2:3", "gl2:5", "pgl2:5", "quat:8", "dihedral:4", "cyclic:12")
