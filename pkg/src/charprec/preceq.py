"""Eigenvalue-containment relation between representations.

chi1 precedes chi2 when, at every conjugacy class, the eigenvalue multiset of
a representative acting in chi1 is contained (with multiplicity) in that of
chi2.  Includes a decision procedure with deterministic witness reporting and
an exhaustive searcher over pairs of irreducibles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chartab import CharacterTable, ClassFunction
from .lambdaops import EigenMultiset, decompose, eigen_multiset


@dataclass(frozen=True)
class PreceqReport:
    """Outcome of a containment check.

    When the relation fails, `witness_class` is the least failing class index
    and `deficit` holds (order, exponent, gap) for the least failing
    eigenvalue exponent there.
    """

    holds: bool
    witness_class: int | None = None
    deficit: tuple[int, int, int] | None = None

    def __bool__(self):
        return self.holds

    def to_json(self):
        out = {"holds": self.holds}
        if not self.holds:
            out["witness_class"] = self.witness_class
            out["deficit"] = {"order": self.deficit[0],
                              "exponent": self.deficit[1],
                              "gap": self.deficit[2]}
        return out


class EigenCache:
    """Per-(character, class) eigenvalue multisets, keyed by character identity."""

    def __init__(self):
        self._store: dict[tuple[int, int], EigenMultiset] = {}
        self._keep: list[ClassFunction] = []

    def get(self, cf: ClassFunction, c: int) -> EigenMultiset:
        key = (id(cf), c)
        hit = self._store.get(key)
        if hit is None:
            hit = eigen_multiset(cf, c)
            self._store[key] = hit
            self._keep.append(cf)  # pin so id() stays unique
        return hit


def preceq_check(chi1: ClassFunction, chi2: ClassFunction, *,
                 table: CharacterTable | None = None,
                 assume_genuine: bool = False,
                 cache: EigenCache | None = None) -> PreceqReport:
    """Decide chi1 precedes chi2; report the least witness on failure.

    Both inputs must be genuine characters with dim(chi1) <= dim(chi2).  When
    a table is supplied and `assume_genuine` is false, genuineness is enforced
    by decomposition; otherwise the per-class multiplicity validation inside
    the eigenvalue extraction is the guard.
    """
    if chi1.group is not chi2.group:
        raise ValueError("characters live on different groups")
    d1, d2 = chi1.dim(), chi2.dim()
    if d1.denominator != 1 or d2.denominator != 1 or d1 > d2:
        raise ValueError(f"need integer dimensions with dim(chi1) <= dim(chi2), "
                         f"got {d1} and {d2}")
    if table is not None and not assume_genuine:
        for chi in (chi1, chi2):
            mults = decompose(chi, table)
            if any(m < 0 for _, m in mults):
                raise ValueError("virtual input: negative irreducible multiplicity")
    G = chi1.group
    cache = cache or EigenCache()
    for c in range(G.n_classes):
        small = cache.get(chi1, c)
        big = cache.get(chi2, c)
        deficit = big.first_deficit(small)
        if deficit is not None:
            return PreceqReport(False, c, deficit)
    return PreceqReport(True)


def preceq_search(G, table: CharacterTable, gap) -> list[tuple[int, int]]:
    """All ordered pairs (i, j) of distinct irreducibles with chi_i preceding
    chi_j and dim(chi_j) - dim(chi_i) equal to `gap` (or any gap >= 0)."""
    if table.group is not G:
        raise ValueError("table belongs to a different group")
    dims = table.dims
    cache = EigenCache()
    found = []
    n = len(table.rows)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            delta = dims[j] - dims[i]
            if gap == "any":
                if delta < 0:
                    continue
            elif delta != gap:
                continue
            rep = preceq_check(table.rows[i], table.rows[j],
                               assume_genuine=True, cache=cache)
            if rep.holds:
                found.append((i, j))
    return sorted(found)


# ---------------------------------------------------------------------------
# label / expression resolution for the CLI
# ---------------------------------------------------------------------------

def resolve_expression(expr: str, table: CharacterTable) -> ClassFunction:
    """Evaluate `sym:K(...)`, `ext:K(...)`, `tensor(a,b)` over table labels.

    Bare labels are row labels (`irr:K` for generic tables, `lin:S`, `st:S`,
    `ps:S1,S2`, `cusp:T` for closed-form GL2 tables) or `triv`.
    """
    from .lambdaops import exterior_power, symmetric_power

    s = expr.replace(" ", "")

    def parse(pos: int):
        for head, fn in (("sym:", symmetric_power), ("ext:", exterior_power)):
            if s.startswith(head, pos):
                k_end = s.index("(", pos)
                k = int(s[pos + len(head):k_end])
                inner, nxt = parse(k_end + 1)
                if nxt >= len(s) or s[nxt] != ")":
                    raise ValueError(f"expected ')' at {nxt} in {expr!r}")
                return fn(inner, k), nxt + 1
        if s.startswith("tensor(", pos):
            a, nxt = parse(pos + len("tensor("))
            if nxt >= len(s) or s[nxt] != ",":
                raise ValueError(f"expected ',' at {nxt} in {expr!r}")
            b, nxt = parse(nxt + 1)
            if nxt >= len(s) or s[nxt] != ")":
                raise ValueError(f"expected ')' at {nxt} in {expr!r}")
            return a * b, nxt + 1
        end = pos
        while end < len(s) and s[end] not in ",()":
            end += 1
        label = s[pos:end]
        if not label:
            raise ValueError(f"empty label at {pos} in {expr!r}")
        if label == "triv":
            from .chartab import trivial_character
            return trivial_character(table.group), end
        return table.row_by_label(label), end

    out, nxt = parse(0)
    if nxt != len(s):
        raise ValueError(f"trailing input {s[nxt:]!r} in {expr!r}")
    return out
