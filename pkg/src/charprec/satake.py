"""Numeric Hecke/Satake tuple ingestion and containment with tolerance.

Records are one JSON object per line: {"p": prime, "params": [[re, im], ...]}
or the degree-two shorthand {"p": prime, "ap": [re, im], "unitary": true}
meaning the two roots of x^2 - ap*x + 1.  Containment of the smaller tuple in
the larger one at a prime is decided by maximum bipartite matching on the
closeness graph, never by greedy assignment.
"""

from __future__ import annotations

import cmath
import itertools
import json
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .exact import is_prime

DEFAULT_TOL = 1e-9
DEFAULT_MIN_OVERLAP = 10


@dataclass(frozen=True)
class SatakeRecord:
    p: int
    params: tuple  # nonzero complex numbers

    def __post_init__(self):
        if not self.params:
            raise ValueError(f"empty parameter tuple at p={self.p}")
        if any(z == 0 for z in self.params):
            raise ValueError(f"zero Satake parameter at p={self.p}")


def load_satake(path: str) -> list[SatakeRecord]:
    """Parse a JSONL file of Satake records, sorted by prime."""
    records = []
    seen = set()
    with open(path, "r", encoding="utf-8") as fh:
        for ln, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"line {ln}: invalid JSON ({exc})") from None
            try:
                p = obj["p"]
                if not isinstance(p, int) or not is_prime(p):
                    raise ValueError(f"line {ln}: {p!r} is not prime")
                if p in seen:
                    raise ValueError(f"line {ln}: duplicate prime {p}")
                seen.add(p)
                if "params" in obj:
                    params = tuple(complex(re, im) for re, im in obj["params"])
                elif "ap" in obj and obj.get("unitary"):
                    re, im = obj["ap"]
                    a = complex(re, im)
                    disc = cmath.sqrt(a * a - 4)
                    params = ((a + disc) / 2, (a - disc) / 2)
                else:
                    raise ValueError(f"line {ln}: need 'params' or unitary 'ap'")
            except (KeyError, TypeError) as exc:
                raise ValueError(f"line {ln}: malformed record ({exc})") from None
            records.append(SatakeRecord(p, params))
    return sorted(records, key=lambda r: r.p)


def sym_power_tuple(params, k: int) -> tuple:
    """All degree-k monomial products over index multisets of the tuple."""
    if k < 0:
        raise ValueError("power must be nonnegative")
    out = []
    for combo in itertools.combinations_with_replacement(params, k):
        v = 1.0 + 0j
        for z in combo:
            v *= z
        out.append(v)
    return tuple(out)


def apply_sym(records, k: int) -> list[SatakeRecord]:
    return [SatakeRecord(r.p, sym_power_tuple(r.params, k)) for r in records]


# ---------------------------------------------------------------------------
# bipartite matching on the closeness graph
# ---------------------------------------------------------------------------

_INF = float("inf")


def _max_matching(adj: list[list[int]], n_right: int) -> int:
    """Maximum bipartite matching size (Hopcroft-Karp augmentation)."""
    n_left = len(adj)
    pair_l = [-1] * n_left
    pair_r = [-1] * n_right
    dist = [0] * n_left

    def bfs() -> bool:
        dq = deque()
        found = _INF
        for u in range(n_left):
            if pair_l[u] < 0:
                dist[u] = 0
                dq.append(u)
            else:
                dist[u] = _INF
        while dq:
            u = dq.popleft()
            if dist[u] >= found:
                continue
            for v in adj[u]:
                w = pair_r[v]
                if w < 0:
                    found = min(found, dist[u] + 1)
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    dq.append(w)
        return found < _INF

    def dfs(u: int) -> bool:
        for v in adj[u]:
            w = pair_r[v]
            if w < 0 or (dist[w] == dist[u] + 1 and dfs(w)):
                pair_l[u] = v
                pair_r[v] = u
                return True
        dist[u] = _INF
        return False

    size = 0
    while bfs():
        for u in range(n_left):
            if pair_l[u] < 0 and dfs(u):
                size += 1
    return size


def injection_exists(small, big, tol: float) -> bool:
    """Multiset injection from small into big with |x - y| <= tol."""
    if len(small) > len(big):
        return False
    adj = [[j for j, y in enumerate(big) if abs(x - y) <= tol] for x in small]
    return _max_matching(adj, len(big)) == len(small)


def injection_exists_bruteforce(small, big, tol: float) -> bool:
    """Exhaustive search over injections; oracle for the matching route."""
    if len(small) > len(big):
        return False
    idx = range(len(big))
    for perm in itertools.permutations(idx, len(small)):
        if all(abs(x - big[j]) <= tol for x, j in zip(small, perm)):
            return True
    return False


def matching_residual(small, big) -> float:
    """Smallest tolerance at which an injection exists (inf if sizes forbid)."""
    if len(small) > len(big):
        return _INF
    if not small:
        return 0.0
    dists = sorted({abs(x - y) for x in small for y in big})
    lo, hi = 0, len(dists) - 1
    if not injection_exists(small, big, dists[hi]):
        return _INF
    while lo < hi:
        mid = (lo + hi) // 2
        if injection_exists(small, big, dists[mid]):
            hi = mid
        else:
            lo = mid + 1
    return dists[lo]


@dataclass
class ContainmentResult:
    verdict: bool
    primes_checked: int
    failures: list          # [(p, residual)]
    max_residual: float
    per_prime: dict         # p -> bool

    def to_json(self):
        return {"verdict": self.verdict,
                "primes_checked": self.primes_checked,
                "failures": [{"p": p, "residual": r} for p, r in self.failures],
                "max_residual": self.max_residual}


def check_containment(small, big, tol: float = DEFAULT_TOL,
                      min_overlap: int = DEFAULT_MIN_OVERLAP,
                      threads: int = 1) -> ContainmentResult:
    """Per-prime containment of the small tuples in the big ones.

    Only primes present in both lists are compared; fewer common primes than
    `min_overlap` is an error (a vacuous verdict), and an empty intersection
    always is.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    by_p_small = {r.p: r for r in small}
    by_p_big = {r.p: r for r in big}
    common = sorted(set(by_p_small) & set(by_p_big))
    if not common:
        raise ValueError("no common primes between the two inputs")
    if len(common) < min_overlap:
        raise ValueError(f"only {len(common)} common primes; need at least "
                         f"{min_overlap} (adjust min_overlap to override)")

    def check_one(p):
        return p, matching_residual(by_p_small[p].params, by_p_big[p].params)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            residuals = dict(pool.map(check_one, common))
    else:
        residuals = dict(check_one(p) for p in common)

    failures = [(p, residuals[p]) for p in common if residuals[p] > tol]
    finite = [r for r in residuals.values() if r < _INF]
    return ContainmentResult(
        verdict=not failures,
        primes_checked=len(common),
        failures=failures,
        max_residual=max(finite) if len(finite) == len(common) else _INF,
        per_prime={p: residuals[p] <= tol for p in common},
    )
