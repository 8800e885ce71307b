"""Acceptance suite: every pinned verification claim at its stated budget.

Each test prints one PASS/FAIL line.  Budgets are wall-clock ceilings for the
whole criterion; the computations are exact, so there are no numeric
tolerances to tune except where a tolerance is itself part of the contract
(the numeric tuple checks at 1e-9).
"""

import time

import pytest

from charprec.claims import ClaimContext, run_claim

_ctx = ClaimContext(seed=12345)


def _criterion(number, label, claim_ids, budget_seconds):
    start = time.monotonic()
    reports = [run_claim(cid, _ctx) for cid in claim_ids]
    elapsed = time.monotonic() - start
    ok = all(r["ok"] for r in reports)
    print(f"ACCEPTANCE {number} ({label}): {'PASS' if ok else 'FAIL'} "
          f"[{elapsed:.1f}s / {budget_seconds}s]")
    assert ok, [r for r in reports if not r["ok"]]
    assert elapsed < budget_seconds, f"criterion {number} exceeded its budget"


def test_criterion_01_gl2_cuspidal_in_principal():
    _criterion(1, "cuspidal inside principal series with restriction facts, "
                  "q in {3,5,7}",
               ["c-preceq-gl2f3", "c-preceq-gl2f5", "c-preceq-gl2f7"], 120)


def test_criterion_02_gap1_rigidity():
    _criterion(2, "gap-1 searches empty across the catalog",
               ["gap1-rigidity"], 120)


def test_criterion_03_sl2f5_example():
    _criterion(3, "the two 2-dim irreducibles and their symmetric powers",
               ["sl2f5-symcube"], 30)


def test_criterion_04_pgl2f5_counterexample():
    _criterion(4, "gap-2 pair of dimensions (4, 6)", ["pgl2f5-gap2"], 30)


def test_criterion_05_sym6_isobaric_types():
    _criterion(5, "admissible sixth-power isobaric types with certificates",
               ["sym6-tetrahedral", "sym6-octahedral", "sym6-icosahedral"], 10)


def test_criterion_06_pointwise_identities():
    _criterion(6, "fixed-vector equivalence and the dim-2 extension identity",
               ["fixed-vector-pointwise", "two-dim-extension-pointwise"], 180)


def test_criterion_07_newton_vs_bruteforce():
    _criterion(7, "Newton recurrences equal eigenvalue-multiset computation",
               ["newton-oracle"], 180)


def test_criterion_08_su2_ladder():
    _criterion(8, "bracket ladder up to n = 20", ["su2-ladder"], 5)


def test_criterion_09_table_validity():
    _criterion(9, "orthogonality, dimension sums, closed-form agreement",
               ["table-validity"], 120)


def test_criterion_10_satake_containment():
    _criterion(10, "numeric tuple nesting and the matching oracle",
               ["satake-nesting"], 30)
