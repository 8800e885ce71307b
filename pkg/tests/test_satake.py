import cmath
import json
import math
import random

import pytest

from charprec.satake import (SatakeRecord, apply_sym, check_containment,
                             injection_exists, injection_exists_bruteforce,
                             load_satake, matching_residual, sym_power_tuple)


def _write_jsonl(path, lines):
    path.write_text("\n".join(json.dumps(obj) for obj in lines) + "\n")


class TestLoad:
    def test_unitary_shorthand_gives_sixth_roots(self, tmp_path):
        f = tmp_path / "a.jsonl"
        _write_jsonl(f, [{"p": 2, "ap": [1.0, 0.0], "unitary": True}])
        (rec,) = load_satake(str(f))
        got = sorted(rec.params, key=lambda z: z.imag)
        want = [cmath.exp(-1j * math.pi / 3), cmath.exp(1j * math.pi / 3)]
        assert all(abs(a - b) < 1e-12 for a, b in zip(got, want))

    def test_empty_file(self, tmp_path):
        f = tmp_path / "e.jsonl"
        f.write_text("")
        assert load_satake(str(f)) == []

    def test_nonprime_rejected(self, tmp_path):
        f = tmp_path / "b.jsonl"
        _write_jsonl(f, [{"p": 4, "params": [[1.0, 0.0]]}])
        with pytest.raises(ValueError, match="not prime"):
            load_satake(str(f))

    def test_duplicate_prime_rejected(self, tmp_path):
        f = tmp_path / "c.jsonl"
        _write_jsonl(f, [{"p": 3, "params": [[1.0, 0.0]]},
                         {"p": 3, "params": [[1.0, 0.0]]}])
        with pytest.raises(ValueError, match="duplicate"):
            load_satake(str(f))

    def test_zero_parameter_rejected(self, tmp_path):
        f = tmp_path / "d.jsonl"
        _write_jsonl(f, [{"p": 3, "params": [[0.0, 0.0]]}])
        with pytest.raises(ValueError, match="zero"):
            load_satake(str(f))

    def test_parse_error_reports_line(self, tmp_path):
        f = tmp_path / "f.jsonl"
        f.write_text('{"p": 2, "params": [[1.0, 0.0]]}\nnot json\n')
        with pytest.raises(ValueError, match="line 2"):
            load_satake(str(f))

    def test_sorted_by_prime(self, tmp_path):
        f = tmp_path / "g.jsonl"
        _write_jsonl(f, [{"p": 7, "params": [[1.0, 0.0]]},
                         {"p": 2, "params": [[1.0, 0.0]]}])
        recs = load_satake(str(f))
        assert [r.p for r in recs] == [2, 7]


class TestSymPower:
    def test_degree_two_ladder(self):
        a = cmath.exp(0.7j)
        got = sorted(sym_power_tuple((a, 1 / a), 2), key=lambda z: z.real)
        want = sorted([a**2, 1 + 0j, a**-2], key=lambda z: z.real)
        assert all(abs(x - y) < 1e-12 for x, y in zip(got, want))

    def test_k_zero(self):
        assert sym_power_tuple((2 + 0j, 3 + 0j), 0) == (1 + 0j,)

    def test_degree_three(self):
        a = cmath.exp(0.3j)
        got = sorted(sym_power_tuple((a, 1 / a), 3), key=lambda z: z.imag)
        want = sorted([a**3, a, 1 / a, a**-3], key=lambda z: z.imag)
        assert all(abs(x - y) < 1e-12 for x, y in zip(got, want))

    def test_identity_power(self):
        params = (1j, 2 + 1j, -1 + 0j)
        assert sym_power_tuple(params, 1) == params

    def test_size(self):
        assert len(sym_power_tuple((1j, 2j, 3j), 4)) == math.comb(3 + 4 - 1, 4)


def _unitary_records(count, seed):
    rng = random.Random(seed)
    primes = []
    p = 1
    while len(primes) < count:
        p += 1
        if all(p % d for d in range(2, int(p**0.5) + 1)):
            primes.append(p)
    out = []
    for p in primes:
        a = cmath.exp(2j * math.pi * rng.random())
        out.append(SatakeRecord(p, (a, 1 / a)))
    return out


class TestContainment:
    def test_trivial_in_sym2(self):
        base = _unitary_records(50, 1)
        trivial = [SatakeRecord(r.p, (1 + 0j,)) for r in base]
        res = check_containment(trivial, apply_sym(base, 2), tol=1e-12)
        assert res.verdict and res.primes_checked == 50

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_ladder_nesting(self, n):
        base = _unitary_records(30, n)
        res = check_containment(apply_sym(base, n - 1), apply_sym(base, n + 1),
                                tol=1e-9)
        assert res.verdict

    def test_explicit_failure(self):
        base = _unitary_records(12, 3)
        a = cmath.exp(0.3j)
        base[5] = SatakeRecord(base[5].p, (a, 1 / a))
        minus_one = [SatakeRecord(r.p, (-1 + 0j,)) for r in base]
        res = check_containment(minus_one, apply_sym(base, 2), tol=1e-6)
        assert not res.verdict
        assert any(p == base[5].p for p, _ in res.failures)

    def test_scale_equivariance(self):
        rng = random.Random(9)
        base = _unitary_records(15, 4)
        big = apply_sym(base, 2)
        small = [SatakeRecord(r.p, (r.params[0],)) for r in big]
        res1 = check_containment(small, big, tol=1e-9)
        mu = {r.p: cmath.exp(2j * math.pi * rng.random()) for r in big}
        small2 = [SatakeRecord(r.p, tuple(mu[r.p] * z for z in r.params))
                  for r in small]
        big2 = [SatakeRecord(r.p, tuple(mu[r.p] * z for z in r.params))
                for r in big]
        res2 = check_containment(small2, big2, tol=1e-9)
        assert res1.verdict == res2.verdict
        assert res1.per_prime == res2.per_prime

    def test_min_overlap_guard(self):
        base = _unitary_records(5, 6)
        with pytest.raises(ValueError, match="common primes"):
            check_containment(base, base, tol=1e-9)
        assert check_containment(base, base, tol=1e-9, min_overlap=5).verdict

    def test_empty_intersection(self):
        a = [SatakeRecord(2, (1 + 0j,))]
        b = [SatakeRecord(3, (1 + 0j,))]
        with pytest.raises(ValueError, match="no common primes"):
            check_containment(a, b, min_overlap=1)

    def test_threads_match_serial(self):
        base = _unitary_records(40, 8)
        small = [SatakeRecord(r.p, (r.params[0],)) for r in base]
        r1 = check_containment(small, base, tol=1e-9)
        r2 = check_containment(small, base, tol=1e-9, threads=4)
        assert r1.to_json() == r2.to_json()


class TestMatching:
    def test_against_bruteforce(self):
        rng = random.Random(20240601)
        for _ in range(1000):
            ns = rng.randint(1, 6)
            nb = rng.randint(ns, 6)
            small = [cmath.exp(2j * math.pi * rng.random()) for _ in range(ns)]
            big = [cmath.exp(2j * math.pi * rng.random()) for _ in range(nb)]
            if rng.random() < 0.5:
                big[:ns] = [z * (1 + rng.uniform(-1e-7, 1e-7)) for z in small]
            tol = 10.0 ** rng.uniform(-8, -2)
            assert injection_exists(small, big, tol) == \
                injection_exists_bruteforce(small, big, tol)

    def test_clustered_values_need_matching(self):
        # a greedy assignment would pair the first small value with the only
        # neighbor of the second and fail; matching succeeds
        small = [0.0 + 0j, 0.1 + 0j]
        big = [0.05 + 0j, 0.1 + 0j]
        assert injection_exists(small, big, 0.06)

    def test_residual(self):
        small = [0.0 + 0j]
        big = [0.25 + 0j, 1.0 + 0j]
        assert abs(matching_residual(small, big) - 0.25) < 1e-15
        assert matching_residual([0j, 1j], [1j]) == float("inf")
        assert matching_residual([], [1j]) == 0.0
