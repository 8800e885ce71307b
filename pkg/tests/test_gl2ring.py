import cmath
import random

import pytest

from charprec.gl2ring import (GL2RingElem, RingExpr, SU2Elem, parse_expr,
                              partitions, ring_ext, ring_mul, ring_sym,
                              sym6_isobaric_types, verify_identity)


class TestMul:
    def test_two_times_two(self):
        pi = GL2RingElem.pi()
        prod = ring_mul(pi, pi)
        assert prod == GL2RingElem.sym_pi(2) + GL2RingElem.twist("w")
        assert prod.dim() == 4

    def test_pi_times_sym2(self):
        ok, diff = verify_identity("pi*Sym[2](pi)", "Sym[3](pi) + w*pi")
        assert ok, repr(diff)

    def test_pi_times_sym5(self):
        ok, diff = verify_identity("pi*Sym[5](pi)", "Sym[6](pi) + w*Sym[4](pi)")
        assert ok, repr(diff)

    def test_dimension_multiplicative(self):
        rng = random.Random(11)
        for _ in range(200):
            x = _random_elem(rng)
            y = _random_elem(rng)
            assert (x * y).dim() == x.dim() * y.dim()
            assert (x + y).dim() == x.dim() + y.dim()


def _random_elem(rng):
    out = GL2RingElem.zero()
    for _ in range(rng.randint(1, 3)):
        a = rng.randint(0, 3)
        a2 = rng.randint(0, 2)
        twist = tuple(rng.randint(-2, 2) for _ in range(5))
        out = out + GL2RingElem({(a, a2, twist): rng.randint(-3, 3)})
    return out


class TestPowers:
    def test_sym2_of_sym2(self):
        ok, diff = verify_identity("Sym[2](Sym[2](pi))", "w^2 + Sym[4](pi)")
        assert ok, repr(diff)

    def test_ext2_of_sym4(self):
        ok, diff = verify_identity("Ext[2](Sym[4](pi))",
                                   "w*Sym[6](pi) + w^3*Sym[2](pi)")
        assert ok, repr(diff)

    def test_ext2_of_pi_is_determinant(self):
        ok, diff = verify_identity("Ext[2](pi)", "w")
        assert ok, repr(diff)

    def test_sym_dim(self):
        from math import comb
        x = GL2RingElem.sym_pi(3)  # dim 4
        for k in range(5):
            assert ring_sym(x, k).dim() == comb(4 + k - 1, k)
            assert ring_ext(x, k).dim() == comb(4, k)

    def test_virtual_input_rejected(self):
        x = GL2RingElem.pi() - GL2RingElem.one()
        with pytest.raises(ValueError):
            ring_sym(x, 2)

    def test_twisted_ext(self):
        ok, diff = verify_identity("Ext[2](x1*pi)", "x1^2*w")
        assert ok, repr(diff)


class TestIdentities:
    def test_sym2_of_sym3(self):
        ok, diff = verify_identity("Sym[2](Sym[3](pi))",
                                   "Sym[6](pi) + w^2*Sym[2](pi)")
        assert ok, repr(diff)

    def test_split_cube_substitution(self):
        ok, diff = verify_identity(
            "Sym[2](x1*pi + x2*pi)",
            "x1^2*Sym[2](pi) + x1*x2*(pi*pi) + x2^2*Sym[2](pi)")
        assert ok, repr(diff)

    def test_four_term_expansion(self):
        ok, diff = verify_identity(
            "Sym[2](pi)*Sym[2](Sym[2](pi))",
            "w^2*Sym[2](pi) + w^2*Sym[2](pi) + w*Sym[4](pi) + Sym[6](pi)")
        assert ok, repr(diff)

    def test_two_dim_extension_formal(self):
        # V = W + A with dim A = 2: V*W + Ext2(A) = Ext2(V) + Sym2(W)
        for W, A in (("Sym[2](pi)", "chi*pi"),
                     ("Sym[3](pi) + w*pi", "x1 + x2"),
                     ("Sym[2](pi2)", "pi")):
            ok, diff = verify_identity(
                f"(({W}) + ({A}))*({W}) + Ext[2]({A})",
                f"Ext[2](({W}) + ({A})) + Sym[2]({W})")
            assert ok, (W, A, repr(diff))

    def test_failure_reports_difference(self):
        ok, diff = verify_identity("Sym[2](pi)", "Sym[2](pi) + w")
        assert not ok
        assert diff == -GL2RingElem.twist("w")

    def test_second_factor_independent(self):
        ok, diff = verify_identity("pi2*pi2", "Sym[2](pi2) + w2")
        assert ok, repr(diff)


class TestSU2:
    def test_clebsch_gordan(self):
        ok, diff = verify_identity("[2]*[2]", "[3] + [1]")
        assert ok, repr(diff)

    def test_ladder_all_n(self):
        for n in range(1, 21):
            lhs = f"[{n + 2}]*[{n}] + [1]"
            mid = f"Ext[2]([{n + 2}]) + Sym[2]([{n}])"
            rhs = " + ".join(f"[{2 * k + 1}]" for k in range(n + 1))
            ok1, d1 = verify_identity(lhs, mid)
            ok2, d2 = verify_identity(mid, rhs)
            assert ok1 and ok2, (n, repr(d1), repr(d2))

    def test_bracket_dim(self):
        assert SU2Elem.bracket(7).dim() == 7
        assert (SU2Elem.bracket(3) * SU2Elem.bracket(3)).dim() == 9

    def test_mixing_rejected(self):
        with pytest.raises(ValueError):
            verify_identity("[2]*pi", "pi")


class TestNumericSpecialization:
    def test_ast_matches_canonical_form(self):
        rng = random.Random(20240601)

        def unit():
            return cmath.exp(2j * cmath.pi * rng.random())

        exprs = ["pi*Sym[2](pi)", "Sym[2](Sym[3](pi))", "Ext[2](Sym[4](pi))",
                 "Sym[2](x1*pi + x2*pi)", "chi*((pi*pi)*Sym[2](pi2))",
                 "Ext[2](x1*pi + x2*Sym[2](pi))"]
        for _ in range(200):
            assign = {k: unit() for k in ("x1", "x2", "x1p", "x2p",
                                          "chi1", "chi2", "chi")}
            for text in exprs:
                ast = parse_expr(text)
                direct = ast.eval_numeric(assign)
                canonical = ast.to_elem().eval_numeric(assign)
                assert abs(direct - canonical) < 1e-9, text

    def test_su2_numeric(self):
        rng = random.Random(5)
        for _ in range(50):
            x = cmath.exp(2j * cmath.pi * rng.random())
            lhs = parse_expr("[6]*[4] + [1]")
            rhs = parse_expr("[9] + [7] + [5] + [3] + [1]")
            assert abs(lhs.eval_numeric({"x": x}) - rhs.eval_numeric({"x": x})) < 1e-9


class TestParser:
    def test_roundtrip_format(self):
        for text in ("pi*Sym[2](pi)", "[5] + [3]", "w^2*Sym[2](pi)"):
            assert str(parse_expr(text))

    def test_rejects_unknown_symbol(self):
        with pytest.raises(ValueError):
            parse_expr("rho*pi")

    def test_rejects_bad_tokens(self):
        with pytest.raises(ValueError):
            parse_expr("pi @ pi")

    def test_integer_constants(self):
        ok, diff = verify_identity("2*w", "w + w")
        assert ok, repr(diff)


class TestSym6:
    def test_tetrahedral(self):
        result = sym6_isobaric_types("tetrahedral")
        assert result["types"] == [(3, 3, 1)]
        assert all(i["verified"] for i in result["certificate"]["identities"])

    def test_octahedral(self):
        result = sym6_isobaric_types("octahedral")
        assert result["types"] == [(4, 2, 1)]

    def test_icosahedral(self):
        result = sym6_isobaric_types("icosahedral")
        types = set(result["types"])
        assert (4, 3) in types
        assert (5, 2) not in types and (5, 1, 1) not in types
        expected = {tuple(sorted((3,) + p, reverse=True)) for p in partitions(4)}
        assert types == expected
        for t in types:
            assert sum(t) == 7 and 3 in t

    def test_certificates_carry_identities(self):
        for case in ("tetrahedral", "octahedral", "icosahedral"):
            cert = sym6_isobaric_types(case)["certificate"]
            assert len(cert["identities"]) == 3
            for ident in cert["identities"]:
                ok, _ = verify_identity(ident["lhs"], ident["rhs"])
                assert ok

    def test_unknown_case(self):
        with pytest.raises(ValueError):
            sym6_isobaric_types("dodecahedral")


def test_partitions():
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions(0) == [()]
