import random
from fractions import Fraction

import pytest

from charprec.chartab import ClassFunction, regular_character, trivial_character
from charprec.exact import CycNum
from charprec.groups import make_cyclic
from charprec.lambdaops import (NonGenuineCharacterError, adams, cf_add, cf_sub,
                                cf_tensor, decompose, determinant_character,
                                eigen_multiset, exterior_power,
                                exterior_power_from_eigen, is_genuine,
                                symmetric_power, symmetric_power_from_eigen)


def _rows(table):
    triv = next(r for r in table.rows if all(v == 1 for v in r.values))
    sign = next(r for r in table.rows if r.dim() == 1 and r is not triv)
    std = next(r for r in table.rows if r.dim() == 2)
    return triv, sign, std


class TestPointwise:
    def test_trivial_is_tensor_unit(self, s3_table):
        triv, _, std = _rows(s3_table)
        for chi in s3_table.rows:
            assert cf_tensor(triv, chi) == chi

    def test_std_squared_values(self, s3_table):
        _, _, std = _rows(s3_table)
        sq = cf_tensor(std, std)
        # class order: identity, 3-cycles, transpositions
        assert [v.rational() for v in sq.values] == [4, 1, 0]

    def test_difference_vanishes(self, s3_table):
        _, _, std = _rows(s3_table)
        assert cf_sub(std, std).is_zero()

    def test_add(self, s3_table):
        triv, sign, std = _rows(s3_table)
        assert cf_add(triv, sign).dim() == 2


class TestAdams:
    def test_squared_transposition(self, s3_table):
        _, _, std = _rows(s3_table)
        G = s3_table.group
        c = next(c for c in range(3) if G.class_orders[c] == 2)
        assert adams(std, 2).at(c) == std.at(G.identity_class)

    def test_adams_minus_one_is_conjugate(self, sl2f5_table):
        for row in sl2f5_table.rows:
            assert adams(row, -1) == row.conjugate()

    def test_adams_on_linear_is_power(self, ctx):
        table = ctx.table("cyclic:12")
        for row in table.rows[:4]:
            assert adams(row, 2) == cf_tensor(row, row)

    def test_adams_one_and_zero(self, s3_table):
        _, _, std = _rows(s3_table)
        assert adams(std, 1) == std
        psi0 = adams(std, 0)
        assert all(v == 2 for v in psi0.values)


class TestPowers:
    def test_ext2_of_std_is_sign(self, s3_table):
        _, sign, std = _rows(s3_table)
        assert exterior_power(std, 2) == sign

    def test_ext_above_dimension_vanishes(self, s3_table):
        _, _, std = _rows(s3_table)
        assert exterior_power(std, 3).is_zero()

    def test_ext_top_of_four_dim(self, sl2f5_table):
        four = next(r for r in sl2f5_table.rows if r.dim() == 4)
        G = sl2f5_table.group
        assert exterior_power(four, 4).at(G.identity_class) == 1

    def test_sym2_of_std(self, s3_table):
        triv, _, std = _rows(s3_table)
        s2 = symmetric_power(std, 2)
        assert s2 == std + triv
        assert [v.rational() for v in s2.values] == [3, 0, 1]

    def test_sym1_is_identity(self, sl2f5_table):
        for row in sl2f5_table.rows:
            assert symmetric_power(row, 1) == row

    def test_sym3_of_sigma_is_irreducible(self, sl2f5_table):
        sigma = next(r for r in sl2f5_table.rows if r.dim() == 2)
        cube = symmetric_power(sigma, 3)
        assert cube.dim() == 4
        mults = [m for _, m in decompose(cube, sl2f5_table)]
        assert sorted(mults) == [0] * 8 + [1]

    def test_dimension_formula(self, sl2f5_table):
        from math import comb
        G = sl2f5_table.group
        for row in sl2f5_table.rows[:5]:
            d = int(row.dim())
            for k in range(4):
                assert symmetric_power(row, k).dim() == comb(d + k - 1, k)
                assert exterior_power(row, k).dim() == comb(d, k)


class TestEigenMultisets:
    def test_trivial_character(self, s3_table):
        triv, _, _ = _rows(s3_table)
        for c in range(3):
            ems = eigen_multiset(triv, c)
            assert ems.as_dict() == {0: 1}

    def test_std_at_three_cycle(self, s3_table):
        _, _, std = _rows(s3_table)
        G = s3_table.group
        c = next(c for c in range(3) if G.class_orders[c] == 3)
        ems = eigen_multiset(std, c)
        assert ems.order == 3 and ems.as_dict() == {1: 1, 2: 1}

    def test_regular_of_c2(self):
        from charprec.chartab import character_table_generic
        C2 = make_cyclic(2)
        reg = regular_character(C2)
        c = 1 - C2.identity_class
        assert eigen_multiset(reg, c).as_dict() == {0: 1, 1: 1}

    def test_totals_sum_and_product(self, sl2f5_table):
        G = sl2f5_table.group
        N = G.exponent
        for row in sl2f5_table.rows:
            det = determinant_character(row)
            for c in range(G.n_classes):
                ems = eigen_multiset(row, c)
                assert ems.total() == row.dim()
                assert ems.value_sum(N) == row.at(c)
                exp_sum = sum(j * m for j, m in ems.mults) % ems.order
                prod = CycNum.zeta(N, exp_sum * (N // ems.order))
                assert prod == det.at(c)

    def test_rejects_virtual_character(self, s3_table):
        triv, _, std = _rows(s3_table)
        virtual = cf_sub(std, triv)
        G = s3_table.group
        c = next(c for c in range(3) if G.class_orders[c] == 3)
        with pytest.raises(NonGenuineCharacterError):
            eigen_multiset(virtual, c)

    def test_fast_and_exact_paths_agree(self, sl2f5_table):
        from charprec.lambdaops import _eigen_exact
        G = sl2f5_table.group
        N = G.exponent
        for row in sl2f5_table.rows[:4]:
            for c in range(G.n_classes):
                m = G.class_orders[c]
                power_classes = [G.power_map(c, k) for k in range(m)]
                exact = _eigen_exact(row, power_classes, m, N, N // m, c)
                assert eigen_multiset(row, c) == exact


class TestNewtonVsEigenOracle:
    def test_sum_rule_polynomial_identity(self, sl2f5_table):
        # coefficients of prod(1 - eps t) are the signed exterior powers
        for row in sl2f5_table.rows:
            d = int(row.dim())
            if d > 6:
                continue
            for k in range(d + 1):
                assert exterior_power(row, k) == exterior_power_from_eigen(row, k)

    def test_sym_oracle(self, ctx):
        table = ctx.table("sym:4")
        for row in table.rows:
            for k in range(5):
                assert symmetric_power(row, k) == symmetric_power_from_eigen(row, k)


class TestDecompose:
    def test_regular_character(self, s3_table):
        reg = regular_character(s3_table.group)
        for i, m in decompose(reg, s3_table):
            assert m == int(s3_table.rows[i].dim())

    def test_sym2_of_sym2_relation(self, sl2f5_table):
        # Sym2(Sym2 x) - Sym4 x - (det x)^2 = 0 for 2-dim x
        sigma = next(r for r in sl2f5_table.rows if r.dim() == 2)
        det = determinant_character(sigma)
        lhs = symmetric_power(symmetric_power(sigma, 2), 2) \
            - symmetric_power(sigma, 4) - cf_tensor(det, det)
        mults = decompose(lhs, sl2f5_table)
        assert all(m == 0 for _, m in mults)

    def test_fifth_power_is_unique_six(self, sl2f5_table):
        sigma = next(r for r in sl2f5_table.rows if r.dim() == 2)
        fifth = symmetric_power(sigma, 5)
        nz = [(i, m) for i, m in decompose(fifth, sl2f5_table) if m]
        assert len(nz) == 1 and nz[0][1] == 1
        assert sl2f5_table.rows[nz[0][0]].dim() == 6

    def test_non_integer_multiplicity_rejected(self, s3_table):
        third = ClassFunction(s3_table.group, [Fraction(1, 3)] * 3)
        with pytest.raises(ValueError):
            decompose(third, s3_table)

    def test_is_genuine(self, s3_table):
        triv, sign, std = _rows(s3_table)
        assert is_genuine(std + sign, s3_table)
        assert not is_genuine(std - sign, s3_table)


class TestPaperShapedIdentities:
    def test_fixed_vector_equivalence_spot(self, sl2f5_table):
        one = trivial_character(sl2f5_table.group)
        four = next(r for r in sl2f5_table.rows if r.dim() == 4)
        alt = one - four + exterior_power(four, 2) - exterior_power(four, 3) \
            + exterior_power(four, 4)
        G = sl2f5_table.group
        for c in range(G.n_classes):
            has_one = eigen_multiset(four, c).multiplicity(0) > 0
            assert has_one == alt.at(c).is_zero()

    def test_two_dim_extension_identity(self, sl2f5_table):
        rows = sl2f5_table.rows
        W = rows[3] + rows[0]
        A = next(r for r in rows if r.dim() == 2)
        V = W + A
        lhs = cf_tensor(V, W) + exterior_power(A, 2)
        rhs = exterior_power(V, 2) + symmetric_power(W, 2)
        assert lhs == rhs
