import math
import random

import pytest

from charprec.groups import (CATALOG, MatCarrier, PermCarrier, ResourceLimitError,
                             SmallField, group_closure, make_alt, make_cyclic,
                             make_dihedral, make_gl2, make_pgl2, make_quaternion,
                             make_sl2, make_sym, parse_group_descriptor,
                             parse_permutation_words, subgroup_tori_and_unipotent)


class TestClosure:
    def test_s3_from_generators(self):
        car = PermCarrier(3)
        G = group_closure([(1, 0, 2), (1, 2, 0)], car, "s3")
        assert G.order == 6

    def test_sl2f5_from_standard_generators(self):
        car = MatCarrier(SmallField(5))
        G = group_closure([(1, 1, 0, 1), (0, 4, 1, 0)], car, "sl2f5")
        q = 5
        assert G.order == q * (q * q - 1) == 120

    def test_empty_generators_trivial_group(self):
        G = group_closure([], PermCarrier(1), "trivial")
        assert G.order == 1 and G.n_classes == 1

    def test_closure_bound(self):
        with pytest.raises(ResourceLimitError):
            make_sym(6, max_order=100)

    def test_invalid_generator(self):
        with pytest.raises(ValueError):
            group_closure([(0, 0, 1)], PermCarrier(3), "bad")


class TestConjugacy:
    def test_s3_class_sizes(self, ctx):
        G = ctx.group("sym:3")
        assert sorted(G.class_sizes) == [1, 2, 3]

    def test_gl2f5_class_count(self, ctx):
        G = ctx.group("gl2:5")
        assert G.n_classes == 24  # q^2 - 1

    def test_class_equation(self, ctx):
        for desc in ("sym:4", "sl2:3", "gl2:3", "quat:8"):
            G = ctx.group(desc)
            assert sum(G.class_sizes) == G.order
            assert all(G.order % s == 0 for s in G.class_sizes)

    def test_identity_class_is_singleton(self, ctx):
        G = ctx.group("sl2:5")
        assert G.class_sizes[G.identity_class] == 1
        assert G.class_reps[G.identity_class] == G.carrier.identity


class TestPowerMap:
    def test_power_zero_is_identity_class(self, ctx):
        G = ctx.group("sym:4")
        for c in range(G.n_classes):
            assert G.power_map(c, 0) == G.identity_class

    def test_three_cycle_squared(self, ctx):
        G = ctx.group("sym:3")
        c = next(c for c in range(G.n_classes) if G.class_orders[c] == 3)
        assert G.power_map(c, 2) == c

    def test_central_involution_squares_to_identity(self, ctx):
        G = ctx.group("sl2:5")
        minus_i = (4, 0, 0, 4)
        c = G.class_of_element(minus_i)
        assert G.class_sizes[c] == 1
        assert G.power_map(c, 2) == G.identity_class

    def test_random_consistency(self, ctx):
        rng = random.Random(31337)
        for desc in ("sym:4", "sl2:3", "pgl2:5"):
            G = ctx.group(desc)
            for _ in range(350):
                g = G.elements[rng.randrange(G.order)]
                k = rng.randint(-8, 8)
                assert G.class_of_element(G.element_pow(g, k)) == \
                    G.power_map(G.class_of_element(g), k)


def _parity(p):
    seen = [False] * len(p)
    par = 0
    for i in range(len(p)):
        if not seen[i]:
            j, c = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                c += 1
            par ^= (c - 1) & 1
    return par


class TestConstructors:
    def test_gl2_orders(self, ctx):
        assert ctx.group("gl2:5").order == 480
        assert ctx.group("gl2:3").order == 48

    def test_pgl2f5_is_symmetric_looking(self, ctx):
        G = ctx.group("pgl2:5")
        assert G.carrier.n == 6
        assert G.order == 120
        assert any(_parity(e) == 1 for e in G.elements)

    def test_sl2_orders(self, ctx):
        assert ctx.group("sl2:3").order == 24
        assert ctx.group("sl2:5").order == 120

    def test_small_groups(self):
        assert make_cyclic(12).order == 12
        assert make_dihedral(4).order == 8
        assert make_quaternion().order == 8
        assert make_alt(5).order == 60

    def test_quaternion_structure(self):
        Q = make_quaternion()
        orders = sorted(Q.class_orders)
        assert Q.n_classes == 5 and orders == [1, 2, 4, 4, 4]

    def test_exponents(self, ctx):
        assert ctx.group("gl2:5").exponent == 120
        assert ctx.group("sl2:5").exponent == 60


class TestTori:
    def test_subgroup_orders_q5(self, ctx):
        tor = subgroup_tori_and_unipotent(ctx.group("gl2:5"))
        assert len(tor.diagonal) == 16
        assert len(tor.nonsplit) == 24
        assert len(tor.unipotent) == 5
        assert len(tor.center) == 4

    def test_nonsplit_torus_cyclic(self, ctx):
        G = ctx.group("gl2:5")
        tor = subgroup_tori_and_unipotent(G)
        assert max(G._element_order(s) for s in tor.nonsplit) == 24

    def test_center_is_intersection(self, ctx):
        tor = subgroup_tori_and_unipotent(ctx.group("gl2:5"))
        assert set(tor.center) == set(tor.diagonal) & set(tor.nonsplit)

    def test_rejects_non_gl2(self, ctx):
        with pytest.raises(ValueError):
            subgroup_tori_and_unipotent(ctx.group("sym:3"))


def _quotient_class_stats(G, center):
    """Conjugacy class sizes of G/Z computed directly on cosets."""
    center = set(center)
    coset_of = {}
    cosets = []
    for g in G.elements:
        if g in coset_of:
            continue
        cs = frozenset(G.mul(g, z) for z in center)
        idx = len(cosets)
        cosets.append(cs)
        for h in cs:
            coset_of[h] = idx
    n = len(cosets)
    seen = [False] * n
    sizes = []
    for i in range(n):
        if seen[i]:
            continue
        rep = min(cosets[i])
        orbit = {coset_of[G.mul(G.mul(g, rep), G.inv(g))] for g in G.elements}
        for j in orbit:
            seen[j] = True
        sizes.append(len(orbit))
    return sorted(sizes)


@pytest.mark.parametrize("q", [3, 5])
def test_pgl2_matches_gl2_quotient_statistics(ctx, q):
    G = ctx.group(f"gl2:{q}")
    tor = subgroup_tori_and_unipotent(G)
    quotient_sizes = _quotient_class_stats(G, tor.center)
    P = ctx.group(f"pgl2:{q}")
    assert sorted(P.class_sizes) == quotient_sizes
    assert P.n_classes == len(quotient_sizes)


class TestDescriptors:
    def test_known_descriptors(self, ctx):
        for desc in CATALOG:
            assert ctx.group(desc).order > 0

    def test_unknown_descriptor(self):
        with pytest.raises(ValueError):
            parse_group_descriptor("sporadic:1")

    def test_perm_words(self):
        gens = parse_permutation_words("(0 1)\n(0 1 2)\n")
        assert gens == [(1, 0, 2), (1, 2, 0)]

    def test_perm_file(self, tmp_path):
        f = tmp_path / "gens.txt"
        f.write_text("(0 1)(2 3)\n(0 2)(1 3)\n")
        G = parse_group_descriptor(f"perm:{f}")
        assert G.order == 4  # Klein four-group

    def test_perm_words_reject_garbage(self):
        with pytest.raises(ValueError):
            parse_permutation_words("0 1 2\n")
        with pytest.raises(ValueError):
            parse_permutation_words("(0 0 1)\n")
