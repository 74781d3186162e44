import random

import pytest

import bruteforce as bf
from blockcensus.errors import InputError, PreconditionError
from blockcensus.permgrp import (
    Permutation,
    build_group,
    centralizer,
    class_fusion,
    conjugacy_classes,
    derived_subgroup,
    direct_product,
    exponent,
    frattini_index,
    frattini_subgroup,
    is_cyclic,
    is_perfect,
    normal_subgroups,
    normalizer,
    o_p_prime,
    quotient_group,
    subgroup_from_elements,
    sylow_subgroup,
    trivial_group,
)


def cyc(n):
    return build_group(n, [Permutation.from_cycles(n, [list(range(n))])])


def sym(n):
    return build_group(n, [Permutation.from_cycles(n, [[0, 1]]), Permutation.from_cycles(n, [list(range(n))])])


def alt(n):
    long = list(range(n)) if n % 2 else list(range(1, n))
    return build_group(n, [Permutation.from_cycles(n, [[0, 1, 2]]), Permutation.from_cycles(n, [long])])


class TestPermutation:
    def test_rejects_non_bijection(self):
        with pytest.raises(InputError):
            Permutation([0, 0, 1])

    def test_mul_applies_left_to_right(self):
        p = Permutation.from_cycles(3, [[0, 1]])
        q = Permutation.from_cycles(3, [[1, 2]])
        assert (p * q).apply(0) == q.apply(p.apply(0))

    def test_inverse_and_order(self):
        p = Permutation.from_cycles(6, [[0, 1, 2], [3, 4]])
        assert (p * p.inverse()).is_identity()
        assert p.order() == 6
        assert p ** 6 == Permutation.identity(6)
        assert p ** -1 == p.inverse()


class TestBuildGroup:
    def test_empty_generators(self):
        assert build_group(3, []).order == 1

    def test_s3(self):
        assert sym(3).order == 6

    def test_degree4_two_3cycles_is_a4(self):
        # oracle: brute-force closure
        gens = [Permutation.from_cycles(4, [[0, 1, 2]]), Permutation.from_cycles(4, [[1, 2, 3]])]
        G = build_group(4, gens)
        assert G.order == len(bf.closure(4, [g.images for g in gens])) == 12

    @pytest.mark.parametrize("maker,order", [(lambda: sym(4), 24), (lambda: sym(5), 120), (lambda: alt(5), 60), (lambda: alt(6), 360), (lambda: sym(6), 720)])
    def test_chain_order_matches_brute_closure(self, maker, order):
        G = maker()
        assert G.order == order
        assert G.order == len(bf.closure(G.degree, [g.images for g in G.generators]))

    def test_membership(self):
        G = alt(4)
        assert Permutation.from_cycles(4, [[0, 1, 2]]) in G
        assert Permutation.from_cycles(4, [[0, 1]]) not in G

    def test_random_subgroups_of_s6_order_matches_closure(self):
        rng = random.Random(11)
        S6 = sym(6)
        elems = S6.elements()
        for _ in range(8):
            gens = [elems[rng.randrange(len(elems))] for _ in range(2)]
            G = build_group(6, gens)
            assert G.order == len(bf.closure(6, [g.images for g in gens]))

    def test_fuzzed_generator_sets_match_closure(self):
        # many random generator tuples on up to 7 points
        rng = random.Random(2024)
        for _ in range(60):
            degree = rng.randrange(2, 8)
            ngens = rng.randrange(0, 4)
            gens = []
            for _ in range(ngens):
                images = list(range(degree))
                rng.shuffle(images)
                gens.append(Permutation(images))
            G = build_group(degree, gens)
            assert G.order == len(bf.closure(degree, [g.images for g in gens]))
            assert len(G.elements()) == G.order
            for g in gens:
                assert g in G

    def test_element_enumeration_is_complete(self):
        G = sym(4)
        elems = G.elements()
        assert len(elems) == 24 == len(set(elems))

    def test_chain_order_matches_closure_over_whole_corpus(self):
        # module invariant: chain order == brute-force closure for |G| <= 5000
        from blockcensus.catalog import CATALOG, group

        for name in CATALOG:
            G = group(name)
            assert G.order == len(bf.closure(G.degree, [g.images for g in G.generators])), name


class TestConjugacyClasses:
    def test_s3_sizes(self):
        assert sorted(conjugacy_classes(sym(3)).sizes) == [1, 2, 3]

    def test_c9_all_singletons(self):
        cd = conjugacy_classes(cyc(9))
        assert cd.sizes == (1,) * 9

    def test_a4_sizes_brute(self):
        G = alt(4)
        cd = conjugacy_classes(G)
        assert sorted(cd.sizes) == bf.conjugacy_class_sizes(4, [g.images for g in G.generators]) == [1, 3, 4, 4]

    def test_identity_class_first(self):
        cd = conjugacy_classes(sym(4))
        assert cd.sizes[0] == 1 and cd.reps[0].is_identity()

    def test_power_map_and_inverse_map(self):
        cd = conjugacy_classes(sym(4))
        for j in range(len(cd)):
            assert cd.power_map[j][1] == j
            assert cd.inverse_map[cd.inverse_map[j]] == j
            assert cd.power_map[j][0] == 0
        assert sum(cd.sizes) == 24
        for j, size in enumerate(cd.sizes):
            assert 24 % size == 0

    def test_exponent(self):
        assert conjugacy_classes(sym(4)).exponent == 12
        assert exponent(alt(5)) == 30


class TestSylow:
    def test_a4(self):
        assert sylow_subgroup(alt(4), 3).order == 3

    def test_p_group_returns_whole_group(self):
        G = direct_product([cyc(3), cyc(3)])
        assert sylow_subgroup(G, 3).order == 9

    def test_s4_brute(self):
        G = sym(4)
        assert sylow_subgroup(G, 3).order == bf.max_p_subgroup_order(4, [g.images for g in G.generators], 3) == 3
        assert sylow_subgroup(G, 2).order == 8

    def test_p_not_dividing(self):
        assert sylow_subgroup(sym(3), 5).order == 1

    def test_sylow_subgroups_conjugate_into_each_other(self):
        G = sym(4)
        P = sylow_subgroup(G, 3)
        rng = random.Random(5)
        elems = G.elements()
        for _ in range(6):
            g = elems[rng.randrange(len(elems))]
            conj = build_group(4, [p.conjugate(g) for p in P.generators])
            assert conj.order == P.order
            assert all(x in G for x in conj.generators)

    def test_not_prime(self):
        with pytest.raises(PreconditionError):
            sylow_subgroup(sym(3), 4)


class TestFrattini:
    def test_cyclic_9(self):
        assert frattini_index(cyc(9), 3) == 3

    def test_elementary_abelian(self):
        assert frattini_index(direct_product([cyc(3), cyc(3)]), 3) == 9

    def test_extraspecial_27_exponent3(self, named_group):
        P = named_group("He3")
        # oracle: Phi(P) = center of order 3, computed independently
        center = bf.centralizer_elements(P.degree, [g.images for g in P.generators], [g.images for g in P.generators])
        assert len(center) == 3
        phi = frattini_subgroup(P, 3)
        assert phi.element_set() == frozenset(center)
        assert frattini_index(P, 3) == 9

    @pytest.mark.parametrize("name", ["C9", "C27", "C3xC3", "C3xC9", "C3xC3xC3", "He3", "3^(1+2):C9", "C3wrC3", "C9xC9"])
    def test_index_is_p_to_min_generators(self, name, named_group):
        # oracle: exhaustive minimal generating set search (Burnside basis)
        P = named_group(name)
        r = bf.minimal_generator_count(P.degree, [g.images for g in P.generators])
        assert frattini_index(P, 3) == 3 ** r

    def test_requires_p_group(self):
        with pytest.raises(PreconditionError):
            frattini_index(sym(3), 3)


class TestNormalizerCentralizer:
    def test_normalizer_of_sylow3_in_a4(self):
        G = alt(4)
        P = sylow_subgroup(G, 3)
        N = normalizer(G, P)
        assert N.order == 3
        assert N.element_set() == frozenset(bf.normalizer_elements(4, [g.images for g in G.generators], [g.images for g in P.generators]))

    def test_normal_sylow(self):
        G = sym(3)
        P = sylow_subgroup(G, 3)
        assert normalizer(G, P).order == 6

    def test_normalizer_of_self(self):
        G = sym(4)
        assert normalizer(G, G).order == 24

    def test_centralizer_examples(self):
        G = sym(3)
        A3 = derived_subgroup(G)
        C = centralizer(G, A3)
        assert C.order == 3
        assert C.element_set() == frozenset(bf.centralizer_elements(3, [g.images for g in G.generators], [g.images for g in A3.generators]))
        assert centralizer(G, trivial_group(3)).order == 6

    def test_abelian_centralizer_is_whole_group(self):
        G = direct_product([cyc(3), cyc(3)])
        H = build_group(G.degree, [G.generators[0]])
        assert centralizer(G, H).order == 9

    def test_tower_containments(self):
        for maker in (lambda: sym(4), lambda: alt(5)):
            G = maker()
            P = sylow_subgroup(G, 3)
            C = centralizer(G, P)
            N = normalizer(G, P)
            assert C.is_subgroup_of(N) and N.is_subgroup_of(G)

    def test_requires_subgroup_strict(self):
        H = build_group(4, [Permutation.from_cycles(4, [[0, 1]])])
        with pytest.raises(PreconditionError):
            normalizer(alt(4), H)


class TestOpPrime:
    def test_s3(self):
        assert o_p_prime(sym(3), 3).order == 1
        assert o_p_prime(sym(3), 2).order == 3

    def test_p_group(self):
        assert o_p_prime(cyc(9), 3).order == 1

    def test_a4(self):
        assert o_p_prime(alt(4), 3).order == 4


class TestStructure:
    def test_derived_s3(self):
        D = derived_subgroup(sym(3))
        assert D.order == 3

    def test_cyclic_detection(self):
        assert is_cyclic(cyc(9))
        assert not is_cyclic(direct_product([cyc(3), cyc(3)]))
        assert is_cyclic(cyc(6))

    def test_perfect(self):
        assert is_perfect(alt(5))
        assert not is_perfect(sym(5))
        assert not is_perfect(alt(4))

    def test_normal_subgroups_a4(self):
        orders = [n.order for n in normal_subgroups(alt(4))]
        assert orders == [1, 4, 12]

    def test_normal_subgroups_s4(self):
        orders = [n.order for n in normal_subgroups(sym(4))]
        assert orders == [1, 4, 12, 24]

    def test_normal_subgroups_simple(self):
        assert [n.order for n in normal_subgroups(alt(5))] == [1, 60]

    def test_normal_subgroups_of_abelian_is_all_subgroups(self):
        G = direct_product([cyc(3), cyc(3)])
        assert [n.order for n in normal_subgroups(G)] == [1, 3, 3, 3, 3, 9]


class TestFusionQuotient:
    def test_fusion_a3_in_s3(self):
        G = sym(3)
        H = derived_subgroup(G)
        f = class_fusion(G, H, conjugacy_classes(G), conjugacy_classes(H))
        assert f[0] == 0 and f[1] == f[2]

    def test_fusion_identity(self):
        G = sym(3)
        cd = conjugacy_classes(G)
        assert class_fusion(G, G, cd, cd) == tuple(range(len(cd)))

    def test_fusion_trivial_subgroup(self):
        G = sym(3)
        T = trivial_group(3)
        assert class_fusion(G, T, conjugacy_classes(G), conjugacy_classes(T)) == (0,)

    def test_quotient_s4_by_v4(self):
        G = sym(4)
        V = normal_subgroups(G)[1]
        assert V.order == 4
        quo = quotient_group(G, V)
        assert quo.group.order == 6
        assert not is_cyclic(quo.group)  # S4/V4 is S3

    def test_quotient_projection_is_homomorphism(self):
        G = sym(4)
        V = normal_subgroups(G)[1]
        quo = quotient_group(G, V)
        elems = G.elements()
        rng = random.Random(3)
        for _ in range(20):
            a = elems[rng.randrange(len(elems))]
            b = elems[rng.randrange(len(elems))]
            assert quo.project(a * b) == quo.project(a) * quo.project(b)

    def test_quotient_by_trivial_is_same_group(self):
        G = sym(3)
        quo = quotient_group(G, trivial_group(3))
        assert quo.group is G
        g = G.generators[0]
        assert quo.project(g) == g

    def test_quotient_requires_normal(self):
        G = sym(3)
        H = subgroup_from_elements(3, [Permutation.from_cycles(3, [[0, 1]])])
        with pytest.raises(PreconditionError):
            quotient_group(G, H)
