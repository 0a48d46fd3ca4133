import pytest

from adecovers.dessins import (
    BelyiClass,
    BelyiTriple,
    DessinClass,
    classify,
    enumerate_belyi,
    equivalent,
    genus,
    power_map,
)
from adecovers.errors import (
    DegreeMismatch,
    DegreeTooLargeForCanonicalization,
    NotTransitive,
)
from adecovers.perms import Permutation, canonical_tuple

import oracles


def perm(*cycles, degree):
    return Permutation.from_cycles(degree, cycles)


def triple(c0, c1, degree):
    return BelyiTriple(perm(*c0, degree=degree), perm(*c1, degree=degree))


T_12_13 = triple([(1, 2)], [(1, 3)], 3)


class TestBelyiTriple:
    def test_sigma_inf_derived(self):
        assert T_12_13.sigma_inf == perm((1, 2, 3), degree=3)

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            BelyiTriple(perm((1, 2), degree=2), perm((1, 2), degree=3))

    def test_json_round_trip(self):
        assert BelyiTriple.from_json(T_12_13.to_json()) == T_12_13

    def test_json_degree_check(self):
        doc = T_12_13.to_json()
        doc["degree"] = 5
        with pytest.raises(ValueError):
            BelyiTriple.from_json(doc)


class TestGenus:
    def test_two_transpositions(self):
        assert genus(T_12_13) == 0

    def test_degree_one(self):
        assert genus(triple([], [], 1)) == 0

    def test_pair_of_equal_three_cycles(self):
        t = triple([(1, 2, 3)], [(1, 2, 3)], 3)
        assert genus(t) == 1

    def test_not_transitive(self):
        with pytest.raises(NotTransitive):
            genus(triple([(1, 2)], [(1, 2)], 3))

    def test_equation_h_equivalence(self):
        for n in range(1, 6):
            for cls in enumerate_belyi(n):
                k = sum(ct.count for ct in cls.cycle_types)
                assert (cls.genus == 0) == (k == n + 2)


class TestClassify:
    def test_bel3(self):
        assert classify(T_12_13) is BelyiClass.BEL3

    def test_power_map_is_bel2(self):
        assert classify(power_map(4)) is BelyiClass.BEL2

    def test_trivial_degree_one(self):
        assert classify(triple([], [], 1)) is BelyiClass.BEL2

    def test_trivial_sigma_inf(self):
        t = triple([(1, 2)], [(1, 2)], 2)
        assert t.sigma_inf.is_identity()
        assert classify(t) is BelyiClass.BEL2


class TestEquivalent:
    def test_reflexive(self):
        assert equivalent(T_12_13, T_12_13)

    def test_swapped_components(self):
        # relabeling 2 <-> 3 exchanges (12) and (13), so the swapped pair is
        # equivalent; the brute-force oracle agrees
        other = triple([(1, 3)], [(1, 2)], 3)
        assert equivalent(T_12_13, other)
        assert oracles.same_class(
            (T_12_13.sigma0.images, T_12_13.sigma1.images),
            (other.sigma0.images, other.sigma1.images),
            3,
        )

    def test_inequivalent_pairs(self):
        # same components in a genuinely different configuration: a
        # transposition against a 3-cycle in the two possible orders has equal
        # cycle data but sigma_inf of different cycle type
        t1 = triple([(1, 2)], [(1, 2, 3)], 3)
        t2 = triple([(1, 2, 3)], [(1, 2)], 3)
        same = oracles.same_class(
            (t1.sigma0.images, t1.sigma1.images),
            (t2.sigma0.images, t2.sigma1.images),
            3,
        )
        assert equivalent(t1, t2) == same

    def test_conjugate_copy(self):
        g = (1, 3, 2)  # the transposition (2 3)
        conj = BelyiTriple(
            Permutation(oracles.conj_t(T_12_13.sigma0.images, g)),
            Permutation(oracles.conj_t(T_12_13.sigma1.images, g)),
        )
        assert equivalent(T_12_13, conj)

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            equivalent(T_12_13, power_map(2))

    def test_equivalent_triples_share_invariants(self):
        for cls in enumerate_belyi(4, genus0_only=True, strict_bel3=True):
            g = (2, 3, 4, 1)
            conj = BelyiTriple(
                Permutation(oracles.conj_t(cls.sigma0.images, g)),
                Permutation(oracles.conj_t(cls.sigma1.images, g)),
            )
            assert genus(conj) == cls.genus
            assert conj.cycle_types() == cls.cycle_types


class TestEnumerateBelyi:
    def test_degree_one(self):
        classes = enumerate_belyi(1)
        assert len(classes) == 1
        assert classes[0].sigma0.is_identity() and classes[0].sigma1.is_identity()

    def test_degree_two_strict_is_empty(self):
        assert enumerate_belyi(2, strict_bel3=True) == []

    def test_counts_match_oracle(self):
        for n, want in oracles.BELYI_ALL_TRANSITIVE_COUNTS.items():
            assert len(enumerate_belyi(n)) == want
        for n, want in oracles.BELYI_GENUS0_COUNTS.items():
            assert len(enumerate_belyi(n, genus0_only=True)) == want
        for n, want in oracles.BELYI_STRICT_GENUS0_COUNTS.items():
            assert len(enumerate_belyi(n, genus0_only=True, strict_bel3=True)) == want

    def test_degree_three_strict_contains_spec_class(self):
        classes = enumerate_belyi(3, genus0_only=True, strict_bel3=True)
        target = canonical_tuple((T_12_13.sigma0, T_12_13.sigma1))
        assert any((c.sigma0, c.sigma1) == target for c in classes)

    def test_classes_are_canonical_and_sorted(self):
        classes = enumerate_belyi(4)
        keys = [(c.sigma0.images, c.sigma1.images) for c in classes]
        assert keys == sorted(keys)
        for c in classes:
            assert canonical_tuple((c.sigma0, c.sigma1)) == (c.sigma0, c.sigma1)

    def test_filters_are_restrictions(self):
        all_keys = {
            (c.sigma0.images, c.sigma1.images) for c in enumerate_belyi(4)
        }
        strict = enumerate_belyi(4, genus0_only=True, strict_bel3=True)
        for c in strict:
            assert (c.sigma0.images, c.sigma1.images) in all_keys
            assert c.genus == 0
            assert classify(c.triple) is BelyiClass.BEL3

    def test_cap(self):
        with pytest.raises(DegreeTooLargeForCanonicalization):
            enumerate_belyi(7)


class TestPowerMap:
    def test_degree_one(self):
        t = power_map(1)
        assert t.degree == 1 and t.sigma0.is_identity()

    def test_degree_three(self):
        t = power_map(3)
        assert t.sigma0 == perm((1, 2, 3), degree=3)
        assert t.sigma1.is_identity()
        assert classify(t) is BelyiClass.BEL2

    def test_always_genus_zero(self):
        for k in range(1, 9):
            assert genus(power_map(k)) == 0

    def test_invalid(self):
        with pytest.raises(ValueError):
            power_map(0)
