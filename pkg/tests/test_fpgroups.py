import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from adecovers.errors import (
    DegreeTooLargeForCanonicalization,
    SearchSpaceTooLarge,
    UnknownGenerator,
)
from adecovers.fpgroups import (
    AbelianInvariants,
    Presentation,
    Word,
    abelianization,
    check_homomorphism,
    commutator,
    enumerate_homs,
    evaluate_word,
    hom_count,
    smith_normal_diagonal,
)
from adecovers.perms import Permutation, canonical_tuple

import oracles


def perm(*cycles, degree):
    return Permutation.from_cycles(degree, cycles)


A_SQUARED = Presentation(generators=("a",), relators=(Word.parse("a a"),))
FREE_ONE = Presentation(generators=("a",))
ABELIAN_PAIR = Presentation(
    generators=("b1", "b2"), relators=(commutator(Word.gen("b1"), Word.gen("b2")),)
)
A1_GROUP = Presentation(
    generators=("b1", "b2", "e3"),
    relators=(
        Word.parse("e3^-1 b1 b2"),
        commutator(Word.gen("b1"), Word.gen("e3")),
        commutator(Word.gen("b2"), Word.gen("e3")),
    ),
)


class TestWord:
    def test_parse(self):
        assert Word.parse("e3^-1 b1 b2").letters == (("e3", -1), ("b1", 1), ("b2", 1))
        assert Word.parse("a^3").letters == (("a", 1),) * 3
        assert Word.parse("").letters == ()
        with pytest.raises(ValueError):
            Word.parse("a^")

    def test_algebra(self):
        w = Word.gen("a") * Word.gen("b", -1)
        assert w.inverse().letters == (("b", 1), ("a", -1))
        assert (w**2).letters == w.letters * 2
        assert (w**-1) == w.inverse()
        assert w.exponent_sum("a") == 1 and w.exponent_sum("b") == -1

    def test_commutator(self):
        c = commutator(Word.gen("x"), Word.gen("y"))
        assert c.letters == (("x", -1), ("y", -1), ("x", 1), ("y", 1))

    def test_json_round_trip(self):
        w = Word.parse("e3^-2 b1")
        assert Word.from_json(w.to_json()) == w


class TestPresentation:
    def test_undeclared_generator(self):
        with pytest.raises(UnknownGenerator):
            Presentation(generators=("a",), relators=(Word.gen("b"),))

    def test_json_round_trip(self):
        assert Presentation.from_json(A1_GROUP.to_json()) == A1_GROUP


class TestEvaluateWord:
    def test_empty_word(self):
        asg = {"a": perm((1, 2), degree=2)}
        assert evaluate_word(Word(), asg).is_identity()

    def test_involution_square(self):
        asg = {"b1": perm((1, 2), degree=2), "b2": perm((1, 2), degree=2)}
        assert evaluate_word(Word.parse("b1 b2"), asg).is_identity()

    def test_three_branch_product(self):
        # the degree-3 example: (12), (13), (132) multiply to the identity
        asg = {
            "b1": perm((1, 2), degree=3),
            "b2": perm((1, 3), degree=3),
            "b3": perm((1, 3, 2), degree=3),
        }
        assert evaluate_word(Word.parse("b1 b2 b3"), asg).is_identity()

    def test_unknown_generator(self):
        with pytest.raises(UnknownGenerator):
            evaluate_word(Word.gen("x"), {"a": perm(degree=2)})

    def test_inverse_letters(self):
        c = perm((1, 2, 3), degree=3)
        assert evaluate_word(Word.gen("a", -1), {"a": c}) == c.inverse()


class TestCheckHomomorphism:
    def test_involution_image(self):
        assert check_homomorphism(A_SQUARED, {"a": perm((1, 2), degree=2)})

    def test_three_cycle_fails(self):
        assert not check_homomorphism(A_SQUARED, {"a": perm((1, 2, 3), degree=3)})

    def test_d4_example(self):
        from adecovers.catalog import SingularityType, simplified_presentation

        pres = simplified_presentation(SingularityType.parse("D4"))
        asg = {
            "b1": perm((1, 2), degree=3),
            "b2": perm((1, 3), degree=3),
            "b3": perm((1, 3, 2), degree=3),
        }
        assert check_homomorphism(pres, asg)

    def test_missing_assignment(self):
        with pytest.raises(UnknownGenerator):
            check_homomorphism(A_SQUARED, {})


class TestEnumerateHoms:
    def test_involution_raw(self):
        homs = enumerate_homs(A_SQUARED, 2)
        assert [h["a"].images for h in homs] == [(1, 2), (2, 1)]

    def test_abelian_pair_classes(self):
        homs = enumerate_homs(
            ABELIAN_PAIR, 2, transitive=True, nontrivial=("b1", "b2"), up_to_conjugacy=True
        )
        assert len(homs) == 1
        assert homs[0]["b1"].images == (2, 1) and homs[0]["b2"].images == (2, 1)

    def test_degree_one(self):
        homs = enumerate_homs(A1_GROUP, 1, transitive=True)
        assert len(homs) == 1
        assert all(p.is_identity() for p in homs[0].values())

    def test_all_outputs_are_homomorphisms(self):
        for homs in (
            enumerate_homs(A1_GROUP, 3),
            enumerate_homs(A1_GROUP, 3, up_to_conjugacy=True),
        ):
            assert homs
            for h in homs:
                assert check_homomorphism(A1_GROUP, h)

    def test_stable_output(self):
        first = enumerate_homs(ABELIAN_PAIR, 3, up_to_conjugacy=True)
        second = enumerate_homs(ABELIAN_PAIR, 3, up_to_conjugacy=True)
        assert first == second

    def test_representatives_are_canonical(self):
        for h in enumerate_homs(ABELIAN_PAIR, 4, transitive=True, up_to_conjugacy=True):
            tup = (h["b1"], h["b2"])
            assert canonical_tuple(tup) == tup

    def test_conjugacy_cap(self):
        with pytest.raises(DegreeTooLargeForCanonicalization):
            enumerate_homs(FREE_ONE, 9, up_to_conjugacy=True)

    def test_unknown_nontrivial_name(self):
        with pytest.raises(UnknownGenerator):
            enumerate_homs(FREE_ONE, 2, nontrivial=("zz",))


class TestHomCount:
    def test_involution_count(self):
        # identity plus the three transpositions
        assert hom_count(A_SQUARED, 3) == 4
        assert hom_count(A_SQUARED, 3) == oracles.brute_hom_count(
            ("a",), [(("a", 1), ("a", 1))], 3
        )

    def test_free_rank_one(self):
        assert hom_count(FREE_ONE, 2) == 2

    def test_abelian_pair(self):
        # every pair in the 2-point symmetric group commutes
        assert hom_count(ABELIAN_PAIR, 2) == 4

    def test_search_space_guard(self):
        wide = Presentation(generators=tuple(f"g{i}" for i in range(12)))
        with pytest.raises(SearchSpaceTooLarge):
            hom_count(wide, 5)

    @settings(max_examples=25, deadline=None)
    @given(
        st.integers(2, 3),
        st.lists(
            st.lists(
                st.tuples(st.sampled_from(["x", "y"]), st.sampled_from([-1, 1])),
                max_size=4,
            ),
            max_size=2,
        ),
    )
    def test_matches_brute_force(self, d, raw_relators):
        relators = tuple(Word(tuple(r)) for r in raw_relators)
        pres = Presentation(generators=("x", "y"), relators=relators)
        got = hom_count(pres, d)
        want = oracles.brute_hom_count(("x", "y"), [tuple(r) for r in raw_relators], d)
        assert got == want


class TestSmithNormalForm:
    def test_known_diagonals(self):
        assert smith_normal_diagonal([[2, 0], [0, 3]]) == [1, 6]
        assert smith_normal_diagonal([[1, -1, -2]]) == [1]
        assert smith_normal_diagonal([[0, 0], [0, 0]]) == []
        assert smith_normal_diagonal([[2, 0], [0, 4]]) == [2, 4]

    @settings(max_examples=80, deadline=None)
    @given(
        st.integers(1, 3),
        st.integers(1, 3),
        st.data(),
    )
    def test_matches_sympy(self, nrows, ncols, data):
        rows = [
            [data.draw(st.integers(-6, 6)) for _ in range(ncols)] for _ in range(nrows)
        ]
        got = [d for d in smith_normal_diagonal(rows) if d != 0]
        ref = smith_normal_form(Matrix(rows), domain=ZZ)
        want = [abs(ref[i, i]) for i in range(min(nrows, ncols)) if ref[i, i] != 0]
        assert got == want


class TestAbelianization:
    def test_a1_group(self):
        assert abelianization(A1_GROUP) == AbelianInvariants(free_rank=2)

    def test_e8_group(self):
        from adecovers.catalog import SingularityType, simplified_presentation

        pres = simplified_presentation(SingularityType.parse("E8"))
        assert abelianization(pres) == AbelianInvariants(free_rank=1)

    def test_d4_group(self):
        from adecovers.catalog import SingularityType, simplified_presentation

        pres = simplified_presentation(SingularityType.parse("D4"))
        assert abelianization(pres) == AbelianInvariants(free_rank=3)

    def test_torsion(self):
        z6 = Presentation(
            generators=("a", "b"),
            relators=(Word.gen("a", 2), Word.gen("b", 3)),
        )
        assert abelianization(z6) == AbelianInvariants(free_rank=0, torsion=(6,))
        z3 = Presentation(generators=("a",), relators=(Word.gen("a", 3),))
        assert abelianization(z3) == AbelianInvariants(free_rank=0, torsion=(3,))

    def test_free_group(self):
        assert abelianization(FREE_ONE) == AbelianInvariants(free_rank=1)
