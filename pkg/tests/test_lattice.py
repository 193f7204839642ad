"""Lattice validation, order queries and the frame laws."""
from itertools import chain, combinations, permutations

import pytest

from lsubgroups import (
    EmptySubsetError,
    NotALatticeError,
    NotAPosetError,
    UnknownElementError,
    chain_lattice,
    lattice_from_document,
    validate_lattice,
)
from lsubgroups.errors import DocumentError


def diamond():
    return validate_lattice(["0", "p", "q", "1"], [("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")])


def pentagon():
    # 0 < x < z < 1 and 0 < y < 1 with y incomparable to both x and z
    return validate_lattice(
        ["0", "x", "z", "y", "1"],
        [("0", "x"), ("x", "z"), ("z", "1"), ("0", "y"), ("y", "1")],
    )


def powerset(xs):
    return chain.from_iterable(combinations(xs, r) for r in range(len(xs) + 1))


class TestValidation:
    def test_five_chain(self):
        lat = chain_lattice(["0", "a", "b", "c", "1"])
        assert lat.top == "1"
        assert lat.bottom == "0"
        assert lat.is_chain()
        assert lat.distributive

    def test_two_chain(self):
        lat = chain_lattice(["0", "1"])
        assert lat.join("0", "1") == "1"
        assert lat.meet("0", "1") == "0"

    def test_pentagon_flagged_not_distributive(self):
        lat = pentagon()
        assert not lat.distributive
        # brute force the law over all triples to confirm the flag
        broken = [
            (a, b, c)
            for a in lat.elements
            for b in lat.elements
            for c in lat.elements
            if lat.meet(a, lat.join(b, c)) != lat.join(lat.meet(a, b), lat.meet(a, c))
        ]
        assert broken

    def test_diamond_distributive(self):
        assert diamond().distributive

    def test_antisymmetry_violation(self):
        with pytest.raises(NotAPosetError):
            validate_lattice(["a", "b"], [("a", "b"), ("b", "a")])

    def test_missing_upper_bound(self):
        with pytest.raises(NotALatticeError):
            validate_lattice(["0", "x", "y"], [("0", "x"), ("0", "y")])

    def test_unknown_element_in_pairs(self):
        with pytest.raises(UnknownElementError):
            validate_lattice(["a"], [("a", "zz")])

    def test_duplicates_rejected(self):
        with pytest.raises(NotALatticeError):
            validate_lattice(["a", "a"], [])


class TestJoinMeet:
    def test_chain_join_meet_are_max_min(self):
        names = ["0", "a", "b", "c", "1"]
        lat = chain_lattice(names)
        for i, x in enumerate(names):
            for j, y in enumerate(names):
                assert lat.join(x, y) == names[max(i, j)]
                assert lat.meet(x, y) == names[min(i, j)]

    def test_join_with_bottom_is_identity(self):
        lat = chain_lattice(["0", "a", "b", "c", "1"])
        for x in lat.elements:
            assert lat.join(x, lat.bottom) == x
            assert lat.meet(x, lat.top) == x

    def test_diamond_incomparable_pair(self):
        lat = diamond()
        assert lat.join("p", "q") == "1"
        assert lat.meet("p", "q") == "0"

    def test_unknown_element(self):
        lat = diamond()
        with pytest.raises(UnknownElementError):
            lat.join("p", "nope")

    def test_join_set_conventions(self):
        lat = chain_lattice(["0", "a", "b", "c", "1"])
        assert lat.join_set([]) == "0"
        assert lat.meet_set([]) == "1"
        assert lat.join_set(["a"]) == "a"
        assert lat.join_set(["a", "c"]) == "c"

    def test_fold_is_order_independent(self):
        lat = diamond()
        for subset in [("p", "q", "1"), ("0", "p", "q"), ("p", "q")]:
            joins = {lat.join_set(perm) for perm in permutations(subset)}
            meets = {lat.meet_set(perm) for perm in permutations(subset)}
            assert len(joins) == 1
            assert len(meets) == 1


class TestFrameLaws:
    @pytest.mark.parametrize("lat", [chain_lattice(["0", "a", "b", "c", "1"]), diamond(), pentagon()],
                             ids=["chain5", "diamond", "pentagon"])
    def test_all_triples(self, lat):
        for a in lat.elements:
            assert lat.join(a, a) == a
            assert lat.meet(a, a) == a
            for b in lat.elements:
                assert lat.join(a, b) == lat.join(b, a)
                assert lat.meet(a, b) == lat.meet(b, a)
                assert lat.join(a, lat.meet(a, b)) == a
                assert lat.meet(a, lat.join(a, b)) == a
                for c in lat.elements:
                    assert lat.join(a, lat.join(b, c)) == lat.join(lat.join(a, b), c)
                    assert lat.meet(a, lat.meet(b, c)) == lat.meet(lat.meet(a, b), c)


class TestOrderQueries:
    def test_chain_flags(self):
        assert chain_lattice(["0", "a", "b", "c", "1"]).is_chain()
        assert chain_lattice(["0", "a", "b", "c", "1"]).is_upper_well_ordered()
        assert not diamond().is_chain()
        assert not diamond().is_upper_well_ordered()
        single = chain_lattice(["x"])
        assert single.is_chain() and single.is_upper_well_ordered()

    def test_covers_on_chain(self):
        lat = chain_lattice(["0", "a", "b", "c", "1"])
        assert lat.is_cover("1", "c")
        assert not lat.is_cover("1", "b")  # c sits between
        assert not lat.is_cover("c", "1")
        assert lat.covers_of("b") == ("c",)

    def test_covers_on_diamond(self):
        assert set(diamond().covers_of("0")) == {"p", "q"}

    def test_covering_pairs_give_hasse(self):
        lat = chain_lattice(["0", "a", "b"])
        assert lat.covering_pairs() == (("0", "a"), ("a", "b"))


class TestSupstar:
    def test_chain_subsets_always_supstar(self):
        lat = chain_lattice(["0", "a", "b", "c", "1"])
        for subset in powerset(lat.elements):
            if subset:
                assert lat.is_supstar_subset(subset)

    def test_incomparable_pair_is_not(self):
        assert not diamond().is_supstar_subset(["p", "q"])

    def test_singleton(self):
        assert diamond().is_supstar_subset(["0"])

    def test_empty_rejected(self):
        with pytest.raises(EmptySubsetError):
            diamond().is_supstar_subset([])

    @pytest.mark.parametrize("lat", [diamond(), pentagon(), chain_lattice(["0", "a", "b", "c", "1"])],
                             ids=["diamond", "pentagon", "chain5"])
    def test_agrees_with_brute_force(self, lat):
        # every non-empty subset must contain its own supremum
        for xs in powerset(lat.elements):
            if not xs or len(xs) > 6:
                continue
            brute = all(
                lat.join_set(sub) in sub for sub in powerset(xs) if sub
            )
            assert lat.is_supstar_subset(xs) == brute


class TestDocuments:
    def test_chain_shorthand(self):
        lat = lattice_from_document({"chain": ["0", "a", "1"]})
        assert lat.top == "1" and lat.is_chain()

    def test_pairs_form(self):
        doc = {"elements": ["0", "p", "q", "1"],
               "le": [["0", "p"], ["0", "q"], ["p", "1"], ["q", "1"]]}
        lat = lattice_from_document(doc)
        assert lat == diamond()

    def test_round_trip(self):
        lat = diamond()
        assert lattice_from_document(lat.as_document()) == lat

    @pytest.mark.parametrize("doc", [
        [],
        {"chain": [1, 2]},
        {"elements": ["a"], "le": [["a"]]},
        {"le": []},
        {"elements": ["a", "b"], "le": [["a", "zz"]]},
    ])
    def test_malformed_documents(self, doc):
        with pytest.raises(DocumentError):
            lattice_from_document(doc)


def test_structural_equality_and_hash():
    one = chain_lattice(["0", "1"])
    two = chain_lattice(["0", "1"])
    assert one == two
    assert hash(one) == hash(two)
    assert one != chain_lattice(["0", "a", "1"])
