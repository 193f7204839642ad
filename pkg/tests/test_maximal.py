"""Maximal L-subgroups: strategies, profiles, transport, enumeration."""
from itertools import product as cartesian

import pytest

from lsubgroups import (
    InstanceSpec,
    InstanceTooLargeError,
    LPoint,
    LSubset,
    LevelRelation,
    NotAnIsomorphismError,
    NotMaximalError,
    TipRelation,
    build_instance,
    builtin_group,
    candidate_space_size,
    constant,
    contains,
    enumerate_l_subgroups,
    identity_hom,
    inner_automorphism,
    is_maximal,
    level_profile,
    maximal_l_subgroups,
    sufficient_maximal_check,
    tip_relation,
    transport_maximal,
    transport_maximal_preimage,
    validate_hom,
)


def brute_force_l_subgroups(mu):
    """Oracle: walk the whole value-tuple product and filter by definition."""
    group, lat = mu.group, mu.lattice
    domains = [lat.down_set(mu.value(x)) for x in group.elements]
    found = []
    for values in cartesian(*domains):
        table = dict(zip(group.elements, values))
        ok = all(
            lat.leq(lat.meet(table[x], table[y]), table[group.op(x, y)])
            for x in group.elements
            for y in group.elements
        ) and all(table[group.inverse(x)] == table[x] for x in group.elements)
        if ok:
            found.append(
                LSubset(group, lat, tuple(lat.index(table[x]) for x in group.elements))
            )
    return found


def brute_force_maximals(mu):
    pool = brute_force_l_subgroups(mu)
    proper = [s for s in pool if not s.is_constant() and s != mu]
    result = []
    for eta in proper:
        blocked = any(
            theta != eta and theta != mu and contains(theta, eta) and contains(mu, theta)
            for theta in pool
        )
        if not blocked:
            result.append(eta)
    return sorted(result, key=lambda s: s.value_indices())


class TestEnumeration:
    def test_candidate_space_sizes(self, d8_case, q8_maximal_case):
        assert candidate_space_size(d8_case["mu"]) == 2880
        assert candidate_space_size(q8_maximal_case["mu"]) == 3600

    def test_matches_brute_force(self, d8_case, q8_maximal_case, q8_converse_case):
        for mu in [d8_case["mu"], q8_maximal_case["mu"], q8_converse_case["mu"]]:
            assert list(enumerate_l_subgroups(mu)) == sorted(
                brute_force_l_subgroups(mu), key=lambda s: s.value_indices()
            )

    def test_only_proper_drops_constants_and_mu(self, d8_case):
        mu = d8_case["mu"]
        proper = enumerate_l_subgroups(mu, only_proper=True)
        assert mu not in proper
        assert all(not s.is_constant() for s in proper)
        assert set(proper) | {mu} | {
            s for s in enumerate_l_subgroups(mu) if s.is_constant()
        } == set(enumerate_l_subgroups(mu))

    def test_trivial_group_has_two_members_over_two_chain(self):
        g = builtin_group("C1")
        from lsubgroups import chain_lattice

        mu = constant(g, chain_lattice(["0", "1"]), "1")
        assert len(enumerate_l_subgroups(mu)) == 2

    def test_budget_guard(self, d8_case):
        with pytest.raises(InstanceTooLargeError):
            enumerate_l_subgroups(d8_case["mu"], budget=100)


class TestWorkedMaximality:
    def test_q8_pair_is_maximal(self, q8_maximal_case):
        verdict = is_maximal(q8_maximal_case["eta"], q8_maximal_case["mu"], strategy="both")
        assert verdict.maximal

    def test_parent_in_itself_is_not(self, d8_case):
        verdict = is_maximal(d8_case["mu"], d8_case["mu"])
        assert not verdict.maximal
        assert verdict.reason == "not_proper"

    def test_converse_pair_is_not_maximal(self, q8_converse_case):
        verdict = is_maximal(q8_converse_case["eta"], q8_converse_case["mu"], strategy="both")
        assert not verdict.maximal
        assert verdict.witness_between == q8_converse_case["theta"]
        assert verdict.witness_point is not None

    def test_d8_maximals_are_exactly_the_four(self, d8_case):
        expected = sorted(
            [d8_case["eta1"], d8_case["eta2"], d8_case["eta3"], d8_case["eta4"]],
            key=lambda s: s.value_indices(),
        )
        assert list(maximal_l_subgroups(d8_case["mu"])) == expected

    def test_maximals_match_brute_force(self, d8_case, q8_maximal_case, q8_converse_case):
        for mu in [d8_case["mu"], q8_maximal_case["mu"], q8_converse_case["mu"]]:
            assert list(maximal_l_subgroups(mu)) == brute_force_maximals(mu)

    def test_trivial_group_has_no_maximals(self, five_chain):
        g = builtin_group("C1")
        mu = constant(g, five_chain, "1")
        assert maximal_l_subgroups(mu) == ()

    def test_q8_maximal_list_contains_the_displayed_member(self, q8_maximal_case):
        assert q8_maximal_case["eta"] in maximal_l_subgroups(q8_maximal_case["mu"])


class TestStrategyAgreement:
    @pytest.mark.parametrize("case", ["d8", "q8max", "q8conv"])
    def test_full_enumeration_agreement(self, case, d8_case, q8_maximal_case, q8_converse_case):
        mu = {"d8": d8_case["mu"], "q8max": q8_maximal_case["mu"], "q8conv": q8_converse_case["mu"]}[case]
        for nu in enumerate_l_subgroups(mu):
            by_def = is_maximal(nu, mu, "definition")
            by_pt = is_maximal(nu, mu, "lpoint")
            assert by_def.maximal == by_pt.maximal

    def test_unknown_strategy(self, d8_case):
        with pytest.raises(ValueError):
            is_maximal(d8_case["eta1"], d8_case["mu"], strategy="guess")


class TestTipRelation:
    def test_equal_tip(self, d8_case):
        assert tip_relation(d8_case["eta1"], d8_case["mu"]) is TipRelation.EQUAL

    def test_equal_tip_on_q8_pair(self, q8_maximal_case):
        assert tip_relation(q8_maximal_case["eta"], q8_maximal_case["mu"]) is TipRelation.EQUAL

    def test_covered_tip(self, d8_case):
        assert tip_relation(d8_case["eta4"], d8_case["mu"]) is TipRelation.PARENT_COVERS

    def test_rejects_non_maximal(self, d8_case):
        with pytest.raises(NotMaximalError):
            tip_relation(d8_case["phi"], d8_case["mu"])


class TestLevelProfile:
    def test_converse_profile_single_defect(self, q8_converse_case):
        profile = level_profile(q8_converse_case["eta"], q8_converse_case["mu"])
        assert profile.unique_defect_level == "c"
        rels = dict(profile.witness_levels)
        assert rels["c"] is LevelRelation.PROPER_MAXIMAL_SUBGROUP
        assert rels["1"] is LevelRelation.EQUAL
        assert rels["a"] is LevelRelation.EQUAL

    def test_converse_defect_sets(self, q8_converse_case):
        eta, mu = q8_converse_case["eta"], q8_converse_case["mu"]
        assert eta.level("c") == {"1", "-1"}
        assert mu.level("c") == {"1", "-1", "i", "-i"}

    def test_equal_pair_has_no_defect(self, d8_case):
        profile = level_profile(d8_case["mu"], d8_case["mu"])
        assert profile.unique_defect_level is None
        assert profile.defects() == ()

    def test_eta2_defect_at_b(self, d8_case):
        profile = level_profile(d8_case["eta2"], d8_case["mu"])
        assert profile.unique_defect_level == "b"
        assert dict(profile.witness_levels)["b"] is LevelRelation.PROPER_MAXIMAL_SUBGROUP
        assert d8_case["eta2"].level("b") == {"e", "r2"}

    def test_eta4_defect_is_empty_level(self, d8_case):
        profile = level_profile(d8_case["eta4"], d8_case["mu"])
        assert profile.unique_defect_level == "1"
        assert dict(profile.witness_levels)["1"] is LevelRelation.PROPER_SUBGROUP


class TestSufficientCheck:
    def test_holds_for_equal_tip_maximals(self, d8_case):
        for key in ["eta1", "eta2", "eta3"]:
            assert sufficient_maximal_check(d8_case[key], d8_case["mu"])

    def test_fails_for_lowered_tip(self, d8_case):
        assert not sufficient_maximal_check(d8_case["eta4"], d8_case["mu"])

    def test_fails_for_parent_itself(self, d8_case):
        assert not sufficient_maximal_check(d8_case["mu"], d8_case["mu"])

    def test_converse_pair_fails_over_all_levels(self, q8_converse_case):
        # over the attained values there is a single defect, but quantifying
        # over every level below the tip exposes a second one at b
        eta, mu = q8_converse_case["eta"], q8_converse_case["mu"]
        assert not sufficient_maximal_check(eta, mu)
        assert eta.level("b") == {"1", "-1"}
        assert mu.level("b") == {"1", "-1", "i", "-i"}


class TestTransport:
    def test_identity(self, q8_maximal_case):
        f = identity_hom(q8_maximal_case["group"])
        image, verdict = transport_maximal(f, q8_maximal_case["eta"], q8_maximal_case["mu"])
        assert image == q8_maximal_case["eta"]
        assert verdict.maximal

    def test_inner_automorphism_of_d8(self, d8_case):
        f = inner_automorphism(d8_case["group"], "r")
        image, verdict = transport_maximal(f, d8_case["eta1"], d8_case["mu"])
        assert verdict.maximal

    def test_q8_relabeling(self, q8_maximal_case):
        g = q8_maximal_case["group"]
        swap = {"1": "1", "-1": "-1", "i": "j", "-i": "-j", "j": "i", "-j": "-i",
                "k": "-k", "-k": "k"}
        f = validate_hom(g, g, swap)
        image, verdict = transport_maximal(f, q8_maximal_case["eta"], q8_maximal_case["mu"])
        assert verdict.maximal
        assert image.value("j") == "b"

    def test_preimage_direction(self, d8_case):
        f = inner_automorphism(d8_case["group"], "s")
        back, verdict = transport_maximal_preimage(f, d8_case["eta2"], d8_case["mu"])
        assert verdict.maximal

    def test_requires_isomorphism(self, d8_case):
        d8 = d8_case["group"]
        c2 = builtin_group("C2")
        f = validate_hom(d8, c2, {x: ("g" if x.startswith("s") else "e") for x in d8.elements})
        with pytest.raises(NotAnIsomorphismError):
            transport_maximal(f, d8_case["eta1"], d8_case["mu"])

    def test_requires_maximal_input(self, d8_case):
        f = identity_hom(d8_case["group"])
        with pytest.raises(NotMaximalError):
            transport_maximal(f, d8_case["phi"], d8_case["mu"])


class TestScrambledElementOrder:
    """Carrier listings need not follow the lattice order; the ranking used
    by the largest-first scans must be monotone regardless."""

    @staticmethod
    def _top_first_chain():
        from lsubgroups import validate_lattice

        return validate_lattice(
            ["1", "c", "b", "a", "0"],
            [("0", "a"), ("a", "b"), ("b", "c"), ("c", "1")],
        )

    def test_maximals_match_brute_force(self, d8):
        from lsubgroups import l_subset

        lat = self._top_first_chain()
        assert lat.top == "1" and lat.bottom == "0"
        mu = l_subset(d8, lat, {
            "e": "1", "r2": "c", "s": "b", "sr2": "b",
            "r": "a", "r3": "a", "sr": "a", "sr3": "a",
        })
        assert list(maximal_l_subgroups(mu)) == brute_force_maximals(mu)
        assert len(maximal_l_subgroups(mu)) == 4

    def test_witnesses_stay_containment_maximal(self, d8):
        from lsubgroups import LSubset, l_subset
        from lsubgroups.frattini import is_non_generator
        from lsubgroups import LPoint, contains

        lat = self._top_first_chain()
        mu = l_subset(d8, lat, {
            "e": "1", "r2": "c", "s": "b", "sr2": "b",
            "r": "a", "r3": "a", "sr": "a", "sr3": "a",
        })
        ok, witness = is_non_generator(LPoint("r2", "c"), mu)
        assert not ok
        expected = l_subset(d8, lat, {
            "e": "1", "r2": "b", "s": "b", "sr2": "b",
            "r": "a", "r3": "a", "sr": "a", "sr3": "a",
        })
        assert witness == expected


class TestRandomInstances:
    def test_agreement_on_generated_parents(self):
        for seed in range(6):
            inst = build_instance(InstanceSpec(seed=seed, lattice_kind="chain2-4"))
            for nu in enumerate_l_subgroups(inst.mu):
                assert (
                    is_maximal(nu, inst.mu, "definition").maximal
                    == is_maximal(nu, inst.mu, "lpoint").maximal
                )

    def test_maximals_match_brute_force_on_small_instances(self):
        for seed in range(4):
            inst = build_instance(
                InstanceSpec(seed=seed, lattice_kind="chain2-3", group_kind="V4|C6")
            )
            assert list(maximal_l_subgroups(inst.mu)) == brute_force_maximals(inst.mu)
