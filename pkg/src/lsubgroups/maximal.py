"""Maximal L-subgroups: enumeration, three detection strategies, level profiles.

A maximal L-subgroup of mu is a proper L-subgroup with nothing strictly
between it and mu.  Two independent tests are provided: the definitional
search through the full enumeration of L(mu), and the lattice-point test
(eta is maximal iff adjoining any missing point generates all of mu).  The
level-profile machinery classifies how each level subset of eta sits inside
the matching level of mu and pins down the single defect level that
maximality forces when the images are jointly supstar.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import InstanceTooLargeError, NotAnIsomorphismError, NotAnLSubgroupError, NotMaximalError
from .groups import GroupHom, maximal_subgroups_of
from .lsets import (
    LPoint,
    LSubset,
    _search_l_subgroup_values,
    adjoin_point,
    are_jointly_supstar,
    contains,
    generate,
    is_l_subgroup_of,
    is_proper_l_subgroup,
    pullback,
    pushforward,
)

DEFAULT_BUDGET = 10_000_000


class LevelRelation(enum.Enum):
    EQUAL = "equal"
    PROPER_SUBGROUP = "proper_subgroup"
    PROPER_MAXIMAL_SUBGROUP = "proper_maximal_subgroup"


class TipRelation(enum.Enum):
    EQUAL = "equal"
    PARENT_COVERS = "parent_covers"
    VIOLATION = "violation"


@dataclass(frozen=True)
class MaximalityVerdict:
    """Outcome of a maximality test, with a witness when the answer is no.

    ``witness_between`` is an L-subgroup strictly between the candidate and
    its parent (definitional route); ``witness_point`` is a lattice point of
    the parent, outside the candidate, whose adjunction fails to generate
    the parent (point route).
    """

    maximal: bool
    reason: str | None = None
    witness_between: LSubset | None = None
    witness_point: LPoint | None = None

    def __bool__(self) -> bool:
        return self.maximal


@dataclass(frozen=True)
class LevelProfile:
    """How each level of eta sits inside the matching level of mu.

    ``witness_levels`` lists (lattice element, relation) over the union of
    the two images, in lattice carrier order.  ``unique_defect_level`` is
    set exactly when one single level is not Equal.
    """

    witness_levels: tuple[tuple[str, LevelRelation], ...]
    unique_defect_level: str | None

    def defects(self) -> tuple[tuple[str, LevelRelation], ...]:
        return tuple((a, rel) for a, rel in self.witness_levels if rel is not LevelRelation.EQUAL)


# ------------------------------------------------------------- enumeration

def candidate_space_size(mu: LSubset) -> int:
    """Size of the raw search space: the product of the down-set sizes."""
    total = 1
    for x in mu.group.elements:
        total *= len(mu.lattice.down_set(mu.value(x)))
    return total


def _down_sizes(lat) -> list[int]:
    # |down-set| grows strictly along the order, no matter how the carrier
    # happens to be listed, which makes it a safe rank for largest-first scans
    leq = lat._leq
    n = len(lat.elements)
    return [sum(1 for j in range(n) if leq[j][i]) for i in range(n)]


def _rank_function(lat):
    sizes = _down_sizes(lat)

    def rank(s: LSubset) -> int:
        return sum(sizes[v] for v in s.value_indices())

    return rank


@lru_cache(maxsize=64)
def _enumeration(mu: LSubset, budget: int) -> tuple[LSubset, ...]:
    size = candidate_space_size(mu)
    if size > budget:
        raise InstanceTooLargeError(size, budget)
    found = [
        LSubset(mu.group, mu.lattice, vals)
        for vals in _search_l_subgroup_values(mu.group, mu.lattice, lower=None, upper=mu.value_indices())
    ]
    found.sort(key=lambda s: s.value_indices())
    return tuple(found)


def enumerate_l_subgroups(
    mu: LSubset, only_proper: bool = False, budget: int = DEFAULT_BUDGET
) -> tuple[LSubset, ...]:
    """All L-subgroups sitting below mu pointwise, in canonical order.

    Canonical order is lexicographic on the value tuple (group element
    order, lattice index order).  ``only_proper`` drops the constants and
    mu itself.  Raises InstanceTooLargeError when the raw candidate space
    exceeds the budget.
    """
    everything = _enumeration(mu, budget)
    if not only_proper:
        return everything
    return tuple(s for s in everything if not s.is_constant() and s != mu)


# ---------------------------------------------------------------- strategies

def _definition_verdict(eta: LSubset, mu: LSubset, budget: int) -> MaximalityVerdict:
    # scan largest-first: anything strictly above a witness ranks higher and
    # was already rejected, so the first hit is a containment-maximal witness
    rank = _rank_function(mu.lattice)
    for theta in sorted(_enumeration(mu, budget), key=rank, reverse=True):
        if theta == eta or theta == mu:
            continue
        if contains(theta, eta) and contains(mu, theta):
            return MaximalityVerdict(False, "strictly_between", witness_between=theta)
    return MaximalityVerdict(True)


def _missing_points(eta: LSubset, mu: LSubset) -> Iterable[LPoint]:
    lat = eta.lattice
    for x in mu.group.elements:
        cap = mu.value(x)
        have = eta.value(x)
        for a in lat.elements:
            if lat.leq(a, cap) and not lat.leq(a, have):
                yield LPoint(x, a)


def _lpoint_verdict(eta: LSubset, mu: LSubset) -> MaximalityVerdict:
    for point in _missing_points(eta, mu):
        if generate(adjoin_point(eta, point)) != mu:
            return MaximalityVerdict(False, "point_fails_to_generate", witness_point=point)
    return MaximalityVerdict(True)


def is_maximal(
    eta: LSubset, mu: LSubset, strategy: str = "both", budget: int = DEFAULT_BUDGET
) -> MaximalityVerdict:
    """Test whether eta is a maximal L-subgroup of mu.

    ``definition`` searches the enumeration of L(mu) for something strictly
    between; ``lpoint`` checks that every point of mu outside eta generates
    mu when adjoined; ``both`` runs the two and insists they agree.  A
    candidate that is not a proper L-subgroup of mu is never maximal and is
    reported with reason ``not_proper``.
    """
    if not is_proper_l_subgroup(eta, mu):
        return MaximalityVerdict(False, "not_proper")
    if strategy == "definition":
        return _definition_verdict(eta, mu, budget)
    if strategy == "lpoint":
        return _lpoint_verdict(eta, mu)
    if strategy != "both":
        raise ValueError(f"unknown strategy {strategy!r}")
    by_definition = _definition_verdict(eta, mu, budget)
    by_point = _lpoint_verdict(eta, mu)
    assert by_definition.maximal == by_point.maximal, (
        "definitional and point maximality tests disagree"
    )
    if by_definition.maximal:
        return by_definition
    return MaximalityVerdict(
        False,
        by_definition.reason,
        witness_between=by_definition.witness_between,
        witness_point=by_point.witness_point,
    )


def maximal_l_subgroups(mu: LSubset, budget: int = DEFAULT_BUDGET) -> tuple[LSubset, ...]:
    """All maximal L-subgroups of mu, in canonical order.

    Filters the full enumeration: eta qualifies when proper and nothing in
    L(mu) is strictly between eta and mu.  Candidates are visited from the
    largest down so that most rejections are witnessed by an already-found
    maximal; only the rare candidate below no maximal needs the full scan.
    """
    everything = _enumeration(mu, budget)
    proper = [s for s in everything if not s.is_constant() and s != mu]
    leq = mu.lattice._leq
    rank = _rank_function(mu.lattice)

    def strictly_below(lo: LSubset, hi: LSubset) -> bool:
        return lo != hi and all(leq[a][b] for a, b in zip(lo.value_indices(), hi.value_indices()))

    maximals: list[LSubset] = []
    by_rank = sorted(everything, key=rank, reverse=True)
    for eta in sorted(proper, key=rank, reverse=True):
        if any(strictly_below(eta, m) for m in maximals):
            continue
        blocked = False
        for theta in by_rank:
            if rank(theta) <= rank(eta):
                break
            if theta != mu and strictly_below(eta, theta) and strictly_below(theta, mu):
                blocked = True
                break
        if not blocked:
            maximals.append(eta)
    maximals.sort(key=lambda s: s.value_indices())
    return tuple(maximals)


# ------------------------------------------------------------ level structure

def tip_relation(eta: LSubset, mu: LSubset) -> TipRelation:
    """Relate the tips of a maximal eta and its parent.

    Either the tips agree or the parent's tip covers eta's; anything else
    would contradict maximality, so Violation is asserted unreachable.
    Raises NotMaximalError when eta is not maximal in mu.
    """
    if not is_maximal(eta, mu, strategy="lpoint"):
        raise NotMaximalError("tip relation is defined for maximal L-subgroups")
    lat = mu.lattice
    e = mu.group.identity
    if eta.value(e) == mu.value(e):
        return TipRelation.EQUAL
    if lat.is_cover(mu.value(e), eta.value(e)):
        return TipRelation.PARENT_COVERS
    assert False, "maximal L-subgroup with tip neither equal nor covered"


def level_profile(eta: LSubset, mu: LSubset) -> LevelProfile:
    """Classify eta's levels against mu's over the union of their images.

    When eta is in fact maximal and jointly supstar with mu, exactly one
    level may differ, and when the tips also agree that defect level must
    be a maximal subgroup classically; both facts are asserted here.
    """
    if not is_l_subgroup_of(eta, mu):
        raise NotAnLSubgroupError("level profiles require eta in L(mu)")
    group = mu.group
    lat = mu.lattice
    image = eta.image() | mu.image()
    rows: list[tuple[str, LevelRelation]] = []
    for a in lat.elements:
        if a not in image:
            continue
        lv_eta, lv_mu = eta.level(a), mu.level(a)
        if lv_eta == lv_mu:
            rows.append((a, LevelRelation.EQUAL))
        elif lv_eta and lv_eta in maximal_subgroups_of(group, lv_mu):
            rows.append((a, LevelRelation.PROPER_MAXIMAL_SUBGROUP))
        else:
            rows.append((a, LevelRelation.PROPER_SUBGROUP))
    defects = [a for a, rel in rows if rel is not LevelRelation.EQUAL]
    profile = LevelProfile(tuple(rows), defects[0] if len(defects) == 1 else None)

    if are_jointly_supstar(eta, mu) and is_proper_l_subgroup(eta, mu) and _lpoint_verdict(eta, mu).maximal:
        assert profile.unique_defect_level is not None, (
            "maximal jointly-supstar subgroup must have exactly one defect level"
        )
        if eta.value(group.identity) == mu.value(group.identity):
            defect_rel = dict(rows)[profile.unique_defect_level]
            assert defect_rel is LevelRelation.PROPER_MAXIMAL_SUBGROUP, (
                "with equal tips the defect level must be a maximal subgroup"
            )
    return profile


def sufficient_maximal_check(eta: LSubset, mu: LSubset) -> bool:
    """Level-pattern condition that forces maximality.

    True when the tips agree and, over every lattice element a below the
    tip of mu, exactly one level of eta is a maximal subgroup of the
    matching level of mu while all the others coincide.  A true answer
    implies maximality (asserted); a false answer implies nothing.
    """
    if not is_l_subgroup_of(eta, mu):
        return False
    group = mu.group
    lat = mu.lattice
    e = group.identity
    if eta.value(e) != mu.value(e):
        return False
    defects = 0
    for a in lat.down_set(mu.value(e)):
        lv_eta, lv_mu = eta.level(a), mu.level(a)
        if lv_eta == lv_mu:
            continue
        if lv_eta and lv_eta in maximal_subgroups_of(group, lv_mu):
            defects += 1
            if defects > 1:
                return False
        else:
            return False
    result = defects == 1
    if result:
        assert _lpoint_verdict(eta, mu).maximal, (
            "the sufficient level pattern held but the subgroup is not maximal"
        )
    return result


# ---------------------------------------------------------------- transport

def transport_maximal(
    f: GroupHom, eta: LSubset, mu: LSubset, budget: int = DEFAULT_BUDGET
) -> tuple[LSubset, MaximalityVerdict]:
    """Push a maximal L-subgroup through an isomorphism.

    Returns f(eta) together with its (asserted positive) maximality verdict
    inside f(mu).
    """
    if not f.bijective:
        raise NotAnIsomorphismError("transport requires a bijective homomorphism")
    if not is_maximal(eta, mu, strategy="lpoint"):
        raise NotMaximalError("transport requires a maximal L-subgroup")
    image_eta = pushforward(f, eta)
    image_mu = pushforward(f, mu)
    verdict = is_maximal(image_eta, image_mu, strategy="both", budget=budget)
    assert verdict.maximal, "isomorphic image of a maximal L-subgroup must be maximal"
    return image_eta, verdict


def transport_maximal_preimage(
    f: GroupHom, theta: LSubset, nu: LSubset, budget: int = DEFAULT_BUDGET
) -> tuple[LSubset, MaximalityVerdict]:
    """Pull a maximal L-subgroup back through an isomorphism."""
    if not f.bijective:
        raise NotAnIsomorphismError("transport requires a bijective homomorphism")
    if not is_maximal(theta, nu, strategy="lpoint"):
        raise NotMaximalError("transport requires a maximal L-subgroup")
    back_theta = pullback(f, theta)
    back_nu = pullback(f, nu)
    verdict = is_maximal(back_theta, back_nu, strategy="both", budget=budget)
    assert verdict.maximal, "isomorphic preimage of a maximal L-subgroup must be maximal"
    return back_theta, verdict
