"""Randomized instances and the executable-theorem suite.

Instances are generated from a seed: a lattice (chain, product of chains,
or divisor lattice), a builtin group, a parent L-subgroup mu built from a
random subgroup chain with an antitone value assignment (meets of such maps
keep it an L-subgroup by construction), and a member eta of L(mu).  Every
theorem of the theory is expressed as a property over such instances; known
non-theorems are counterexample searches.  Same seed, same report.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import SearchExhaustedError
from .frattini import (
    FrattiniReport,
    frattini,
    maximal_avoiding,
    non_generator_points,
    nongenerators_conjugation_closed,
)
from .groups import (
    FiniteGroup,
    GroupHom,
    all_subgroups,
    builtin_group,
    frattini_classical,
    identity_hom,
    inner_automorphism,
    maximal_subgroups_of,
    subgroup_closure,
    validate_hom,
)
from .lattice import FiniteLattice, chain_lattice, validate_lattice
from .lsets import (
    LPoint,
    LSubset,
    adjoin_point,
    are_jointly_supstar,
    characteristic,
    constant,
    contains,
    generate,
    generate_oracle,
    has_sup_property,
    intersection_of,
    is_l_subgroup,
    is_l_subgroup_of,
    is_normal_in,
    is_normal_in_group,
    is_proper_l_subgroup,
    l_subset,
    pullback,
    pushforward,
    set_product,
    union_of,
)
from .maximal import (
    LevelRelation,
    candidate_space_size,
    enumerate_l_subgroups,
    is_maximal,
    level_profile,
    maximal_l_subgroups,
    sufficient_maximal_check,
    tip_relation,
    transport_maximal,
    TipRelation,
)

_CHAIN_MIDS = "abcdefghijklmn"


@dataclass(frozen=True)
class InstanceSpec:
    """Deterministic recipe for a random instance.

    ``lattice_kind`` accepts ``chain<n>``, ``chain<a>-<b>`` (length drawn
    from the range), ``product<m>x<n>``, ``divisors<n>``, or several of
    these joined with ``|`` to be drawn from.  ``group_kind`` is a builtin
    group name, or names joined with ``|``.  ``subgroup_density`` in [0, 1]
    controls how many links the generating subgroup chains keep; at zero
    both members of the pair degenerate to constants.
    """

    seed: int
    lattice_kind: str = "chain2-6"
    group_kind: str = "Q8|D8|C6|V4"
    subgroup_density: float = 0.6


def make_lattice(kind: str) -> FiniteLattice:
    """Build the named lattice kind; see InstanceSpec for the grammar."""
    if kind.startswith("chain"):
        n = int(kind[5:])
        if n == 1:
            return chain_lattice(["0"])
        names = ["0", *(_CHAIN_MIDS[: n - 2]), "1"]
        return chain_lattice(names)
    if kind.startswith("product"):
        m, n = (int(part) for part in kind[7:].split("x"))
        names = [f"({i},{j})" for i in range(m) for j in range(n)]
        pairs = []
        for i in range(m):
            for j in range(n):
                if i + 1 < m:
                    pairs.append((f"({i},{j})", f"({i + 1},{j})"))
                if j + 1 < n:
                    pairs.append((f"({i},{j})", f"({i},{j + 1})"))
        return validate_lattice(names, pairs)
    if kind.startswith("divisors"):
        n = int(kind[8:])
        divs = [d for d in range(1, n + 1) if n % d == 0]
        names = [str(d) for d in divs]
        pairs = [(str(d), str(e)) for d in divs for e in divs if d != e and e % d == 0]
        return validate_lattice(names, pairs)
    raise ValueError(f"unknown lattice kind {kind!r}")


def _resolve(rng: random.Random, kinds: str) -> str:
    kind = rng.choice(kinds.split("|"))
    if kind.startswith("chain") and "-" in kind:
        lo, hi = (int(part) for part in kind[5:].split("-"))
        return f"chain{rng.randint(lo, hi)}"
    return kind


def _chain_valued_l_subgroup(
    rng: random.Random, group: FiniteGroup, lat: FiniteLattice, density: float
) -> LSubset:
    # climb a random subgroup chain up to the whole group, thin it by the
    # density knob, then label antitonely with a descending value sequence
    subs = all_subgroups(group)
    full = frozenset(group.elements)
    chain = [frozenset([group.identity])]
    while chain[-1] != full:
        ups = [s for s in subs if chain[-1] < s]
        chain.append(rng.choice(ups))
    kept = [h for h in chain[:-1] if rng.random() < density] + [full]

    values = []
    current = lat.top if rng.random() < 0.7 else rng.choice(lat.elements)
    for _ in kept:
        values.append(current)
        if rng.random() < 0.85:
            # mostly step down a single cover so the labels spread out;
            # occasionally drop further to keep coarse instances in the mix
            below = [a for a in lat.elements if lat.is_cover(current, a)]
            if rng.random() < 0.2:
                below = [a for a in lat.down_set(current) if a != current]
            if below:
                current = rng.choice(below)

    mapping = {}
    for x in group.elements:
        first = next(i for i, h in enumerate(kept) if x in h)
        mapping[x] = values[first]
    return l_subset(group, lat, mapping)


def random_l_subset_below(rng: random.Random, mu: LSubset) -> LSubset:
    """Uniform raw L-subset under mu: independent draws from each down-set."""
    lat = mu.lattice
    mapping = {
        x: rng.choice(lat.down_set(mu.value(x))) for x in mu.group.elements
    }
    return l_subset(mu.group, lat, mapping, parent=mu)


def random_l_subgroup(
    spec: InstanceSpec, trial: int = 0
) -> tuple[LSubset, LSubset]:
    """The (mu, eta) pair of the instance derived from spec and trial."""
    inst = build_instance(spec, trial)
    return inst.mu, inst.eta


_SPACE_CAP = 60_000


class Instance:
    """One concrete generated instance with cached derived data."""

    def __init__(self, spec: InstanceSpec, trial: int, lattice_kind: str, group_name: str):
        self.spec = spec
        self.trial = trial
        self.lattice_kind = lattice_kind
        self.group_name = group_name
        self.lattice = make_lattice(lattice_kind)
        self.group = builtin_group(group_name)
        rng = random.Random(f"{spec.seed}:{trial}:{lattice_kind}:{group_name}")
        density = spec.subgroup_density

        mu = _chain_valued_l_subgroup(rng, self.group, self.lattice, density)
        if rng.random() < 0.5:
            mu = intersection_of([mu, _chain_valued_l_subgroup(rng, self.group, self.lattice, density)])
        retries = 0
        while candidate_space_size(mu) > _SPACE_CAP and retries < 12:
            mu = intersection_of([mu, _chain_valued_l_subgroup(rng, self.group, self.lattice, density)])
            retries += 1
        self.mu = mu
        self.eta = intersection_of(
            [mu, _chain_valued_l_subgroup(rng, self.group, self.lattice, density)]
        )
        self.raws = [random_l_subset_below(rng, mu) for _ in range(3)]
        self.points = []
        for _ in range(3):
            x = rng.choice(self.group.elements)
            a = rng.choice(self.lattice.down_set(mu.value(x)))
            self.points.append(LPoint(x, a))
        self._enumeration: tuple[LSubset, ...] | None = None
        self._maximals: tuple[LSubset, ...] | None = None
        self._report: FrattiniReport | None = None
        self._nongen_points: frozenset[LPoint] | None = None

    @classmethod
    def pinned(cls, mu: LSubset, eta: LSubset, group_name: str, label: str = "pinned",
               seed: int = 0) -> "Instance":
        """Wrap a concrete (mu, eta) pair so the property suite can run on it.

        The auxiliary samples (raw subsets, points) still derive from the
        seed, so a pinned instance is as reproducible as a generated one.
        """
        inst = object.__new__(cls)
        inst.spec = InstanceSpec(seed=seed)
        inst.trial = -1
        inst.lattice_kind = label
        inst.group_name = group_name
        inst.lattice = mu.lattice
        inst.group = mu.group
        inst.mu = mu
        inst.eta = eta
        rng = random.Random(f"pinned:{label}:{seed}")
        inst.raws = [random_l_subset_below(rng, mu) for _ in range(3)]
        inst.points = []
        for _ in range(3):
            x = rng.choice(inst.group.elements)
            a = rng.choice(inst.lattice.down_set(mu.value(x)))
            inst.points.append(LPoint(x, a))
        inst._enumeration = None
        inst._maximals = None
        inst._report = None
        inst._nongen_points = None
        return inst

    # cached heavyweight computations -------------------------------------

    def enumeration(self) -> tuple[LSubset, ...]:
        if self._enumeration is None:
            self._enumeration = enumerate_l_subgroups(self.mu)
        return self._enumeration

    def maximals(self) -> tuple[LSubset, ...]:
        if self._maximals is None:
            self._maximals = maximal_l_subgroups(self.mu)
        return self._maximals

    def report(self) -> FrattiniReport:
        if self._report is None:
            self._report = frattini(self.mu)
        return self._report

    def nongen_points(self) -> frozenset[LPoint]:
        if self._nongen_points is None:
            self._nongen_points = non_generator_points(self.mu)
        return self._nongen_points

    def homs(self) -> list[GroupHom]:
        g = self.group
        rng = random.Random(f"{self.spec.seed}:{self.trial}:homs")
        pool = [identity_hom(g), inner_automorphism(g, rng.choice(g.elements))]
        trivial_target = builtin_group("C1")
        pool.append(validate_hom(g, trivial_target, {x: "e" for x in g.elements}))
        named = _named_quotient(self.group_name, g)
        if named is not None:
            pool.append(named)
        return pool

    def isos(self) -> list[GroupHom]:
        g = self.group
        rng = random.Random(f"{self.spec.seed}:{self.trial}:isos")
        pool = [inner_automorphism(g, rng.choice(g.elements))]
        outer = _named_outer_automorphism(self.group_name, g)
        if outer is not None:
            pool.append(outer)
        return pool

    def describe(self) -> dict:
        return {
            "seed": self.spec.seed,
            "trial": self.trial,
            "lattice": self.lattice_kind,
            "group": self.group_name,
            "mu": self.mu.values(),
            "eta": self.eta.values(),
        }


def _named_quotient(name: str, g: FiniteGroup) -> GroupHom | None:
    if name == "D8":
        c2 = builtin_group("C2")
        return validate_hom(g, c2, {x: ("g" if x.startswith("s") else "e") for x in g.elements})
    if name == "Q8":
        v4 = builtin_group("V4")
        image = {"1": "e", "-1": "e", "i": "a", "-i": "a", "j": "b", "-j": "b", "k": "c", "-k": "c"}
        return validate_hom(g, v4, image)
    if name == "V4":
        c2 = builtin_group("C2")
        return validate_hom(g, c2, {"e": "e", "a": "g", "b": "e", "c": "g"})
    if name.startswith("C") and name[1:].isdigit():
        n = int(name[1:])
        for p in (2, 3):
            if n % p == 0 and n > p:
                target = builtin_group(f"C{n // p}")
                mapping = {x: target.elements[i % (n // p)] for i, x in enumerate(g.elements)}
                return validate_hom(g, target, mapping)
    return None


def _named_outer_automorphism(name: str, g: FiniteGroup) -> GroupHom | None:
    if name == "Q8":
        swap = {"1": "1", "-1": "-1", "i": "j", "-i": "-j", "j": "i", "-j": "-i", "k": "-k", "-k": "k"}
        return validate_hom(g, g, swap)
    if name == "D8":
        # r -> r, s -> sr extends to an automorphism
        words = {"e": "e", "r": "r", "r2": "r2", "r3": "r3", "s": "sr", "sr": "sr2", "sr2": "sr3", "sr3": "s"}
        return validate_hom(g, g, words)
    if name == "V4":
        return validate_hom(g, g, {"e": "e", "a": "b", "b": "a", "c": "c"})
    return None


def build_instance(
    spec: InstanceSpec,
    trial: int = 0,
    override_lattice: str | None = None,
    override_group: str | None = None,
) -> Instance:
    rng = random.Random(f"{spec.seed}:{trial}:kinds")
    lattice_kind = override_lattice or _resolve(rng, spec.lattice_kind)
    group_name = override_group or _resolve(rng, spec.group_kind)
    return Instance(spec, trial, lattice_kind, group_name)


# ---------------------------------------------------------------- properties

class PropertyFailure(Exception):
    def __init__(self, detail: dict):
        super().__init__(str(detail))
        self.detail = detail


SKIPPED = "skipped"


def _fail(**detail) -> None:
    raise PropertyFailure(detail)


def prop_generator_soundness(inst: Instance):
    if not is_l_subgroup_of(inst.eta, inst.mu):
        _fail(reason="generated pair fails the L(mu) membership test")
    if not is_l_subgroup(inst.mu):
        _fail(reason="generated parent is not an L-subgroup")


def prop_level_sets_of_intersections(inst: Instance):
    family = [inst.mu, inst.eta, *inst.raws[:2]]
    meet_all = intersection_of(family)
    for a in inst.lattice.elements:
        expected = frozenset(inst.group.elements)
        for member in family:
            expected &= member.level(a)
        if meet_all.level(a) != expected:
            _fail(level=a, reason="level of intersection differs from intersection of levels")


def prop_containment_is_levelwise(inst: Instance):
    for a in inst.lattice.elements:
        if not inst.eta.level(a) <= inst.mu.level(a):
            _fail(level=a, reason="eta level escapes mu level")


def prop_subgroup_tests_agree(inst: Instance):
    for probe in [inst.mu, inst.eta, *inst.raws]:
        pointwise = is_l_subgroup(probe, "pointwise")
        levelwise = is_l_subgroup(probe, "levelwise")
        if pointwise != levelwise:
            _fail(probe=probe.values(), reason="pointwise and levelwise verdicts differ")


def prop_generation_closure_laws(inst: Instance):
    raw = inst.raws[0]
    gen = generate(raw)
    if not contains(gen, raw):
        _fail(reason="generation is not extensive")
    if generate(gen) != gen:
        _fail(reason="generation is not idempotent")
    bigger = union_of([raw, inst.raws[1]])
    if not contains(generate(bigger), gen):
        _fail(reason="generation is not monotone")
    if gen.tip() != raw.tip() or gen.value(inst.group.identity) != raw.tip():
        _fail(reason="generation must preserve the tip and attain it at the identity")


def prop_generation_matches_exhaustive_meet(inst: Instance):
    if len(inst.group) > 8 or len(inst.lattice) > 6:
        return SKIPPED
    raw = inst.raws[0]
    if generate(raw) != generate_oracle(raw):
        _fail(raw=raw.values(), reason="formula and exhaustive meet disagree")


def prop_sup_property_levelwise_generation(inst: Instance):
    raw = inst.raws[0]
    if not has_sup_property(raw):
        return SKIPPED
    gen = generate(raw)
    for b in inst.lattice.down_set(raw.tip()):
        if subgroup_closure(inst.group, raw.level(b)) != gen.level(b):
            _fail(level=b, reason="level of generated subgroup differs from generated level")


def prop_generation_commutes_with_image(inst: Instance):
    raw = inst.raws[0]
    for f in inst.homs():
        if generate(pushforward(f, raw)) != pushforward(f, generate(raw)):
            _fail(hom=f.as_document(), reason="generation does not commute with the image")


def prop_generation_commutes_with_preimage(inst: Instance):
    raw = inst.raws[0]
    for f in inst.homs():
        theta = pushforward(f, raw)
        if generate(pullback(f, theta)) != pullback(f, generate(theta)):
            _fail(hom=f.as_document(), reason="generation does not commute with the preimage")


def prop_image_preimage_laws(inst: Instance):
    raw1, raw2 = inst.raws[0], inst.raws[1]
    for f in inst.homs():
        lhs = pushforward(f, union_of([raw1, raw2]))
        rhs = union_of([pushforward(f, raw1), pushforward(f, raw2)])
        if lhs != rhs:
            _fail(law="image of union", hom=f.as_document())
        lhs = pushforward(f, intersection_of([raw1, raw2]))
        rhs = intersection_of([pushforward(f, raw1), pushforward(f, raw2)])
        if not contains(rhs, lhs):
            _fail(law="image of intersection", hom=f.as_document())
        back = pullback(f, pushforward(f, raw1))
        if not contains(back, raw1):
            _fail(law="preimage of image grows", hom=f.as_document())
        if f.injective and back != raw1:
            _fail(law="preimage of image equals for injective", hom=f.as_document())
        nu = union_of([pushforward(f, raw2), constant(f.target, inst.lattice, inst.points[0].height)])
        forth = pushforward(f, pullback(f, nu))
        if not contains(nu, forth):
            _fail(law="image of preimage shrinks", hom=f.as_document())
        if f.surjective and forth != nu:
            _fail(law="image of preimage equals for surjective", hom=f.as_document())
        if contains(nu, pushforward(f, raw1)) != contains(pullback(f, nu), raw1):
            _fail(law="adjunction", hom=f.as_document())
        if f.injective and (
            contains(raw1, pullback(f, nu)) != contains(pushforward(f, raw1), nu)
        ):
            _fail(law="injective adjunction", hom=f.as_document())


def prop_set_product_associative(inst: Instance):
    r1, r2, r3 = inst.raws
    if set_product(set_product(r1, r2), r3) != set_product(r1, set_product(r2, r3)):
        _fail(reason="set product is not associative")


def prop_set_product_of_points(inst: Instance):
    lat, group = inst.lattice, inst.group
    p, q = inst.points[0], inst.points[1]
    lhs = set_product(p.as_l_subset(group, lat), q.as_l_subset(group, lat))
    rhs = LPoint(group.op(p.point, q.point), lat.meet(p.height, q.height)).as_l_subset(group, lat)
    if lhs != rhs:
        _fail(points=(p, q), reason="product of points is not the point of the product")


def prop_normality_matches_top_parent(inst: Instance):
    top = constant(inst.group, inst.lattice, inst.lattice.top)
    if is_normal_in_group(inst.mu) != is_normal_in(inst.mu, top):
        _fail(reason="normality in the group differs from normality below the constant top")


def prop_maximality_strategies_agree(inst: Instance):
    pool = inst.enumeration()
    if len(pool) > 120:
        rng = random.Random(f"{inst.spec.seed}:{inst.trial}:agree")
        pool = tuple(rng.sample(pool, 60)) + tuple(inst.maximals()) + (inst.eta,)
    for nu in pool:
        by_def = is_maximal(nu, inst.mu, "definition")
        by_pt = is_maximal(nu, inst.mu, "lpoint")
        if by_def.maximal != by_pt.maximal:
            _fail(candidate=nu.values(), reason="strategies disagree")


def prop_maximal_level_profiles(inst: Instance):
    for m in inst.maximals():
        profile = level_profile(m, inst.mu)
        if not are_jointly_supstar(m, inst.mu):
            continue
        if profile.unique_defect_level is None:
            _fail(maximal=m.values(), reason="no unique defect level")
        if m.value(inst.group.identity) == inst.mu.value(inst.group.identity):
            rels = dict(profile.witness_levels)
            if rels[profile.unique_defect_level] is not LevelRelation.PROPER_MAXIMAL_SUBGROUP:
                _fail(maximal=m.values(), reason="equal-tip defect level not classically maximal")


def prop_sufficient_condition_sound(inst: Instance):
    pool = inst.enumeration()
    if len(pool) > 120:
        rng = random.Random(f"{inst.spec.seed}:{inst.trial}:suff")
        pool = tuple(rng.sample(pool, 60)) + tuple(inst.maximals())
    for nu in pool:
        if sufficient_maximal_check(nu, inst.mu):
            if not is_maximal(nu, inst.mu, "definition").maximal:
                _fail(candidate=nu.values(), reason="pattern held but candidate is not maximal")


def prop_maximal_tips(inst: Instance):
    for m in inst.maximals():
        if tip_relation(m, inst.mu) is TipRelation.VIOLATION:
            _fail(maximal=m.values(), reason="tip relation violated")


def prop_transport_preserves_maximality(inst: Instance):
    maximals = inst.maximals()
    if not maximals:
        return SKIPPED
    m = maximals[0]
    for f in inst.isos()[:1]:
        _, verdict = transport_maximal(f, m, inst.mu)
        if not verdict.maximal:
            _fail(reason="transported subgroup lost maximality")


def prop_nongenerators_form_l_subgroup(inst: Instance):
    if not is_l_subgroup_of(inst.report().nongen, inst.mu):
        _fail(reason="non-generator subgroup is not in L(mu)")


def prop_nongenerators_inside_frattini(inst: Instance):
    report = inst.report()
    if not contains(report.phi, report.nongen):
        _fail(reason="non-generator subgroup escapes phi")
    # equality over chains is only a theorem away from constant-obstructed
    # instances; on those the non-generator subgroup can sit strictly lower
    if (
        inst.lattice.is_upper_well_ordered()
        and not report.constant_obstructed
        and not report.equality_holds
    ):
        _fail(reason="chain lattice, unobstructed, but the two constructions differ")


def prop_frattini_below_each_maximal(inst: Instance):
    report = inst.report()
    for m in inst.maximals():
        if not contains(m, report.phi):
            _fail(maximal=m.values(), reason="phi escapes a maximal subgroup")


def prop_fallback_iff_no_maximals(inst: Instance):
    report = inst.report()
    if report.used_fallback != (len(inst.maximals()) == 0):
        _fail(reason="fallback flag disagrees with the maximal count")
    if report.used_fallback and report.phi != inst.mu:
        _fail(reason="fallback must return mu itself")


def prop_frattini_level_inclusion(inst: Instance):
    if not inst.lattice.is_upper_well_ordered():
        return SKIPPED
    report = inst.report()
    if report.phi.value(inst.group.identity) != inst.mu.value(inst.group.identity):
        return SKIPPED
    for b in sorted(inst.mu.image()):
        classical = frattini_classical(inst.group, inst.mu.level(b))
        if not classical <= report.phi.level(b):
            _fail(level=b, reason="classical Frattini of the level escapes the level of phi")


def prop_frattini_normal_in_parent(inst: Instance):
    if not inst.lattice.is_upper_well_ordered() or not is_normal_in_group(inst.mu):
        return SKIPPED
    if not is_normal_in(inst.report().phi, inst.mu):
        _fail(reason="phi is not normal in mu")


def prop_nongenerator_conjugation_closure(inst: Instance):
    if not is_normal_in_group(inst.mu):
        return SKIPPED
    ok, counter = nongenerators_conjugation_closed(inst.mu, _points=inst.nongen_points())
    if not ok:
        _fail(reason="conjugation moved a non-generator outside the set", counter=str(counter))


def prop_frattini_image_inclusion(inst: Instance):
    report = inst.report()
    for f in inst.isos()[:1]:
        image_mu = pushforward(f, inst.mu)
        image_maximals = maximal_l_subgroups(image_mu)
        phi_target = intersection_of(image_maximals) if image_maximals else image_mu
        if not contains(phi_target, pushforward(f, report.phi)):
            _fail(reason="image of phi escapes phi of the image")


def prop_maximal_avoiding_exists(inst: Instance):
    if not inst.lattice.is_upper_well_ordered():
        return SKIPPED
    rng = random.Random(f"{inst.spec.seed}:{inst.trial}:zorn")
    pool = inst.enumeration()
    theta = pool[rng.randrange(len(pool))]
    missing = [
        LPoint(x, a)
        for x in inst.group.elements
        for a in inst.lattice.down_set(inst.mu.value(x))
        if not inst.lattice.leq(a, theta.value(x))
    ]
    if not missing:
        return SKIPPED
    point = missing[rng.randrange(len(missing))]
    tops = maximal_avoiding(inst.mu, theta, point)
    if not tops:
        _fail(reason="no maximal member avoiding the point")
    for nu in tops:
        if not contains(nu, theta) or inst.lattice.leq(point.height, nu.value(point.point)):
            _fail(reason="avoiding witness violates its constraints")


def prop_crisp_case_collapses(inst: Instance):
    if len(inst.lattice) != 2:
        return SKIPPED
    group, lat = inst.group, inst.lattice
    raw = inst.raws[0]
    support = raw.level(lat.top)
    if support:
        expected = characteristic(group, lat, subgroup_closure(group, support))
        if generate(raw) != expected:
            _fail(reason="crisp generation differs from classical closure")
    top_level = inst.mu.level(lat.top)
    if top_level:
        expected_maximals = tuple(
            sorted(
                (characteristic(group, lat, m) for m in maximal_subgroups_of(group, top_level)),
                key=lambda s: s.value_indices(),
            )
        )
        if inst.maximals() != expected_maximals:
            _fail(reason="crisp maximal subgroups differ from classical ones")
        expected_phi = characteristic(group, lat, frattini_classical(group, top_level))
        if inst.report().phi != expected_phi:
            _fail(reason="crisp phi differs from the classical Frattini subgroup")


PROPERTIES: dict[str, Callable[[Instance], object]] = {
    "generator_soundness": prop_generator_soundness,
    "level_sets_of_intersections": prop_level_sets_of_intersections,
    "containment_is_levelwise": prop_containment_is_levelwise,
    "subgroup_tests_agree": prop_subgroup_tests_agree,
    "generation_closure_laws": prop_generation_closure_laws,
    "generation_matches_exhaustive_meet": prop_generation_matches_exhaustive_meet,
    "sup_property_levelwise_generation": prop_sup_property_levelwise_generation,
    "generation_commutes_with_image": prop_generation_commutes_with_image,
    "generation_commutes_with_preimage": prop_generation_commutes_with_preimage,
    "image_preimage_laws": prop_image_preimage_laws,
    "set_product_associative": prop_set_product_associative,
    "set_product_of_points": prop_set_product_of_points,
    "normality_matches_top_parent": prop_normality_matches_top_parent,
    "maximality_strategies_agree": prop_maximality_strategies_agree,
    "maximal_level_profiles": prop_maximal_level_profiles,
    "sufficient_condition_sound": prop_sufficient_condition_sound,
    "maximal_tips": prop_maximal_tips,
    "transport_preserves_maximality": prop_transport_preserves_maximality,
    "nongenerators_form_l_subgroup": prop_nongenerators_form_l_subgroup,
    "nongenerators_inside_frattini": prop_nongenerators_inside_frattini,
    "frattini_below_each_maximal": prop_frattini_below_each_maximal,
    "fallback_iff_no_maximals": prop_fallback_iff_no_maximals,
    "frattini_level_inclusion": prop_frattini_level_inclusion,
    "frattini_normal_in_parent": prop_frattini_normal_in_parent,
    "nongenerator_conjugation_closure": prop_nongenerator_conjugation_closure,
    "frattini_image_inclusion": prop_frattini_image_inclusion,
    "maximal_avoiding_exists": prop_maximal_avoiding_exists,
    "crisp_case_collapses": prop_crisp_case_collapses,
}


# ------------------------------------------------------------------ reports

@dataclass
class PropertyStats:
    trials: int = 0
    skipped: int = 0
    failures: int = 0
    first_counterexample: dict | None = None

    def as_document(self) -> dict:
        return {
            "trials": self.trials,
            "skipped": self.skipped,
            "failures": self.failures,
            "first_counterexample": self.first_counterexample,
        }


@dataclass
class SuiteReport:
    seed: int
    trials: int
    properties: dict[str, PropertyStats] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(stats.failures == 0 for stats in self.properties.values())

    def as_document(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "passed": self.passed,
            "properties": {name: stats.as_document() for name, stats in self.properties.items()},
        }


_SHRINK_GROUPS = ["C2", "C3", "V4", "C6", "Q8", "D8"]


def _still_fails(prop: Callable, candidate: Instance) -> bool:
    try:
        prop(candidate)
    except PropertyFailure:
        return True
    except Exception:
        return False
    return False


def _shrink(spec: InstanceSpec, trial: int, prop: Callable, first: Instance) -> dict:
    """Smallest failing variant: lattice size first, then group order.

    Reruns the property on deterministically regenerated instances and
    keeps the smallest variant that still fails.
    """
    best = first
    for n in range(2, len(best.lattice)):
        candidate = build_instance(
            spec, trial, override_lattice=f"chain{n}", override_group=best.group_name
        )
        if _still_fails(prop, candidate):
            best = candidate
            break
    for g in _SHRINK_GROUPS:
        if len(builtin_group(g)) >= len(best.group):
            continue
        candidate = build_instance(
            spec, trial, override_lattice=best.lattice_kind, override_group=g
        )
        if _still_fails(prop, candidate):
            best = candidate
            break
    return best.describe()


def run_suite(spec: InstanceSpec, trials: int) -> SuiteReport:
    """Run every property over ``trials`` generated instances.

    The report is a pure function of (spec, trials): instances, samples and
    sub-searches all derive their randomness from the spec seed and the
    trial index.  The one-off counterexample search appears as its own
    entry with a single trial.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    report = SuiteReport(seed=spec.seed, trials=trials)
    stats = {name: PropertyStats() for name in PROPERTIES}
    for trial in range(trials):
        inst = build_instance(spec, trial)
        for name, prop in PROPERTIES.items():
            entry = stats[name]
            entry.trials += 1
            try:
                outcome = prop(inst)
            except PropertyFailure as failure:
                entry.failures += 1
                if entry.first_counterexample is None:
                    shrunk = _shrink(spec, trial, prop, inst)
                    entry.first_counterexample = {
                        "instance": shrunk,
                        "detail": {k: str(v) for k, v in failure.detail.items()},
                    }
            except Exception as unexpected:  # an erroring property is a failing property
                entry.failures += 1
                if entry.first_counterexample is None:
                    entry.first_counterexample = {
                        "instance": inst.describe(),
                        "detail": {"error": f"{type(unexpected).__name__}: {unexpected}"},
                    }
            else:
                if outcome == SKIPPED:
                    entry.skipped += 1

    converse = PropertyStats(trials=1)
    try:
        search_converse_counterexample()
    except SearchExhaustedError as exc:
        converse.failures = 1
        converse.first_counterexample = {"detail": {"error": str(exc)}}
    stats["converse_level_pattern_insufficient"] = converse

    report.properties = stats
    return report


# --------------------------------------------- converse counterexample search

@dataclass(frozen=True)
class ConverseCounterexample:
    mu: LSubset
    eta: LSubset
    witness: LSubset
    defect_level: str

    def describe(self) -> dict:
        return {
            "mu": self.mu.values(),
            "eta": self.eta.values(),
            "witness": self.witness.values(),
            "defect_level": self.defect_level,
        }


def reference_nonmaximal_pair() -> tuple[LSubset, LSubset]:
    """The seeded Q8 pair over the five-element chain.

    eta keeps the single-defect level pattern against mu over the attained
    values, yet fails maximality; it is always swept first by the search.
    """
    lat = chain_lattice(["0", "a", "b", "c", "1"])
    group = builtin_group("Q8")
    centre = {"1", "-1"}
    four = {"1", "-1", "i", "-i"}
    mu = l_subset(
        group,
        lat,
        {x: "1" if x in centre else ("c" if x in four else "a") for x in group.elements},
    )
    eta = l_subset(group, lat, {x: "1" if x in centre else "a" for x in group.elements})
    return mu, eta


def _single_defect_pattern_over_images(eta: LSubset, mu: LSubset) -> bool:
    group = mu.group
    if eta.value(group.identity) != mu.value(group.identity):
        return False
    if not are_jointly_supstar(eta, mu):
        return False
    defects = 0
    for a in sorted(eta.image() | mu.image()):
        lv_eta, lv_mu = eta.level(a), mu.level(a)
        if lv_eta == lv_mu:
            continue
        if a in mu.image() and lv_eta and lv_eta in maximal_subgroups_of(group, lv_mu):
            defects += 1
            if defects > 1:
                return False
        else:
            return False
    return defects == 1


def search_converse_counterexample(
    candidates: Iterable[tuple[LSubset, LSubset]] = (), seeds: Iterable[int] = range(8)
) -> ConverseCounterexample:
    """Find a pair whose level pattern matches yet maximality fails.

    The reference Q8 pair is seeded into the search, so the search always
    succeeds; SearchExhaustedError is treated as a failure of the suite.
    """
    pool: list[tuple[LSubset, LSubset]] = [reference_nonmaximal_pair()]
    pool.extend(candidates)
    for seed in seeds:
        mu, eta = random_l_subgroup(InstanceSpec(seed=seed, lattice_kind="chain4-5"))
        pool.append((mu, eta))
    for mu, eta in pool:
        if not is_proper_l_subgroup(eta, mu):
            continue
        if not _single_defect_pattern_over_images(eta, mu):
            continue
        verdict = is_maximal(eta, mu, strategy="both")
        if not verdict.maximal and verdict.witness_between is not None:
            profile = level_profile(eta, mu)
            assert profile.unique_defect_level is not None
            return ConverseCounterexample(
                mu, eta, verdict.witness_between, profile.unique_defect_level
            )
    raise SearchExhaustedError("no level-pattern counterexample found in the pool")
