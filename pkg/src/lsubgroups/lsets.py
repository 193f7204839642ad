"""Lattice-valued subsets of a finite group.

An LSubset is a total map from group elements into a lattice.  The module
provides the membership algebra (union, intersection, set product, lattice
points), level subsets, the subgroup and normality predicates in both their
pointwise and level-set forms, the sup-property tests, generation of the
smallest containing L-subgroup, and transport along group homomorphisms.

Predicates that the theory characterises two ways compute both routes and
insist they agree; equality of L-subsets is exact pointwise equality of
lattice elements, there is no tolerance anywhere.
"""
from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple

from .errors import (
    DocumentError,
    InstanceTooLargeError,
    MismatchedCarriersError,
    NonDistributiveLatticeError,
    NotAnLSubgroupError,
    UnknownElementError,
)
from .groups import FiniteGroup, GroupHom, is_subgroup, subgroup_closure
from .lattice import FiniteLattice


class LSubset:
    """A total map from a finite group into a finite lattice.

    Values are stored as lattice indices aligned with the group's element
    order, which makes equality, hashing and pointwise folds cheap.  Use
    :func:`l_subset` (or the constructors below) rather than building one
    by hand.
    """

    __slots__ = ("group", "lattice", "_vals", "_hash")

    def __init__(self, group: FiniteGroup, lattice: FiniteLattice, vals: tuple[int, ...]):
        self.group = group
        self.lattice = lattice
        self._vals = vals
        self._hash = hash(vals)

    # ------------------------------------------------------------ basics

    def value(self, x: str) -> str:
        return self.lattice.elements[self._vals[self.group.index(x)]]

    def values(self) -> dict[str, str]:
        """Value map keyed in group element order."""
        names = self.lattice.elements
        return {x: names[v] for x, v in zip(self.group.elements, self._vals)}

    def value_indices(self) -> tuple[int, ...]:
        return self._vals

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LSubset):
            return NotImplemented
        return (
            self._vals == other._vals
            and self.group == other.group
            and self.lattice == other.lattice
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        parts = ", ".join(f"{x}->{v}" for x, v in self.values().items())
        return f"LSubset({parts})"

    # ------------------------------------------------------------ derived

    def level(self, a: str) -> frozenset[str]:
        """The level subset at a: all x with value(x) ≥ a."""
        ai = self.lattice.index(a)
        leq = self.lattice._leq
        return frozenset(
            x for x, v in zip(self.group.elements, self._vals) if leq[ai][v]
        )

    def tip(self) -> str:
        """Join of all membership values."""
        lat = self.lattice
        acc = self._vals[0]
        for v in self._vals[1:]:
            acc = lat._join[acc][v]
        return lat.elements[acc]

    def tail(self) -> str:
        """Meet of all membership values."""
        lat = self.lattice
        acc = self._vals[0]
        for v in self._vals[1:]:
            acc = lat._meet[acc][v]
        return lat.elements[acc]

    def image(self) -> frozenset[str]:
        """The set of attained values."""
        names = self.lattice.elements
        return frozenset(names[v] for v in set(self._vals))

    def is_constant(self) -> bool:
        return len(set(self._vals)) == 1

    def as_document(self) -> dict:
        return {"values": self.values()}


class LPoint(NamedTuple):
    """A lattice point a_x: height ``a`` at ``point`` x, bottom elsewhere."""

    point: str
    height: str

    def as_l_subset(self, group: FiniteGroup, lattice: FiniteLattice) -> LSubset:
        bottom = lattice.index(lattice.bottom)
        vals = [bottom] * len(group)
        vals[group.index(self.point)] = lattice.index(self.height)
        return LSubset(group, lattice, tuple(vals))


# ------------------------------------------------------------ constructors

def l_subset(
    group: FiniteGroup,
    lattice: FiniteLattice,
    mapping: Mapping[str, str],
    parent: LSubset | None = None,
) -> LSubset:
    """Build an LSubset from a total value map.

    Totality is enforced: every group element must be assigned a lattice
    element, and no unknown keys are allowed.  When ``parent`` is given the
    new subset must sit below it pointwise.
    """
    extra = set(mapping) - set(group.elements)
    if extra:
        raise UnknownElementError(f"value map mentions unknown group elements {sorted(extra)}")
    missing = [x for x in group.elements if x not in mapping]
    if missing:
        raise UnknownElementError(f"value map is missing group elements {missing}")
    vals = tuple(lattice.index(mapping[x]) for x in group.elements)
    result = LSubset(group, lattice, vals)
    if parent is not None:
        _same_carriers(result, parent)
        if not contains(parent, result):
            raise MismatchedCarriersError("values exceed the parent L-subset somewhere")
    return result


def constant(group: FiniteGroup, lattice: FiniteLattice, value: str) -> LSubset:
    v = lattice.index(value)
    return LSubset(group, lattice, (v,) * len(group))


def characteristic(group: FiniteGroup, lattice: FiniteLattice, members: Iterable[str]) -> LSubset:
    """Top on ``members``, bottom elsewhere (the crisp embedding of a subset)."""
    members = {group.elements[group.index(x)] for x in members}
    top = lattice.index(lattice.top)
    bottom = lattice.index(lattice.bottom)
    return LSubset(
        group, lattice, tuple(top if x in members else bottom for x in group.elements)
    )


def l_subset_from_document(doc: dict, group: FiniteGroup, lattice: FiniteLattice) -> LSubset:
    """Parse ``{"values": {"x": "a", ...}}`` against a group and lattice."""
    if not isinstance(doc, dict) or "values" not in doc or not isinstance(doc["values"], dict):
        raise DocumentError("L-subset document needs a 'values' object")
    try:
        return l_subset(group, lattice, doc["values"])
    except UnknownElementError as exc:
        raise DocumentError(str(exc)) from exc


# ------------------------------------------------------------ set algebra

def _same_carriers(*subsets: LSubset) -> None:
    first = subsets[0]
    for other in subsets[1:]:
        if other.group != first.group or other.lattice != first.lattice:
            raise MismatchedCarriersError("operands live over different carriers")


def contains(outer: LSubset, inner: LSubset) -> bool:
    """True when inner ⊆ outer, i.e. inner(x) ≤ outer(x) for all x."""
    _same_carriers(outer, inner)
    leq = outer.lattice._leq
    return all(leq[i][o] for i, o in zip(inner._vals, outer._vals))


def union_of(family: Iterable[LSubset]) -> LSubset:
    """Pointwise join of a non-empty family over shared carriers."""
    family = list(family)
    if not family:
        raise MismatchedCarriersError("union of an empty family is undefined")
    _same_carriers(*family)
    join = family[0].lattice._join
    vals = list(family[0]._vals)
    for member in family[1:]:
        vals = [join[a][b] for a, b in zip(vals, member._vals)]
    return LSubset(family[0].group, family[0].lattice, tuple(vals))


def intersection_of(family: Iterable[LSubset]) -> LSubset:
    """Pointwise meet of a non-empty family over shared carriers."""
    family = list(family)
    if not family:
        raise MismatchedCarriersError("intersection of an empty family is undefined")
    _same_carriers(*family)
    meet = family[0].lattice._meet
    vals = list(family[0]._vals)
    for member in family[1:]:
        vals = [meet[a][b] for a, b in zip(vals, member._vals)]
    return LSubset(family[0].group, family[0].lattice, tuple(vals))


def set_product(mu: LSubset, eta: LSubset) -> LSubset:
    """(mu ∘ eta)(x) = join over all factorisations x = yz of mu(y) ∧ eta(z)."""
    _same_carriers(mu, eta)
    group, lat = mu.group, mu.lattice
    join, meet = lat._join, lat._meet
    bottom = lat.index(lat.bottom)
    n = len(group)
    vals = []
    for xi in range(n):
        acc = bottom
        for yi in range(n):
            zi = group.op_index(group.inverse_index(yi), xi)
            acc = join[acc][meet[mu._vals[yi]][eta._vals[zi]]]
        vals.append(acc)
    return LSubset(group, lat, tuple(vals))


def adjoin_point(eta: LSubset, point: LPoint) -> LSubset:
    """eta ∪ a_x: join the height in at the point, leave everything else."""
    xi = eta.group.index(point.point)
    ai = eta.lattice.index(point.height)
    vals = list(eta._vals)
    vals[xi] = eta.lattice._join[vals[xi]][ai]
    return LSubset(eta.group, eta.lattice, tuple(vals))


def point_in(point: LPoint, mu: LSubset) -> bool:
    """a_x ∈ mu means mu(x) ≥ a."""
    return mu.lattice.leq(point.height, mu.value(point.point))


# ----------------------------------------------------- subgroup predicates

def _pointwise_is_l_subgroup(mu: LSubset) -> bool:
    group, lat = mu.group, mu.lattice
    vals = mu._vals
    leq, meet = lat._leq, lat._meet
    n = len(group)
    for i in range(n):
        if vals[group.inverse_index(i)] != vals[i]:
            return False
        for j in range(n):
            if not leq[meet[vals[i]][vals[j]]][vals[group.op_index(i, j)]]:
                return False
    return True


def _levelwise_is_l_subgroup(mu: LSubset) -> bool:
    return all(
        is_subgroup(mu.group, lv)
        for a in mu.lattice.elements
        if (lv := mu.level(a))
    )


def is_l_subgroup(mu: LSubset, strategy: str = "both") -> bool:
    """Is mu an L-subgroup of its group?

    The pointwise route checks mu(xy) ≥ mu(x) ∧ mu(y) and mu(x⁻¹) = mu(x);
    the level route checks that every non-empty level subset, over every
    lattice element, is a subgroup.  Both routes are available separately
    for the agreement tests; the default runs both and insists they match.
    Refuses non-distributive lattices, which the theory does not cover.
    """
    if not mu.lattice.distributive:
        raise NonDistributiveLatticeError("L-subgroup tests require a distributive lattice")
    if strategy == "pointwise":
        return _pointwise_is_l_subgroup(mu)
    if strategy == "levelwise":
        return _levelwise_is_l_subgroup(mu)
    if strategy != "both":
        raise ValueError(f"unknown strategy {strategy!r}")
    pointwise = _pointwise_is_l_subgroup(mu)
    levelwise = _levelwise_is_l_subgroup(mu)
    assert pointwise == levelwise, "pointwise and level-set subgroup tests disagree"
    return pointwise


def is_l_subgroup_of(eta: LSubset, mu: LSubset) -> bool:
    """eta ∈ L(mu): eta ⊆ mu with both L-subgroups of the group.

    Also evaluated through the level characterisation (each non-empty level
    of eta is a subgroup of the matching level of mu); the two answers must
    agree.
    """
    _same_carriers(eta, mu)
    if not contains(mu, eta) or not is_l_subgroup(mu):
        return False
    direct = is_l_subgroup(eta)
    levelwise = all(
        is_subgroup(eta.group, lv) and lv <= mu.level(a)
        for a in eta.lattice.elements
        if (lv := eta.level(a))
    )
    assert direct == levelwise, "direct and level-set subgroup-of tests disagree"
    return direct


def is_proper_l_subgroup(eta: LSubset, mu: LSubset) -> bool:
    """Proper: in L(mu), non-constant, and different from mu."""
    return is_l_subgroup_of(eta, mu) and not eta.is_constant() and eta != mu


def is_normal_in_group(mu: LSubset) -> bool:
    """Is mu a normal L-subgroup of the whole group?

    Pointwise this is mu(xy) = mu(yx) for all x, y; the level route asks
    every non-empty level subset to be a normal subgroup of the group.
    """
    if not is_l_subgroup(mu):
        raise NotAnLSubgroupError("normality is defined for L-subgroups")
    group = mu.group
    vals = mu._vals
    n = len(group)
    pointwise = all(
        vals[group.op_index(i, j)] == vals[group.op_index(j, i)]
        for i in range(n)
        for j in range(n)
    )
    everything = frozenset(group.elements)
    levelwise = all(
        all(group.conjugate(g, x) in lv for g in group.elements for x in lv)
        for a in mu.lattice.elements
        if (lv := mu.level(a)) and lv != everything
    )
    assert pointwise == levelwise, "pointwise and level-set normality tests disagree"
    return pointwise


def is_normal_in(eta: LSubset, mu: LSubset) -> bool:
    """Is eta a normal L-subgroup of mu?

    Pointwise: eta(yxy⁻¹) ≥ eta(x) ∧ mu(y) for all x, y.  Level route:
    every non-empty level of eta is normal in the matching level of mu.
    """
    if not is_l_subgroup_of(eta, mu):
        raise NotAnLSubgroupError("normality in mu is defined for members of L(mu)")
    group, lat = eta.group, eta.lattice
    leq, meet = lat._leq, lat._meet
    ev, mv = eta._vals, mu._vals
    n = len(group)
    pointwise = True
    for xi in range(n):
        for yi in range(n):
            conj = group.op_index(group.op_index(yi, xi), group.inverse_index(yi))
            if not leq[meet[ev[xi]][mv[yi]]][ev[conj]]:
                pointwise = False
                break
        if not pointwise:
            break
    levelwise = all(
        all(group.conjugate(g, x) in lv for g in mu.level(a) for x in lv)
        for a in lat.elements
        if (lv := eta.level(a))
    )
    assert pointwise == levelwise, "pointwise and level-set relative normality disagree"
    return pointwise


# --------------------------------------------------------- sup properties

def has_sup_property(mu: LSubset) -> bool:
    """True when every subset of the domain attains the join of its values.

    Finitely this says the image is a supstar subset of the lattice, i.e.
    its members are pairwise comparable.
    """
    return mu.lattice.is_supstar_subset(mu.image())


def are_jointly_supstar(eta: LSubset, theta: LSubset) -> bool:
    """True when the union of the two images is a supstar subset."""
    _same_carriers(eta, theta)
    return eta.lattice.is_supstar_subset(eta.image() | theta.image())


# --------------------------------------------------------------- generation

def generate(eta: LSubset) -> LSubset:
    """The smallest L-subgroup containing eta.

    With a0 the tip of eta, the result maps x to the join of all lattice
    elements a ≤ a0 whose level subset generates a subgroup containing x;
    the join runs over every lattice element below a0, not only attained
    values, and the empty level set generates the trivial subgroup.  The
    result is checked to be an L-subgroup containing eta before returning.
    """
    lat, group = eta.lattice, eta.group
    if not lat.distributive:
        raise NonDistributiveLatticeError("generation requires a distributive lattice")
    tip_i = eta._vals[0]
    for v in eta._vals[1:]:
        tip_i = lat._join[tip_i][v]
    below = [a for a in lat.elements if lat._leq[lat.index(a)][tip_i]]
    reach = {a: subgroup_closure(group, eta.level(a)) for a in below}
    vals = tuple(
        lat.index(lat.join_set(a for a in below if x in reach[a]))
        for x in group.elements
    )
    result = LSubset(group, lat, vals)
    assert _pointwise_is_l_subgroup(result), "generated subset failed the subgroup law"
    assert contains(result, eta), "generated subset does not contain its seed"
    return result


def generate_oracle(
    eta: LSubset, max_group_order: int = 8, max_lattice_size: int = 6
) -> LSubset:
    """Independent route to the generated L-subgroup, by exhaustion.

    Enumerates every L-subgroup of the group that contains eta and meets
    them pointwise.  Guarded by instance-size limits because the candidate
    space is the full product of up-sets.
    """
    group, lat = eta.group, eta.lattice
    if len(group) > max_group_order or len(lat) > max_lattice_size:
        raise InstanceTooLargeError(
            f"{len(group)} elements x {len(lat)} levels", f"{max_group_order} x {max_lattice_size}"
        )
    meet = lat._meet
    acc: list[int] | None = None
    for vals in _search_l_subgroup_values(group, lat, lower=eta._vals, upper=None):
        if acc is None:
            acc = list(vals)
        else:
            acc = [meet[a][b] for a, b in zip(acc, vals)]
    assert acc is not None, "the constant-top map always contains eta"
    return LSubset(group, lat, tuple(acc))


def _search_l_subgroup_values(
    group: FiniteGroup,
    lat: FiniteLattice,
    lower: tuple[int, ...] | None,
    upper: tuple[int, ...] | None,
):
    """Yield value tuples of L-subgroups between the given pointwise bounds.

    Depth-first assignment over inverse-pair orbits (x and x⁻¹ must share a
    value), with the identity first so every later value can be clipped to
    it, and with partial product constraints checked as soon as the three
    participants of a triple are assigned.  Yields in lexicographic order
    of the value tuple with respect to element order and lattice index.
    """
    n = len(group)
    leq, meet = lat._leq, lat._meet
    nl = len(lat)

    e = group.identity_index
    seen: set[int] = set()
    orbits: list[tuple[int, ...]] = []
    for i in [e] + [k for k in range(n) if k != e]:
        if i in seen:
            continue
        orbit = (i,) if group.inverse_index(i) == i else (i, group.inverse_index(i))
        seen.update(orbit)
        orbits.append(orbit)

    pos = {}
    for p, orbit in enumerate(orbits):
        for i in orbit:
            pos[i] = p

    # triples (i, j, ij) bucketed by the step at which all three are known
    buckets: list[list[tuple[int, int, int]]] = [[] for _ in orbits]
    for i in range(n):
        for j in range(n):
            p = group.op_index(i, j)
            buckets[max(pos[i], pos[j], pos[p])].append((i, j, p))

    lower = lower or tuple(lat.index(lat.bottom) for _ in range(n))
    upper = upper or tuple(lat.index(lat.top) for _ in range(n))

    vals = [0] * n

    def domain(step: int) -> list[int]:
        orbit = orbits[step]
        lo = lower[orbit[0]]
        hi = upper[orbit[0]]
        for i in orbit[1:]:
            lo = lat._join[lo][lower[i]]
            hi = meet[hi][upper[i]]
        if step > 0:
            hi = meet[hi][vals[e]]  # the tip of an L-subgroup sits at the identity
        return [v for v in range(nl) if leq[lo][v] and leq[v][hi]]

    def walk(step: int):
        if step == len(orbits):
            yield tuple(vals)
            return
        for v in domain(step):
            for i in orbits[step]:
                vals[i] = v
            ok = all(
                leq[meet[vals[i]][vals[j]]][vals[p]] for i, j, p in buckets[step]
            )
            if ok:
                yield from walk(step + 1)

    yield from walk(0)


# ---------------------------------------------------------------- transport

def pushforward(f: GroupHom, mu: LSubset) -> LSubset:
    """f(mu)(y) = join of mu over the fibre of y; bottom on empty fibres."""
    if mu.group != f.source:
        raise MismatchedCarriersError("pushforward needs an L-subset over the source group")
    lat = mu.lattice
    buckets: dict[str, list[str]] = {y: [] for y in f.target.elements}
    for x in f.source.elements:
        buckets[f(x)].append(mu.value(x))
    vals = tuple(lat.index(lat.join_set(buckets[y])) for y in f.target.elements)
    result = LSubset(f.target, lat, vals)
    if lat.distributive and _pointwise_is_l_subgroup(mu):
        assert _pointwise_is_l_subgroup(result), "image of an L-subgroup must be an L-subgroup"
    return result


def pullback(f: GroupHom, nu: LSubset) -> LSubset:
    """f⁻¹(nu)(x) = nu(f(x))."""
    if nu.group != f.target:
        raise MismatchedCarriersError("pullback needs an L-subset over the target group")
    lat = nu.lattice
    vals = tuple(nu._vals[f.target.index(f(x))] for x in f.source.elements)
    result = LSubset(f.source, lat, vals)
    if lat.distributive and _pointwise_is_l_subgroup(nu):
        assert _pointwise_is_l_subgroup(result), "preimage of an L-subgroup must be an L-subgroup"
    return result
