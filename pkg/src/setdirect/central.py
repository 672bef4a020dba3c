"""Central products and the multiplication action of a central subgroup on
conjugacy classes: orbits, stabilizers, bracket sets, semi-regular elements,
and the class-counting identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (
    NotCentral,
    NotNormal,
    NotSubgroup,
    OrderLimitExceeded,
    internal_check,
)
from .groups import (
    GroupTable,
    Subset,
    _closure_mask,
    _is_subgroup_mask,
    _ltrans,
    _product_mask,
    bits,
    center,
    commutator_set,
    conjugacy_classes,
    is_normal_subset,
    mask_of,
    quotient_group,
)

DEFAULT_ENUMERATION_BOUND = 512


@dataclass(frozen=True)
class CentralDecomposition:
    """A certified triple (M, N, Z): normal subgroups with MN = G, mutually
    centralizing, and Z = M intersect N central in G."""

    m: Subset
    n: Subset
    z: Subset


@dataclass(frozen=True)
class CentralProductCheck:
    """Outcome of is_central_product: a decomposition or a reason code."""

    decomposition: Optional[CentralDecomposition]
    reason: Optional[str]

    def __bool__(self) -> bool:
        return self.decomposition is not None


def is_central_product(G: GroupTable, M: Subset, N: Subset) -> CentralProductCheck:
    """Certify G as the central product of M and N, or say why not.

    Reason codes: NotSubgroup, NotNormal, ProductNotG, IntersectionNotCentral,
    NotCentralizing.  The factors must centralize each other; with that, Z is
    automatically central and the factors automatically normal, but all the
    conditions are checked independently so failures are attributed usefully.
    """
    fail = lambda reason: CentralProductCheck(None, reason)
    for side in (M, N):
        if not _is_subgroup_mask(G, side.mask):
            return fail("NotSubgroup")
    for side in (M, N):
        if not is_normal_subset(G, side):
            return fail("NotNormal")
    if _product_mask(G, M.mask, N.mask) != G.full_mask:
        return fail("ProductNotG")
    zmask = M.mask & N.mask
    if zmask & ~center(G).mask:
        return fail("IntersectionNotCentral")
    if commutator_set(G, M, N).mask != 1 << G.identity:
        return fail("NotCentralizing")
    return CentralProductCheck(CentralDecomposition(M, N, Subset(G, zmask)), None)


def normal_subgroups(G: GroupTable):
    """All normal subgroups, via join-closure of class-generated subgroups."""
    part = conjugacy_classes(G)
    trivial = 1 << G.identity
    base = {trivial}
    for cls in part.classes:
        base.add(_closure_mask(G, cls.mask | trivial))
    found = set(base)
    frontier = set(base)
    while frontier:
        new = set()
        for h in frontier:
            for b in base:
                j = h | b
                if j not in found:
                    j = _closure_mask(G, j)
                    if j not in found:
                        found.add(j)
                        new.add(j)
        frontier = new
    return [Subset(G, m) for m in sorted(found, key=lambda m: (m.bit_count(), m))]


def minimal_normal_subgroups(G: GroupTable):
    """Minimal nontrivial normal subgroups."""
    trivial = 1 << G.identity
    props = [s for s in normal_subgroups(G) if s.mask != trivial]
    return [
        s
        for s in props
        if not any(t.mask != s.mask and t.mask & ~s.mask == 0 for t in props)
    ]


def central_subgroups(G: GroupTable):
    """All subgroups of the center, by join-closure of cyclic subgroups."""
    zmask = center(G).mask
    trivial = 1 << G.identity
    base = {trivial}
    for z in bits(zmask):
        base.add(_closure_mask(G, (1 << z) | trivial))
    found = set(base)
    frontier = set(base)
    while frontier:
        new = set()
        for h in frontier:
            for b in base:
                j = _closure_mask(G, h | b)
                if j not in found:
                    found.add(j)
                    new.add(j)
        frontier = new
    return [Subset(G, m) for m in sorted(found, key=lambda m: (m.bit_count(), m))]


def enumerate_central_decompositions(
    G: GroupTable, *, max_order: int = DEFAULT_ENUMERATION_BOUND
):
    """All unordered pairs of normal subgroups forming central products.

    Includes (G, Z) for every central subgroup Z.  Pairs are canonicalized
    with the larger factor first.
    """
    if G.order > max_order:
        raise OrderLimitExceeded(
            f"decomposition enumeration bound {max_order} exceeded by {G.name}"
        )
    subs = normal_subgroups(G)
    seen = set()
    out = []
    for i, M in enumerate(subs):
        for N in subs[i:]:
            check = is_central_product(G, M, N)
            if not check:
                continue
            big, small = (M, N) if (len(M), M.mask) >= (len(N), N.mask) else (N, M)
            key = (big.mask, small.mask)
            if key in seen:
                continue
            seen.add(key)
            out.append(CentralDecomposition(big, small, check.decomposition.z))
    out.sort(key=lambda d: (len(d.m), d.m.mask, d.n.mask))
    return out


@dataclass(frozen=True)
class ZOrbit:
    """One orbit of classes under z-multiplication, with its stabilizer."""

    classes: tuple
    stabilizer: Subset


@dataclass(frozen=True)
class ZActionData:
    """Orbit partition of the classes inside a normal subset under a central
    subgroup acting by multiplication."""

    ambient: Subset
    acting: Subset
    orbits: tuple

    def is_semiregular(self) -> bool:
        one = 1 << self.acting.group.identity
        return all(o.stabilizer.mask == one for o in self.orbits)

    def stabilizer_union(self) -> Subset:
        m = 0
        for o in self.orbits:
            m |= o.stabilizer.mask
        return Subset(self.acting.group, m)


def _require_central_subgroup(G: GroupTable, Z: Subset) -> None:
    if not _is_subgroup_mask(G, Z.mask):
        raise NotCentral("Z must be a subgroup")
    if Z.mask & ~center(G).mask:
        raise NotCentral("Z must be contained in the center")


def z_orbits(G: GroupTable, N: Subset, Z: Subset) -> ZActionData:
    """Orbits of the classes inside N under multiplication by central Z.

    N may be a normal subgroup (then Z <= N is required) or any normal
    subset closed under multiplication by Z.
    """
    _require_central_subgroup(G, Z)
    if not is_normal_subset(G, N):
        raise NotNormal("the acted-on set must be a union of conjugacy classes")
    if _is_subgroup_mask(G, N.mask):
        if Z.mask & ~N.mask:
            raise NotCentral("Z must be contained in the subgroup acted on")
    elif _product_mask(G, Z.mask, N.mask) != N.mask:
        raise NotNormal("normal subset is not closed under multiplication by Z")

    part = conjugacy_classes(G)
    inside = [
        i for i, cls in enumerate(part.classes) if cls.mask & ~N.mask == 0
    ]
    inside_set = set(inside)
    mult = G.mult
    class_of = part.class_of
    zmem = Z.members()
    seen = set()
    orbits = []
    for start in inside:
        if start in seen:
            continue
        rep = part.classes[start].members()[0]
        orbit = set()
        stab = 0
        for z in zmem:
            c = class_of[mult[z][rep]]
            orbit.add(c)
            if c == start:
                stab |= 1 << z
        internal_check(
            orbit <= inside_set, "orbit escaped the acted-on normal subset"
        )
        seen |= orbit
        stabilizer = Subset(G, stab)
        internal_check(
            len(orbit) * len(stabilizer) == len(Z),
            "orbit-stabilizer identity failed",
        )
        orbits.append(ZOrbit(tuple(sorted(orbit)), stabilizer))
    orbits.sort(key=lambda o: o.classes[0])
    return ZActionData(N, Z, tuple(orbits))


def class_stabilizer(G: GroupTable, n: int, Z: Subset) -> Subset:
    """Stabilizer of the class of n under Z-multiplication.

    Computed both directly ({z : nz in n^G}) and as [n, G] intersect Z;
    the two must agree.
    """
    _require_central_subgroup(G, Z)
    part = conjugacy_classes(G)
    cmask = part.class_mask(part.class_of[n])
    row = G.mult[n]
    direct = mask_of(z for z in bits(Z.mask) if (cmask >> row[z]) & 1)
    bracket = commutator_set(G, G.singleton(n), G.full_subset()).mask & Z.mask
    internal_check(direct == bracket, "stabilizer computations disagree")
    return Subset(G, direct)


def z_bracket(G: GroupTable, K: Subset, Z: Subset):
    """The set [K,K] intersect Z and the subgroup it generates.

    When K is complemented by its centralizer (K * C_G(K) = G, the central
    product situation) the set is cross-checked against the union of the
    orbit stabilizers of the Z-action on the classes inside K.
    """
    _require_central_subgroup(G, Z)
    if not _is_subgroup_mask(G, K.mask):
        raise NotSubgroup("bracket set needs a subgroup")
    if not is_normal_subset(G, K):
        raise NotSubgroup("bracket set needs a normal subgroup")
    bracket = commutator_set(G, K, K).mask & Z.mask
    generated = _closure_mask(G, bracket | (1 << G.identity))
    cent = mask_of(
        g
        for g in G.elements()
        if all(G.mult[g][k] == G.mult[k][g] for k in bits(K.mask))
    )
    if _product_mask(G, K.mask, cent) == G.full_mask and Z.mask & ~K.mask == 0:
        union = z_orbits(G, K, Z).stabilizer_union()
        internal_check(
            union.mask == bracket,
            "bracket set does not match the union of orbit stabilizers",
        )
    return Subset(G, bracket), Subset(G, generated)


def semi_regular_elements(G: GroupTable) -> Subset:
    """Central elements (except 1) fixing no conjugacy class by multiplication."""
    zc = center(G)
    action = z_orbits(G, G.full_subset(), zc)
    moved = zc.mask & ~action.stabilizer_union().mask
    return Subset(G, moved & ~(1 << G.identity))


@dataclass(frozen=True)
class ClassCountReport:
    """Class counts of G, Z, G/Z plus the orbit count and semi-regular flag."""

    k_g: int
    k_z: int
    k_quotient: int
    orbit_count: int
    semiregular: bool

    @property
    def multiplicative(self) -> bool:
        return self.k_g == self.k_z * self.k_quotient


def class_count_report(G: GroupTable, Z: Subset) -> ClassCountReport:
    """Compute k(G), k(Z), k(G/Z) (explicit quotient) and the orbit count.

    Asserts orbit_count == k(G/Z) and that semi-regularity is equivalent to
    k(G) == k(Z) * k(G/Z).
    """
    _require_central_subgroup(G, Z)
    k_g = len(conjugacy_classes(G))
    k_z = len(Z)  # central subgroups are abelian
    quo = quotient_group(G, Z)
    k_quotient = len(conjugacy_classes(quo))
    action = z_orbits(G, G.full_subset(), Z)
    orbit_count = len(action.orbits)
    internal_check(orbit_count == k_quotient, "orbit count differs from k(G/Z)")
    semiregular = action.is_semiregular()
    internal_check(
        semiregular == (k_g == k_z * k_quotient),
        "semi-regularity disagrees with the class-count identity",
    )
    return ClassCountReport(k_g, k_z, k_quotient, orbit_count, semiregular)
