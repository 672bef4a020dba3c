"""Finite groups as dense multiplication tables, with subsets as bitmasks.

Elements are integers 0..n-1.  A Subset is an immutable bitmask over the
element range of a fixed GroupTable.  Tables, partitions and subsets never
mutate after construction, so they are safe to share across workers; every
operation in this module is a pure function of its inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import (
    EmptyGeneratingSet,
    EmptySet,
    NotAGroup,
    NotCentral,
    NotIsomorphism,
    NotNormalSubgroup,
    NotSubgroup,
    OrderLimitExceeded,
    internal_check,
)

DEFAULT_MAX_ORDER = 20000
ASSOCIATIVITY_CHECK_BOUND = 256


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class GroupTable:
    """A finite group: order, n-by-n multiplication table, inverses, labels.

    Construct through the factory functions in this module (or the catalog);
    the constructor itself trusts its arguments.
    """

    __slots__ = (
        "order",
        "mult",
        "inv",
        "identity",
        "labels",
        "name",
        "_classes",
        "_center_mask",
        "_abelian",
        "_label_index",
    )

    def __init__(self, mult, inv, identity, labels, name="G"):
        self.order = len(mult)
        self.mult = tuple(tuple(row) for row in mult)
        self.inv = tuple(inv)
        self.identity = identity
        self.labels = tuple(labels)
        self.name = name
        self._classes = None
        self._center_mask = None
        self._abelian = None
        self._label_index = None

    # -- element arithmetic -------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def inv_of(self, a: int) -> int:
        return self.inv[a]

    def conj(self, x: int, g: int) -> int:
        """g**-1 * x * g."""
        return self.mult[self.mult[self.inv[g]][x]][g]

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.mult[y][x]
            k += 1
        return k

    @property
    def is_abelian(self) -> bool:
        if self._abelian is None:
            mult = self.mult
            self._abelian = all(
                mult[a][b] == mult[b][a]
                for a in range(self.order)
                for b in range(a + 1, self.order)
            )
        return self._abelian

    # -- subsets ------------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def subset(self, indices: Iterable[int]) -> "Subset":
        m = 0
        for i in indices:
            if not 0 <= i < self.order:
                raise ValueError(f"element index {i} out of range for {self.name}")
            m |= 1 << i
        return Subset(self, m)

    def subset_from_mask(self, mask: int) -> "Subset":
        return Subset(self, mask)

    def singleton(self, i: int) -> "Subset":
        return self.subset([i])

    def empty_subset(self) -> "Subset":
        return Subset(self, 0)

    def full_subset(self) -> "Subset":
        return Subset(self, self.full_mask)

    def identity_subset(self) -> "Subset":
        return Subset(self, 1 << self.identity)

    # -- labels -------------------------------------------------------------

    def label(self, i: int) -> str:
        return self.labels[i]

    def index_of_label(self, label: str) -> Optional[int]:
        if self._label_index is None:
            idx = {}
            for i, lab in enumerate(self.labels):
                idx.setdefault(lab, i)
            self._label_index = idx
        return self._label_index.get(label)

    def __repr__(self):
        return f"GroupTable({self.name!r}, order={self.order})"


@dataclass(frozen=True)
class Subset:
    """A subset of a fixed group, stored as a bitmask over 0..n-1."""

    group: GroupTable
    mask: int

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, i: int) -> bool:
        return bool((self.mask >> i) & 1)

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def members(self) -> tuple:
        return tuple(bits(self.mask))

    def member_labels(self) -> tuple:
        return tuple(self.group.labels[i] for i in bits(self.mask))

    def _check_same_group(self, other: "Subset") -> None:
        if self.group is not other.group:
            raise ValueError("subsets belong to different groups")

    def __or__(self, other: "Subset") -> "Subset":
        self._check_same_group(other)
        return Subset(self.group, self.mask | other.mask)

    def __and__(self, other: "Subset") -> "Subset":
        self._check_same_group(other)
        return Subset(self.group, self.mask & other.mask)

    def __sub__(self, other: "Subset") -> "Subset":
        self._check_same_group(other)
        return Subset(self.group, self.mask & ~other.mask)

    def issubset(self, other: "Subset") -> bool:
        self._check_same_group(other)
        return self.mask & ~other.mask == 0

    def translate(self, g: int) -> "Subset":
        """Left translate {g*x : x in S}."""
        return Subset(self.group, _ltrans(self.group, g, self.mask))

    def rtranslate(self, g: int) -> "Subset":
        """Right translate {x*g : x in S}."""
        return Subset(self.group, _rtrans(self.group, self.mask, g))

    def inverse_set(self) -> "Subset":
        inv = self.group.inv
        return Subset(self.group, mask_of(inv[x] for x in bits(self.mask)))

    def __repr__(self):
        shown = ",".join(self.member_labels()[:12])
        more = "..." if len(self) > 12 else ""
        return f"Subset({self.group.name}: {{{shown}{more}}})"


@dataclass(frozen=True)
class ClassPartition:
    """Conjugacy classes of a group, ordered by minimal member."""

    group: GroupTable
    classes: tuple
    class_of: tuple

    def __len__(self) -> int:
        return len(self.classes)

    def class_mask(self, i: int) -> int:
        return self.classes[i].mask

    def sizes(self) -> tuple:
        return tuple(len(c) for c in self.classes)


# -- raw mask helpers (hot paths work on ints, not Subset objects) ----------


def _ltrans(G: GroupTable, g: int, mask: int) -> int:
    row = G.mult[g]
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << row[low.bit_length() - 1]
        mask ^= low
    return out


def _rtrans(G: GroupTable, mask: int, g: int) -> int:
    mult = G.mult
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << mult[low.bit_length() - 1][g]
        mask ^= low
    return out


def _product_mask(G: GroupTable, amask: int, bmask: int) -> int:
    mult = G.mult
    bmem = tuple(bits(bmask))
    out = 0
    while amask:
        low = amask & -amask
        row = mult[low.bit_length() - 1]
        for y in bmem:
            out |= 1 << row[y]
        amask ^= low
    return out


def _closure_mask(G: GroupTable, mask: int) -> int:
    """Subgroup generated by the elements of mask (finite closure)."""
    gens = tuple(bits(mask))
    mult = G.mult
    closed = 1 << G.identity
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            row = mult[x]
            for g in gens:
                y = row[g]
                b = 1 << y
                if not closed & b:
                    closed |= b
                    nxt.append(y)
        frontier = nxt
    return closed


def _is_subgroup_mask(G: GroupTable, mask: int) -> bool:
    if not (mask >> G.identity) & 1:
        return False
    mem = tuple(bits(mask))
    mult = G.mult
    for a in mem:
        row = mult[a]
        for b in mem:
            if not (mask >> row[b]) & 1:
                return False
    return True


# -- construction ----------------------------------------------------------


def group_from_table(
    mult_table: Sequence[Sequence[int]],
    labels: Optional[Sequence[str]] = None,
    *,
    name: str = "G",
    assoc_check_bound: int = ASSOCIATIVITY_CHECK_BOUND,
) -> GroupTable:
    """Validate a multiplication table and wrap it as a GroupTable.

    Checks: entries in range, Latin square, two-sided identity, two-sided
    inverses, and (for n <= assoc_check_bound) full associativity.
    """
    n = len(mult_table)
    if n == 0:
        raise NotAGroup("empty table")
    a = np.asarray(mult_table, dtype=np.int64)
    if a.shape != (n, n):
        raise NotAGroup(f"table is not square: shape {a.shape}")
    if a.min() < 0 or a.max() >= n:
        raise NotAGroup("table entries out of range 0..n-1")

    ar = np.arange(n, dtype=np.int64)
    if not (np.sort(a, axis=1) == ar).all():
        raise NotAGroup("some row is not a permutation of 0..n-1")
    if not (np.sort(a, axis=0) == ar[:, None]).all():
        raise NotAGroup("some column is not a permutation of 0..n-1")

    row_id = (a == ar).all(axis=1)
    col_id = (a == ar[:, None]).all(axis=0)
    both = np.flatnonzero(row_id & col_id)
    if len(both) == 0:
        raise NotAGroup("no two-sided identity element")
    identity = int(both[0])

    inv = [0] * n
    for x in range(n):
        y = int(np.flatnonzero(a[x] == identity)[0])
        if a[y][x] != identity:
            raise NotAGroup(f"element {x} has no two-sided inverse")
        inv[x] = y

    if n <= assoc_check_bound:
        small = a.astype(np.int16 if n <= 256 else np.int32)
        left = small[small]          # left[i,j,k]  = t[t[i,j], k]
        right = small[:, small]      # right[i,j,k] = t[i, t[j,k]]
        if not np.array_equal(left, right):
            i, j, k = np.argwhere(left != right)[0]
            raise NotAGroup(f"associativity fails at triple ({i},{j},{k})")

    if labels is None:
        labels = [str(i) for i in range(n)]
    elif len(labels) != n:
        raise NotAGroup("labels length does not match order")
    return GroupTable(a.tolist(), inv, identity, labels, name=name)


def _cycle_label(perm: Sequence[int]) -> str:
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        j = perm[start]
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = perm[j]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) if parts else "()"


def group_from_permutations(
    generators: Sequence[Sequence[int]],
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    name: str = "perm-group",
) -> GroupTable:
    """Close a set of permutations of 0..d-1 under composition.

    Element 0 is the identity; labels are cycle notations.  Closure is
    breadth-first right-multiplication by the generators.
    """
    if not generators:
        raise EmptyGeneratingSet("need at least one generator")
    d = len(generators[0])
    gens = []
    for g in generators:
        t = tuple(g)
        if len(t) != d or sorted(t) != list(range(d)):
            raise NotAGroup(f"generator {g!r} is not a permutation of 0..{d-1}")
        gens.append(t)

    ident = tuple(range(d))
    index = {ident: 0}
    elems = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(d))  # p after g
                if q not in index:
                    if len(elems) >= max_order:
                        raise OrderLimitExceeded(
                            f"closure exceeds max order {max_order}"
                        )
                    index[q] = len(elems)
                    elems.append(q)
                    nxt.append(q)
        frontier = nxt

    n = len(elems)
    mult = [[0] * n for _ in range(n)]
    for i, p in enumerate(elems):
        for j, q in enumerate(elems):
            r = tuple(p[q[t]] for t in range(d))  # apply q, then p
            mult[i][j] = index[r]
    inv = [0] * n
    for i, p in enumerate(elems):
        ip = [0] * d
        for t in range(d):
            ip[p[t]] = t
        inv[i] = index[tuple(ip)]
    labels = [_cycle_label(p) for p in elems]
    return GroupTable(mult, inv, 0, labels, name=name)


def direct_product(A: GroupTable, B: GroupTable, *, name: Optional[str] = None) -> GroupTable:
    """External direct product with elements packed as a*|B| + b."""
    na, nb = A.order, B.order
    n = na * nb
    mult = [[0] * n for _ in range(n)]
    for a1 in range(na):
        for b1 in range(nb):
            i = a1 * nb + b1
            rowm = mult[i]
            ra, rb = A.mult[a1], B.mult[b1]
            for a2 in range(na):
                base = ra[a2] * nb
                rb2 = rb
                for b2 in range(nb):
                    rowm[a2 * nb + b2] = base + rb2[b2]
    inv = [A.inv[i // nb] * nb + B.inv[i % nb] for i in range(n)]
    labels = [f"({A.labels[i // nb]},{B.labels[i % nb]})" for i in range(n)]
    identity = A.identity * nb + B.identity
    return GroupTable(mult, inv, identity, labels, name=name or f"{A.name}x{B.name}")


@dataclass(frozen=True)
class CentralProductEmbedding:
    """A central product together with the canonical images of its factors."""

    group: GroupTable
    m_image: Subset
    n_image: Subset
    z_image: Subset


def central_product_embedding(
    M: GroupTable,
    N: GroupTable,
    pairing: Sequence[Sequence[int]],
    *,
    name: Optional[str] = None,
) -> CentralProductEmbedding:
    """Glue M and N along a central subgroup identified by `pairing`.

    `pairing` lists (index in M, index in N) pairs whose first components
    form a central subgroup Z of M and whose second components are the values
    of an isomorphism of Z onto a central subgroup of N.  The result is the
    quotient of M x N by {(z, theta(z)^-1)}.
    """
    if not pairing:
        raise NotIsomorphism("pairing must at least identify the identities")
    zm = [p[0] for p in pairing]
    zn = [p[1] for p in pairing]
    if len(set(zm)) != len(zm) or len(set(zn)) != len(zn):
        raise NotIsomorphism("pairing components must be distinct")
    zmask = mask_of(zm)
    if not _is_subgroup_mask(M, zmask):
        raise NotCentral("pairing domain is not a subgroup of the left factor")
    if zmask & ~center(M).mask:
        raise NotCentral("pairing domain is not central in the left factor")
    if mask_of(zn) & ~center(N).mask:
        raise NotCentral("pairing image is not central in the right factor")
    theta = dict(zip(zm, zn))
    for a in zm:
        for b in zm:
            if theta[M.mult[a][b]] != N.mult[theta[a]][theta[b]]:
                raise NotIsomorphism("pairing is not a homomorphism")

    prod = direct_product(M, N)
    nb = N.order
    kernel = prod.subset(a * nb + N.inv[theta[a]] for a in zm)
    internal_check(
        _is_subgroup_mask(prod, kernel.mask),
        "pairing kernel is not a subgroup of the direct product",
    )
    quo, coset_of = quotient_with_map(prod, kernel)
    quo.name = name or f"{M.name}o{N.name}"
    m_image = quo.subset({coset_of[a * nb + N.identity] for a in range(M.order)})
    n_image = quo.subset({coset_of[M.identity * nb + b] for b in range(N.order)})
    z_image = quo.subset({coset_of[a * nb + N.identity] for a in zm})
    internal_check(
        (m_image & n_image).mask == z_image.mask,
        "factor images do not intersect in the glued subgroup",
    )
    return CentralProductEmbedding(quo, m_image, n_image, z_image)


def external_central_product(
    M: GroupTable,
    N: GroupTable,
    pairing: Sequence[Sequence[int]],
    *,
    name: Optional[str] = None,
) -> GroupTable:
    """Central product of M and N along the pairing; see central_product_embedding."""
    return central_product_embedding(M, N, pairing, name=name).group


# -- structure queries -------------------------------------------------------


def conjugacy_classes(G: GroupTable) -> ClassPartition:
    """Partition into conjugacy classes, ordered by minimal member."""
    if G._classes is not None:
        return G._classes
    n = G.order
    mult, inv = G.mult, G.inv
    class_of = [-1] * n
    classes = []
    for x in range(n):
        if class_of[x] >= 0:
            continue
        idx = len(classes)
        orbit = [x]
        class_of[x] = idx
        mask = 1 << x
        stack = [x]
        while stack:
            y = stack.pop()
            for g in range(n):
                z = mult[mult[inv[g]][y]][g]
                if class_of[z] < 0:
                    class_of[z] = idx
                    mask |= 1 << z
                    stack.append(z)
                    orbit.append(z)
        classes.append(Subset(G, mask))
    part = ClassPartition(G, tuple(classes), tuple(class_of))
    G._classes = part
    return part


def center(G: GroupTable) -> Subset:
    """The subset of elements commuting with everything."""
    if G._center_mask is None:
        n, mult = G.order, G.mult
        m = 0
        for z in range(n):
            row = mult[z]
            if all(row[g] == mult[g][z] for g in range(n)):
                m |= 1 << z
        G._center_mask = m
    return Subset(G, G._center_mask)


def generated_subgroup(G: GroupTable, S: Subset) -> Subset:
    """Smallest subgroup containing S, by closure iteration."""
    if not S.mask:
        raise EmptyGeneratingSet("cannot generate from the empty set")
    return Subset(G, _closure_mask(G, S.mask))


def commutator_set(G: GroupTable, A: Subset, B: Subset) -> Subset:
    """The set {a^-1 b^-1 a b : a in A, b in B} (a set, not a subgroup)."""
    if not A.mask or not B.mask:
        raise EmptySet("commutator set of an empty subset")
    mult, inv = G.mult, G.inv
    amem, bmem = A.members(), B.members()
    out = 0
    for a in amem:
        ia = inv[a]
        for b in bmem:
            out |= 1 << mult[mult[mult[inv[b]][ia]][b]][a]
    return Subset(G, out)


def is_normal_subset(G: GroupTable, S: Subset) -> bool:
    """True iff S is a union of conjugacy classes (empty set included)."""
    part = conjugacy_classes(G)
    mask = S.mask
    rest = mask
    while rest:
        low = rest & -rest
        cmask = part.class_mask(part.class_of[low.bit_length() - 1])
        if cmask & ~mask:
            return False
        rest &= ~cmask
    return True


def set_product(G: GroupTable, A: Subset, B: Subset):
    """Product set AB plus, per element, the number of (a, b) pairs hitting it."""
    mult = G.mult
    counts: dict = {}
    bmem = B.members()
    for a in bits(A.mask):
        row = mult[a]
        for b in bmem:
            p = row[b]
            counts[p] = counts.get(p, 0) + 1
    return Subset(G, mask_of(counts)), counts


def product_subset(G: GroupTable, A: Subset, B: Subset) -> Subset:
    """Product set AB without multiplicities (faster)."""
    return Subset(G, _product_mask(G, A.mask, B.mask))


def is_subgroup(G: GroupTable, S: Subset) -> bool:
    return _is_subgroup_mask(G, S.mask)


def left_cosets(G: GroupTable, H: Subset):
    """Left cosets of a subgroup: (representatives, coset_of index array)."""
    if not _is_subgroup_mask(G, H.mask):
        raise NotSubgroup("coset decomposition needs a subgroup")
    n = G.order
    coset_of = [-1] * n
    reps = []
    order = [G.identity] + [x for x in range(n) if x != G.identity]
    for g in order:
        if coset_of[g] >= 0:
            continue
        idx = len(reps)
        reps.append(g)
        for y in bits(_ltrans(G, g, H.mask)):
            coset_of[y] = idx
    return reps, tuple(coset_of)


def quotient_with_map(G: GroupTable, K: Subset):
    """Quotient group by a normal subgroup plus the element -> coset map."""
    if not _is_subgroup_mask(G, K.mask):
        raise NotNormalSubgroup("kernel is not a subgroup")
    if not is_normal_subset(G, K):
        raise NotNormalSubgroup("kernel is not normal")
    reps, coset_of = left_cosets(G, K)
    m = len(reps)
    mult = [[coset_of[G.mult[reps[i]][reps[j]]] for j in range(m)] for i in range(m)]
    inv = [coset_of[G.inv[reps[i]]] for i in range(m)]
    labels = [f"{G.labels[r]}K" for r in reps]
    quo = GroupTable(mult, inv, coset_of[G.identity], labels, name=f"{G.name}/K")
    return quo, coset_of


def quotient_group(G: GroupTable, K: Subset) -> GroupTable:
    """GroupTable on the cosets of a normal subgroup K."""
    return quotient_with_map(G, K)[0]


# -- subgroup views ----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SubgroupView:
    """A subgroup re-indexed as its own GroupTable, with element maps."""

    table: GroupTable
    parent: GroupTable
    to_parent: tuple

    @property
    def carrier(self) -> Subset:
        return Subset(self.parent, mask_of(self.to_parent))

    def index_in_view(self, parent_element: int) -> int:
        try:
            return self.to_parent.index(parent_element)
        except ValueError:
            raise ValueError("element does not belong to the viewed subgroup")

    def pull(self, S: Subset) -> Subset:
        """Map a parent subset contained in the carrier into the view."""
        if S.group is not self.parent:
            raise ValueError("subset belongs to a different group")
        if S.mask & ~self.carrier.mask:
            raise ValueError("subset is not contained in the viewed subgroup")
        lookup = {p: i for i, p in enumerate(self.to_parent)}
        return self.table.subset(lookup[x] for x in bits(S.mask))

    def push(self, S: Subset) -> Subset:
        """Map a view subset back into the parent group."""
        if S.group is not self.table:
            raise ValueError("subset belongs to a different group")
        return self.parent.subset(self.to_parent[i] for i in bits(S.mask))


def subgroup_view(G: GroupTable, H: Subset) -> SubgroupView:
    """Re-wrap a subgroup as a standalone GroupTable (identity first)."""
    if not _is_subgroup_mask(G, H.mask):
        raise NotSubgroup("view requires a subgroup")
    members = [G.identity] + [x for x in bits(H.mask) if x != G.identity]
    pos = {p: i for i, p in enumerate(members)}
    m = len(members)
    mult = [[pos[G.mult[a][b]] for b in members] for a in members]
    inv = [pos[G.inv[a]] for a in members]
    labels = [G.labels[a] for a in members]
    table = GroupTable(mult, inv, 0, labels, name=f"{G.name}|H{m}")
    return SubgroupView(table, G, tuple(members))
