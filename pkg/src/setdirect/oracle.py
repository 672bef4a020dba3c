"""Brute-force ground truth, independent of the structural machinery.

enumerate_setdirect finds every pair of normal subsets (X, Y) with XY = G
and unique representation, straight from the definition: candidates are
unions of conjugacy classes, the identity-normalized pairs are found by an
exact-cover search, and the rest follow by shifting with central elements
(every factorization is such a shift of a normalized one, and shifting
preserves directness).  Nothing here consults the structural verifier.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Optional

from .central import (
    class_stabilizer,
    enumerate_central_decompositions,
    minimal_normal_subgroups,
)
from .errors import (
    NotAbelian,
    NotCentral,
    SearchSpaceTooLarge,
    TimeBudgetExceeded,
    internal_check,
)
from .factor import SetDirectFactorization, is_direct, verify_main_theorem
from .groups import (
    GroupTable,
    Subset,
    _is_subgroup_mask,
    _ltrans,
    _product_mask,
    bits,
    center,
    commutator_set,
    conjugacy_classes,
    generated_subgroup,
    is_normal_subset,
    left_cosets,
    mask_of,
)

MAX_CLASS_COUNT = 26
DEFAULT_TIME_BUDGET = 60.0
DEFAULT_EXPANSION_CAP = 2_000_000
DEFAULT_CANDIDATE_CAP = 3_000_000


@dataclass
class EnumerationResult:
    """Complete factorization list (or its normalized slice) plus counts."""

    group_id: str
    factorizations: list
    total: int
    nontrivial: int
    normalized: int
    elapsed: float


class _Deadline:
    def __init__(self, seconds: float):
        self.t_end = time.perf_counter() + seconds
        self.calls = 0

    def poll(self):
        self.calls += 1
        if self.calls & 0xFFF == 0 and time.perf_counter() > self.t_end:
            raise _OutOfTime


class _OutOfTime(Exception):
    pass


def _divisor_splits(n: int):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append((d, n // d))
        d += 1
    return out


def _subsets_with_total(sizes, order, target):
    """Yield index tuples of classes whose sizes sum to target."""
    suffix = [0] * (len(order) + 1)
    for i in range(len(order) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + sizes[order[i]]

    picked = []

    def rec(pos, remaining):
        if remaining == 0:
            yield tuple(picked)
            return
        if pos == len(order) or remaining > suffix[pos]:
            return
        c = order[pos]
        if sizes[c] <= remaining:
            picked.append(c)
            yield from rec(pos + 1, remaining - sizes[c])
            picked.pop()
        yield from rec(pos + 1, remaining)

    yield from rec(0, target)


def _count_subsets_by_size(sizes, indices):
    """Subset counts of the given classes grouped by total size (DP)."""
    counts = {0: 1}
    for c in indices:
        s = sizes[c]
        for total, cnt in sorted(counts.items(), reverse=True):
            counts[total + s] = counts.get(total + s, 0) + cnt
    return counts


def _search_volume(G: GroupTable):
    """Number of normalized small-side candidates the search will visit."""
    part = conjugacy_classes(G)
    sizes = part.sizes()
    id_class = part.class_of[G.identity]
    others = [c for c in range(len(part)) if c != id_class]
    counts = _count_subsets_by_size(sizes, others)
    total = 0
    for d, _ in _divisor_splits(G.order):
        total += counts.get(d - sizes[id_class], 0)
    return total


def _normalized_pairs(G: GroupTable, deadline: _Deadline, candidate_cap: int):
    """All unordered normalized factorization pairs, as (xmask, ymask)."""
    part = conjugacy_classes(G)
    k = len(part)
    volume = _search_volume(G)
    if volume > candidate_cap:
        raise SearchSpaceTooLarge(
            f"{G.name}: {k} classes give {volume} candidate factors, over "
            f"the cap {candidate_cap}"
        )
    n = G.order
    full = G.full_mask
    id_class = part.class_of[G.identity]
    others = [c for c in range(k) if c != id_class]
    sizes = part.sizes()
    cmasks = [part.class_mask(c) for c in range(k)]
    mult, inv = G.mult, G.inv
    class_of = part.class_of

    pair_products: dict = {}

    def class_pair(cx, cy):
        key = (cx, cy)
        m = pair_products.get(key)
        if m is None:
            m = _product_mask(G, cmasks[cx], cmasks[cy])
            pair_products[key] = m
        return m

    found = set()
    for d, e in _divisor_splits(n):
        for chosen in _subsets_with_total(sizes, others, d - sizes[id_class]):
            deadline.poll()
            x_classes = (id_class, *chosen)
            xmask = 0
            for c in x_classes:
                xmask |= cmasks[c]
            x_members = tuple(bits(xmask))
            x_inv = tuple(inv[x] for x in x_members)

            # lazily built products X * class, with directness by cardinality
            xc_cache: dict = {}

            def x_times(c):
                m = xc_cache.get(c)
                if m is None:
                    m = 0
                    for cx in x_classes:
                        m |= class_pair(cx, c)
                    if m.bit_count() != d * sizes[c]:
                        m = -1  # X * c is not direct; class unusable
                    xc_cache[c] = m
                return m

            solutions = []

            def dfs(covered, size_left, used):
                deadline.poll()
                if size_left == 0:
                    internal_check(covered == full, "cover completed but not full")
                    solutions.append(used)
                    return
                low = (~covered & full) & -(~covered & full)
                g = low.bit_length() - 1
                cands = set()
                for xi in x_inv:
                    cands.add(class_of[mult[xi][g]])
                for c in sorted(cands):
                    if sizes[c] > size_left:
                        continue
                    pm = x_times(c)
                    if pm == -1 or pm & covered:
                        continue
                    dfs(covered | pm, size_left - sizes[c], used | (1 << c))

            # Y is normalized too: it must contain the identity class.
            init = x_times(id_class)
            if init != -1:
                dfs(init, e - sizes[id_class], 1 << id_class)
            for used in solutions:
                ymask = 0
                for c in bits(used):
                    ymask |= cmasks[c]
                key = (xmask, ymask) if xmask <= ymask else (ymask, xmask)
                found.add(key)
    return sorted(found)


def _center_translates(G: GroupTable, mask: int):
    return [_ltrans(G, z, mask) for z in bits(center(G).mask)]


def _expanded_counts(G: GroupTable, pairs):
    """Exact totals over all central shifts of the normalized pairs.

    Works orbit by orbit under the shift action of Z(G) x Z(G): the orbit of
    an ordered pair has size |Z|^2 / (|K(X)| |K(Y)|), and orbits are keyed by
    the lexicographically least translates of the two sides.
    """
    zc = center(G).mask
    zsize = zc.bit_count()
    side_info: dict = {}

    def info(mask):
        got = side_info.get(mask)
        if got is None:
            translates = _center_translates(G, mask)
            kern = sum(1 for t in translates if t == mask)
            got = (min(translates), kern)
            side_info[mask] = got
        return got

    orbits: dict = {}
    for xm, ym in pairs:
        (cx, kx), (cy, ky) = info(xm), info(ym)
        size = zsize * zsize // (kx * ky)
        nontrivial = xm.bit_count() > 1 and ym.bit_count() > 1
        orbits[(cx, cy)] = (size, nontrivial)
        orbits[(cy, cx)] = (size, nontrivial)
    total_ordered = sum(s for s, _ in orbits.values())
    nontrivial_ordered = sum(s for s, nt in orbits.values() if nt)
    diagonal = 1 if G.order == 1 else 0
    return (total_ordered + diagonal) // 2, (nontrivial_ordered + diagonal) // 2


def _expand(G: GroupTable, pairs, cap: int):
    zsize = center(G).mask.bit_count()
    if zsize * zsize * max(len(pairs), 1) > cap:
        raise SearchSpaceTooLarge(
            f"expanding {len(pairs)} normalized pairs by {zsize}^2 central "
            f"shifts exceeds the cap {cap}; use normalized_only"
        )
    out = set()
    tcache: dict = {}

    def translates(mask):
        got = tcache.get(mask)
        if got is None:
            got = _center_translates(G, mask)
            tcache[mask] = got
        return got

    for xm, ym in pairs:
        for tx in translates(xm):
            for ty in translates(ym):
                out.add((tx, ty) if tx <= ty else (ty, tx))
    return sorted(out)


def enumerate_setdirect(
    G: GroupTable,
    *,
    normalized_only: bool = False,
    nontrivial_only: bool = False,
    time_budget: float = DEFAULT_TIME_BUDGET,
    expansion_cap: int = DEFAULT_EXPANSION_CAP,
    candidate_cap: int = DEFAULT_CANDIDATE_CAP,
) -> EnumerationResult:
    """Exhaustively enumerate the set-direct factorizations of G.

    Every returned pair satisfies XY = G with unique representation; the
    search accepts a group when its class count is at most 26 or the
    divisor-pruned candidate volume stays under candidate_cap.  Counts
    (total, nontrivial, normalized) are always exact; the returned list is
    either all pairs or, with normalized_only, one normalized pair per
    entry found by the search.
    """
    start = time.perf_counter()
    deadline = _Deadline(time_budget)
    try:
        pairs = _normalized_pairs(G, deadline, candidate_cap)
    except _OutOfTime:
        partial = EnumerationResult(G.name, [], -1, -1, -1, time.perf_counter() - start)
        raise TimeBudgetExceeded(
            f"time budget {time_budget}s exhausted on {G.name}", partial=partial
        )
    total, nontrivial = _expanded_counts(G, pairs)
    listed = pairs if normalized_only else _expand(G, pairs, expansion_cap)
    facts = [
        SetDirectFactorization(G, Subset(G, xm), Subset(G, ym), True)
        for xm, ym in listed
    ]
    if nontrivial_only:
        facts = [f for f in facts if f.is_nontrivial()]
    return EnumerationResult(
        G.name,
        facts,
        total,
        nontrivial,
        len(pairs),
        time.perf_counter() - start,
    )


def enumerate_abelian_factorizations(
    Z: GroupTable,
    *,
    max_order: int = 64,
    normalized_only: bool = True,
    time_budget: float = DEFAULT_TIME_BUDGET,
) -> EnumerationResult:
    """All set factorizations of an abelian group (every subset is normal)."""
    if not Z.is_abelian:
        raise NotAbelian("abelian enumeration got a non-abelian group")
    if Z.order > max_order:
        raise SearchSpaceTooLarge(f"|Z| = {Z.order} exceeds the bound {max_order}")
    return enumerate_setdirect(
        Z, normalized_only=normalized_only, time_budget=time_budget
    )


def find_normal_transversal(G: GroupTable, Z: Subset) -> Optional[Subset]:
    """Search for a normal subset meeting every coset of Z exactly once.

    Pure exact-cover over unions of conjugacy classes; independent of the
    orbit machinery."""
    if not _is_subgroup_mask(G, Z.mask) or Z.mask & ~center(G).mask:
        raise NotCentral("transversal search needs a central subgroup")
    part = conjugacy_classes(G)
    reps, coset_of = left_cosets(G, Z)
    m = len(reps)
    class_cosets = []
    for cls in part.classes:
        seen = set()
        ok = True
        for x in bits(cls.mask):
            c = coset_of[x]
            if c in seen:
                ok = False
                break
            seen.add(c)
        class_cosets.append(frozenset(seen) if ok else None)

    usable = [i for i, s in enumerate(class_cosets) if s is not None]
    by_coset = {c: [] for c in range(m)}
    for i in usable:
        for c in class_cosets[i]:
            by_coset[c].append(i)

    def dfs(covered, chosen):
        if len(covered) == m:
            return chosen
        nxt = min(c for c in range(m) if c not in covered)
        for i in by_coset[nxt]:
            s = class_cosets[i]
            if covered & s:
                continue
            got = dfs(covered | s, chosen + [i])
            if got is not None:
                return got
        return None

    got = dfs(frozenset(), [])
    if got is None:
        return None
    return Subset(G, mask_of(x for i in got for x in bits(part.class_mask(i))))


# -- the cross-theorem property suite -----------------------------------------


@dataclass(frozen=True)
class SuiteCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteReport:
    group_id: str
    checks: list
    elapsed: float

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _random_normal_subset(G: GroupTable, rng: random.Random) -> Subset:
    part = conjugacy_classes(G)
    k = len(part)
    count = rng.randint(1, k)
    picked = rng.sample(range(k), count)
    return Subset(G, mask_of(x for c in picked for x in bits(part.class_mask(c))))


def property_suite(
    G: GroupTable,
    *,
    samples: int = 150,
    seed: int = 0,
    time_budget: float = DEFAULT_TIME_BUDGET,
) -> SuiteReport:
    """Cross-check the structural results against enumeration and sampling.

    Runs, over the oracle's factorization list and seeded random class
    unions: directness-criteria agreement, centralization of direct pairs,
    the intersection bound, central-pair existence, slice/coset structure,
    verifier agreement, the association property, and (for groups with a
    unique non-abelian minimal normal subgroup) non-directness of all
    nontrivial class-pair products.
    """
    start = time.perf_counter()
    rng = random.Random(seed)
    checks = []
    one = 1 << G.identity

    result = enumerate_setdirect(
        G, normalized_only=True, time_budget=time_budget
    )
    facts = result.factorizations

    ok, detail = True, ""
    for f in facts:
        if commutator_set(G, f.x, f.y).mask != one:
            ok, detail = False, f"[X,Y] != 1 for {f.x.members()} x {f.y.members()}"
            break
    checks.append(SuiteCheck("direct_pairs_centralize", ok, detail))

    ok = all((f.x.mask & f.y.mask).bit_count() <= 1 for f in facts)
    checks.append(SuiteCheck("intersection_at_most_one", ok))

    zc = center(G).mask
    ok, detail = True, ""
    for f in facts:
        if not any(G.inv[z] in f.y for z in bits(zc & f.x.mask)):
            ok, detail = False, f"no central pair for {f.x.members()}"
            break
    checks.append(SuiteCheck("central_pair_exists", ok, detail))

    ok, detail = True, ""
    for f in facts:
        report = verify_main_theorem(G, f.x, f.y)
        if not report.verdict:
            ok, detail = False, f"verifier rejected {f.x.members()} x {f.y.members()}"
            break
        for side, slices in (("Y", report.y_slices), ("X", report.x_slices)):
            for n_rep, sl in slices.items():
                if not sl.mask:
                    continue
                stab = class_stabilizer(G, n_rep, report.z).mask
                if _product_mask(G, sl.mask, stab) != sl.mask:
                    ok, detail = False, f"{side}-slice at {n_rep} not a union of stabilizer cosets"
                    break
    checks.append(SuiteCheck("verifier_and_slice_structure", ok, detail))

    ok, detail = True, ""
    for _ in range(samples):
        X = _random_normal_subset(G, rng)
        Y = _random_normal_subset(G, rng)
        rep = is_direct(G, X, Y)  # asserts the four criteria agree
        if rep.verdict and commutator_set(G, X, Y).mask != one:
            ok, detail = False, "direct sample does not centralize"
            break
    checks.append(SuiteCheck("criteria_agree_on_samples", ok, detail))

    ok, detail = True, ""
    tried = 0
    for _ in range(samples * 4):
        if tried >= samples:
            break
        A = _random_normal_subset(G, rng)
        B = _random_normal_subset(G, rng)
        C = _random_normal_subset(G, rng)
        ab = is_direct(G, A, B).verdict
        if not ab:
            continue
        AB = Subset(G, _product_mask(G, A.mask, B.mask))
        if not is_direct(G, AB, C).verdict:
            continue
        tried += 1
        BC = Subset(G, _product_mask(G, B.mask, C.mask))
        if not (is_direct(G, B, C).verdict and is_direct(G, A, BC).verdict):
            ok, detail = False, "association property failed"
            break
    checks.append(SuiteCheck("association", ok, f"{tried} triples"))

    minimals = minimal_normal_subgroups(G)
    if len(minimals) == 1 and G.order > 1:
        Nmin = minimals[0]
        abelian = all(
            G.mult[a][b] == G.mult[b][a]
            for a in bits(Nmin.mask)
            for b in bits(Nmin.mask)
        )
        part = conjugacy_classes(G)
        nontrivial_classes = [
            i for i in range(len(part)) if part.class_mask(i) != one
        ]
        if not abelian:
            ok, detail = True, ""
            for i in nontrivial_classes:
                for j in nontrivial_classes:
                    ci = Subset(G, part.class_mask(i))
                    cj = Subset(G, part.class_mask(j))
                    if is_direct(G, ci, cj).verdict:
                        ok, detail = False, f"direct class pair ({i},{j})"
                        break
                if not ok:
                    break
            checks.append(SuiteCheck("class_pairs_nondirect", ok, detail))
        else:
            witness = ""
            for i in nontrivial_classes:
                for j in nontrivial_classes:
                    if i == j:
                        continue
                    ci = Subset(G, part.class_mask(i))
                    cj = Subset(G, part.class_mask(j))
                    if is_direct(G, ci, cj).verdict:
                        witness = f"direct class pair ({i},{j})"
                        break
                if witness:
                    break
            checks.append(
                SuiteCheck(
                    "class_pairs_nondirect",
                    True,
                    f"skipped: abelian minimal normal subgroup; {witness}",
                )
            )

    return SuiteReport(G.name, checks, time.perf_counter() - start)
