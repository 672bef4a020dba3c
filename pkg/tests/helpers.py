"""Independent brute-force reference implementations used by the tests.

Everything here works straight from definitions (dict-counted products,
pairwise closures) and deliberately shares no code with the library's
search or verifier internals.
"""

from itertools import combinations

from setdirect.groups import GroupTable, Subset, conjugacy_classes, mask_of


def naive_product_counts(G: GroupTable, xs, ys):
    counts = {}
    for a in xs:
        for b in ys:
            p = G.mult[a][b]
            counts[p] = counts.get(p, 0) + 1
    return counts


def naive_is_direct(G: GroupTable, xs, ys) -> bool:
    counts = naive_product_counts(G, xs, ys)
    return all(c == 1 for c in counts.values())


def naive_closure(G: GroupTable, xs):
    cur = set(xs) | {G.identity}
    while True:
        nxt = {G.mult[a][b] for a in cur for b in cur}
        if nxt <= cur:
            return cur
        cur |= nxt


def naive_factorizations(G: GroupTable):
    """Every unordered pair of normal subsets with XY = G, unique products.

    Exhausts all pairs of unions of conjugacy classes, grouped by total size
    so only complementary sizes are paired; only usable when the class count
    is small.
    """
    part = conjugacy_classes(G)
    k = len(part)
    members = [part.classes[c].members() for c in range(k)]
    by_size = {}
    for b in range(1, 1 << k):
        xs = [x for c in range(k) if (b >> c) & 1 for x in members[c]]
        if G.order % len(xs) == 0:
            by_size.setdefault(len(xs), []).append(tuple(xs))
    out = set()
    for d, xs_list in by_size.items():
        ys_list = by_size.get(G.order // d, [])
        for xs in xs_list:
            for ys in ys_list:
                counts = naive_product_counts(G, xs, ys)
                if len(counts) == G.order and all(v == 1 for v in counts.values()):
                    xm, ym = mask_of(xs), mask_of(ys)
                    out.add((min(xm, ym), max(xm, ym)))
    return out


def is_subgroup_naive(G: GroupTable, xs) -> bool:
    s = set(xs)
    if G.identity not in s:
        return False
    return all(G.mult[a][b] in s for a in s for b in s)


def abelian_subgroups(G: GroupTable):
    """All subgroups of an abelian group by brute subset filtering (small n)."""
    n = G.order
    assert n <= 16, "brute subgroup scan is exponential"
    found = []
    elems = list(range(n))
    for r in range(n + 1):
        for combo in combinations(elems, r):
            if G.identity in combo and is_subgroup_naive(G, combo):
                found.append(frozenset(combo))
    return found
