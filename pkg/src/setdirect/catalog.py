"""Built-in catalog of small groups plus JSON group specifications.

Catalog names are case-insensitive.  Dihedral groups are named by their
order (D10 is the dihedral group with 10 elements); cyclic products use
names like C3xC3xC2 with generator labels g1, g2, ...
"""

from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path
from typing import Optional, Sequence

from .errors import NotAGroup
from .groups import (
    GroupTable,
    central_product_embedding,
    direct_product,
    group_from_permutations,
    group_from_table,
)


def cyclic(n: int, *, name: Optional[str] = None) -> GroupTable:
    if n < 1:
        raise NotAGroup("cyclic group order must be positive")
    mult = [[(a + b) % n for b in range(n)] for a in range(n)]
    inv = [(-a) % n for a in range(n)]
    labels = ["1"] + ["z" if a == 1 else f"z^{a}" for a in range(1, n)]
    return GroupTable(mult, inv, 0, labels, name=name or f"C{n}")


def dihedral(order: int, *, name: Optional[str] = None) -> GroupTable:
    """Dihedral group of the given (even, >= 2) order: r^a and r^a s."""
    if order < 2 or order % 2:
        raise NotAGroup("dihedral order must be even and at least 2")
    n = order // 2

    def enc(a, j):
        return a + n * j

    mult = [[0] * order for _ in range(order)]
    for a in range(n):
        for j in (0, 1):
            row = mult[enc(a, j)]
            for b in range(n):
                for k in (0, 1):
                    if j == 0:
                        row[enc(b, k)] = enc((a + b) % n, k)
                    else:
                        row[enc(b, k)] = enc((a - b) % n, 1 - k)
    inv = [0] * order
    for a in range(n):
        inv[enc(a, 0)] = enc((-a) % n, 0)
        inv[enc(a, 1)] = enc(a, 1)
    rot = ["1"] + ["r" if a == 1 else f"r{a}" for a in range(1, n)]
    ref = ["s"] + ["rs" if a == 1 else f"r{a}s" for a in range(1, n)]
    return GroupTable(mult, inv, 0, rot + ref, name=name or f"D{order}")


def quaternion(order: int, *, name: Optional[str] = None) -> GroupTable:
    """Generalized quaternion group of order 4m: a^i and a^i b, b^2 = a^m."""
    if order < 8 or order % 4:
        raise NotAGroup("generalized quaternion order must be 4m with m >= 2")
    m = order // 4
    n = 2 * m

    def enc(i, j):
        return i + n * j

    mult = [[0] * order for _ in range(order)]
    for i in range(n):
        for j in (0, 1):
            row = mult[enc(i, j)]
            for k in range(n):
                for l in (0, 1):
                    if j == 0:
                        row[enc(k, l)] = enc((i + k) % n, l)
                    elif l == 0:
                        row[enc(k, l)] = enc((i - k) % n, 1)
                    else:
                        row[enc(k, l)] = enc((i - k + m) % n, 0)
    inv = [0] * order
    for i in range(n):
        inv[enc(i, 0)] = enc((-i) % n, 0)
        inv[enc(i, 1)] = enc((i + m) % n, 1)
    if order == 8:
        labels = ["1", "i", "-1", "-i", "j", "k", "-j", "-k"]
    else:
        pw = ["1"] + ["a" if i == 1 else f"a{i}" for i in range(1, n)]
        labels = pw + [("b" if i == 0 else ("ab" if i == 1 else f"a{i}b")) for i in range(n)]
    return GroupTable(mult, inv, 0, labels, name=name or f"Q{order}")


def symmetric(n: int, *, name: Optional[str] = None) -> GroupTable:
    if n < 1:
        raise NotAGroup("symmetric degree must be positive")
    if n == 1:
        return group_from_table([[0]], ["()"], name=name or "S1")
    gens = [tuple([1, 0] + list(range(2, n)))]
    if n > 2:
        gens.append(tuple(list(range(1, n)) + [0]))
    return group_from_permutations(gens, name=name or f"S{n}")


def alternating(n: int, *, name: Optional[str] = None) -> GroupTable:
    if n < 3:
        return group_from_table([[0]], ["()"], name=name or f"A{n}")
    gens = []
    for k in range(2, n):
        p = list(range(n))
        p[0], p[1], p[k] = p[1], p[k], p[0]
        gens.append(tuple(p))
    return group_from_permutations(gens, name=name or f"A{n}")


def cyclic_product(orders: Sequence[int], *, name: Optional[str] = None) -> GroupTable:
    """Direct product of cyclic groups with generator labels g1, g2, ..."""
    orders = tuple(int(o) for o in orders)
    if not orders or any(o < 1 for o in orders):
        raise NotAGroup("cyclic factor orders must be positive")
    n = 1
    for o in orders:
        n *= o

    def decode(x):
        exps = []
        for o in reversed(orders):
            exps.append(x % o)
            x //= o
        return tuple(reversed(exps))

    def encode(exps):
        x = 0
        for e, o in zip(exps, orders):
            x = x * o + (e % o)
        return x

    mult = [[0] * n for _ in range(n)]
    for x in range(n):
        ex = decode(x)
        for y in range(n):
            ey = decode(y)
            mult[x][y] = encode(tuple(a + b for a, b in zip(ex, ey)))
    inv = [encode(tuple(-a for a in decode(x))) for x in range(n)]

    def lab(x):
        parts = []
        for i, e in enumerate(decode(x)):
            if e == 1:
                parts.append(f"g{i+1}")
            elif e:
                parts.append(f"g{i+1}^{e}")
        return "*".join(parts) if parts else "1"

    default = "x".join(f"C{o}" for o in orders)
    return GroupTable(mult, inv, 0, [lab(x) for x in range(n)], name=name or default)


def exponent_index(orders: Sequence[int], exps: Sequence[int]) -> int:
    """Element index in cyclic_product(orders) for the given exponent tuple."""
    x = 0
    for e, o in zip(exps, orders):
        x = x * o + (e % o)
    return x


def _q8oc4():
    q8, c4 = quaternion(8), cyclic(4)
    # identify -1 in Q8 with z^2 in C4
    return central_product_embedding(q8, c4, [(0, 0), (2, 2)], name="Q8oC4")


def _q8oq8():
    a, b = quaternion(8), quaternion(8)
    return central_product_embedding(a, b, [(0, 0), (2, 2)], name="Q8oQ8")


def _d8oc4():
    d8, c4 = dihedral(8), cyclic(4)
    # Z(D8) = {1, r^2}; r^2 has index 2, as does z^2 in C4
    return central_product_embedding(d8, c4, [(0, 0), (2, 2)], name="D8oC4")


_CENTRAL_PRODUCTS = {"q8oc4": _q8oc4, "q8oq8": _q8oq8, "d8oc4": _d8oc4}


@lru_cache(maxsize=None)
def central_product_entry(name: str):
    """Catalog central products with their canonical factor images."""
    return _CENTRAL_PRODUCTS[name.lower()]()


def catalog_names() -> tuple:
    names = [f"C{n}" for n in range(1, 65)]
    names += [f"D{2 * n}" for n in range(2, 21)]
    names += ["Q8", "Q16"]
    names += [f"S{n}" for n in range(2, 6)]
    names += [f"A{n}" for n in range(3, 6)]
    names += ["C2xC2", "C2xC2xC2", "C3xC2xC2", "C3xC3xC2", "C3xC3xC4"]
    names += ["Q8oC4", "Q8oQ8", "D8oC4"]
    return tuple(names)


@lru_cache(maxsize=None)
def catalog_group(name: str) -> GroupTable:
    """Look up (or build) a catalog group; names are case-insensitive."""
    key = name.strip().lower()
    if key in _CENTRAL_PRODUCTS:
        return central_product_entry(key).group
    if "x" in key:
        parts = key.split("x")
        if all(p.startswith("c") and p[1:].isdigit() for p in parts):
            return cyclic_product([int(p[1:]) for p in parts],
                                  name="x".join(p.upper() for p in parts))
    if key.startswith("c") and key[1:].isdigit():
        return cyclic(int(key[1:]))
    if key.startswith("d") and key[1:].isdigit():
        return dihedral(int(key[1:]))
    if key.startswith("q") and key[1:].isdigit():
        return quaternion(int(key[1:]))
    if key.startswith("s") and key[1:].isdigit():
        return symmetric(int(key[1:]))
    if key.startswith("a") and key[1:].isdigit():
        return alternating(int(key[1:]))
    raise KeyError(f"unknown catalog group {name!r}")


def group_from_json(obj, *, max_order: int = 20000) -> GroupTable:
    """Build a group from the JSON group-specification format.

    Kinds: "permutations" (degree + generators), "table" (mult + labels),
    "catalog" (name), "central_product" (left/right specs + pairing).
    """
    kind = obj.get("kind")
    if kind == "permutations":
        return group_from_permutations(obj["generators"], max_order=max_order)
    if kind == "table":
        return group_from_table(obj["mult"], obj.get("labels"))
    if kind == "catalog":
        return catalog_group(obj["name"])
    if kind == "central_product":
        left = group_from_json(obj["left"], max_order=max_order)
        right = group_from_json(obj["right"], max_order=max_order)
        pairing = [tuple(p) for p in obj["pairing"]]
        return central_product_embedding(left, right, pairing).group
    raise NotAGroup(f"unknown group kind {kind!r}")


def load_group(spec: str, *, max_order: int = 20000) -> GroupTable:
    """Resolve a CLI group spec: a catalog name or a path to a JSON file."""
    path = Path(spec)
    if spec.endswith(".json") or path.is_file():
        obj = json.loads(path.read_text(encoding="utf-8"))
        g = group_from_json(obj, max_order=max_order)
        if g.name == "G" or g.name.startswith("perm-group"):
            g.name = path.stem
        return g
    try:
        return catalog_group(spec)
    except KeyError:
        raise NotAGroup(f"{spec!r} is neither a catalog name nor a group file")
