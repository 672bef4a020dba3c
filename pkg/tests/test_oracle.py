"""The brute-force enumeration against an even more naive reference, plus
transversal search and the property suite."""

import pytest

from setdirect.catalog import catalog_group, cyclic, quaternion, symmetric
from setdirect.errors import NotAbelian, SearchSpaceTooLarge
from setdirect.groups import center, generated_subgroup, set_product
from setdirect.oracle import (
    enumerate_abelian_factorizations,
    enumerate_setdirect,
    find_normal_transversal,
    property_suite,
)

from helpers import naive_factorizations


SMALL_GROUPS = ["C4", "C6", "C8", "C12", "S3", "S4", "D8", "D10", "D12", "Q8",
                "Q16", "A4", "C2xC2", "C2xC2xC2", "Q8oC4"]


class TestEnumeration:
    @pytest.mark.parametrize("name", SMALL_GROUPS)
    def test_matches_naive_reference(self, name):
        g = catalog_group(name)
        naive = naive_factorizations(g)
        res = enumerate_setdirect(g)
        got = {f.unordered_key() for f in res.factorizations}
        assert got == naive
        assert res.total == len(naive)

    def test_counts_without_expansion_match(self):
        # arithmetic totals equal materialized totals
        for name in ["C12", "C2xC2xC2", "D12"]:
            g = catalog_group(name)
            res = enumerate_setdirect(g)
            assert res.total == len(res.factorizations)

    def test_c4_normalized_nontrivial(self):
        g = cyclic(4)
        res = enumerate_setdirect(g, normalized_only=True, nontrivial_only=True)
        got = {f.unordered_key() for f in res.factorizations}
        assert got == {
            (g.subset([0, 1]).mask, g.subset([0, 2]).mask),
            (g.subset([0, 2]).mask, g.subset([0, 3]).mask),
        }

    def test_s3_only_trivial(self):
        res = enumerate_setdirect(symmetric(3), nontrivial_only=True)
        assert res.factorizations == []
        assert res.total == 1

    def test_a5_no_nontrivial(self):
        res = enumerate_setdirect(catalog_group("A5"), nontrivial_only=True)
        assert res.factorizations == []
        assert res.elapsed < 60

    def test_every_pair_covers_and_multiplies(self):
        g = catalog_group("C12")
        res = enumerate_setdirect(g)
        for f in res.factorizations:
            assert len(f.x) * len(f.y) == g.order
            prod, counts = set_product(g, f.x, f.y)
            assert prod.mask == g.full_mask
            assert all(v == 1 for v in counts.values())

    def test_candidate_volume_bound(self):
        with pytest.raises(SearchSpaceTooLarge):
            enumerate_setdirect(cyclic(64))  # the (8,8) split alone is 5e8
        with pytest.raises(SearchSpaceTooLarge):
            enumerate_setdirect(cyclic(24), candidate_cap=100)

    def test_prime_cyclic_over_26_classes_is_fine(self):
        res = enumerate_setdirect(cyclic(31), nontrivial_only=True)
        assert res.factorizations == [] and res.total == 31

    def test_normalized_entries_are_normalized(self):
        g = catalog_group("C2xC2xC2")
        res = enumerate_setdirect(g, normalized_only=True)
        assert all(f.is_normalized() for f in res.factorizations)
        assert res.normalized == len(res.factorizations)


class TestAbelianEnumeration:
    def test_c2(self):
        res = enumerate_abelian_factorizations(cyclic(2), normalized_only=False)
        assert res.nontrivial == 0
        assert res.total == 2  # {1} x Z and {z} x Z as unordered pairs

    def test_c4_pairs(self):
        res = enumerate_abelian_factorizations(cyclic(4))
        assert res.normalized == 3

    def test_transversal_member_of_list(self):
        g = catalog_group("C3xC2xC2")
        res = enumerate_abelian_factorizations(g)
        g1 = 2  # exponent (1,0,0) in orders (3,2,2) encodes to 4? compute below
        from setdirect.catalog import exponent_index

        orders = (3, 2, 2)
        sub = generated_subgroup(g, g.subset([exponent_index(orders, (1, 0, 0))]))
        y = g.subset(
            [
                0,
                exponent_index(orders, (1, 1, 0)),
                exponent_index(orders, (1, 0, 1)),
                exponent_index(orders, (1, 1, 1)),
            ]
        )
        key = (min(sub.mask, y.mask), max(sub.mask, y.mask))
        assert key in {f.unordered_key() for f in res.factorizations}

    def test_rejects_nonabelian(self):
        with pytest.raises(NotAbelian):
            enumerate_abelian_factorizations(symmetric(3))

    def test_order_bound(self):
        with pytest.raises(SearchSpaceTooLarge):
            enumerate_abelian_factorizations(cyclic(65), max_order=64)


class TestTransversalSearch:
    def test_q8_absent(self):
        g = quaternion(8)
        assert find_normal_transversal(g, center(g)) is None

    def test_abelian_always_present(self):
        g = cyclic(12)
        z = generated_subgroup(g, g.subset([4]))
        t = find_normal_transversal(g, z)
        assert t is not None
        assert len(t) == 4

    def test_transversal_property(self):
        g = catalog_group("Q8oC4")
        from setdirect.central import central_subgroups

        for z in central_subgroups(g):
            t = find_normal_transversal(g, z)
            if t is None:
                continue
            prod, counts = set_product(g, z, t)
            assert prod.mask == g.full_mask
            assert all(v == 1 for v in counts.values())

    def test_trivial_z(self):
        g = symmetric(3)
        t = find_normal_transversal(g, g.identity_subset())
        assert t is not None and t.mask == g.full_mask


class TestPropertySuite:
    @pytest.mark.parametrize("name", ["D10", "A5", "C12", "S4", "Q8oC4"])
    def test_passes(self, name):
        rep = property_suite(catalog_group(name), samples=60, seed=3)
        assert rep.passed, [(c.name, c.detail) for c in rep.checks if not c.passed]

    def test_a5_runs_class_pair_check(self):
        rep = property_suite(catalog_group("A5"), samples=10, seed=0)
        names = [c.name for c in rep.checks]
        assert "class_pairs_nondirect" in names

    def test_d10_reports_direct_witness(self):
        rep = property_suite(catalog_group("D10"), samples=10, seed=0)
        check = next(c for c in rep.checks if c.name == "class_pairs_nondirect")
        assert check.passed
        assert "direct class pair" in check.detail
