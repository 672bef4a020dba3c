"""Directness tests, the structural verifier, factorization systems,
and the constructive routines."""

import pytest

from setdirect.catalog import (
    catalog_group,
    central_product_entry,
    cyclic,
    cyclic_product,
    dihedral,
    exponent_index,
    quaternion,
    symmetric,
)
from setdirect.central import is_central_product, z_orbits
from setdirect.errors import (
    ContainmentViolated,
    EmptySet,
    HypothesisViolated,
    IndexMismatch,
    InvalidChoice,
    NotAbelian,
    NotADirectFactorizationOfZ,
    NotCertified,
    NotNormal,
    NotSemiRegular,
    OrderNotPrimePowerAtLeastSquare,
    SystemMismatch,
)
from setdirect.factor import (
    FactorizationSystem,
    certify,
    check_factorization_system,
    construct_from_system,
    cyclic_center_factorization,
    derive_system,
    induced_decompositions,
    is_direct,
    kernel,
    normalize,
    prime_power_factorization,
    system_for_decomposition,
    transversal_factorization,
    verify_main_theorem,
)
from setdirect.groups import (
    center,
    commutator_set,
    conjugacy_classes,
    generated_subgroup,
    product_subset,
    subgroup_view,
)

from helpers import naive_is_direct


class TestIsDirect:
    def test_identity_times_group(self):
        g = symmetric(4)
        rep = is_direct(g, g.identity_subset(), g.full_subset())
        assert rep.verdict

    def test_d10_class_pair(self):
        g = dihedral(10)
        rep = is_direct(g, g.subset([1, 4]), g.subset([2, 3]))
        assert rep.verdict
        assert rep.multiplicity_ok and rep.difference_ok
        assert rep.partition_ok and rep.cardinality_ok

    def test_s3_cycles_times_transpositions(self):
        g = symmetric(3)
        part = conjugacy_classes(g)
        cyc = next(c for c in part.classes if len(c) == 2)
        tra = next(c for c in part.classes if len(c) == 3)
        rep = is_direct(g, cyc, tra)
        assert not rep.verdict

    def test_rejects_nonnormal(self):
        g = symmetric(3)
        with pytest.raises(NotNormal):
            is_direct(g, g.subset([g.index_of_label("(0 1)")]), g.full_subset())

    def test_rejects_empty(self):
        g = cyclic(3)
        with pytest.raises(EmptySet):
            is_direct(g, g.empty_subset(), g.full_subset())


class TestVerifyMainTheorem:
    def test_c4_positive(self):
        g = cyclic(4)
        rep = verify_main_theorem(g, g.subset([0, 2]), g.subset([0, 1]))
        assert rep.verdict
        assert rep.m.members() == (0, 2)
        assert rep.n.members() == (0, 1, 2, 3)
        assert rep.z.members() == (0, 2)
        for sl in rep.x_slices.values():
            assert sl.members() == (0, 2)
        for sl in rep.y_slices.values():
            assert len(sl) == 1

    def test_degenerate_full_times_identity(self):
        g = quaternion(8)
        rep = verify_main_theorem(g, g.full_subset(), g.identity_subset())
        assert rep.verdict
        assert rep.z.members() == (0,)

    def test_nonnormal_errors(self):
        g = symmetric(3)
        a3 = generated_subgroup(g, g.subset([g.index_of_label("(0 1 2)")]))
        y = g.subset([0, g.index_of_label("(0 1)")])
        with pytest.raises(NotNormal):
            verify_main_theorem(g, a3, y)

    def test_collision_pair(self):
        g = cyclic(4)
        rep = verify_main_theorem(g, g.subset([0, 1]), g.subset([0, 1]))
        assert not rep.verdict
        assert rep.condition_a and not rep.condition_b
        assert rep.b_witness is not None

    def test_direct_but_not_covering(self):
        g = dihedral(10)
        rep = verify_main_theorem(g, g.subset([1, 4]), g.subset([2, 3]))
        assert not rep.verdict
        assert not rep.product_is_group
        assert rep.central_failure == "ProductNotG"

    def test_empty_slice_reported(self):
        # X misses the coset of Z inside M entirely only when XY != G;
        # build one via a sparse normal subset of C8
        g = cyclic(8)
        rep = verify_main_theorem(g, g.subset([2, 6]), g.subset([0, 4]))
        assert not rep.verdict
        assert any(not s.mask for s in rep.x_slices.values()) or rep.b_witness


class TestKernel:
    def test_full_set(self):
        z = cyclic(6)
        assert kernel(z, z.full_subset()).mask == z.full_mask

    def test_singleton(self):
        z = cyclic(6)
        assert kernel(z, z.subset([4])).members() == (0,)

    def test_c6_half(self):
        z = cyclic(6)
        assert kernel(z, z.subset([0, 3])).members() == (0, 3)

    def test_rejects_nonabelian(self):
        g = symmetric(3)
        with pytest.raises(NotAbelian):
            kernel(g, g.identity_subset())

    def test_rejects_empty(self):
        z = cyclic(4)
        with pytest.raises(EmptySet):
            kernel(z, z.empty_subset())


class TestFactorizationSystems:
    def test_c4_valid(self):
        z = cyclic(4)
        sys_ = FactorizationSystem(
            z,
            (z.subset([0]),),
            (z.subset([0]),),
            (z.subset([0, 2]),),
            (z.subset([0, 1]),),
        )
        rep = check_factorization_system(sys_)
        assert rep.valid
        assert rep.arithmetic_ok and rep.separation_ok and rep.intersections_trivial

    def test_obstruction_case_sizes(self):
        orders = [3, 3, 2]
        z = cyclic_product(orders)
        g1 = exponent_index(orders, (1, 0, 0))
        y1 = exponent_index(orders, (1, 0, 1))
        y2 = exponent_index(orders, (0, 1, 1))
        a = generated_subgroup(z, z.subset([g1]))
        b = z.subset([0, y1, y2])
        sys_ = FactorizationSystem(z, (z.subset([0]),), (z.subset([0]),), (a,), (b,))
        rep = check_factorization_system(sys_)
        assert not rep.valid
        assert rep.product_failures == ((0, 0),)

    def test_positive_transversal_case(self):
        orders = [3, 2, 2]
        z = cyclic_product(orders)
        g1 = exponent_index(orders, (1, 0, 0))
        y = z.subset(
            [
                0,
                exponent_index(orders, (1, 1, 0)),
                exponent_index(orders, (1, 0, 1)),
                exponent_index(orders, (1, 1, 1)),
            ]
        )
        a = generated_subgroup(z, z.subset([g1]))
        sys_ = FactorizationSystem(z, (a,), (z.subset([0]),), (a,), (y,))
        rep = check_factorization_system(sys_)
        assert rep.valid

    def test_index_mismatch(self):
        z = cyclic(4)
        sys_ = FactorizationSystem(z, (), (z.subset([0]),), (z.subset([0, 2]),), ())
        with pytest.raises(IndexMismatch):
            check_factorization_system(sys_)


class TestConstructFromSystem:
    def test_trivial_decomposition(self):
        g = quaternion(8)
        cp = is_central_product(g, g.full_subset(), g.identity_subset()).decomposition
        om = z_orbits(g, cp.m, cp.z)
        on = z_orbits(g, cp.n, cp.z)
        sys_ = system_for_decomposition(
            g,
            cp,
            [g.identity_subset()] * len(om.orbits),
            [g.identity_subset()] * len(on.orbits),
        )
        f = construct_from_system(g, cp, sys_)
        assert f.certified
        assert f.y.members() == (0,)
        assert len(f.x) == 8

    def test_c4_reconstruction(self):
        g = cyclic(4)
        m = g.subset([0, 2])
        cp = is_central_product(g, g.full_subset(), g.full_subset()).decomposition
        om = z_orbits(g, cp.m, cp.z)
        sys_ = system_for_decomposition(
            g, cp, [g.subset([0, 2])], [g.subset([0, 1])]
        )
        f = construct_from_system(g, cp, sys_)
        assert f.certified
        assert f.unordered_key() == (
            g.subset([0, 1]).mask,
            g.subset([0, 2]).mask,
        )

    def test_q8oc4_constant_system(self):
        emb = central_product_entry("q8oc4")
        g = emb.group
        cp = is_central_product(g, emb.m_image, emb.n_image).decomposition
        om = z_orbits(g, cp.m, cp.z)
        on = z_orbits(g, cp.n, cp.z)
        sys_ = system_for_decomposition(
            g,
            cp,
            [cp.z] * len(om.orbits),
            [g.identity_subset()] * len(on.orbits),
        )
        f = construct_from_system(g, cp, sys_)
        assert f.certified
        assert len(f.x) * len(f.y) == 16

    def test_wrong_stabilizers_rejected(self):
        emb = central_product_entry("q8oc4")
        g = emb.group
        cp = is_central_product(g, emb.m_image, emb.n_image).decomposition
        om = z_orbits(g, cp.m, cp.z)
        on = z_orbits(g, cp.n, cp.z)
        # A_i = {1} cannot absorb the nontrivial orbit stabilizers on the
        # quaternion side, so the system definition fails
        with pytest.raises(SystemMismatch):
            construct_from_system(
                g,
                cp,
                system_for_decomposition(
                    g,
                    cp,
                    [g.identity_subset()] * len(om.orbits),
                    [cp.z] * len(on.orbits),
                ),
            )

    def test_invalid_choice(self):
        g = cyclic(4)
        cp = is_central_product(g, g.full_subset(), g.full_subset()).decomposition
        sys_ = system_for_decomposition(g, cp, [g.subset([0, 2])], [g.subset([0, 1])])
        with pytest.raises(InvalidChoice):
            construct_from_system(g, cp, sys_, ((99,), (0,)))


class TestTransversal:
    def test_abelian_factor_always_works(self):
        emb = central_product_entry("q8oc4")
        g = emb.group
        cp = is_central_product(g, emb.m_image, emb.n_image).decomposition
        res = transversal_factorization(g, cp)
        assert res
        assert res.factorization.x.mask == cp.m.mask
        assert res.class_counts.multiplicative

    def test_q8_negative(self):
        g = quaternion(8)
        cp = is_central_product(g, center(g), g.full_subset()).decomposition
        res = transversal_factorization(g, cp)
        assert not res
        assert res.class_counts.k_g == 5
        assert res.class_counts.k_z * res.class_counts.k_quotient == 8
        assert res.violating_orbit is not None

    def test_trivial_z(self):
        g = symmetric(4)
        cp = is_central_product(g, g.full_subset(), g.identity_subset()).decomposition
        res = transversal_factorization(g, cp)
        assert res
        assert res.factorization.y.members() == (0,)


class TestCyclicCenter:
    def test_q8oc4_succeeds(self):
        emb = central_product_entry("q8oc4")
        g = emb.group
        cp = is_central_product(g, emb.m_image, emb.n_image).decomposition
        res = cyclic_center_factorization(g, cp, cp.z, g.identity_subset())
        assert res
        f = res.factorization
        assert (f.x.mask & cp.z.mask) == cp.z.mask
        assert (f.y.mask & cp.z.mask) == 1 << g.identity

    def test_q8oq8_absent(self):
        emb = central_product_entry("q8oq8")
        g = emb.group
        cp = is_central_product(g, emb.m_image, emb.n_image).decomposition
        res = cyclic_center_factorization(g, cp, cp.z, g.identity_subset())
        assert not res
        assert len(res.commutator_intersection) == 2

    def test_trivial_z(self):
        g = symmetric(3)
        cp = is_central_product(g, g.full_subset(), g.identity_subset()).decomposition
        res = cyclic_center_factorization(
            g, cp, g.identity_subset(), g.identity_subset()
        )
        assert res
        assert res.factorization.x.mask == g.full_mask

    def test_bad_z_factorization(self):
        emb = central_product_entry("q8oc4")
        g = emb.group
        cp = is_central_product(g, emb.m_image, emb.n_image).decomposition
        with pytest.raises(NotADirectFactorizationOfZ):
            cyclic_center_factorization(g, cp, cp.z, cp.z)

    def test_hypothesis_violated(self):
        # commutator condition passes but X0 cannot absorb [M,M] & Z
        emb = central_product_entry("q8oc4")
        g = emb.group
        cp = is_central_product(g, emb.m_image, emb.n_image).decomposition
        with pytest.raises(HypothesisViolated):
            cyclic_center_factorization(g, cp, g.identity_subset(), cp.z)


class TestPrimePower:
    @pytest.mark.parametrize("n,p", [(4, 2), (8, 2), (9, 3), (16, 2), (27, 3)])
    def test_cyclic_prime_powers(self, n, p):
        g = cyclic(n)
        f = prime_power_factorization(g, 1)
        assert f.certified
        assert f.is_nontrivial()
        assert f.x.members() == tuple(range(0, n, p))
        assert f.y.members() == tuple(range(p))

    def test_c4(self):
        g = cyclic(4)
        f = prime_power_factorization(g, 1)
        assert f.x.members() == (0, 2) and f.y.members() == (0, 1)

    def test_c9(self):
        g = cyclic(9)
        f = prime_power_factorization(g, 1)
        assert f.x.members() == (0, 3, 6) and f.y.members() == (0, 1, 2)
        prod, counts = __import__("setdirect.groups", fromlist=["set_product"]).set_product(
            g, f.x, f.y
        )
        assert len(prod) == 9 and all(v == 1 for v in counts.values())

    def test_q8_minus_one_rejected(self):
        g = quaternion(8)
        with pytest.raises(NotSemiRegular):
            prime_power_factorization(g, 2)

    def test_prime_order_rejected(self):
        g = cyclic(6)
        # z^2 has order 3 (prime) and is semi-regular in the abelian group
        with pytest.raises(OrderNotPrimePowerAtLeastSquare):
            prime_power_factorization(g, 2)

    def test_q8oc4_semiregular_element(self):
        g = central_product_entry("q8oc4").group
        from setdirect.central import semi_regular_elements

        z = min(semi_regular_elements(g).members())
        f = prime_power_factorization(g, z)
        assert f.certified and f.is_nontrivial()
        from setdirect.groups import _is_subgroup_mask

        assert not _is_subgroup_mask(g, f.y.mask)


class TestNormalize:
    def test_idempotent(self):
        g = cyclic(4)
        f = certify(g, g.subset([0, 2]), g.subset([0, 1]))
        assert normalize(g, f) is normalize(g, normalize(g, f))

    def test_shifted_pair(self):
        g = cyclic(4)
        f = certify(g, g.subset([1, 3]), g.subset([0, 1]))
        nf = normalize(g, f)
        assert nf.is_normalized()
        assert nf.x.members() == (0, 2) and nf.y.members() == (0, 3)

    def test_output_contains_identity(self):
        g = catalog_group("C2xC2")
        f = certify(g, g.subset([1, 3]), g.subset([2, 3]))
        assert f.certified
        nf = normalize(g, f)
        assert 0 in nf.x and 0 in nf.y

    def test_requires_certified_cover(self):
        g = dihedral(10)
        f = certify(g, g.subset([1, 4]), g.subset([2, 3]))
        assert not f.covers_group()
        with pytest.raises(NotCertified):
            normalize(g, f)


class TestInduced:
    def test_c4(self):
        g = cyclic(4)
        f = certify(g, g.subset([0, 2]), g.subset([0, 1]))
        cp = is_central_product(
            g, generated_subgroup(g, f.x), generated_subgroup(g, f.y)
        ).decomposition
        ind = induced_decompositions(g, f, cp)
        assert ind.m_factorization.certified and ind.n_factorization.certified
        # N = Y x (X & Z) seen inside the view of N = C4
        n_push = ind.n_view.push(ind.n_factorization.y)
        assert n_push.members() == (0, 2)

    def test_trivial(self):
        g = quaternion(8)
        f = certify(g, g.full_subset(), g.identity_subset())
        cp = is_central_product(g, g.full_subset(), g.identity_subset()).decomposition
        ind = induced_decompositions(g, f, cp)
        assert ind.m_factorization.x.mask == ind.m_view.table.full_mask

    def test_containment_enforced(self):
        g = cyclic(4)
        f = certify(g, g.subset([0, 2]), g.subset([0, 1]))
        cp = is_central_product(
            g, g.full_subset(), g.identity_subset()
        ).decomposition
        with pytest.raises(ContainmentViolated):
            induced_decompositions(g, f, cp)


class TestDeriveSystem:
    def test_roundtrip_on_oracle_pairs(self):
        from setdirect.oracle import enumerate_setdirect

        for name in ["C8", "C12", "C2xC2xC2", "Q8oC4"]:
            g = catalog_group(name)
            res = enumerate_setdirect(g, normalized_only=True)
            for f in res.factorizations:
                cp, sys_, choices = derive_system(g, f)
                rebuilt = construct_from_system(g, cp, sys_, choices)
                assert rebuilt.x.mask == f.x.mask
                assert rebuilt.y.mask == f.y.mask
