import numpy as np
import pytest

from ringlab.core import (
    GroupSpec,
    check_ring_laws,
    make_corner,
    make_group_ring,
    make_matrix_ring,
    make_product,
    make_trunc_poly,
    make_triangular_ring,
    make_zmod,
)
from ringlab.errors import ConstructionError, SizeCapExceeded


class TestZMod:
    def test_mod4_arithmetic(self):
        z4 = make_zmod(4)
        assert z4.mul(2, 2) == 0
        assert z4.add(3, 2) == 1

    def test_zero_ring(self):
        z1 = make_zmod(1)
        assert z1.zero == z1.one == 0
        assert z1.order == 1

    def test_mod6(self):
        assert make_zmod(6).mul(3, 4) == 0

    def test_rejects_zero(self):
        with pytest.raises(ConstructionError):
            make_zmod(0)

    def test_index_bounds_checked(self):
        z4 = make_zmod(4)
        with pytest.raises(IndexError):
            z4.add(4, 0)
        with pytest.raises(IndexError):
            z4.mul(0, -1)


class TestProduct:
    def test_z2_x_z3(self):
        p = make_product([make_zmod(2), make_zmod(3)])
        assert p.order == 6
        assert p.codec.decode(p.one) == (1, 1)

    def test_order_multiplies(self):
        p = make_product([make_zmod(4), make_zmod(6)])
        assert p.order == 24

    def test_singleton_product_matches_factor(self):
        z5 = make_zmod(5)
        p = make_product([z5])
        assert p.order == 5
        for a in range(5):
            for b in range(5):
                assert p.add(a, b) == z5.add(a, b)
                assert p.mul(a, b) == z5.mul(a, b)

    def test_componentwise_agreement(self):
        r, s = make_zmod(4), make_zmod(6)
        p = make_product([r, s])
        for a in range(p.order):
            for b in range(p.order):
                a1, a2 = p.codec.decode(a)
                b1, b2 = p.codec.decode(b)
                assert p.codec.decode(p.add(a, b)) == (r.add(a1, b1), s.add(a2, b2))
                assert p.codec.decode(p.mul(a, b)) == (r.mul(a1, b1), s.mul(a2, b2))

    def test_empty_rejected(self):
        with pytest.raises(ConstructionError):
            make_product([])


class TestMatrix:
    def test_m2_z2_order(self):
        assert make_matrix_ring(make_zmod(2), 2).order == 16

    def test_identity_is_diagonal(self):
        m = make_matrix_ring(make_zmod(2), 2)
        assert m.one == m.from_entries([[1, 0], [0, 1]])

    def test_unit_matrix_products(self):
        # Direct 2x2 multiplication: E11*E12 = E12 and E12*E11 = 0.
        m = make_matrix_ring(make_zmod(2), 2)
        e11 = m.from_entries([[1, 0], [0, 0]])
        e12 = m.from_entries([[0, 1], [0, 0]])
        assert m.mul(e11, e12) == e12
        assert m.mul(e12, e11) == m.zero

    def test_against_naive_multiplication(self):
        # Independent oracle: plain mod-3 matrix product.
        m = make_matrix_ring(make_zmod(3), 2)
        rng = np.random.default_rng(7)
        for _ in range(50):
            a = rng.integers(0, 3, size=(2, 2))
            b = rng.integers(0, 3, size=(2, 2))
            expected = (a @ b) % 3
            got = m.mul(m.from_entries(a.tolist()), m.from_entries(b.tolist()))
            assert got == m.from_entries(expected.tolist())

    def test_size_cap(self):
        with pytest.raises(SizeCapExceeded) as err:
            make_matrix_ring(make_zmod(4), 3, size_cap=20_000)
        assert err.value.required == 4 ** 9
        assert err.value.cap == 20_000


class TestTriangular:
    def test_t2_z2_order(self):
        assert make_triangular_ring(make_zmod(2), 2).order == 8

    def test_closure_under_multiplication(self):
        t = make_triangular_ring(make_zmod(2), 2)
        for a in range(t.order):
            for b in range(t.order):
                c = t.mul(a, b)
                assert t.entry(c, 0, 1) == 0  # off-shape entry stays zero

    def test_spec_idempotent(self):
        t = make_triangular_ring(make_zmod(2), 2)
        x = t.from_entries([[1, 0], [1, 0]])
        assert t.mul(x, x) == x

    def test_upper_shape(self):
        t = make_triangular_ring(make_zmod(2), 2, "upper")
        assert t.order == 8
        assert t.entry(t.one, 1, 0) == 0

    def test_off_shape_entry_rejected(self):
        t = make_triangular_ring(make_zmod(2), 2)
        with pytest.raises(ValueError):
            t.from_entries([[1, 1], [0, 1]])


class TestGroupRing:
    def test_z9_c2_order(self):
        rg = make_group_ring(make_zmod(9), GroupSpec.cyclic(2))
        assert rg.order == 81

    def test_identity_acts_trivially(self):
        rg = make_group_ring(make_zmod(9), GroupSpec.cyclic(2))
        for x in range(rg.order):
            assert rg.mul(rg.one, x) == x
            assert rg.mul(x, rg.one) == x

    def test_one_plus_g_times_one_minus_g(self):
        # Convolution with g^2 = 1: (1+g)(1-g) = 1 - g^2 = 0.
        rg = make_group_ring(make_zmod(9), GroupSpec.cyclic(2))
        a = rg.from_coefficients([1, 1])
        b = rg.from_coefficients([1, 8])
        assert rg.mul(a, b) == rg.zero

    def test_invalid_cayley_table(self):
        with pytest.raises(ConstructionError):
            GroupSpec.from_table([[0, 1], [0, 1]])

    def test_cap(self):
        with pytest.raises(SizeCapExceeded):
            make_group_ring(make_zmod(16), GroupSpec.cyclic(4), size_cap=20_000)


class TestTruncPoly:
    def test_order(self):
        assert make_trunc_poly(make_zmod(4), 2).order == 16

    def test_x_squared_is_zero(self):
        t = make_trunc_poly(make_zmod(4), 2)
        x = t.codec.encode([0, 1])
        assert t.mul(x, x) == t.zero

    def test_one_plus_x_times_one_minus_x(self):
        t = make_trunc_poly(make_zmod(4), 2)
        a = t.codec.encode([1, 1])
        b = t.codec.encode([1, 3])
        assert t.mul(a, b) == t.one


class TestCorner:
    def test_corner_z6_3(self):
        c = make_corner(make_zmod(6), 3)
        assert [c.lift(i) for i in range(c.order)] == [0, 3]
        assert c.lift(c.one) == 3
        # Isomorphic to Z2: 3 + 3 = 0.
        assert c.add(c.one, c.one) == c.zero

    def test_corner_z6_4(self):
        c = make_corner(make_zmod(6), 4)
        assert [c.lift(i) for i in range(c.order)] == [0, 2, 4]
        assert c.lift(c.one) == 4

    def test_full_corner_is_the_ring(self):
        z6 = make_zmod(6)
        c = make_corner(z6, 1)
        assert c.order == 6
        for a in range(6):
            for b in range(6):
                assert c.lift(c.mul(c.from_inner[a], c.from_inner[b])) == z6.mul(a, b)

    def test_non_idempotent_rejected(self):
        with pytest.raises(ConstructionError, match="not idempotent"):
            make_corner(make_zmod(6), 2)

    def test_non_central_rejected_with_witness(self):
        t = make_triangular_ring(make_zmod(2), 2)
        e11 = t.from_entries([[1, 0], [0, 0]])
        with pytest.raises(ConstructionError, match="not central"):
            make_corner(t, e11)

    def test_arithmetic_agrees_through_index_map(self):
        z12 = make_zmod(12)
        c = make_corner(z12, 4)
        for a in range(c.order):
            for b in range(c.order):
                assert c.lift(c.add(a, b)) == z12.add(c.lift(a), c.lift(b))
                assert c.lift(c.mul(a, b)) == z12.mul(c.lift(a), c.lift(b))


class TestLawsAndTables:
    @pytest.mark.parametrize("spec", [
        "Z2", "Z4", "Z6", "Z9", "Z2 x Z3", "M2(Z2)", "T2(Z2)", "T2(Z2)^upper",
        "Z3[C2]", "Z4[x]/x^2", "Z8/(4)", "corner(Z6, 3)",
    ])
    def test_ring_laws_exhaustive(self, small_corpus, spec):
        assert check_ring_laws(small_corpus[spec]) == []

    def test_ring_laws_sampled_above_cap(self):
        ring = make_zmod(1000)
        assert check_ring_laws(ring, exhaustive_cap=512, samples=5000) == []

    def test_structural_matches_tables(self):
        # The table-free path must agree with the memoized one.
        with_tables = make_matrix_ring(make_zmod(2), 2)
        bare = make_matrix_ring(make_zmod(2), 2, table_cap=0)
        assert not bare.has_tables and with_tables.has_tables
        for a in range(16):
            for b in range(16):
                assert bare.add(a, b) == with_tables.add(a, b)
                assert bare.mul(a, b) == with_tables.mul(a, b)
            assert bare.neg(a) == with_tables.neg(a)

    def test_memoized_construction_reuse(self):
        assert make_zmod(7) is make_zmod(7)
        assert make_zmod(7, table_cap=0) is not make_zmod(7)
