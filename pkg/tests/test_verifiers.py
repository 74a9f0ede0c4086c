import pytest

from ringlab.core import (
    GroupSpec,
    make_matrix_ring,
    make_triangular_ring,
    make_zmod,
)
from ringlab.errors import ConstructionError, SizeCapExceeded
from ringlab.ringspec import parse_and_elaborate
from ringlab.theorems import (
    assemble_pierce,
    central_idempotent_atoms,
    group_ring_c2_iso,
    project_triangular,
    run_theorem,
    verify_clean_from_rclean,
    verify_factor,
    verify_jacobson_rclean,
    verify_local_corollary,
    verify_matrix_ring,
    verify_one_minus_x,
    verify_orthogonal_idempotent_clean,
    verify_orthogonal_set,
    verify_poly_lemma,
    verify_product,
    verify_semiperfect_group_ring,
    verify_sqrt_characterization,
    verify_triangular_n,
    verify_x_not_rclean,
)


class TestOneMinusX:
    def test_z4(self):
        rep = verify_one_minus_x(make_zmod(4))
        assert rep.verified
        assert rep.stats["elements_checked"] == 4
        assert rep.oracle_agreement

    def test_zero_ring_vacuous(self):
        rep = verify_one_minus_x(make_zmod(1))
        assert rep.verified

    def test_m2z2(self):
        rep = verify_one_minus_x(make_matrix_ring(make_zmod(2), 2))
        assert rep.verified and rep.stats["elements_checked"] == 16


class TestJacobsonRClean:
    def test_z4(self):
        rep = verify_jacobson_rclean(make_zmod(4))
        assert rep.verified
        assert rep.stats["elements_checked"] == 2  # J(Z4) = {0, 2}

    def test_z8(self):
        rep = verify_jacobson_rclean(make_zmod(8))
        assert rep.verified and rep.stats["elements_checked"] == 4


class TestFactor:
    def test_z8_mod_4(self):
        rep = verify_factor(make_zmod(8), [4])
        assert rep.verified and rep.oracle_agreement
        assert rep.stats["elements_checked"] == 4

    def test_trivial_ideal(self):
        rep = verify_factor(make_zmod(6), [])
        assert rep.verified and rep.stats["elements_checked"] == 6

    def test_z6_mod_3(self):
        rep = verify_factor(make_zmod(6), [3])
        assert rep.verified and rep.stats["elements_checked"] == 3


class TestProduct:
    def test_z4_x_z6(self):
        rep = verify_product([make_zmod(4), make_zmod(6)])
        assert rep.verified and rep.oracle_agreement
        assert rep.stats["elements_checked"] == 24

    def test_single_factor(self):
        rep = verify_product([make_zmod(5)])
        assert rep.verified

    def test_three_factors(self):
        rep = verify_product([make_zmod(2), make_zmod(2), make_zmod(3)])
        assert rep.verified and rep.stats["elements_checked"] == 12


class TestPierce:
    def test_z6_at_3(self):
        rep = assemble_pierce(make_zmod(6), 3)
        assert rep.verified and rep.oracle_agreement
        assert rep.stats["witnesses_produced"] == 6

    def test_degenerate_full_idempotent(self):
        rep = assemble_pierce(make_zmod(6), 1)
        assert rep.verified

    def test_z12_at_4(self):
        rep = assemble_pierce(make_zmod(12), 4)
        assert rep.verified

    def test_rejects_non_idempotent(self):
        with pytest.raises(ConstructionError):
            assemble_pierce(make_zmod(6), 2)

    def test_rejects_non_central(self):
        t = make_triangular_ring(make_zmod(2), 2)
        e11 = t.from_entries([[1, 0], [0, 0]])
        with pytest.raises(ConstructionError, match="not central"):
            assemble_pierce(t, e11)


class TestOrthogonalSet:
    def test_z6(self):
        rep = verify_orthogonal_set(make_zmod(6), [3, 4])
        assert rep.verified and rep.oracle_agreement

    def test_singleton_identity(self):
        z4 = make_zmod(4)
        rep = verify_orthogonal_set(z4, [1])
        assert rep.verified

    def test_z30(self):
        # 6 + 10 + 15 = 31 = 1 and all pairwise products are 0 mod 30.
        rep = verify_orthogonal_set(make_zmod(30), [6, 10, 15])
        assert rep.verified

    def test_hypothesis_failure_reported(self):
        rep = verify_orthogonal_set(make_zmod(6), [3, 3])
        assert rep.outcome == "not-applicable"
        failed = [h.name for h in rep.hypotheses if h.status == "fail"]
        assert "the e_i are pairwise orthogonal" in failed

    def test_atoms_z6_and_z30(self):
        assert central_idempotent_atoms(make_zmod(6)) == [3, 4]
        assert central_idempotent_atoms(make_zmod(30)) == [6, 10, 15]
        assert central_idempotent_atoms(make_matrix_ring(make_zmod(2), 2)) == [
            make_matrix_ring(make_zmod(2), 2).one
        ]


class TestMatrixRing:
    def test_m2z2(self):
        rep = verify_matrix_ring(make_zmod(2), 2)
        assert rep.verified and rep.stats["witnesses_produced"] == 16

    def test_m1_reduces_to_ring(self):
        rep = verify_matrix_ring(make_zmod(6), 1)
        assert rep.verified and rep.stats["elements_checked"] == 6

    def test_m2z4(self):
        rep = verify_matrix_ring(make_zmod(4), 2)
        assert rep.verified and rep.stats["witnesses_produced"] == 256

    def test_cap_exceeded_raises(self):
        with pytest.raises(SizeCapExceeded):
            verify_matrix_ring(make_zmod(4), 3)


class TestTriangular:
    def test_project_t2z2(self):
        rep = project_triangular(make_triangular_ring(make_zmod(2), 2))
        assert rep.verified and rep.oracle_agreement

    def test_project_t2z3(self):
        rep = project_triangular(make_triangular_ring(make_zmod(3), 2))
        assert rep.verified

    def test_project_requires_t2(self):
        rep = project_triangular(make_triangular_ring(make_zmod(2), 3))
        assert rep.outcome == "not-applicable"

    def test_triangular_n_lower_and_upper(self):
        for shape in ("lower", "upper"):
            rep = verify_triangular_n(make_zmod(2), 2, shape)
            assert rep.verified, shape

    def test_triangular_3(self):
        rep = verify_triangular_n(make_zmod(2), 3)
        assert rep.verified and rep.oracle_agreement

    def test_needs_n_at_least_2(self):
        with pytest.raises(ConstructionError):
            verify_triangular_n(make_zmod(2), 1)


class TestSqrtCharacterization:
    def test_z9(self):
        rep = verify_sqrt_characterization(make_zmod(9))
        assert rep.verified and rep.stats["elements_checked"] == 9

    def test_z3(self):
        assert verify_sqrt_characterization(make_zmod(3)).verified

    def test_z4_not_applicable(self):
        rep = verify_sqrt_characterization(make_zmod(4))
        assert rep.outcome == "not-applicable"


class TestCleanFromRClean:
    def test_z4(self):
        rep = verify_clean_from_rclean(make_zmod(4))
        assert rep.verified and rep.stats["witnesses_produced"] == 4

    def test_z6_extra_idempotents(self):
        rep = verify_clean_from_rclean(make_zmod(6))
        assert rep.outcome == "not-applicable"
        failed = [h.name for h in rep.hypotheses if h.status == "fail"]
        assert "0 and 1 are the only idempotents" in failed

    def test_z2_zero_takes_unit_branch(self):
        rep = verify_clean_from_rclean(make_zmod(2))
        assert rep.verified

    def test_zero_ring_refused(self):
        rep = verify_clean_from_rclean(make_zmod(1))
        assert rep.outcome == "not-applicable"


class TestLocalCorollary:
    def test_z4_both_sides_true(self):
        rep = verify_local_corollary(make_zmod(4))
        assert rep.verified

    def test_z6_both_sides_false(self):
        rep = verify_local_corollary(make_zmod(6))
        assert rep.verified  # the equivalence holds with both sides false

    def test_z2(self):
        assert verify_local_corollary(make_zmod(2)).verified

    def test_zero_ring(self):
        assert verify_local_corollary(make_zmod(1)).outcome == "not-applicable"


class TestOrthogonalIdempotentClean:
    def test_z4_exclude_trivial_vacuous(self):
        rep = verify_orthogonal_idempotent_clean(make_zmod(4))
        assert rep.verified

    def test_z2(self):
        assert verify_orthogonal_idempotent_clean(make_zmod(2)).verified

    def test_z6_nontrivial_pair_orthogonal(self):
        rep = verify_orthogonal_idempotent_clean(make_zmod(6))
        assert rep.verified

    def test_all_pairs_reading(self):
        # Z6 under the literal reading: the pair (1, 3) is not orthogonal.
        rep = verify_orthogonal_idempotent_clean(make_zmod(6), "all-pairs")
        assert rep.outcome == "not-applicable"
        # Z4 has only the trivial idempotents, and 0*1 = 0, so it applies.
        rep = verify_orthogonal_idempotent_clean(make_zmod(4), "all-pairs")
        assert rep.verified

    def test_noncommutative_rejected(self):
        rep = verify_orthogonal_idempotent_clean(make_matrix_ring(make_zmod(2), 2))
        assert rep.outcome == "not-applicable"

    def test_unknown_interpretation(self):
        with pytest.raises(ValueError):
            verify_orthogonal_idempotent_clean(make_zmod(4), "sometimes")


class TestPolyLemma:
    def test_z4_finds_one_plus_2x(self):
        rep = verify_poly_lemma(make_zmod(4), 1, 2)
        assert rep.verified
        assert rep.stats["nonconstant_regular_found"] >= 1

    def test_constant_regulars_trivial(self):
        rep = verify_poly_lemma(make_zmod(6), 0, 2)
        assert rep.verified
        assert rep.stats["regular_found"] == 6  # Z6 is regular

    def test_z6_no_nonzero_nilpotents(self):
        # Every regular f over Z6 has nilpotent higher coefficients, and the
        # only nilpotent is 0.
        rep = verify_poly_lemma(make_zmod(6), 1, 3)
        assert rep.verified

    def test_noncommutative_not_applicable(self):
        rep = verify_poly_lemma(make_matrix_ring(make_zmod(2), 2), 1, 2)
        assert rep.outcome == "not-applicable"

    def test_budget_truncation_is_reported(self):
        rep = verify_poly_lemma(make_zmod(6), 2, 2, budget=10)
        assert rep.stats["elements_checked"] == 10
        assert any("budget" in n for n in rep.notes)


class TestXNotRClean:
    def test_z4(self):
        rep = verify_x_not_rclean(make_zmod(4), 4)
        assert rep.verified
        assert rep.stats["elements_checked"] == 2  # idempotents 0 and 1

    def test_z2(self):
        assert verify_x_not_rclean(make_zmod(2), 3).verified

    def test_zero_ring_rejected(self):
        rep = verify_x_not_rclean(make_zmod(1), 3)
        assert rep.outcome == "not-applicable"

    def test_monotone_in_search_depth(self):
        # Raising the cap never turns "no witness" into "witness found".
        for n in (4, 6, 9):
            ring = make_zmod(n)
            for d_g in range(1, 7):
                assert verify_x_not_rclean(ring, d_g).verified, (n, d_g)


class TestC2GroupRing:
    def test_z9(self):
        rep = group_ring_c2_iso(make_zmod(9))
        assert rep.verified and rep.oracle_agreement
        assert rep.stats["elements_checked"] == 81

    def test_z3(self):
        rep = group_ring_c2_iso(make_zmod(3))
        assert rep.verified and rep.stats["elements_checked"] == 9

    def test_image_of_one(self):
        # phi(1) = (1, 1) is asserted inside the verifier; a failure would be
        # a counterexample outcome.
        assert group_ring_c2_iso(make_zmod(5)).verified

    def test_two_not_invertible(self):
        rep = group_ring_c2_iso(make_zmod(4))
        assert rep.outcome == "not-applicable"


class TestSemiperfectGroupRing:
    def test_z6_c2(self):
        rep = verify_semiperfect_group_ring(make_zmod(6), GroupSpec.cyclic(2))
        assert rep.verified and rep.oracle_agreement
        assert rep.stats["elements_checked"] == 36

    def test_local_ring_direct(self):
        rep = verify_semiperfect_group_ring(make_zmod(4), GroupSpec.cyclic(2))
        assert rep.verified
        assert "[1]" in " ".join(rep.notes)

    def test_z12_c2(self):
        rep = verify_semiperfect_group_ring(make_zmod(12), GroupSpec.cyclic(2))
        assert rep.verified

    def test_noncommutative_not_applicable(self):
        rep = verify_semiperfect_group_ring(
            make_matrix_ring(make_zmod(2), 2), GroupSpec.cyclic(2)
        )
        assert rep.outcome == "not-applicable"


class TestRegistry:
    def test_unknown_theorem(self):
        with pytest.raises(KeyError):
            run_theorem(make_zmod(4), "no-such-theorem")

    def test_matrix_corpus_entry_uses_own_inner(self):
        ring = parse_and_elaborate("M2(Z3)")
        rep = run_theorem(ring, "matrix-ring")
        assert rep.verified
        assert rep.stats["elements_checked"] == 81

    def test_triangular_corpus_entry(self):
        ring = parse_and_elaborate("T3(Z2)")
        rep = run_theorem(ring, "triangular-n")
        assert rep.verified

    def test_report_labels_use_subject_spec(self):
        ring = parse_and_elaborate("Z4")
        rep = run_theorem(ring, "matrix-ring", spec_label="Z4")
        assert rep.ring_spec == "Z4"
