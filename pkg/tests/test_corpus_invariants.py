"""Whole-corpus properties: witness soundness, implication chains, radicals."""
from ringlab import classify as cl
from ringlab.classify import ring_analysis
from ringlab.core import check_ring_laws, ideal_closure
from ringlab.corpus import DEFAULT_CORPUS


def test_ring_laws_hold_on_whole_corpus(corpus):
    for spec, ring in corpus.items():
        assert check_ring_laws(ring) == [], spec


def test_witness_soundness_everywhere(corpus):
    # Every returned witness re-verifies by direct arithmetic.
    for spec, ring in corpus.items():
        for x in range(ring.order):
            ec = cl.classify_element(ring, x)
            if ec.inverse is not None:
                assert ring.mul(x, ec.inverse) == ring.one
                assert ring.mul(ec.inverse, x) == ring.one
            if ec.nilpotency_exponent is not None:
                power = x
                for _ in range(ec.nilpotency_exponent - 1):
                    power = ring.mul(power, x)
                assert power == ring.zero
            if ec.regular_witness is not None:
                y = ec.regular_witness.y
                assert ring.mul(ring.mul(x, y), x) == x
            if ec.unit_regular_witness is not None:
                u = ec.unit_regular_witness
                assert ring.mul(ring.mul(x, u), x) == x
                assert cl.is_unit(ring, u) is not None
            if ec.clean_witness is not None:
                w = ec.clean_witness
                assert ring.add(w.u, w.e) == x
                assert ring.mul(w.e, w.e) == w.e
                assert cl.is_unit(ring, w.u) is not None
            if ec.r_clean_witness is not None:
                w = ec.r_clean_witness
                assert ring.add(w.r, w.e) == x
                assert ring.mul(w.e, w.e) == w.e
                assert ring.mul(ring.mul(w.r, w.y), w.r) == w.r
            if ec.exchange_witness is not None:
                e = ec.exchange_witness
                assert ring.mul(e, e) == e


def test_implication_chain_on_every_element(corpus):
    # unit => regular, clean, r-clean; idempotent => regular, r-clean;
    # regular => r-clean; unit-regular => regular; clean => exchange.
    for spec, ring in corpus.items():
        for x in range(ring.order):
            ec = cl.classify_element(ring, x)
            if ec.unit:
                assert ec.regular and ec.clean and ec.r_clean, (spec, x)
            if ec.idempotent:
                assert ec.regular and ec.r_clean, (spec, x)
            if ec.regular:
                assert ec.r_clean, (spec, x)
            if ec.unit_regular:
                assert ec.regular, (spec, x)
            if ec.clean:
                assert ec.r_clean and ec.exchange, (spec, x)


def test_idempotents_regular_via_themselves(corpus):
    # e*e*e = e, so idempotents always admit the witness y = e; the returned
    # y is the least valid one, hence <= e.
    for spec, ring in corpus.items():
        for e in ring_analysis(ring).idempotents:
            w = cl.regular_witness(ring, e)
            assert w is not None and w.y <= e


def test_jacobson_radical_is_nil_ideal(corpus):
    for spec, ring in corpus.items():
        jac = cl.jacobson_radical(ring)
        closure = ideal_closure(ring, jac)
        assert sorted(closure.elements) == jac, spec
        for x in jac:
            assert cl.is_nilpotent(ring, x) is not None, (spec, x)


def test_clean_iff_exchange_for_commutative_corpus_rings(corpus):
    # With central idempotents, clean and exchange coincide ring-wide.
    for spec, ring in corpus.items():
        a = ring_analysis(ring)
        if not a.is_commutative:
            continue
        clean_set = {x for x in range(ring.order) if a.clean_ue[0][x] >= 0}
        exchange_set = {x for x in range(ring.order) if a.exchange_e[x] >= 0}
        all_elements = set(range(ring.order))
        assert (clean_set == all_elements) == (exchange_set == all_elements), spec


def test_every_corpus_ring_is_directly_finite(corpus):
    for spec, ring in corpus.items():
        ok, pair = cl.is_directly_finite(ring)
        assert ok and pair is None, spec


def test_finite_rings_are_clean_and_r_clean(corpus):
    # finite => semiperfect => clean => r-clean: the separation between clean
    # and r-clean (Bergman's example) is invisible at finite scale.
    for spec, ring in corpus.items():
        profile = cl.ring_profile(ring)
        assert profile.clean and profile.r_clean and profile.semiperfect, spec


def test_corpus_has_expected_size():
    assert len(DEFAULT_CORPUS) == 26  # Z2..Z12 expanded plus 15 constructions


def test_x_minus_e_search_monotone_in_depth(corpus):
    # Raising the degree cap never turns "no witness for x - e" into a
    # witness, on any commutative corpus ring, up to cap 6.
    from ringlab.theorems import verify_x_not_rclean

    for spec, ring in corpus.items():
        if not ring_analysis(ring).is_commutative or ring.order == 1:
            continue
        for d_g in range(1, 7):
            assert verify_x_not_rclean(ring, d_g).verified, (spec, d_g)


def test_profile_failing_elements_are_genuine(corpus):
    for spec, ring in corpus.items():
        profile = cl.ring_profile(ring)
        if "regular" in profile.failing:
            assert cl.regular_witness(ring, profile.failing["regular"]) is None
        if "commutative" in profile.failing:
            assert not cl.is_central(ring, profile.failing["commutative"])
