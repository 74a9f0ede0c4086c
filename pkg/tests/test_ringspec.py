import json

import pytest

from ringlab.core.expr import (
    CornerExpr,
    CyclicGroup,
    FileGroup,
    GroupRingExpr,
    MatrixExpr,
    ProductExpr,
    QuotientExpr,
    TriangularExpr,
    TruncPolyExpr,
    ZModExpr,
    print_expr,
)
from ringlab.errors import ElaborationError, ParseError
from ringlab.ringspec import parse_and_elaborate, parse_element, parse_ring


class TestParser:
    def test_zmod(self):
        assert parse_ring("Z4") == ZModExpr(4)

    def test_product_with_matrix(self):
        assert parse_ring("M2(Z2) x Z3") == ProductExpr(
            (MatrixExpr(2, ZModExpr(2)), ZModExpr(3))
        )

    def test_group_ring(self):
        assert parse_ring("Z9[C2]") == GroupRingExpr(ZModExpr(9), CyclicGroup(2))

    def test_unicode_product(self):
        assert parse_ring("Z2 × Z3") == parse_ring("Z2 x Z3")

    def test_trunc_poly(self):
        assert parse_ring("Z4[x]/x^2") == TruncPolyExpr(ZModExpr(4), 2)

    def test_quotient(self):
        assert parse_ring("Z8/(4)") == QuotientExpr(ZModExpr(8), (4,))
        assert parse_ring("Z8/(2,4)") == QuotientExpr(ZModExpr(8), (2, 4))
        assert parse_ring("Z8/()") == QuotientExpr(ZModExpr(8), ())

    def test_corner(self):
        assert parse_ring("corner(Z6, 3)") == CornerExpr(ZModExpr(6), 3)

    def test_triangular_shapes(self):
        assert parse_ring("T2(Z2)") == TriangularExpr(2, ZModExpr(2), "lower")
        assert parse_ring("T2(Z2)^upper") == TriangularExpr(2, ZModExpr(2), "upper")

    def test_postfix_chains(self):
        assert parse_ring("Z8/(4)[C2]") == GroupRingExpr(
            QuotientExpr(ZModExpr(8), (4,)), CyclicGroup(2)
        )

    def test_parenthesized_product_in_term_position(self):
        assert parse_ring("(Z2 x Z3)[C2]") == GroupRingExpr(
            ProductExpr((ZModExpr(2), ZModExpr(3))), CyclicGroup(2)
        )

    def test_file_group_reference(self):
        assert parse_ring('Z4["cayley.json"]') == GroupRingExpr(
            ZModExpr(4), FileGroup("cayley.json")
        )

    def test_whitespace_insensitive(self):
        assert parse_ring("  M2( Z2 )x Z3 ") == parse_ring("M2(Z2) x Z3")


class TestParseErrors:
    @pytest.mark.parametrize("text,position", [
        ("", 0),
        ("Z", 0),
        ("M2(Z2", 5),
        ("Z4 x", 4),
        ("Z4 )", 3),
        ("corner(Z6 3)", 10),
        ("T2(Z2)^down", 7),
        ("Z4[x]/y^2", 6),
        ("@Z4", 0),
    ])
    def test_positions(self, text, position):
        with pytest.raises(ParseError) as err:
            parse_ring(text)
        assert err.value.position == position
        assert err.value.position <= len(text)
        assert err.value.expected

    def test_unknown_head(self):
        with pytest.raises(ParseError):
            parse_ring("Q4")

    def test_never_crashes_smoke(self):
        inputs = ["[[", "))((", "Z4[", "x x x", '"abc', "Z4^", "corner(", "×"]
        for text in inputs:
            try:
                parse_ring(text)
            except ParseError:
                pass


class TestPrinter:
    CASES = [
        "Z4",
        "Z2 x Z3",
        "M2(Z4)",
        "T2(Z2)",
        "T2(Z2)^upper",
        "Z9[C2]",
        "Z4[x]/x^2",
        "Z8/(4)",
        "Z8/()",
        "corner(Z6, 3)",
        "(Z2 x Z3)[C2]",
        "M2(Z2) x Z3 x Z4",
    ]

    @pytest.mark.parametrize("text", CASES)
    def test_round_trip(self, text):
        expr = parse_ring(text)
        assert parse_ring(print_expr(expr)) == expr

    def test_canonical_forms(self):
        assert print_expr(parse_ring("Z2×Z3")) == "Z2 x Z3"
        assert print_expr(parse_ring("corner( Z6 , 3 )")) == "corner(Z6, 3)"

    def test_nested_product_prints_with_parens(self):
        expr = ProductExpr((ZModExpr(2), ProductExpr((ZModExpr(3), ZModExpr(4)))))
        assert print_expr(expr) == "Z2 x (Z3 x Z4)"
        assert parse_ring(print_expr(expr)) == expr


class TestElaboration:
    def test_basic(self):
        assert parse_and_elaborate("Z4").order == 4
        assert parse_and_elaborate("corner(Z6, 3)").order == 2
        assert parse_and_elaborate("Z8/(4)").order == 4

    def test_corner_semantic_error_carries_subexpression(self):
        with pytest.raises(ElaborationError) as err:
            parse_and_elaborate("corner(Z6, 2)")
        assert "corner(Z6, 2)" in str(err.value)
        assert "not idempotent" in str(err.value)

    def test_size_cap_error(self):
        with pytest.raises(ElaborationError) as err:
            parse_and_elaborate("M3(Z4)")
        assert "size cap" in str(err.value)

    def test_index_out_of_range(self):
        with pytest.raises(ElaborationError):
            parse_and_elaborate("Z8/(9)")

    def test_cayley_file(self, tmp_path):
        path = tmp_path / "c2.json"
        path.write_text(json.dumps({"table": [[0, 1], [1, 0]]}))
        ring = parse_and_elaborate(f'Z3["{path}"]')
        assert ring.order == 9

    def test_bad_cayley_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"table": [[0, 1], [0, 1]]}))
        with pytest.raises(ElaborationError):
            parse_and_elaborate(f'Z3["{path}"]')

    def test_missing_cayley_file(self):
        with pytest.raises(ElaborationError):
            parse_and_elaborate('Z3["/no/such/file.json"]')

    def test_determinism(self):
        from ringlab.core.ring import _CONSTRUCTION_MEMO

        a = parse_and_elaborate("Z6[C2]")
        _CONSTRUCTION_MEMO.clear()  # force a genuinely fresh build
        b = parse_and_elaborate("Z6[C2]")
        assert a is not b
        for x in (0, 1, 17, 35):
            for y in (0, 2, 11):
                assert a.mul(x, y) == b.mul(x, y)
                assert a.add(x, y) == b.add(x, y)


class TestParseElement:
    def test_plain_index(self):
        assert parse_element(parse_and_elaborate("Z4"), "2") == 2

    def test_product_tuple(self):
        ring = parse_and_elaborate("Z2 x Z3")
        assert parse_element(ring, "(1,2)") == ring.codec.encode([1, 2])

    def test_matrix_literal(self):
        ring = parse_and_elaborate("M2(Z2)")
        assert parse_element(ring, "[[1,0],[0,1]]") == ring.one

    def test_triangular_literal_rejects_off_shape(self):
        ring = parse_and_elaborate("T2(Z2)")
        assert parse_element(ring, "[[1,0],[1,0]]") == ring.from_entries([[1, 0], [1, 0]])
        with pytest.raises(ValueError):
            parse_element(ring, "[[1,1],[0,1]]")

    def test_group_ring_tuple(self):
        ring = parse_and_elaborate("Z9[C2]")
        assert parse_element(ring, "(1,8)") == ring.from_coefficients([1, 8])

    def test_nested_tuple(self):
        ring = parse_and_elaborate("(Z2 x Z3) x Z4")
        inner = parse_and_elaborate("Z2 x Z3")
        expected = ring.codec.encode([inner.codec.encode([1, 2]), 3])
        assert parse_element(ring, "((1,2),3)") == expected

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            parse_element(parse_and_elaborate("Z4"), "4")

    def test_malformed(self):
        ring = parse_and_elaborate("Z4")
        for bad in ("(1,", "x", "[1,2]", "(1,2)"):
            with pytest.raises(ValueError):
                parse_element(ring, bad)

    def test_label_literal_round_trip(self):
        for spec in ("Z6", "Z2 x Z3", "M2(Z2)", "Z3[C2]", "Z4[x]/x^2", "T2(Z2)"):
            ring = parse_and_elaborate(spec)
            for x in range(ring.order):
                assert parse_element(ring, ring.element_label(x)) == x
