"""Compositional construction of finite rings with exact index arithmetic."""
from .expr import (
    CornerExpr,
    CyclicGroup,
    FileGroup,
    GroupNode,
    GroupRingExpr,
    InlineGroup,
    MatrixExpr,
    ProductExpr,
    QuotientExpr,
    RingExpr,
    TriangularExpr,
    TruncPolyExpr,
    ZModExpr,
    print_expr,
)
from .groups import GroupSpec
from .ideals import Ideal, ideal_closure, make_quotient, validate_ideal
from .laws import check_ring_laws
from .poly import (
    BoundedPolynomial,
    poly_add,
    poly_mul,
    poly_neg,
    poly_regular_witness_search,
)
from .ring import (
    CornerRing,
    FiniteRing,
    GroupRing,
    MatrixRing,
    ProductRing,
    QuotientRing,
    TriangularRing,
    TruncPolyRing,
    TupleCodec,
    ZModRing,
    make_corner,
    make_group_ring,
    make_matrix_ring,
    make_product,
    make_trunc_poly,
    make_triangular_ring,
    make_zmod,
)

__all__ = [
    "BoundedPolynomial",
    "CornerExpr",
    "CornerRing",
    "CyclicGroup",
    "FileGroup",
    "FiniteRing",
    "GroupNode",
    "GroupRing",
    "GroupRingExpr",
    "GroupSpec",
    "Ideal",
    "InlineGroup",
    "MatrixExpr",
    "MatrixRing",
    "ProductExpr",
    "ProductRing",
    "QuotientExpr",
    "QuotientRing",
    "RingExpr",
    "TriangularExpr",
    "TriangularRing",
    "TruncPolyExpr",
    "TruncPolyRing",
    "TupleCodec",
    "ZModExpr",
    "ZModRing",
    "check_ring_laws",
    "ideal_closure",
    "make_corner",
    "make_group_ring",
    "make_matrix_ring",
    "make_product",
    "make_quotient",
    "make_trunc_poly",
    "make_triangular_ring",
    "make_zmod",
    "poly_add",
    "poly_mul",
    "poly_neg",
    "poly_regular_witness_search",
    "print_expr",
    "validate_ideal",
]
